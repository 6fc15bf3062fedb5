#include "csf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace csf {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)), size_(static_cast<std::size_t>(size), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
            std::swap(a, b);
        }
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    }

    Partition root_sizes() {
        std::vector<int> sizes;
        for (std::size_t v = 0; v < parent_.size(); ++v) {
            if (parent_[v] == static_cast<int>(v)) {
                sizes.push_back(size_[v]);
            }
        }
        return Partition::from_unsorted(std::move(sizes));
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
    if (vertex_count < 0) {
        throw std::invalid_argument("Graph: negative vertex count");
    }
    std::set<Edge> seen;
    for (const auto& [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw std::invalid_argument("Graph: edge {" + std::to_string(a) + "," + std::to_string(b) +
                                        "} has an endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("Graph: loop at vertex " + std::to_string(a));
        }
        if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
            throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
}

bool Graph::adjacent(int a, int b) const {
    const auto& n = neighbors(a);
    return std::find(n.begin(), n.end(), b) != n.end();
}

bool Graph::is_connected() const {
    if (vertex_count_ <= 1) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

bool Graph::is_tree() const {
    return vertex_count_ >= 1 && edges_.size() + 1 == static_cast<std::size_t>(vertex_count_) && is_connected();
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(vertex_count_)) {
        throw std::invalid_argument("Graph::relabeled: permutation has the wrong length");
    }
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [a, b] : edges_) {
        edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
    return Graph(vertex_count_, std::move(edges));
}

Graph path_graph(int vertices) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < vertices; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(vertices, std::move(edges));
}

Graph cycle_graph(int vertices) {
    if (vertices < 3) {
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int v = 0; v < vertices; ++v) {
        edges.emplace_back(v, (v + 1) % vertices);
    }
    return Graph(vertices, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_graph(int vertices) {
    std::vector<Edge> edges;
    for (int a = 0; a < vertices; ++a) {
        for (int b = a + 1; b < vertices; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return Graph(vertices, std::move(edges));
}

Graph spider(const Partition& nu) {
    const int n = nu.weight() + 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
    }
    int next = n + 1;
    for (std::size_t i = 0; i < nu.length(); ++i) {
        for (int leaf = 0; leaf < nu[i]; ++leaf) {
            edges.emplace_back(static_cast<int>(i) + 1, next++);
        }
    }
    return Graph(2 * n, std::move(edges));
}

Partition component_size_partition(const Graph& g, std::span<const std::size_t> kept_edges) {
    DisjointSets sets(g.vertex_count());
    for (std::size_t e : kept_edges) {
        const auto& [a, b] = g.edges().at(e);
        sets.unite(a, b);
    }
    return sets.root_sizes();
}

Partition component_size_partition(const Graph& g, std::uint64_t kept_mask) {
    if (g.edge_count() < 64 && (kept_mask >> g.edge_count()) != 0) {
        throw std::invalid_argument("component_size_partition: mask selects edges beyond the edge list");
    }
    DisjointSets sets(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (kept_mask >> e & 1U) {
            sets.unite(g.edges()[e].first, g.edges()[e].second);
        }
    }
    return sets.root_sizes();
}

std::optional<Partition> bipartition_type(const Graph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("bipartition_type: graph is disconnected, so its bipartition is not unique");
    }
    if (g.vertex_count() == 0) {
        return Partition{};
    }
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> stack{0};
    side[0] = 0;
    int counts[2] = {1, 0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            auto& s = side[static_cast<std::size_t>(w)];
            if (s == -1) {
                s = 1 - side[static_cast<std::size_t>(v)];
                ++counts[s];
                stack.push_back(w);
            } else if (s == side[static_cast<std::size_t>(v)]) {
                return std::nullopt;
            }
        }
    }
    return Partition::from_unsorted(counts[1] > 0 ? std::vector<int>{counts[0], counts[1]} : std::vector<int>{counts[0]});
}

SymPoly coloring_monomial_expansion(const Graph& g, int k) {
    if (k < 1) {
        throw std::invalid_argument("coloring_monomial_expansion: k must be positive");
    }
    const int n = g.vertex_count();
    SymPoly out(Basis::monomial, n);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (const Partition& mu : partitions_of(n)) {
        if (mu.length() > static_cast<std::size_t>(k)) {
            continue;
        }
        // color i must be used exactly mu_i times
        std::vector<int> left(mu.parts().begin(), mu.parts().end());
        std::int64_t count = 0;
        auto assign = [&](auto&& self, int v) -> void {
            if (v == n) {
                ++count;
                return;
            }
            for (std::size_t c = 0; c < left.size(); ++c) {
                if (left[c] == 0) {
                    continue;
                }
                bool clash = false;
                for (int w : g.neighbors(v)) {
                    if (w < v && color[static_cast<std::size_t>(w)] == static_cast<int>(c)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) {
                    continue;
                }
                color[static_cast<std::size_t>(v)] = static_cast<int>(c);
                --left[c];
                self(self, v + 1);
                ++left[c];
            }
            color[static_cast<std::size_t>(v)] = -1;
        };
        assign(assign, 0);
        out.add(mu, count);
    }
    return out;
}

PartitionSet stable_partition_types(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxStablePartitionVertices) {
        throw UnsupportedSizeError("stable_partition_types: " + std::to_string(n) + " vertices exceeds the limit of " +
                                   std::to_string(kMaxStablePartitionVertices));
    }
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : g.edges()) {
        adjacency[static_cast<std::size_t>(a)] |= 1U << b;
        adjacency[static_cast<std::size_t>(b)] |= 1U << a;
    }
    PartitionSet types;
    std::vector<std::uint32_t> blocks;
    std::vector<int> sizes;
    auto place = [&](auto&& self, int v) -> void {
        if (v == n) {
            types.insert(Partition::from_unsorted(sizes));
            return;
        }
        const std::uint32_t bit = 1U << v;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if ((blocks[b] & adjacency[static_cast<std::size_t>(v)]) != 0) {
                continue;
            }
            blocks[b] |= bit;
            ++sizes[b];
            self(self, v + 1);
            blocks[b] &= ~bit;
            --sizes[b];
        }
        blocks.push_back(bit);
        sizes.push_back(1);
        self(self, v + 1);
        blocks.pop_back();
        sizes.pop_back();
    };
    place(place, 0);
    return types;
}

}  // namespace csf
