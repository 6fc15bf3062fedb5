#include "csf/chromatic.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace csf {

namespace {

struct EdgeSet {
    int vertices = 0;
    std::vector<Edge> edges;  // each (a, b) with a < b, sorted, unique
};

EdgeSet contract(const EdgeSet& g, Edge e) {
    const auto [keep, drop] = e;
    auto rename = [&](int v) {
        if (v == drop) {
            v = keep;
        }
        return v > drop ? v - 1 : v;
    };
    EdgeSet out{g.vertices - 1, {}};
    out.edges.reserve(g.edges.size());
    for (const auto& edge : g.edges) {
        if (edge == e) {
            continue;
        }
        const int a = rename(edge.first);
        const int b = rename(edge.second);
        out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

Integer deletion_contraction(const EdgeSet& g, int k) {
    if (g.edges.empty()) {
        return pow(k, static_cast<unsigned>(g.vertices));
    }
    const Edge e = g.edges.back();
    EdgeSet deleted = g;
    deleted.edges.pop_back();
    return deletion_contraction(deleted, k) - deletion_contraction(contract(g, e), k);
}

}  // namespace

SymPoly csf_power_basis(const Graph& g) {
    const std::size_t m = g.edge_count();
    if (m > kMaxPowerExpansionEdges) {
        throw UnsupportedSizeError("csf_power_basis: " + std::to_string(m) + " edges exceeds the limit of " +
                                   std::to_string(kMaxPowerExpansionEdges));
    }
    std::unordered_map<Partition, std::int64_t> signed_counts;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const int sign = (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
        signed_counts[component_size_partition(g, mask)] += sign;
    }
    SymPoly out(Basis::power, g.vertex_count());
    for (const auto& [mu, c] : signed_counts) {
        out.add(mu, c);
    }
    return out;
}

SymPoly csf_schur(const Graph& g, const CharacterTable& table) {
    return p_to_s(csf_power_basis(g), table);
}

std::vector<Term> negative_schur_coefficients(const SymPoly& f) {
    std::vector<Term> out;
    for (const auto& [lam, c] : f.terms()) {
        if (c.sign() < 0) {
            out.emplace_back(lam, c);
        }
    }
    return out;
}

Integer chromatic_polynomial_deletion_contraction(const Graph& g, int k) {
    EdgeSet edges{g.vertex_count(), {}};
    for (const auto& [a, b] : g.edges()) {
        edges.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.edges.begin(), edges.edges.end());
    return deletion_contraction(edges, k);
}

Integer chromatic_polynomial_tree(const Graph& g, int k) {
    if (!g.is_tree()) {
        throw std::invalid_argument("chromatic_polynomial_tree: graph is not a tree");
    }
    return Integer(k) * pow(k - 1, static_cast<unsigned>(g.vertex_count() - 1));
}

Integer chromatic_polynomial_at(const Graph& g, int k) {
    if (k < 1) {
        throw std::invalid_argument("chromatic_polynomial_at: k must be positive");
    }
    return g.is_tree() ? chromatic_polynomial_tree(g, k) : chromatic_polynomial_deletion_contraction(g, k);
}

}  // namespace csf
