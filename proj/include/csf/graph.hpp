#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csf/partition.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// An input is too large for an exhaustive enumeration.
class UnsupportedSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..vertex_count-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on loops, out-of-range endpoints or duplicate edges.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int a, int b) const;

    bool is_connected() const;
    bool is_tree() const;

    /// Same abstract graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph star_graph(int leaves);
Graph complete_graph(int vertices);

/// The tree T(nu) on 2n vertices, n = |nu| + 1: hub 0 joined to 1..n, and
/// vertex i in 1..len(nu) carrying nu_i pendant leaves. Leaves are numbered
/// from n+1 upward, grouped by their parent in increasing order.
Graph spider(const Partition& nu);

/// Component sizes of the spanning subgraph that keeps only the listed edges.
Partition component_size_partition(const Graph& g, std::span<const std::size_t> kept_edges);
/// Same, with the kept edges given as a bitmask over edge indices.
Partition component_size_partition(const Graph& g, std::uint64_t kept_mask);

/// Type of the unique bipartition of a connected graph, or nullopt if the
/// graph has an odd cycle. Throws std::invalid_argument when disconnected.
std::optional<Partition> bipartition_type(const Graph& g);

/// Monomial expansion of the chromatic symmetric function restricted to k
/// variables, by counting proper colorings with one fixed content per mu.
SymPoly coloring_monomial_expansion(const Graph& g, int k);

inline constexpr int kMaxStablePartitionVertices = 12;

using PartitionSet = std::set<Partition, ReverseLex>;

/// Types of all stable partitions (set partitions into independent sets).
/// Throws UnsupportedSizeError above kMaxStablePartitionVertices vertices.
PartitionSet stable_partition_types(const Graph& g);

}  // namespace csf
