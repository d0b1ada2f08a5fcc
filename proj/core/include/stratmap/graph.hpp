#ifndef STRATMAP_GRAPH_HPP
#define STRATMAP_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stratmap/pajek.hpp"

namespace stratmap {

struct Arc {
    int src = 0; // 0-based node index
    int dst = 0;
    double weight = 1.0;

    bool operator==(const Arc&) const = default;
};

struct Edge {
    int a = 0; // 0-based, a < b after normalization (loops keep a == b)
    int b = 0;
    double weight = 1.0;

    bool operator==(const Edge&) const = default;
};

/// The citing-by-cited matrix: labeled nodes plus weighted directed arcs,
/// stored sparsely. Arcs are kept sorted by (src, dst) with duplicates
/// summed, so construction is independent of insertion order.
class DirectedGraph {
public:
    DirectedGraph() = default;
    DirectedGraph(std::vector<std::string> labels, std::vector<Arc> arcs);

    static DirectedGraph from_pajek(const PajekDocument& doc);

    int node_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool operator==(const DirectedGraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Arc> arcs_; // sorted by (src, dst), weights > 0, deduplicated
};

/// Loop-free weighted undirected graph with per-node strengths k_i and the
/// total strength 2m = sum_i k_i cached. Immutable once built.
class SymGraph {
public:
    SymGraph() = default;
    SymGraph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int node_count() const { return static_cast<int>(labels_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Neighbors of node i, sorted by index, with edge weights.
    std::span<const std::pair<int, double>> neighbors(int i) const {
        return {adjacency_[static_cast<std::size_t>(i)].data(),
                adjacency_[static_cast<std::size_t>(i)].size()};
    }

    int degree(int i) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size()); }
    double strength(int i) const { return strength_[static_cast<std::size_t>(i)]; } // k_i
    double total_strength() const { return total_strength_; }                       // 2m

    /// Edges as (a, b, w) with a < b, ascending. Deterministic.
    std::vector<Edge> edges() const;

    bool operator==(const SymGraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, double>>> adjacency_;
    std::vector<double> strength_;
    double total_strength_ = 0.0;
    std::int64_t edge_count_ = 0;
};

/// Descriptive statistics of the directed matrix and its symmetrized image.
struct NetworkStats {
    std::int64_t n_nodes = 0;
    std::int64_t n_links = 0; // distinct directed arcs, loops included
    std::int64_t n_loops = 0;
    double total_citations = 0.0; // arc weight sum, loops excluded
    double density = 0.0;
    double avg_total_degree = 0.0;
    double clustering_coefficient = 0.0;
};

/// density = links / (n * (n - 1)); loops stay in the numerator.
double link_density(std::int64_t n_nodes, std::int64_t n_links);

/// 2 * links / n.
double average_total_degree(std::int64_t n_nodes, std::int64_t n_links);

/// w{i,j} = g(i,j) + g(j,i) for i != j; loops dropped.
SymGraph symmetrize(const DirectedGraph& g);

/// Removes zero-degree nodes; remaining indices are re-densified with label
/// order preserved. Returns the removed labels in label order.
std::pair<SymGraph, std::vector<std::string>> remove_isolates(const SymGraph& g);

/// Induced subgraph on the largest connected component; ties broken by the
/// component containing the smallest node index. Throws on an empty graph.
SymGraph largest_component(const SymGraph& g);

/// Induced subgraph on `members` (0-based indices, any order); node order
/// follows the parent graph. Strengths and 2m are recomputed.
SymGraph induced_subgraph(const SymGraph& g, const std::vector<int>& members);

/// Label-addressed variant; throws on unknown labels.
SymGraph induced_subgraph_by_labels(const SymGraph& g, const std::vector<std::string>& members);

/// Full stats record. The clustering coefficient is the mean local
/// (triangle-closure) coefficient on the unweighted symmetrized loop-free
/// graph, nodes of degree < 2 contributing 0. Throws if n < 2.
NetworkStats network_stats(const DirectedGraph& g);

} // namespace stratmap

#endif
