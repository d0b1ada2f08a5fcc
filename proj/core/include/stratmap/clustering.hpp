#ifndef STRATMAP_CLUSTERING_HPP
#define STRATMAP_CLUSTERING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stratmap/graph.hpp"

namespace stratmap {

/// A SymGraph together with the association-strength normalization of its
/// edge weights: s_ij = 2m * w_ij / (k_i * k_j). The normalization removes
/// node-size effects before clustering and layout, and is scale invariant:
/// multiplying all weights by a constant leaves every s_ij unchanged.
class NormalizedGraph {
public:
    NormalizedGraph() = default;

    const SymGraph& base() const { return base_; }
    int node_count() const { return base_.node_count(); }

    /// (neighbor, s_ij), sorted by neighbor index.
    std::span<const std::pair<int, double>> assoc_neighbors(int i) const {
        return {assoc_[static_cast<std::size_t>(i)].data(),
                assoc_[static_cast<std::size_t>(i)].size()};
    }

    /// s_ij, or 0 where no edge exists.
    double assoc(int i, int j) const;

    friend NormalizedGraph association_strength(const SymGraph& g);

private:
    SymGraph base_;
    std::vector<std::vector<std::pair<int, double>>> assoc_;
};

/// Throws if the graph has an isolated node (k_i = 0) or no edges at all;
/// callers remove isolates first.
NormalizedGraph association_strength(const SymGraph& g);

/// Node-to-cluster assignment with canonical numbering: cluster ids are
/// contiguous 1..K and sizes are non-increasing in id (ties broken by the
/// cluster containing the smallest node index).
struct Clustering {
    std::vector<int> assignment; // node -> 1..K
    int cluster_count = 0;
    double quality = 0.0;

    bool operator==(const Clustering&) const = default;
};

struct ClusterParams {
    double resolution = 1.0;          // gamma
    std::uint64_t seed = 0;
    int restarts = 10;
    int iterations_per_restart = 10;  // local-moving + aggregation rounds
    int min_cluster_size = 2;
    bool merge_small = true;
};

/// V = sum over same-cluster pairs i<j of (s_ij - gamma), with s_ij = 0 for
/// non-edges. `assignment` may use any integer labels.
double partition_quality(const NormalizedGraph& ng, const std::vector<int>& assignment,
                         double resolution);

/// Renumbers arbitrary cluster labels into the canonical 1..K form.
std::vector<int> canonical_numbering(const std::vector<int>& assignment,
                                     int* cluster_count_out = nullptr);

/// Best partition over `restarts` seeded optimizations. Each restart runs
/// local moving over a shuffled node order followed by aggregation, repeated
/// until no move improves V (restart r draws from seed + r, so restarts are
/// order-independent). Ties keep the lowest restart index. Small clusters
/// are post-processed when params.merge_small is set.
Clustering cluster(const NormalizedGraph& ng, const ClusterParams& params);

/// Repeatedly merges the smallest cluster below min_size (ties: lowest id)
/// into the cluster with the strongest aggregate association to it (ties:
/// lowest id; zero association everywhere: the largest cluster). The result
/// is renumbered canonically; `resolution` only refreshes the quality field.
Clustering merge_small_clusters(const NormalizedGraph& ng, const Clustering& c, int min_size,
                                double resolution = 1.0);

/// Exhaustive maximum of V over all set partitions (n <= 12). The oracle
/// for optimizer tests; refuses larger inputs.
std::pair<Clustering, double> brute_force_optimum(const NormalizedGraph& ng, double resolution);

} // namespace stratmap

#endif
