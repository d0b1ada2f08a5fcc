#include "stratmap/clustering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "stratmap/errors.hpp"
#include "stratmap/rng.hpp"

namespace stratmap {

double NormalizedGraph::assoc(int i, int j) const {
    for (const auto& [u, s] : assoc_neighbors(i))
        if (u == j) return s;
    return 0.0;
}

NormalizedGraph association_strength(const SymGraph& g) {
    const double two_m = g.total_strength();
    if (!(two_m > 0.0))
        throw domain_error("association_strength: graph has no edges (2m = 0)");
    for (int v = 0; v < g.node_count(); ++v)
        if (!(g.strength(v) > 0.0))
            throw domain_error("association_strength: isolated node `" +
                               g.labels()[static_cast<std::size_t>(v)] +
                               "` (remove isolates first)");
    NormalizedGraph ng;
    ng.base_ = g;
    ng.assoc_.resize(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        auto& row = ng.assoc_[static_cast<std::size_t>(v)];
        row.reserve(static_cast<std::size_t>(g.degree(v)));
        for (const auto& [u, w] : g.neighbors(v))
            row.emplace_back(u, two_m * w / (g.strength(v) * g.strength(u)));
    }
    return ng;
}

double partition_quality(const NormalizedGraph& ng, const std::vector<int>& assignment,
                         double resolution) {
    const int n = ng.node_count();
    if (static_cast<int>(assignment.size()) != n)
        throw domain_error("partition_quality: assignment size mismatch");
    double within = 0.0;
    for (int v = 0; v < n; ++v)
        for (const auto& [u, s] : ng.assoc_neighbors(v))
            if (v < u && assignment[static_cast<std::size_t>(v)] ==
                             assignment[static_cast<std::size_t>(u)])
                within += s;
    std::map<int, std::int64_t> sizes;
    for (int c : assignment) ++sizes[c];
    double penalty = 0.0;
    for (const auto& [c, size] : sizes)
        penalty += 0.5 * static_cast<double>(size) * static_cast<double>(size - 1);
    return within - resolution * penalty;
}

std::vector<int> canonical_numbering(const std::vector<int>& assignment, int* cluster_count_out) {
    // (size, smallest member index) per label; bigger first, then earlier.
    std::map<int, std::pair<std::int64_t, int>> info;
    for (int v = 0; v < static_cast<int>(assignment.size()); ++v) {
        auto [it, inserted] = info.try_emplace(assignment[static_cast<std::size_t>(v)],
                                               std::pair<std::int64_t, int>{0, v});
        ++it->second.first;
    }
    std::vector<std::pair<int, std::pair<std::int64_t, int>>> order(info.begin(), info.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first > b.second.first;
        return a.second.second < b.second.second;
    });
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < order.size(); ++i)
        renumber[order[i].first] = static_cast<int>(i) + 1;
    std::vector<int> out(assignment.size());
    for (std::size_t v = 0; v < assignment.size(); ++v) out[v] = renumber[assignment[v]];
    if (cluster_count_out) *cluster_count_out = static_cast<int>(order.size());
    return out;
}

namespace {

constexpr double kGainEpsilon = 1e-12;

// Aggregated optimization graph: super-nodes carry the number of original
// nodes they stand for (the gamma penalty scales with size products).
struct WorkGraph {
    std::vector<std::vector<std::pair<int, double>>> adj; // cross weights only
    std::vector<double> node_size;

    int size() const { return static_cast<int>(node_size.size()); }
};

WorkGraph work_graph_of(const NormalizedGraph& ng) {
    WorkGraph w;
    const int n = ng.node_count();
    w.node_size.assign(static_cast<std::size_t>(n), 1.0);
    w.adj.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto nbrs = ng.assoc_neighbors(v);
        w.adj[static_cast<std::size_t>(v)].assign(nbrs.begin(), nbrs.end());
    }
    return w;
}

// One pass of local moving; clusters start as singletons. Returns true if
// any node moved. cluster_of is indexed by work-graph node.
bool local_moving(const WorkGraph& g, double gamma, SplitMix64& rng,
                  std::vector<int>& cluster_of) {
    const int n = g.size();
    cluster_of.resize(static_cast<std::size_t>(n));
    std::iota(cluster_of.begin(), cluster_of.end(), 0);

    std::vector<double> cluster_size(g.node_size);
    std::set<int> empty_slots;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    std::vector<double> weight_to(static_cast<std::size_t>(n), 0.0);
    std::vector<int> touched;

    bool any_move = false;
    bool moved_in_sweep = true;
    while (moved_in_sweep) {
        moved_in_sweep = false;
        shuffle(order, rng);
        for (int v : order) {
            const int current = cluster_of[static_cast<std::size_t>(v)];
            const double v_size = g.node_size[static_cast<std::size_t>(v)];

            touched.clear();
            for (const auto& [u, s] : g.adj[static_cast<std::size_t>(v)]) {
                const int cu = cluster_of[static_cast<std::size_t>(u)];
                if (weight_to[static_cast<std::size_t>(cu)] == 0.0) touched.push_back(cu);
                weight_to[static_cast<std::size_t>(cu)] += s;
            }

            const double gain_of_staying =
                weight_to[static_cast<std::size_t>(current)] -
                gamma * v_size * (cluster_size[static_cast<std::size_t>(current)] - v_size);

            // Candidates ascend by slot id so equal gains pick the lowest;
            // a detach target (fresh empty slot) is considered last.
            std::sort(touched.begin(), touched.end());
            int best_cluster = current;
            double best_delta = 0.0;
            for (int c : touched) {
                if (c == current) continue;
                const double delta = weight_to[static_cast<std::size_t>(c)] -
                                     gamma * v_size * cluster_size[static_cast<std::size_t>(c)] -
                                     gain_of_staying;
                if (delta > best_delta + kGainEpsilon) {
                    best_delta = delta;
                    best_cluster = c;
                }
            }
            // Detaching into a fresh cluster: only sensible when v has
            // company; an empty slot then exists by pigeonhole.
            if (cluster_size[static_cast<std::size_t>(current)] > v_size &&
                !empty_slots.empty()) {
                const double delta = -gain_of_staying;
                if (delta > best_delta + kGainEpsilon) {
                    best_delta = delta;
                    best_cluster = *empty_slots.begin();
                }
            }

            for (int c : touched) weight_to[static_cast<std::size_t>(c)] = 0.0;

            if (best_cluster != current && best_delta > kGainEpsilon) {
                cluster_size[static_cast<std::size_t>(current)] -= v_size;
                cluster_size[static_cast<std::size_t>(best_cluster)] += v_size;
                if (cluster_size[static_cast<std::size_t>(current)] == 0.0)
                    empty_slots.insert(current);
                empty_slots.erase(best_cluster);
                cluster_of[static_cast<std::size_t>(v)] = best_cluster;
                moved_in_sweep = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

// Collapses clusters into super-nodes. Returns the relabeling old-node ->
// new-node; new ids follow first appearance in node-index order.
std::vector<int> aggregate(WorkGraph& g, const std::vector<int>& cluster_of) {
    const int n = g.size();
    std::vector<int> new_id_of_cluster(static_cast<std::size_t>(n), -1);
    std::vector<int> node_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        const int c = cluster_of[static_cast<std::size_t>(v)];
        if (new_id_of_cluster[static_cast<std::size_t>(c)] == -1)
            new_id_of_cluster[static_cast<std::size_t>(c)] = next++;
        node_to_new[static_cast<std::size_t>(v)] = new_id_of_cluster[static_cast<std::size_t>(c)];
    }

    WorkGraph out;
    out.node_size.assign(static_cast<std::size_t>(next), 0.0);
    out.adj.resize(static_cast<std::size_t>(next));
    for (int v = 0; v < n; ++v)
        out.node_size[static_cast<std::size_t>(node_to_new[static_cast<std::size_t>(v)])] +=
            g.node_size[static_cast<std::size_t>(v)];

    std::map<std::pair<int, int>, double> weights;
    for (int v = 0; v < n; ++v) {
        const int a = node_to_new[static_cast<std::size_t>(v)];
        for (const auto& [u, s] : g.adj[static_cast<std::size_t>(v)]) {
            if (v >= u) continue;
            const int b = node_to_new[static_cast<std::size_t>(u)];
            if (a == b) continue; // internal weight is a constant offset
            weights[{std::min(a, b), std::max(a, b)}] += s;
        }
    }
    for (const auto& [key, s] : weights) {
        out.adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, s);
        out.adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, s);
    }
    for (auto& row : out.adj) std::sort(row.begin(), row.end());

    g = std::move(out);
    return node_to_new;
}

std::vector<int> louvain_once(const NormalizedGraph& ng, double gamma, std::uint64_t seed,
                              int max_rounds) {
    SplitMix64 rng(seed);
    WorkGraph work = work_graph_of(ng);
    std::vector<int> total(static_cast<std::size_t>(ng.node_count()));
    std::iota(total.begin(), total.end(), 0);

    std::vector<int> cluster_of;
    for (int round = 0; round < max_rounds; ++round) {
        const bool moved = local_moving(work, gamma, rng, cluster_of);
        if (!moved) break;
        const int before = work.size();
        std::vector<int> node_to_new = aggregate(work, cluster_of);
        for (auto& c : total) c = node_to_new[static_cast<std::size_t>(c)];
        if (work.size() == before) break;
    }
    return total;
}

std::vector<std::vector<int>> members_by_cluster(const std::vector<int>& assignment, int k) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
    for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
        members[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)] - 1)]
            .push_back(v);
    return members;
}

} // namespace

Clustering cluster(const NormalizedGraph& ng, const ClusterParams& params) {
    if (ng.node_count() == 0) throw domain_error("cluster: empty graph");
    if (params.restarts < 1 || params.iterations_per_restart < 1 ||
        params.min_cluster_size < 1 || !(params.resolution > 0.0))
        throw domain_error("cluster: parameters must be positive");

    std::vector<int> best;
    double best_quality = 0.0;
    for (int r = 0; r < params.restarts; ++r) {
        std::vector<int> assignment =
            louvain_once(ng, params.resolution, params.seed + static_cast<std::uint64_t>(r),
                         params.iterations_per_restart);
        const double q = partition_quality(ng, assignment, params.resolution);
        if (best.empty() || q > best_quality) {
            best = std::move(assignment);
            best_quality = q;
        }
    }

    Clustering result;
    result.assignment = canonical_numbering(best, &result.cluster_count);
    result.quality = partition_quality(ng, result.assignment, params.resolution);
    if (params.merge_small)
        result = merge_small_clusters(ng, result, params.min_cluster_size, params.resolution);
    return result;
}

Clustering merge_small_clusters(const NormalizedGraph& ng, const Clustering& c, int min_size,
                                double resolution) {
    const int n = ng.node_count();
    if (static_cast<int>(c.assignment.size()) != n)
        throw domain_error("merge_small_clusters: assignment size mismatch");

    int k = c.cluster_count;
    auto members = members_by_cluster(c.assignment, k);
    std::vector<int> cluster_of = c.assignment; // 1-based ids, stable during the loop

    auto live_count = [&]() {
        int live = 0;
        for (const auto& m : members)
            if (!m.empty()) ++live;
        return live;
    };

    while (live_count() > 1) {
        // smallest cluster below min_size; ties resolve to the lowest id
        int victim = -1;
        for (int cid = 1; cid <= k; ++cid) {
            const auto sz = members[static_cast<std::size_t>(cid - 1)].size();
            if (sz == 0 || sz >= static_cast<std::size_t>(min_size)) continue;
            if (victim == -1 ||
                sz < members[static_cast<std::size_t>(victim - 1)].size())
                victim = cid;
        }
        if (victim == -1) break;

        // association strength from the victim to every other live cluster
        std::vector<double> strength_to(static_cast<std::size_t>(k + 1), 0.0);
        for (int v : members[static_cast<std::size_t>(victim - 1)])
            for (const auto& [u, s] : ng.assoc_neighbors(v)) {
                const int cu = cluster_of[static_cast<std::size_t>(u)];
                if (cu != victim) strength_to[static_cast<std::size_t>(cu)] += s;
            }
        int target = -1;
        double best_strength = 0.0;
        for (int cid = 1; cid <= k; ++cid) {
            if (cid == victim || members[static_cast<std::size_t>(cid - 1)].empty()) continue;
            if (strength_to[static_cast<std::size_t>(cid)] > best_strength &&
                strength_to[static_cast<std::size_t>(cid)] > 0.0) {
                best_strength = strength_to[static_cast<std::size_t>(cid)];
                target = cid;
            }
        }
        if (target == -1) {
            // no association anywhere: fall back to the largest cluster
            std::size_t best_size = 0;
            for (int cid = 1; cid <= k; ++cid) {
                if (cid == victim) continue;
                const auto sz = members[static_cast<std::size_t>(cid - 1)].size();
                if (sz > best_size) {
                    best_size = sz;
                    target = cid;
                }
            }
        }

        for (int v : members[static_cast<std::size_t>(victim - 1)])
            cluster_of[static_cast<std::size_t>(v)] = target;
        auto& t = members[static_cast<std::size_t>(target - 1)];
        auto& s = members[static_cast<std::size_t>(victim - 1)];
        t.insert(t.end(), s.begin(), s.end());
        s.clear();
    }

    Clustering out;
    out.assignment = canonical_numbering(cluster_of, &out.cluster_count);
    out.quality = partition_quality(ng, out.assignment, resolution);
    return out;
}

std::pair<Clustering, double> brute_force_optimum(const NormalizedGraph& ng, double resolution) {
    const int n = ng.node_count();
    if (n == 0) throw domain_error("brute_force_optimum: empty graph");
    if (n > 12) throw domain_error("brute_force_optimum: refuses n > 12");

    // Restricted growth strings enumerate every set partition exactly once.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<int> best;
    double best_quality = 0.0;
    bool have_best = false;

    auto evaluate = [&]() {
        const double q = partition_quality(ng, rgs, resolution);
        if (!have_best || q > best_quality) {
            best = rgs;
            best_quality = q;
            have_best = true;
        }
    };

    // Lexicographic successor over RGS: position i can be incremented iff
    // rgs[i] <= max(rgs[0..i-1]); zero everything to its right.
    std::vector<int> maxima(static_cast<std::size_t>(n), 0);
    while (true) {
        evaluate();
        for (int j = 1; j < n; ++j)
            maxima[static_cast<std::size_t>(j)] = std::max(
                maxima[static_cast<std::size_t>(j - 1)], rgs[static_cast<std::size_t>(j - 1)]);
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxima[static_cast<std::size_t>(i)])
            --i;
        if (i == 0) break;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }

    Clustering out;
    out.assignment = canonical_numbering(best, &out.cluster_count);
    out.quality = best_quality;
    return {out, best_quality};
}

} // namespace stratmap
