#include "stratmap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "stratmap/errors.hpp"

namespace stratmap {

namespace {

void check_labels_unique(const std::vector<std::string>& labels) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(labels.size());
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw domain_error("duplicate node label: " + l);
}

} // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)) {
    check_labels_unique(labels_);
    const int n = node_count();
    for (const auto& a : arcs) {
        if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n)
            throw domain_error("arc endpoint out of range");
        if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw domain_error("arc weight must be finite and > 0");
    }
    // Sort including weight so that duplicate summation order is independent
    // of how the caller assembled the list.
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        if (x.src != y.src) return x.src < y.src;
        if (x.dst != y.dst) return x.dst < y.dst;
        return x.weight < y.weight;
    });
    arcs_.reserve(arcs.size());
    for (const auto& a : arcs) {
        if (!arcs_.empty() && arcs_.back().src == a.src && arcs_.back().dst == a.dst)
            arcs_.back().weight += a.weight;
        else
            arcs_.push_back(a);
    }
}

DirectedGraph DirectedGraph::from_pajek(const PajekDocument& doc) {
    std::vector<std::string> labels(static_cast<std::size_t>(doc.vertex_count));
    for (const auto& v : doc.vertices)
        labels[static_cast<std::size_t>(v.id - 1)] = v.label;
    std::vector<Arc> arcs;
    arcs.reserve(doc.arcs.size() + doc.edges.size());
    for (const auto& a : doc.arcs)
        if (a.weight > 0) arcs.push_back({a.src - 1, a.dst - 1, a.weight});
    // An undirected edge of strength w carries w into the symmetrized matrix,
    // so it enters the directed image once, on the side the file listed.
    for (const auto& e : doc.edges)
        if (e.weight > 0) arcs.push_back({e.src - 1, e.dst - 1, e.weight});
    return DirectedGraph(std::move(labels), std::move(arcs));
}

SymGraph::SymGraph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
    check_labels_unique(labels_);
    const int n = node_count();
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
            throw domain_error("edge endpoint out of range");
        if (e.a == e.b) throw domain_error("SymGraph cannot hold loops");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw domain_error("edge weight must be finite and > 0");
        normalized.push_back({std::min(e.a, e.b), std::max(e.a, e.b), e.weight});
    }
    std::sort(normalized.begin(), normalized.end(), [](const Edge& x, const Edge& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.weight < y.weight;
    });

    adjacency_.assign(static_cast<std::size_t>(n), {});
    strength_.assign(static_cast<std::size_t>(n), 0.0);
    std::size_t i = 0;
    while (i < normalized.size()) {
        Edge e = normalized[i++];
        while (i < normalized.size() && normalized[i].a == e.a && normalized[i].b == e.b)
            e.weight += normalized[i++].weight;
        adjacency_[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.weight);
        adjacency_[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.weight);
        ++edge_count_;
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    for (int v = 0; v < n; ++v) {
        double k = 0.0;
        for (const auto& [u, w] : adjacency_[static_cast<std::size_t>(v)]) k += w;
        strength_[static_cast<std::size_t>(v)] = k;
        total_strength_ += k;
    }
}

std::vector<Edge> SymGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int a = 0; a < node_count(); ++a)
        for (const auto& [b, w] : neighbors(a))
            if (a < b) out.push_back({a, b, w});
    return out;
}

double link_density(std::int64_t n_nodes, std::int64_t n_links) {
    if (n_nodes < 2) throw domain_error("density needs at least 2 nodes");
    return static_cast<double>(n_links) /
           (static_cast<double>(n_nodes) * static_cast<double>(n_nodes - 1));
}

double average_total_degree(std::int64_t n_nodes, std::int64_t n_links) {
    if (n_nodes < 1) throw domain_error("average degree needs a node");
    return 2.0 * static_cast<double>(n_links) / static_cast<double>(n_nodes);
}

SymGraph symmetrize(const DirectedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arcs().size());
    for (const auto& a : g.arcs()) {
        if (a.src == a.dst) continue; // journal self-citations dropped
        edges.push_back({std::min(a.src, a.dst), std::max(a.src, a.dst), a.weight});
    }
    return SymGraph(g.labels(), edges);
}

std::pair<SymGraph, std::vector<std::string>> remove_isolates(const SymGraph& g) {
    const int n = g.node_count();
    std::vector<int> kept;
    std::vector<std::string> removed;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 0)
            kept.push_back(v);
        else
            removed.push_back(g.labels()[static_cast<std::size_t>(v)]);
    }
    return {induced_subgraph(g, kept), std::move(removed)};
}

SymGraph largest_component(const SymGraph& g) {
    const int n = g.node_count();
    if (n == 0) throw domain_error("largest_component: empty graph");
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<int> best_members;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> members;
        stack.push_back(start);
        component[static_cast<std::size_t>(start)] = start;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (const auto& [u, w] : g.neighbors(v)) {
                if (component[static_cast<std::size_t>(u)] == -1) {
                    component[static_cast<std::size_t>(u)] = start;
                    stack.push_back(u);
                }
            }
        }
        // Scanning starts in index order, so on equal sizes the component
        // holding the smallest node index wins.
        if (members.size() > best_members.size()) best_members = std::move(members);
    }
    std::sort(best_members.begin(), best_members.end());
    return induced_subgraph(g, best_members);
}

SymGraph induced_subgraph(const SymGraph& g, const std::vector<int>& members) {
    const int n = g.node_count();
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    std::vector<int> ordered = members;
    std::sort(ordered.begin(), ordered.end());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        int v = ordered[i];
        if (v < 0 || v >= n) throw domain_error("induced_subgraph: member index out of range");
        if (remap[static_cast<std::size_t>(v)] != -1)
            throw domain_error("induced_subgraph: duplicate member");
        remap[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::string> labels;
    labels.reserve(ordered.size());
    for (int v : ordered) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
    std::vector<Edge> edges;
    for (int v : ordered)
        for (const auto& [u, w] : g.neighbors(v))
            if (v < u && remap[static_cast<std::size_t>(u)] != -1)
                edges.push_back({remap[static_cast<std::size_t>(v)],
                                 remap[static_cast<std::size_t>(u)], w});
    return SymGraph(std::move(labels), edges);
}

SymGraph induced_subgraph_by_labels(const SymGraph& g, const std::vector<std::string>& members) {
    std::unordered_map<std::string_view, int> index;
    index.reserve(g.labels().size());
    for (int v = 0; v < g.node_count(); ++v)
        index.emplace(g.labels()[static_cast<std::size_t>(v)], v);
    std::vector<int> ids;
    ids.reserve(members.size());
    for (const auto& label : members) {
        auto it = index.find(label);
        if (it == index.end()) throw domain_error("unknown member label: " + label);
        ids.push_back(it->second);
    }
    return induced_subgraph(g, ids);
}

NetworkStats network_stats(const DirectedGraph& g) {
    if (g.node_count() < 2) throw domain_error("network_stats: need at least 2 nodes");
    NetworkStats s;
    s.n_nodes = g.node_count();
    s.n_links = static_cast<std::int64_t>(g.arcs().size());
    for (const auto& a : g.arcs()) {
        if (a.src == a.dst)
            ++s.n_loops;
        else
            s.total_citations += a.weight;
    }
    s.density = link_density(s.n_nodes, s.n_links);
    s.avg_total_degree = average_total_degree(s.n_nodes, s.n_links);

    // Watts-Strogatz average local coefficient on the symmetrized skeleton.
    SymGraph sym = symmetrize(g);
    const int n = sym.node_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(sym.degree(v)));
        for (const auto& [u, w] : sym.neighbors(v)) adj[static_cast<std::size_t>(v)].push_back(u);
    }
    // Local coefficient of v = edges among neighbors / C(deg, 2).
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto& nv = adj[static_cast<std::size_t>(v)];
        const auto d = static_cast<std::int64_t>(nv.size());
        if (d < 2) continue;
        std::int64_t links_between_neighbors = 0;
        for (int u : nv) {
            const auto& nu = adj[static_cast<std::size_t>(u)];
            std::size_t i = 0, j = 0;
            while (i < nv.size() && j < nu.size()) {
                if (nv[i] == nu[j]) {
                    if (nv[i] > u) ++links_between_neighbors; // each neighbor pair once
                    ++i, ++j;
                } else if (nv[i] < nu[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
        total += 2.0 * static_cast<double>(links_between_neighbors) /
                 (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    s.clustering_coefficient = n > 0 ? total / static_cast<double>(n) : 0.0;
    return s;
}

} // namespace stratmap
