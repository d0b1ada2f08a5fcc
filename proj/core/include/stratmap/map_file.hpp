#ifndef STRATMAP_MAP_FILE_HPP
#define STRATMAP_MAP_FILE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "stratmap/graph.hpp"

namespace stratmap {

struct MapRecord {
    int id = 0;
    std::string label;
    double x = 0.0;
    double y = 0.0;
    int cluster = 1;
    std::int64_t links = 0;            // unweighted degree
    double total_link_strength = 0.0;  // k_i

    bool operator==(const MapRecord&) const = default;
};

/// One row per node: id, label, coordinates, cluster, link counts.
/// Cluster numbers over the file form a contiguous 1..K set.
struct MapFile {
    std::vector<MapRecord> rows;

    bool operator==(const MapFile&) const = default;

    /// Labels of the rows assigned to `cluster`, in row order. This is what
    /// drives per-cluster subnetwork extraction.
    std::vector<std::string> labels_in_cluster(int cluster) const;

    int cluster_count() const;
};

struct NetworkRecord {
    int i = 0; // i < j, 1-based ids
    int j = 0;
    double strength = 0.0;

    bool operator==(const NetworkRecord&) const = default;
};

/// Headerless pairwise link-strength rows, ascending (i, j).
struct NetworkFile {
    std::vector<NetworkRecord> rows;

    bool operator==(const NetworkFile&) const = default;
};

/// Tab-separated with the header
/// `id\tlabel\tx\ty\tcluster\tweight<Links>\tweight<Total link strength>`.
/// Coordinates print with 4 decimals, strengths in minimal decimal form.
std::string write_map_file(const MapFile& map);

/// Inverts write_map_file. Throws parse_error on a missing or reordered
/// header column, non-integer cluster, or non-contiguous cluster numbering.
MapFile parse_map_file(std::string_view text);

/// `i\tj\tstrength` rows from the graph's edges, 1-based, i < j, ascending.
std::string write_network_file(const SymGraph& g);

/// Throws parse_error on loops (i == j), unordered or duplicate pairs.
NetworkFile parse_network_file(std::string_view text);

} // namespace stratmap

#endif
