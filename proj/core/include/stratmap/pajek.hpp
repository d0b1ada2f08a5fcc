#ifndef STRATMAP_PAJEK_HPP
#define STRATMAP_PAJEK_HPP

#include <string>
#include <string_view>
#include <vector>

namespace stratmap {

struct PajekVertex {
    int id = 0; // 1-based, in 1..vertex_count
    std::string label;

    bool operator==(const PajekVertex&) const = default;
};

struct PajekLink {
    int src = 0;
    int dst = 0;
    double weight = 1.0;

    bool operator==(const PajekLink&) const = default;
};

/// In-memory image of a Pajek .net file: a `*Vertices` block followed by
/// optional `*Arcs` (directed) and `*Edges` (undirected) sections.
/// Loops are kept as data here; they are removed during symmetrization.
struct PajekDocument {
    int vertex_count = 0;
    std::vector<PajekVertex> vertices; // file order
    std::vector<PajekLink> arcs;       // duplicates summed, first-seen order
    std::vector<PajekLink> edges;      // duplicates summed over unordered pairs

    bool operator==(const PajekDocument&) const = default;
};

/// Parses a Pajek document.
///
/// Accepted grammar: a case-insensitive `*Vertices N` header, N vertex lines
/// `id "label"` (unquoted single-token labels also accepted; trailing
/// coordinate tokens ignored), then any number of `*Arcs` / `*Edges`
/// sections holding `src dst [weight]` lines (weight defaults to 1).
/// `%` starts a comment line, blank lines are skipped, `\r\n` tolerated.
/// Duplicate arcs over the same ordered pair (and duplicate edges over the
/// same unordered pair) sum their weights.
///
/// Throws parse_error naming the offending 1-based line on malformed
/// headers, out-of-range ids, non-numeric or negative weights, and vertex
/// count mismatches.
PajekDocument parse_pajek(std::string_view text);

/// Emits the exact textual form: quoted labels (embedded quotes doubled),
/// weights in minimal decimal form, empty sections omitted, `\n` endings.
/// parse_pajek(write_pajek(d)) == d for every valid document.
std::string write_pajek(const PajekDocument& doc);

} // namespace stratmap

#endif
