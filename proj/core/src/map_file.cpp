#include "stratmap/map_file.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stratmap/errors.hpp"
#include "stratmap/numeric.hpp"

namespace stratmap {

namespace {

constexpr std::string_view kMapHeader =
    "id\tlabel\tx\ty\tcluster\tweight<Links>\tweight<Total link strength>";

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    return fields;
}

// Splits into lines, dropping one trailing empty line from a final "\n".
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = end + 1;
    }
    return lines;
}

void check_cluster_contiguity(const MapFile& map) {
    std::set<int> clusters;
    for (const auto& r : map.rows) clusters.insert(r.cluster);
    if (map.rows.empty()) return;
    int expect = 1;
    for (int c : clusters) {
        if (c != expect)
            throw parse_error(0, "cluster numbers must form a contiguous 1..K set (missing " +
                                     std::to_string(expect) + ")");
        ++expect;
    }
}

} // namespace

std::vector<std::string> MapFile::labels_in_cluster(int cluster) const {
    std::vector<std::string> out;
    for (const auto& r : rows)
        if (r.cluster == cluster) out.push_back(r.label);
    return out;
}

int MapFile::cluster_count() const {
    int k = 0;
    for (const auto& r : rows) k = std::max(k, r.cluster);
    return k;
}

std::string write_map_file(const MapFile& map) {
    std::string out(kMapHeader);
    out += "\n";
    for (const auto& r : map.rows) {
        if (r.label.find('\t') != std::string::npos || r.label.find('\n') != std::string::npos)
            throw domain_error("map label may not contain tab or newline: " + r.label);
        out += std::to_string(r.id);
        out += '\t';
        out += r.label;
        out += '\t';
        out += format_fixed(r.x, 4);
        out += '\t';
        out += format_fixed(r.y, 4);
        out += '\t';
        out += std::to_string(r.cluster);
        out += '\t';
        out += std::to_string(r.links);
        out += '\t';
        out += format_number(r.total_link_strength);
        out += '\n';
    }
    return out;
}

MapFile parse_map_file(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw parse_error(0, "empty map file");
    if (lines[0] != kMapHeader) {
        auto got = split_tabs(lines[0]);
        auto want = split_tabs(kMapHeader);
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (i >= got.size() || got[i] != want[i])
                throw parse_error(1, "missing or unexpected header column: expected `" +
                                         std::string(want[i]) + "`" +
                                         (i < got.size() ? ", got `" + std::string(got[i]) + "`"
                                                         : ""));
        }
        throw parse_error(1, "unexpected extra header columns");
    }
    MapFile map;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        auto fields = split_tabs(lines[ln]);
        if (fields.size() != 7)
            throw parse_error(ln + 1, "expected 7 tab-separated fields, got " +
                                          std::to_string(fields.size()));
        MapRecord r;
        auto id = parse_int(fields[0]);
        if (!id) throw parse_error(ln + 1, "non-integer id");
        r.id = static_cast<int>(*id);
        r.label = std::string(fields[1]);
        auto x = parse_double(fields[2]);
        auto y = parse_double(fields[3]);
        if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y))
            throw parse_error(ln + 1, "bad coordinate");
        r.x = *x;
        r.y = *y;
        auto cluster = parse_int(fields[4]);
        if (!cluster || *cluster < 1)
            throw parse_error(ln + 1, "non-integer or non-positive cluster");
        r.cluster = static_cast<int>(*cluster);
        auto links = parse_int(fields[5]);
        if (!links || *links < 0) throw parse_error(ln + 1, "bad links count");
        r.links = *links;
        auto strength = parse_double(fields[6]);
        if (!strength || *strength < 0) throw parse_error(ln + 1, "bad total link strength");
        r.total_link_strength = *strength;
        map.rows.push_back(std::move(r));
    }
    std::set<int> ids;
    for (const auto& r : map.rows)
        if (!ids.insert(r.id).second)
            throw parse_error(0, "duplicate id " + std::to_string(r.id));
    check_cluster_contiguity(map);
    return map;
}

std::string write_network_file(const SymGraph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        out += std::to_string(e.a + 1);
        out += '\t';
        out += std::to_string(e.b + 1);
        out += '\t';
        out += format_number(e.weight);
        out += '\n';
    }
    return out;
}

NetworkFile parse_network_file(std::string_view text) {
    NetworkFile net;
    auto lines = split_lines(text);
    std::set<std::pair<int, int>> seen;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        auto fields = split_tabs(lines[ln]);
        if (fields.size() != 3)
            throw parse_error(ln + 1, "expected `i\\tj\\tstrength`");
        auto i = parse_int(fields[0]);
        auto j = parse_int(fields[1]);
        auto w = parse_double(fields[2]);
        if (!i || !j) throw parse_error(ln + 1, "non-integer endpoint");
        if (!w || !std::isfinite(*w) || *w <= 0) throw parse_error(ln + 1, "bad strength");
        if (*i == *j) throw parse_error(ln + 1, "loop row (i == j) is not allowed");
        if (*i > *j) throw parse_error(ln + 1, "rows must satisfy i < j");
        if (!seen.insert({static_cast<int>(*i), static_cast<int>(*j)}).second)
            throw parse_error(ln + 1, "duplicate pair");
        net.rows.push_back({static_cast<int>(*i), static_cast<int>(*j), *w});
    }
    return net;
}

} // namespace stratmap
