#include "stratmap/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "stratmap/errors.hpp"
#include "stratmap/numeric.hpp"

namespace stratmap {

namespace {

struct Line {
    std::size_t number;  // 1-based position in the input
    std::string_view text;
};

bool is_blank_or_comment(std::string_view s) {
    std::size_t i = s.find_first_not_of(" \t");
    return i == std::string_view::npos || s[i] == '%';
}

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view raw = (end == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, end - pos);
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (!is_blank_or_comment(raw)) lines.push_back({lineno, raw});
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        tokens.push_back(s.substr(start, i - start));
    }
    return tokens;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

enum class Section { Arcs, Edges };

bool section_header(std::string_view line, Section& out) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].empty() || tokens[0][0] != '*') return false;
    std::string_view kw = tokens[0].substr(1);
    if (iequals(kw, "arcs")) { out = Section::Arcs; return true; }
    if (iequals(kw, "edges")) { out = Section::Edges; return true; }
    return false;
}

// Parses `id "label with spaces"` or `id label`, ignoring trailing tokens.
PajekVertex parse_vertex_line(const Line& line, int vertex_count) {
    auto s = line.text;
    std::size_t i = s.find_first_not_of(" \t");
    std::size_t id_end = s.find_first_of(" \t", i);
    auto id = parse_int(s.substr(i, id_end == std::string_view::npos ? std::string_view::npos
                                                                     : id_end - i));
    if (!id) throw parse_error(line.number, "malformed vertex line: expected integer id");
    if (*id < 1 || *id > vertex_count)
        throw parse_error(line.number, "vertex id " + std::to_string(*id) +
                                           " out of range 1.." + std::to_string(vertex_count));
    if (id_end == std::string_view::npos)
        throw parse_error(line.number, "malformed vertex line: missing label");
    i = s.find_first_not_of(" \t", id_end);
    if (i == std::string_view::npos)
        throw parse_error(line.number, "malformed vertex line: missing label");

    std::string label;
    if (s[i] == '"') {
        ++i;
        bool closed = false;
        while (i < s.size()) {
            if (s[i] == '"') {
                if (i + 1 < s.size() && s[i + 1] == '"') { // doubled quote escape
                    label.push_back('"');
                    i += 2;
                    continue;
                }
                closed = true;
                break;
            }
            label.push_back(s[i]);
            ++i;
        }
        if (!closed) throw parse_error(line.number, "unterminated quoted label");
    } else {
        std::size_t end = s.find_first_of(" \t", i);
        label = std::string(s.substr(i, end == std::string_view::npos ? std::string_view::npos
                                                                      : end - i));
    }
    return {static_cast<int>(*id), std::move(label)};
}

PajekLink parse_link_line(const Line& line, int vertex_count) {
    auto tokens = tokenize(line.text);
    if (tokens.size() < 2)
        throw parse_error(line.number, "malformed link line: expected `src dst [weight]`");
    auto src = parse_int(tokens[0]);
    auto dst = parse_int(tokens[1]);
    if (!src || !dst)
        throw parse_error(line.number, "malformed link line: non-integer endpoint");
    for (int v : {static_cast<int>(*src), static_cast<int>(*dst)})
        if (v < 1 || v > vertex_count)
            throw parse_error(line.number, "endpoint id " + std::to_string(v) +
                                               " out of range 1.." + std::to_string(vertex_count));
    double weight = 1.0;
    if (tokens.size() >= 3) {
        auto w = parse_double(tokens[2]);
        if (!w || !std::isfinite(*w))
            throw parse_error(line.number, "non-numeric weight `" + std::string(tokens[2]) + "`");
        if (*w < 0) throw parse_error(line.number, "negative weight");
        weight = *w;
    }
    return {static_cast<int>(*src), static_cast<int>(*dst), weight};
}

std::string quote_label(std::string_view label) {
    std::string out;
    out.reserve(label.size() + 2);
    out.push_back('"');
    for (char c : label) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

PajekDocument parse_pajek(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw parse_error(0, "empty document: missing *Vertices header");

    std::size_t idx = 0;
    auto tokens = tokenize(lines[idx].text);
    if (tokens.size() < 2 || !iequals(tokens[0], "*vertices"))
        throw parse_error(lines[idx].number, "malformed header: expected `*Vertices N`");
    auto n = parse_int(tokens[1]);
    if (!n || *n < 0)
        throw parse_error(lines[idx].number, "malformed header: bad vertex count");
    if (tokens.size() > 2)
        throw parse_error(lines[idx].number, "malformed header: trailing tokens");
    ++idx;

    PajekDocument doc;
    doc.vertex_count = static_cast<int>(*n);
    doc.vertices.reserve(doc.vertex_count);

    std::vector<char> seen(static_cast<std::size_t>(doc.vertex_count) + 1, 0);
    for (int k = 0; k < doc.vertex_count; ++k) {
        Section ignored;
        if (idx >= lines.size() || section_header(lines[idx].text, ignored)) {
            std::size_t at = idx < lines.size() ? lines[idx].number : lines.back().number;
            throw parse_error(at, "vertex count mismatch: declared " +
                                      std::to_string(doc.vertex_count) + ", found " +
                                      std::to_string(k));
        }
        PajekVertex v = parse_vertex_line(lines[idx], doc.vertex_count);
        if (seen[static_cast<std::size_t>(v.id)])
            throw parse_error(lines[idx].number,
                              "duplicate vertex id " + std::to_string(v.id));
        seen[static_cast<std::size_t>(v.id)] = 1;
        doc.vertices.push_back(std::move(v));
        ++idx;
    }

    std::unordered_map<std::int64_t, std::size_t> arc_index;  // (src,dst) -> arcs slot
    std::unordered_map<std::int64_t, std::size_t> edge_index; // unordered pair -> edges slot
    auto key = [&](int a, int b) {
        return static_cast<std::int64_t>(a) * (doc.vertex_count + 1) + b;
    };

    Section current = Section::Arcs;
    bool in_section = false;
    for (; idx < lines.size(); ++idx) {
        Section next;
        if (section_header(lines[idx].text, next)) {
            current = next;
            in_section = true;
            continue;
        }
        if (!in_section)
            throw parse_error(lines[idx].number,
                              "unexpected line: expected `*Arcs` or `*Edges` "
                              "(or vertex count mismatch)");
        PajekLink link = parse_link_line(lines[idx], doc.vertex_count);
        if (current == Section::Arcs) {
            auto [it, inserted] = arc_index.try_emplace(key(link.src, link.dst),
                                                        doc.arcs.size());
            if (inserted)
                doc.arcs.push_back(link);
            else
                doc.arcs[it->second].weight += link.weight;
        } else {
            int lo = std::min(link.src, link.dst), hi = std::max(link.src, link.dst);
            auto [it, inserted] = edge_index.try_emplace(key(lo, hi), doc.edges.size());
            if (inserted)
                doc.edges.push_back(link);
            else
                doc.edges[it->second].weight += link.weight;
        }
    }
    return doc;
}

std::string write_pajek(const PajekDocument& doc) {
    std::string out;
    out += "*Vertices " + std::to_string(doc.vertex_count) + "\n";
    for (const auto& v : doc.vertices)
        out += std::to_string(v.id) + " " + quote_label(v.label) + "\n";
    if (!doc.arcs.empty()) {
        out += "*Arcs\n";
        for (const auto& a : doc.arcs)
            out += std::to_string(a.src) + " " + std::to_string(a.dst) + " " +
                   format_number(a.weight) + "\n";
    }
    if (!doc.edges.empty()) {
        out += "*Edges\n";
        for (const auto& e : doc.edges)
            out += std::to_string(e.src) + " " + std::to_string(e.dst) + " " +
                   format_number(e.weight) + "\n";
    }
    return out;
}

} // namespace stratmap
