#include "vdb/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace vdb {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Recognizes the canonical header comment "# n=<N>".
std::optional<int> header_vertex_count(std::string_view comment) {
    std::string_view body = trim(comment);
    if (!body.starts_with("n")) return std::nullopt;
    body.remove_prefix(1);
    body = trim(body);
    if (!body.starts_with("=")) return std::nullopt;
    body.remove_prefix(1);
    body = trim(body);
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr != body.data() + body.size() || value < 1) return std::nullopt;
    return value;
}

int parse_vertex_id(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
    return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text, std::optional<int> n_override) {
    std::vector<Arc> arcs;
    std::map<Arc, int> first_seen_line;
    std::optional<int> header_n;
    int max_id = -1;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            if (trim(line.substr(0, hash)).empty() && !header_n)
                header_n = header_vertex_count(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        std::istringstream tokens{std::string(line)};
        std::string a, b, extra;
        tokens >> a >> b;
        if (b.empty()) throw ParseError(line_no, "expected 'tail head', got '" + a + "'");
        if (tokens >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");

        const int tail = parse_vertex_id(a, line_no);
        const int head = parse_vertex_id(b, line_no);
        if (tail == head)
            throw ParseError(line_no, "loop arc (" + a + " -> " + b + ")");

        const Arc arc{tail, head};
        auto [it, inserted] = first_seen_line.emplace(arc, line_no);
        if (!inserted)
            throw ParseError(line_no, "duplicate arc (" + a + " -> " + b +
                                          "), first seen on line " + std::to_string(it->second));
        arcs.push_back(arc);
        max_id = std::max({max_id, tail, head});
    }

    const std::optional<int> fixed_n = n_override ? n_override : header_n;
    if (fixed_n) {
        for (const auto& [arc, line] : first_seen_line)
            if (arc.tail >= *fixed_n || arc.head >= *fixed_n)
                throw ParseError(line, "vertex id exceeds the fixed vertex count n=" +
                                           std::to_string(*fixed_n));
        return Digraph(*fixed_n, std::move(arcs));
    }
    if (max_id < 0) throw ParseError(line_no, "no arcs found and no vertex count given");
    return Digraph(max_id + 1, std::move(arcs));
}

std::string emit_edge_list(const Digraph& d) {
    std::string out = "# n=" + std::to_string(d.vertex_count()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

}  // namespace vdb
