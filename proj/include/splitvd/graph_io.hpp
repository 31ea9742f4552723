#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace splitvd {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t to_count(std::string_view tok, std::size_t line) {
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace detail

/// Reads the edge-list format: comment lines start with `c`, one header `p <n> <m>`
/// (a format word such as `p edge <n> <m>` is tolerated), then m lines `e <u> <v>` with 1-based ids.
inline graph parse_graph(std::string_view text) {
    bool have_header = false;
    std::size_t n = 0, m = 0, line_no = 0;
    std::vector<edge> edges;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (have_header)
                throw parse_error(line_no, "duplicate header");
            if (tok.size() == 3) {
                n = detail::to_count(tok[1], line_no);
                m = detail::to_count(tok[2], line_no);
            } else if (tok.size() == 4) {
                n = detail::to_count(tok[2], line_no);
                m = detail::to_count(tok[3], line_no);
            } else {
                throw parse_error(line_no, "malformed header, expected 'p <n> <m>'");
            }
            have_header = true;
            edges.reserve(m);
        } else if (tok[0] == "e") {
            if (!have_header)
                throw parse_error(line_no, "edge before header");
            if (tok.size() != 3)
                throw parse_error(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::size_t u = detail::to_count(tok[1], line_no);
            std::size_t v = detail::to_count(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v)
                throw parse_error(line_no, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
        } else {
            throw parse_error(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw parse_error(line_no, "missing 'p <n> <m>' header");
    if (edges.size() != m)
        throw parse_error(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()));
    return graph(n, edges);
}

inline graph read_graph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

inline void write_graph(std::ostream& out, const graph& g, const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_edge_list(const graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

} // namespace splitvd
