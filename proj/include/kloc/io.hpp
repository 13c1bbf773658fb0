#pragma once

// Edge-list text format:
//
//   n m
//   u v      (m lines, 0-based ids, whitespace separated)
//
// Everything from '#' to the end of a line is ignored, as are blank lines.

#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kloc/graph.hpp"

namespace kloc {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::vector<std::string>>> significant_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens{std::istream_iterator<std::string>(ss), {}};
        if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
    }
    return out;
}

inline std::uint64_t parse_count(const std::string& token, std::size_t line) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        if (!token.empty() && token[0] == '-') throw std::invalid_argument(token);
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + token + "'");
    return value;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    const auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError("empty input: expected a header line 'n m'");
    const auto& [header_line, header] = lines.front();
    if (header.size() != 2) throw ParseError("line " + std::to_string(header_line) + ": header must be 'n m'");
    const auto n = detail::parse_count(header[0], header_line);
    const auto m = detail::parse_count(header[1], header_line);
    if (lines.size() - 1 != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, tokens] = lines[i];
        if (tokens.size() != 2) throw ParseError("line " + std::to_string(number) + ": edge must be 'u v'");
        const auto u = detail::parse_count(tokens[0], number);
        const auto v = detail::parse_count(tokens[1], number);
        if (u >= n || v >= n)
            throw ParseError("line " + std::to_string(number) + ": vertex out of range 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

inline Graph read_edge_list_file(const std::string& path) {
    std::istringstream in(read_file_bytes(path));
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

/// FNV-1a, hex encoded.
inline std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return out;
}

}  // namespace kloc
