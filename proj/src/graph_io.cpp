#include "bicontract/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "bicontract/error.hpp"

namespace bicontract {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

long long to_int(std::string_view word, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        parse_fail(line_no, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        fn(line_no, text.substr(pos, end - pos));
        if (end == text.size()) break;
        pos = end + 1;
    }
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::set<Vertex> t1;
    std::set<Vertex> t2;

    auto vertex = [&](std::string_view word, std::size_t line_no) {
        auto v = to_int(word, line_no);
        if (v < 1 || v > n)
            parse_fail(line_no, "vertex " + std::string(word) + " out of range 1.." + std::to_string(n));
        return static_cast<Vertex>(v);
    };

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto words = split_words(line);
        if (words.empty() || words[0] == "c") return;
        const auto tag = words[0];
        if (tag == "p") {
            if (n >= 0) parse_fail(line_no, "second header");
            if (words.size() != 4 || words[1] != "edge")
                parse_fail(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = to_int(words[2], line_no);
            m = to_int(words[3], line_no);
            if (n < 0 || m < 0) parse_fail(line_no, "malformed header, negative count");
            return;
        }
        if (n < 0) parse_fail(line_no, "missing 'p edge' header before '" + std::string(tag) + "'");
        if (tag == "e") {
            if (words.size() != 3) parse_fail(line_no, "malformed edge line");
            if (!t1.empty() || !t2.empty()) parse_fail(line_no, "edge after terminal lines");
            auto u = vertex(words[1], line_no);
            auto v = vertex(words[2], line_no);
            if (u == v) parse_fail(line_no, "loop on vertex " + std::to_string(u));
            auto e = Edge::make(u, v);
            if (!seen.insert(e).second)
                parse_fail(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
            edges.push_back(e);
        } else if (tag == "t1" || tag == "t2") {
            if (words.size() != 2) parse_fail(line_no, "malformed terminal line");
            auto v = vertex(words[1], line_no);
            auto& mine = tag == "t1" ? t1 : t2;
            auto& other = tag == "t1" ? t2 : t1;
            if (other.count(v)) parse_fail(line_no, "vertex " + std::to_string(v) + " is in both t1 and t2");
            mine.insert(v);
        } else {
            parse_fail(line_no, "unknown line type '" + std::string(tag) + "'");
        }
    });

    if (n < 0) fail(Errc::parse_error, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        fail(Errc::parse_error, "header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));

    GraphFile out;
    out.graph = Graph::with_vertices(static_cast<int>(n), std::move(edges));
    out.t1.assign(t1.begin(), t1.end());
    out.t2.assign(t2.begin(), t2.end());
    return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

std::string serialize_graph(const Graph& g, std::span<const Vertex> t1, std::span<const Vertex> t2) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    auto number = [&](Vertex v) { return g.index(v) + 1; };
    for (const auto& e : g.edges()) out << "e " << number(e.u) << ' ' << number(e.v) << '\n';
    std::vector<Vertex> a(t1.begin(), t1.end());
    std::vector<Vertex> b(t2.begin(), t2.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (auto v : a) out << "t1 " << number(v) << '\n';
    for (auto v : b) out << "t2 " << number(v) << '\n';
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::parse_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GraphFile read_graph_file(const std::filesystem::path& path) {
    auto text = read_text_file(path);
    try {
        return parse_graph_file(text);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

EdgeSet parse_edge_list(std::string_view text) {
    EdgeSet out;
    bool first = true;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto words = split_words(line);
        if (words.empty() || words[0] == "c") return;
        bool leading = first;
        first = false;
        if (leading && (words[0] == "YES" || words[0] == "NO")) return;
        if (words[0] != "e" || words.size() != 3) parse_fail(line_no, "expected 'e <u> <v>'");
        auto u = static_cast<Vertex>(to_int(words[1], line_no));
        auto v = static_cast<Vertex>(to_int(words[2], line_no));
        if (u == v) parse_fail(line_no, "loop on vertex " + std::to_string(u));
        out.push_back(Edge::make(u, v));
    });
    return out;
}

std::string serialize_edge_list(std::span<const Edge> edges) {
    std::ostringstream out;
    for (const auto& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace bicontract
