#include "foliage/graph_io.hpp"

#include <map>
#include <sstream>

namespace foliage {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

Graph parse_edge_list(std::istream& in, std::string name) {
    std::map<std::string, int> label; // external label -> index, first-seen order
    std::vector<Edge> edges;
    std::string line;
    int next = 0;
    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = label.emplace(tok, next);
        if (inserted) ++next;
        return it->second;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b)) raise(Errc::parse_error, "expected `u v` pair, got: " + line);
        if (ls >> extra) raise(Errc::parse_error, "trailing token on line: " + line);
        int u = intern(a);
        int v = intern(b);
        if (u == v) raise(Errc::not_an_edge, "self-loop in edge list: " + line);
        edges.push_back(make_edge(u, v));
    }
    return Graph(next, edges, std::move(name));
}

Graph parse_edge_list(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_edge_list(in, std::move(name));
}

std::string emit_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph parse_graph6(const std::string& line, std::string name) {
    size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    auto byte = [&](size_t i) -> int {
        if (i >= line.size()) raise(Errc::parse_error, "graph6 string truncated");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) raise(Errc::parse_error, "graph6 byte out of range");
        return c - 63;
    };
    long long n;
    if (byte(pos) == 63) {
        if (pos + 3 >= line.size() || byte(pos + 1) == 63)
            raise(Errc::parse_error, "unsupported graph6 size header");
        n = (static_cast<long long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    } else {
        n = byte(pos);
        pos += 1;
    }
    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != nbytes)
        raise(Errc::parse_error, "graph6 payload length mismatch");
    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = byte(pos + static_cast<size_t>(bit / 6));
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), edges, std::move(name));
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        raise(Errc::size_cap_exceeded, "graph6 writer caps at 258047 vertices");
    }
    int group = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(group + 63);
                group = used = 0;
            }
        }
    if (used) out += static_cast<char>((group << (6 - used)) + 63);
    return out;
}

std::string emit_dot(const Graph& g, const std::vector<int>* vertex_classes,
                     const std::vector<std::vector<Edge>>* edge_classes) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999",
                                    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};
    constexpr int npal = 12;
    std::map<Edge, int> edge_class;
    if (edge_classes)
        for (size_t k = 0; k < edge_classes->size(); ++k)
            for (Edge e : (*edge_classes)[k]) edge_class[e] = static_cast<int>(k);

    std::ostringstream out;
    out << "graph \"" << (g.name().empty() ? "g" : g.name()) << "\" {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (vertex_classes)
            out << " [style=filled, fillcolor=\"" << palette[(*vertex_classes)[v] % npal]
                << "\"]";
        out << ";\n";
    }
    for (auto e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        auto it = edge_class.find(e);
        if (it != edge_class.end())
            out << " [color=\"" << palette[it->second % npal] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

Graph read_graph(std::istream& in, const std::string& format, std::string name) {
    if (format == "edges") return parse_edge_list(in, std::move(name));
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (format == "g6") {
        std::istringstream ss(all);
        std::string line;
        while (std::getline(ss, line) && line.empty()) {
        }
        return parse_graph6(line, std::move(name));
    }
    if (format != "auto") raise(Errc::unsupported_format, format);
    // auto: a single token that is not a `u v` pair is taken as graph6
    std::string stripped;
    {
        std::istringstream lines(all);
        std::string line;
        while (std::getline(lines, line)) stripped += strip_comment(line) + "\n";
    }
    std::istringstream probe(stripped);
    std::string first, second;
    probe >> first;
    if (first.empty()) return Graph(0, std::move(name));
    if (probe >> second) {
        std::istringstream body(all);
        return parse_edge_list(body, std::move(name));
    }
    return parse_graph6(first, std::move(name));
}

} // namespace foliage
