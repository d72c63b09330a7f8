#include <netrobust/edge_list.hpp>
#include <netrobust/errors.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

namespace netrobust {

EdgeListFormat parseEdgeListFormat(std::string_view name) {
    if (name == "konect")
        return EdgeListFormat::Konect;
    if (name == "snap")
        return EdgeListFormat::Snap;
    if (name == "plain")
        return EdgeListFormat::Plain;
    throw ConfigError("unknown edge list format '" + std::string(name) + "'");
}

std::string_view toString(EdgeListFormat format) {
    switch (format) {
    case EdgeListFormat::Konect:
        return "konect";
    case EdgeListFormat::Snap:
        return "snap";
    case EdgeListFormat::Plain:
        return "plain";
    }
    return "?";
}

namespace {

bool isSpace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Splits off the next whitespace-delimited token; returns empty view at end.
std::string_view nextToken(std::string_view &rest) {
    std::size_t b = 0;
    while (b < rest.size() && isSpace(rest[b]))
        ++b;
    std::size_t e = b;
    while (e < rest.size() && !isSpace(rest[e]))
        ++e;
    auto tok = rest.substr(b, e - b);
    rest.remove_prefix(e);
    return tok;
}

label parseId(std::string_view tok, std::size_t line) {
    label value = 0;
    const char *first = tok.data();
    if (!tok.empty() && tok.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || first == tok.data() + tok.size())
        throw ParseError(line, "expected integer node id, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

LoadedGraph loadEdgeList(std::istream &in, EdgeListFormat format) {
    std::unordered_map<label, node> index;
    std::vector<label> labels;
    std::vector<std::pair<node, node>> edges;
    LoadReport report;

    auto intern = [&](label id) {
        auto [it, inserted] = index.try_emplace(id, static_cast<node>(labels.size()));
        if (inserted)
            labels.push_back(id);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest(line);
        auto first = nextToken(rest);
        if (first.empty() || first.front() == '%' || first.front() == '#')
            continue;
        auto second = nextToken(rest);
        if (second.empty())
            throw ParseError(lineno, "expected two node ids, got one");
        const label a = parseId(first, lineno);
        const label b = parseId(second, lineno);
        if (format == EdgeListFormat::Plain && !nextToken(rest).empty())
            throw ParseError(lineno, "plain format expects exactly two tokens per line");

        ++report.lines;
        const node u = intern(a);
        const node v = intern(b);
        if (u == v) {
            ++report.self_loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (in.bad())
        throw ParseError(lineno, "read error");
    if (labels.empty())
        throw ParseError(0, "edge list is empty");

    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    report.duplicate_edges = static_cast<count>(edges.end() - last);
    edges.erase(last, edges.end());

    const count n = labels.size();
    return {Graph::fromEdges(n, edges, std::move(labels)), report};
}

LoadedGraph loadEdgeListFile(const std::filesystem::path &path, EdgeListFormat format) {
    std::ifstream in(path);
    if (!in)
        throw IoError(path.string() + ": cannot open for reading");
    try {
        return loadEdgeList(in, format);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.message(), path.string());
    }
}

void writeEdgeList(std::ostream &out, const Graph &g) {
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

} // namespace netrobust
