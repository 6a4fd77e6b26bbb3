#include "gpoly/graph_io.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gpoly {

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "json")
        return GraphFormat::json;
    if (name == "graph6")
        return GraphFormat::graph6;
    if (name == "auto" || name.empty())
        return GraphFormat::automatic;
    throw InvalidInput("unknown graph format: " + std::string(name));
}

MarkedGraph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices"))
        throw InvalidInput("graph JSON needs a \"vertices\" array");
    MarkedGraph g;
    try {
        for (const auto& v : j.at("vertices")) {
            int id = v.at("id").get<int>();
            int w = v.value("w", 1);
            int d = v.value("d", 0);
            g.add_vertex(id, make_mark(w, d));
        }
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw InvalidInput("edge must be a pair [u, v]");
                g.add_edge(e[0].get<int>(), e[1].get<int>());
            }
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("bad graph JSON: ") + ex.what());
    }
    return g;
}

nlohmann::json graph_to_json(const MarkedGraph& g)
{
    nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
    for (const Vertex& v : g.vertices())
        vs.push_back({{"id", v.id}, {"w", v.mark.w}, {"d", v.mark.d}});
    for (const Edge& e : g.edges())
        es.push_back({e.u, e.v});
    return {{"vertices", vs}, {"edges", es}};
}

MarkedGraph parse_graph6(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.rfind(">>graph6<<", 0) == 0)
        s = s.substr(10);
    if (s.empty())
        throw InvalidInput("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw InvalidInput("graph6 byte out of range");
    std::size_t pos = 0;
    long n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = ((s[1] - 63L) << 12) | ((s[2] - 63L) << 6) | (s[3] - 63L);
        pos = 4;
    } else {
        throw InvalidInput("graph6 graphs this large are not supported");
    }
    std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (s.size() - pos != need)
        throw InvalidInput("graph6 length does not match vertex count");
    MarkedGraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i, Mark{1, 0});
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[pos + k / 6] - 63;
            if (byte & (1 << (5 - k % 6)))
                g.add_edge(i, j);
        }
    return g;
}

std::string to_graph6(const MarkedGraph& g)
{
    if (!g.is_simple() || !g.is_unweighted())
        throw InvalidInput("graph6 holds simple unweighted graphs only");
    long n = static_cast<long>(g.order());
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        throw InvalidInput("graph too large for graph6");
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) {
        auto a = g.index_of(e.u), b = g.index_of(e.v);
        adj[a][b] = adj[b][a] = true;
    }
    int acc = 0, used = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i][j] ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(acc + 63);
                acc = used = 0;
            }
        }
    if (used > 0)
        out += static_cast<char>((acc << (6 - used)) + 63);
    return out;
}

MarkedGraph read_graph(const std::string& text, GraphFormat format)
{
    if (format == GraphFormat::automatic) {
        auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
        format = (it != text.end() && *it == '{') ? GraphFormat::json : GraphFormat::graph6;
    }
    if (format == GraphFormat::json) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw InvalidInput(std::string("bad graph JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    return parse_graph6(text);
}

} // namespace gpoly
