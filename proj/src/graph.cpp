#include "gpoly/graph.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace gpoly {

Mark dot_sum(Mark a, Mark b) { return {a.w + b.w, a.d + b.d + 1}; }

Mark make_mark(int w, int d)
{
    Mark m{w, d};
    if (!m.valid())
        throw InvalidInput("not a mark: " + to_string(m));
    return m;
}

std::string to_string(Mark m) { return "(" + std::to_string(m.w) + "," + std::to_string(m.d) + ")"; }

namespace {

template <class T>
auto find_by_id(const std::vector<T>& xs, int id)
{
    return std::lower_bound(xs.begin(), xs.end(), id, [](const T& x, int key) { return x.id < key; });
}

template <class T>
auto find_by_id(std::vector<T>& xs, int id)
{
    return std::lower_bound(xs.begin(), xs.end(), id, [](const T& x, int key) { return x.id < key; });
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

int MarkedGraph::add_vertex(Mark m)
{
    int id = next_vertex_id();
    add_vertex(id, m);
    return id;
}

void MarkedGraph::add_vertex(int id, Mark m)
{
    if (!m.valid())
        throw InvalidInput("not a mark: " + to_string(m));
    auto it = find_by_id(vertices_, id);
    if (it != vertices_.end() && it->id == id)
        throw InvalidInput("duplicate vertex id " + std::to_string(id));
    vertices_.insert(it, Vertex{id, m});
}

int MarkedGraph::add_edge(int u, int v)
{
    int id = next_edge_id();
    add_edge(id, u, v);
    return id;
}

void MarkedGraph::add_edge(int id, int u, int v)
{
    if (!has_vertex(u) || !has_vertex(v))
        throw InvalidInput("edge endpoint is not a vertex");
    auto it = find_by_id(edges_, id);
    if (it != edges_.end() && it->id == id)
        throw InvalidInput("duplicate edge id " + std::to_string(id));
    edges_.insert(it, Edge{id, std::min(u, v), std::max(u, v)});
}

void MarkedGraph::remove_edge(int id)
{
    auto it = find_by_id(edges_, id);
    if (it == edges_.end() || it->id != id)
        throw InvalidInput("unknown edge id " + std::to_string(id));
    edges_.erase(it);
}

void MarkedGraph::remove_vertex(int id)
{
    auto it = find_by_id(vertices_, id);
    if (it == vertices_.end() || it->id != id)
        throw InvalidInput("unknown vertex id " + std::to_string(id));
    for (const Edge& e : edges_)
        if (e.u == id || e.v == id)
            throw InvalidInput("vertex " + std::to_string(id) + " still has edges");
    vertices_.erase(it);
}

void MarkedGraph::set_mark(int id, Mark m)
{
    if (!m.valid())
        throw InvalidInput("not a mark: " + to_string(m));
    auto it = find_by_id(vertices_, id);
    if (it == vertices_.end() || it->id != id)
        throw InvalidInput("unknown vertex id " + std::to_string(id));
    it->mark = m;
}

bool MarkedGraph::has_vertex(int id) const
{
    auto it = find_by_id(vertices_, id);
    return it != vertices_.end() && it->id == id;
}

bool MarkedGraph::has_edge(int id) const
{
    auto it = find_by_id(edges_, id);
    return it != edges_.end() && it->id == id;
}

const Vertex& MarkedGraph::vertex(int id) const
{
    auto it = find_by_id(vertices_, id);
    if (it == vertices_.end() || it->id != id)
        throw InvalidInput("unknown vertex id " + std::to_string(id));
    return *it;
}

const Edge& MarkedGraph::edge(int id) const
{
    auto it = find_by_id(edges_, id);
    if (it == edges_.end() || it->id != id)
        throw InvalidInput("unknown edge id " + std::to_string(id));
    return *it;
}

std::size_t MarkedGraph::index_of(int vertex_id) const
{
    auto it = find_by_id(vertices_, vertex_id);
    if (it == vertices_.end() || it->id != vertex_id)
        throw InvalidInput("unknown vertex id " + std::to_string(vertex_id));
    return static_cast<std::size_t>(it - vertices_.begin());
}

int MarkedGraph::degree(int v) const
{
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v)
            ++d;
        if (e.v == v)
            ++d;
    }
    return d;
}

std::vector<int> MarkedGraph::degrees() const
{
    std::vector<int> deg(vertices_.size(), 0);
    for (const Edge& e : edges_) {
        ++deg[index_of(e.u)];
        ++deg[index_of(e.v)];
    }
    return deg;
}

std::vector<int> MarkedGraph::incident_edges(int v) const
{
    std::vector<int> out;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v)
            out.push_back(e.id);
    return out;
}

std::vector<int> MarkedGraph::vertex_ids() const
{
    std::vector<int> out;
    out.reserve(vertices_.size());
    for (const Vertex& v : vertices_)
        out.push_back(v.id);
    return out;
}

std::vector<int> MarkedGraph::edge_ids() const
{
    std::vector<int> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
        out.push_back(e.id);
    return out;
}

int MarkedGraph::next_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back().id + 1; }
int MarkedGraph::next_edge_id() const { return edges_.empty() ? 0 : edges_.back().id + 1; }

long MarkedGraph::total_weight() const
{
    long s = 0;
    for (const Vertex& v : vertices_)
        s += v.mark.w;
    return s;
}

std::vector<Mark> MarkedGraph::marks() const
{
    std::vector<Mark> out;
    for (const Vertex& v : vertices_)
        out.push_back(v.mark);
    return out;
}

bool MarkedGraph::has_loops() const
{
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool MarkedGraph::is_simple() const
{
    if (has_loops())
        return false;
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : edges_)
        ends.emplace_back(e.u, e.v);
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool MarkedGraph::is_forest() const
{
    UnionFind uf(vertices_.size());
    for (const Edge& e : edges_)
        if (!uf.unite(static_cast<int>(index_of(e.u)), static_cast<int>(index_of(e.v))))
            return false;
    return true;
}

bool MarkedGraph::is_connected() const { return components().size() <= 1; }

bool MarkedGraph::is_unweighted() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.mark.is_unit(); });
}

bool MarkedGraph::all_undotted() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.mark.d == 0; });
}

std::vector<std::vector<int>> MarkedGraph::components() const
{
    UnionFind uf(vertices_.size());
    for (const Edge& e : edges_)
        uf.unite(static_cast<int>(index_of(e.u)), static_cast<int>(index_of(e.v)));
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(vertices_[i].id);
    std::vector<std::vector<int>> out;
    for (auto& [root, ids] : groups)
        out.push_back(std::move(ids));
    std::sort(out.begin(), out.end());
    return out;
}

MarkedGraph marked_graph(const std::vector<Mark>& marks, const std::vector<std::pair<int, int>>& edges)
{
    MarkedGraph g;
    for (std::size_t i = 0; i < marks.size(); ++i)
        g.add_vertex(static_cast<int>(i), marks[i]);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

MarkedGraph weighted_graph(const std::vector<int>& weights, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<Mark> marks;
    for (int w : weights)
        marks.push_back(make_mark(w, 0));
    return marked_graph(marks, edges);
}

MarkedGraph unweighted_graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    return weighted_graph(std::vector<int>(static_cast<std::size_t>(n), 1), edges);
}

MarkedGraph weighted_path(const std::vector<int>& weights)
{
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < weights.size(); ++i)
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
    return weighted_graph(weights, edges);
}

MarkedGraph weighted_star(int center, const std::vector<int>& leaves)
{
    std::vector<int> weights{center};
    std::vector<std::pair<int, int>> edges;
    for (int w : leaves) {
        edges.emplace_back(0, static_cast<int>(weights.size()));
        weights.push_back(w);
    }
    return weighted_graph(weights, edges);
}

MarkedGraph weighted_two_star(int c0, const std::vector<int>& leaves0, int c1, const std::vector<int>& leaves1)
{
    std::vector<int> weights{c0, c1};
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int w : leaves0) {
        edges.emplace_back(0, static_cast<int>(weights.size()));
        weights.push_back(w);
    }
    for (int w : leaves1) {
        edges.emplace_back(1, static_cast<int>(weights.size()));
        weights.push_back(w);
    }
    return weighted_graph(weights, edges);
}

MarkedGraph delete_edge(const MarkedGraph& g, int e)
{
    MarkedGraph h = g;
    h.remove_edge(e);
    return h;
}

namespace {

// Merge `gone` into `keep`; all edges at `gone` are re-attached to `keep`.
MarkedGraph merge_vertices(const MarkedGraph& g, int removed_edge, int keep, int gone, Mark merged)
{
    MarkedGraph h;
    for (const Vertex& v : g.vertices())
        if (v.id != gone)
            h.add_vertex(v.id, v.id == keep ? merged : v.mark);
    for (const Edge& e : g.edges()) {
        if (e.id == removed_edge)
            continue;
        int u = e.u == gone ? keep : e.u;
        int v = e.v == gone ? keep : e.v;
        h.add_edge(e.id, u, v);
    }
    return h;
}

} // namespace

MarkedGraph contract_edge(const MarkedGraph& g, int e)
{
    const Edge& ed = g.edge(e);
    if (ed.is_loop())
        throw InvalidInput("cannot contract loop " + std::to_string(e));
    return merge_vertices(g, e, ed.u, ed.v, dot_sum(g.mark(ed.u), g.mark(ed.v)));
}

NearContraction near_contract(const MarkedGraph& g, int e)
{
    const Edge& ed = g.edge(e);
    if (ed.is_loop())
        throw InvalidInput("cannot near-contract loop " + std::to_string(e));
    Mark a = g.mark(ed.u), b = g.mark(ed.v);
    NearContraction out;
    out.graph = merge_vertices(g, e, ed.u, ed.v, Mark{a.w + b.w - 1, a.d + b.d});
    out.leaf = std::max(out.graph.next_vertex_id(), ed.v + 1);
    out.graph.add_vertex(out.leaf, Mark{1, 0});
    out.pendant_edge = std::max(out.graph.next_edge_id(), e + 1);
    out.graph.add_edge(out.pendant_edge, ed.u, out.leaf);
    return out;
}

MarkedGraph simplify(const MarkedGraph& g)
{
    MarkedGraph h;
    for (const Vertex& v : g.vertices())
        h.add_vertex(v.id, v.mark);
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop())
            continue;
        std::pair<int, int> key{e.u, e.v};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            continue;
        seen.push_back(key);
        h.add_edge(e.id, e.u, e.v);
    }
    return h;
}

bool is_absorbable(const MarkedGraph& g, int v) { return g.mark(v).is_unit() && g.degree(v) == 1; }

MarkedGraph absorb(const MarkedGraph& g, int e)
{
    const Edge& ed = g.edge(e);
    if (ed.is_loop())
        throw InvalidInput("cannot absorb along loop " + std::to_string(e));
    int leaf;
    if (is_absorbable(g, ed.v))
        leaf = ed.v;
    else if (is_absorbable(g, ed.u))
        leaf = ed.u;
    else
        throw InvalidInput("edge " + std::to_string(e) + " has no absorbable endpoint");
    int keep = ed.other(leaf);
    Mark m = g.mark(keep);
    MarkedGraph h = g;
    h.remove_edge(e);
    h.remove_vertex(leaf);
    h.set_mark(keep, Mark{m.w + 1, m.d});
    return h;
}

MarkedGraph core(const MarkedGraph& g)
{
    MarkedGraph h = g;
    for (;;) {
        std::vector<int> deg = h.degrees();
        int edge = -1;
        for (std::size_t i = 0; i < h.order() && edge < 0; ++i) {
            const Vertex& v = h.vertices()[i];
            if (deg[i] == 1 && v.mark.is_unit())
                edge = h.incident_edges(v.id).front();
        }
        if (edge < 0)
            return h;
        h = absorb(h, edge);
    }
}

MarkedGraph uncore(const MarkedGraph& t)
{
    MarkedGraph h;
    for (const Vertex& v : t.vertices()) {
        if (v.mark.d != 0)
            throw InvalidInput("uncore needs undotted marks, got " + to_string(v.mark));
        h.add_vertex(v.id, Mark{1, 0});
    }
    for (const Edge& e : t.edges())
        h.add_edge(e.id, e.u, e.v);
    for (const Vertex& v : t.vertices())
        for (int i = 1; i < v.mark.w; ++i) {
            int leaf = h.add_vertex(Mark{1, 0});
            h.add_edge(v.id, leaf);
        }
    return h;
}

SpanningPartition spanning_partition(const MarkedGraph& g, const std::vector<int>& edge_subset)
{
    std::size_t n = g.order();
    UnionFind uf(n);
    SpanningPartition out;
    std::vector<int> used = edge_subset;
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw InvalidInput("edge subset has repeated ids");
    for (int id : used) {
        const Edge& e = g.edge(id);
        if (uf.unite(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v))))
            ++out.rank;
        ++out.edge_count;
    }
    std::map<int, Mark> comp;
    for (std::size_t i = 0; i < n; ++i) {
        int r = uf.find(static_cast<int>(i));
        Mark m = g.vertices()[i].mark;
        auto it = comp.find(r);
        if (it == comp.end())
            comp.emplace(r, m);
        else
            it->second = dot_sum(it->second, m);
    }
    for (auto& [r, m] : comp)
        out.parts.push_back(m);
    std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
    return out;
}

std::vector<int> internal_edges(const MarkedGraph& g)
{
    std::vector<int> deg = g.degrees();
    std::vector<int> out;
    for (const Edge& e : g.edges())
        if (!e.is_loop() && deg[g.index_of(e.u)] > 1 && deg[g.index_of(e.v)] > 1)
            out.push_back(e.id);
    return out;
}

GraphStats graph_stats(const MarkedGraph& g)
{
    GraphStats s;
    s.n = g.order();
    s.m = g.size();
    std::vector<int> deg = g.degrees();
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (deg[i] == 0)
            ++s.isolated;
        if (deg[i] == 1)
            s.leaves.push_back(g.vertices()[i].id);
    }
    s.internal_edges = internal_edges(g);
    s.components = g.components().size();
    return s;
}

bool is_star_forest(const MarkedGraph& g) { return g.is_simple() && internal_edges(g).empty(); }

int diameter(const MarkedGraph& g)
{
    std::size_t n = g.order();
    if (n == 0)
        return 0;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        int a = static_cast<int>(g.index_of(e.u)), b = static_cast<int>(g.index_of(e.v));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        for (int d : dist) {
            if (d < 0)
                return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

bool same_labeled_structure(const MarkedGraph& a, const MarkedGraph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.order(); ++i)
        if (a.vertices()[i].id != b.vertices()[i].id || a.vertices()[i].mark != b.vertices()[i].mark)
            return false;
    auto ends = [](const MarkedGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges())
            out.emplace_back(e.u, e.v);
        std::sort(out.begin(), out.end());
        return out;
    };
    return ends(a) == ends(b);
}

std::string describe(const MarkedGraph& g)
{
    std::ostringstream os;
    os << "V{";
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Vertex& v = g.vertices()[i];
        os << (i ? " " : "") << v.id << ":" << to_string(v.mark);
    }
    os << "} E{";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        os << (i ? " " : "") << e.id << ":" << e.u << "-" << e.v;
    }
    os << "}";
    return os.str();
}

} // namespace gpoly
