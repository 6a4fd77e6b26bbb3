#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gpoly {

// A vertex label (w, d): weight w and d dots, with w >= d + 1.
struct Mark {
    int w = 1;
    int d = 0;

    bool valid() const { return d >= 0 && w >= d + 1; }
    bool strict() const { return d >= 0 && w >= d + 2; }
    bool is_unit() const { return w == 1 && d == 0; }

    auto operator<=>(const Mark&) const = default;
};

// (w,d) + (w',d') = (w+w', d+d'+1)
Mark dot_sum(Mark a, Mark b);

// Throws InvalidInput unless (w, d) is a mark.
Mark make_mark(int w, int d = 0);

std::string to_string(Mark m);

struct Vertex {
    int id;
    Mark mark;
    bool operator==(const Vertex&) const = default;
};

// Endpoints are stored with u <= v; a loop has u == v.
struct Edge {
    int id;
    int u;
    int v;

    bool is_loop() const { return u == v; }
    int other(int x) const { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Multigraph with a mark on every vertex.  Vertex and edge ids are stable:
// the edge operations below never renumber surviving vertices or edges.
class MarkedGraph {
public:
    MarkedGraph() = default;

    // Appends a vertex with the next free id and returns that id.
    int add_vertex(Mark m = {});
    void add_vertex(int id, Mark m);
    int add_edge(int u, int v);
    void add_edge(int id, int u, int v);
    void remove_edge(int id);
    void remove_vertex(int id); // vertex must have no incident edges
    void set_mark(int id, Mark m);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }

    bool has_vertex(int id) const;
    bool has_edge(int id) const;
    const Vertex& vertex(int id) const;
    const Edge& edge(int id) const;
    Mark mark(int id) const { return vertex(id).mark; }

    // Loops count twice.
    int degree(int v) const;
    std::vector<int> degrees() const; // parallel to vertices()
    std::vector<int> incident_edges(int v) const;
    std::vector<int> vertex_ids() const;
    std::vector<int> edge_ids() const;
    std::size_t index_of(int vertex_id) const;

    int next_vertex_id() const;
    int next_edge_id() const;
    long total_weight() const;
    std::vector<Mark> marks() const;

    bool has_loops() const;
    bool is_simple() const;
    bool is_forest() const;
    bool is_connected() const;
    bool is_unweighted() const;
    bool all_undotted() const;
    std::vector<std::vector<int>> components() const; // vertex ids, each sorted

    bool operator==(const MarkedGraph&) const = default;

private:
    std::vector<Vertex> vertices_; // sorted by id
    std::vector<Edge> edges_;      // sorted by id
};

// Builders.  Vertex i gets id i.
MarkedGraph marked_graph(const std::vector<Mark>& marks, const std::vector<std::pair<int, int>>& edges);
MarkedGraph weighted_graph(const std::vector<int>& weights, const std::vector<std::pair<int, int>>& edges);
MarkedGraph unweighted_graph(int n, const std::vector<std::pair<int, int>>& edges);
MarkedGraph weighted_path(const std::vector<int>& weights);
// Center is vertex 0.
MarkedGraph weighted_star(int center, const std::vector<int>& leaves);
// Centers are vertices 0 and 1; leaves of center 0 come first.
MarkedGraph weighted_two_star(int c0, const std::vector<int>& leaves0, int c1, const std::vector<int>& leaves1);

MarkedGraph delete_edge(const MarkedGraph& g, int e);

// The surviving vertex keeps the smaller endpoint id and gets the dot-sum mark.
MarkedGraph contract_edge(const MarkedGraph& g, int e);

struct NearContraction {
    MarkedGraph graph;
    int pendant_edge; // the near-contracted edge
    int leaf;         // the new (1,0) vertex
};

NearContraction near_contract(const MarkedGraph& g, int e);

// Drops loops and keeps the smallest edge id of each parallel class.
MarkedGraph simplify(const MarkedGraph& g);

bool is_absorbable(const MarkedGraph& g, int v);
MarkedGraph absorb(const MarkedGraph& g, int e);
MarkedGraph core(const MarkedGraph& g);

// Each (w,0) vertex becomes a (1,0) vertex with w-1 new (1,0) leaves.
MarkedGraph uncore(const MarkedGraph& t);

struct SpanningPartition {
    std::vector<Mark> parts; // sorted descending
    int edge_count = 0;
    int rank = 0;
};

SpanningPartition spanning_partition(const MarkedGraph& g, const std::vector<int>& edge_subset);

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t isolated = 0;
    std::vector<int> internal_edges; // sorted by id
    std::vector<int> leaves;         // degree-1 vertex ids
    std::size_t components = 0;
};

GraphStats graph_stats(const MarkedGraph& g);
std::vector<int> internal_edges(const MarkedGraph& g);
// Simple graph without internal edges.
bool is_star_forest(const MarkedGraph& g);
// Longest shortest path; -1 for a disconnected graph.
int diameter(const MarkedGraph& g);

// Same vertex ids and marks, and the same multiset of endpoint pairs (edge ids ignored).
bool same_labeled_structure(const MarkedGraph& a, const MarkedGraph& b);

std::string describe(const MarkedGraph& g);

} // namespace gpoly
