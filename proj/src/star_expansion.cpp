#include "gpoly/star_expansion.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace gpoly {

std::vector<int> DncTree::leaves() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].children.empty())
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> DncTree::path_to(int node) const
{
    std::vector<int> out;
    for (int x = node; x >= 0; x = nodes.at(static_cast<std::size_t>(x)).parent)
        out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
}

int dnc_sign(const DncTree& t, const std::vector<int>& path)
{
    if (path.empty() || path.front() != 0)
        throw InvalidInput("a path must start at the root");
    int sign = 1;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const DncNode& child = t.nodes.at(static_cast<std::size_t>(path[i]));
        if (child.parent != path[i - 1])
            throw InvalidInput("not a root-to-node path");
        sign *= child.sign;
    }
    return sign;
}

Partition star_forest_type(const MarkedGraph& h)
{
    Partition lam;
    for (const auto& comp : h.components())
        lam.push_back(static_cast<int>(comp.size()));
    return normalize_partition(lam);
}

bool isolated_sign_rule_holds(const SymFn& st, std::size_t isolated_in_root)
{
    for (const auto& [lam, c] : st.terms()) {
        long parity = (multiplicity(lam, 1) - static_cast<long>(isolated_in_root)) % 2;
        bool want_negative = parity != 0;
        if ((c < 0) != want_negative)
            return false;
    }
    return true;
}

namespace {

int choose_edge(const MarkedGraph& h, EdgeRule rule)
{
    std::vector<int> internal = internal_edges(h);
    if (internal.empty())
        return -1;
    auto key = [&](int id) {
        const Edge& e = h.edge(id);
        return std::make_pair(e.u, e.v);
    };
    auto cmp = [&](int a, int b) { return key(a) < key(b); };
    return rule == EdgeRule::smallest ? *std::min_element(internal.begin(), internal.end(), cmp)
                                      : *std::max_element(internal.begin(), internal.end(), cmp);
}

struct Children {
    MarkedGraph deleted, near, near_minus;
};

Children branch(const MarkedGraph& h, int e)
{
    NearContraction nc = near_contract(h, e);
    MarkedGraph near = simplify(nc.graph);
    MarkedGraph near_minus = delete_edge(near, nc.pendant_edge);
    return {delete_edge(h, e), std::move(near), std::move(near_minus)};
}

// Component on the given vertex ids, relabelled 0..k-1 in id order.
MarkedGraph relabelled_component(const MarkedGraph& h, const std::vector<int>& ids)
{
    MarkedGraph c;
    for (std::size_t i = 0; i < ids.size(); ++i)
        c.add_vertex(static_cast<int>(i), h.mark(ids[i]));
    auto rank = [&](int id) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin()); };
    for (const Edge& e : h.edges())
        if (std::binary_search(ids.begin(), ids.end(), e.u))
            c.add_edge(rank(e.u), rank(e.v));
    return c;
}

std::string adjacency_key(const MarkedGraph& c)
{
    std::string key(1, static_cast<char>(c.order()));
    for (const Edge& e : c.edges()) {
        key += static_cast<char>(e.u);
        key += static_cast<char>(e.v);
    }
    return key;
}

class StreamingExpander {
public:
    StreamingExpander(EdgeRule rule, bool memo, std::size_t max_nodes) : rule_(rule), memo_(memo), max_nodes_(max_nodes) {}

    SymFn run(const MarkedGraph& h)
    {
        auto comps = h.components();
        SymFn out = SymFn::term(Basis::st, {});
        for (const auto& ids : comps) {
            if (ids.size() <= 2) {
                out = out * SymFn::term(Basis::st, {static_cast<int>(ids.size())});
                continue;
            }
            out = out * connected(relabelled_component(h, ids));
        }
        return out;
    }

private:
    SymFn connected(const MarkedGraph& c)
    {
        int e = choose_edge(c, rule_);
        if (e < 0)
            return SymFn::term(Basis::st, {static_cast<int>(c.order())});
        std::string key;
        if (memo_) {
            key = adjacency_key(c);
            auto it = cache_.find(key);
            if (it != cache_.end())
                return it->second;
        }
        nodes_ += 3;
        if (nodes_ + 1 > max_nodes_)
            throw BudgetExceeded("dnc_expand: more than " + std::to_string(max_nodes_) + " expansion nodes");
        Children ch = branch(c, e);
        SymFn out = run(ch.deleted);
        out += run(ch.near);
        out -= run(ch.near_minus);
        if (memo_)
            cache_.emplace(std::move(key), out);
        return out;
    }

    EdgeRule rule_;
    bool memo_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::string, SymFn> cache_;
};

} // namespace

DncResult dnc_expand(const MarkedGraph& g, const DncOptions& opts)
{
    if (!g.is_simple())
        throw InvalidInput("dnc_expand needs a simple graph");
    if (!g.is_unweighted())
        throw InvalidInput("dnc_expand needs an unweighted graph");
    DncResult res;
    if (!opts.emit_tree) {
        StreamingExpander ex(opts.rule, opts.memoize, opts.max_nodes);
        res.st = ex.run(g);
        return res;
    }

    DncTree tree;
    tree.nodes.push_back({g, -1, 1, -1, {}});
    std::size_t isolated_root = graph_stats(g).isolated;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        int e = choose_edge(tree.nodes[i].graph, opts.rule);
        if (e < 0) {
            const MarkedGraph& leaf = tree.nodes[i].graph;
            int sign = dnc_sign(tree, tree.path_to(static_cast<int>(i)));
            std::size_t iso = graph_stats(leaf).isolated;
            bool odd = (static_cast<long>(iso) - static_cast<long>(isolated_root)) % 2 != 0;
            if (odd != (sign < 0))
                throw std::logic_error("leaf sign disagrees with the isolated-vertex count");
            res.st.add(star_forest_type(leaf), sign);
            continue;
        }
        if (tree.nodes.size() + 3 > opts.max_nodes)
            throw BudgetExceeded("dnc_expand: computation tree exceeds " + std::to_string(opts.max_nodes) + " nodes");
        tree.nodes[i].edge = e;
        Children ch = branch(tree.nodes[i].graph, e);
        int id = static_cast<int>(i);
        for (auto [graph, sign] : {std::pair{&ch.deleted, 1}, std::pair{&ch.near, 1}, std::pair{&ch.near_minus, -1}}) {
            tree.nodes[i].children.push_back(static_cast<int>(tree.nodes.size()));
            tree.nodes.push_back({std::move(*graph), id, sign, -1, {}});
        }
    }
    res.tree = std::move(tree);
    return res;
}

SymFn star_expansion(const MarkedGraph& g) { return dnc_expand(g).st; }

std::string render_tree(const DncTree& t)
{
    std::ostringstream os;
    std::function<void(int, int)> walk = [&](int node, int depth) {
        const DncNode& n = t.nodes[static_cast<std::size_t>(node)];
        os << std::string(static_cast<std::size_t>(2 * depth), ' ');
        if (node != 0)
            os << (n.sign > 0 ? "+ " : "- ");
        os << describe(n.graph);
        if (n.children.empty())
            os << "  leaf st[" << to_string(star_forest_type(n.graph)) << "] sign "
               << (dnc_sign(t, t.path_to(node)) > 0 ? "+" : "-");
        else
            os << "  branch on edge " << n.edge;
        os << "\n";
        for (int c : n.children)
            walk(c, depth + 1);
    };
    if (!t.nodes.empty())
        walk(0, 0);
    return os.str();
}

} // namespace gpoly
