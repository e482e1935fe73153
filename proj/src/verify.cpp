#include "gnet/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gnet {

namespace {

std::string describe(Node v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

bool is_spanning_tree(const Network& net, const Subgraph& g) {
    const std::size_t n = static_cast<std::size_t>(net.node_count());
    if (g.vertices.size() != n) return false;
    if (g.edges.size() + 1 != n) return false;

    std::map<Node, std::vector<Node>, NodeOrder> adj;
    for (const Edge& e : g.edges) {
        try {
            if (net.classify_edge(e.u, e.v) != e) return false;
        } catch (const std::invalid_argument&) {
            return false;  // listed pair is not a G_k edge
        }
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::set<Node, NodeOrder> seen{*g.vertices.begin()};
    std::deque<Node> queue{*g.vertices.begin()};
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        for (const Node& w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == n;
}

std::vector<Node> tree_path(const SpanningTree& t, Node v) {
    std::vector<Node> rev{v};
    Node cur = v;
    while (!(cur == t.root)) {
        const auto it = t.parent.find(cur);
        if (it == t.parent.end()) throw std::invalid_argument("tree_path: node not in tree");
        cur = it->second;
        rev.push_back(cur);
        if (rev.size() > t.parent.size() + 1) throw std::logic_error("tree_path: parent chain cycles");
    }
    return {rev.rbegin(), rev.rend()};
}

IndependenceReport check_node_independence(const SpanningTree& a, const SpanningTree& b) {
    if (!(a.root == b.root)) throw std::invalid_argument("check_node_independence: roots differ");
    IndependenceReport rep;
    for (const auto& [v, parent_unused] : a.parent) {
        (void)parent_unused;
        const auto pa = tree_path(a, v);
        const auto pb = tree_path(b, v);
        std::set<Node, NodeOrder> inner(pa.begin(), pa.end());
        for (const Node& w : pb) {
            if (w == a.root || w == v) continue;
            if (inner.count(w)) {
                rep.ok = false;
                rep.witnesses.push_back({v, w});
            }
        }
    }
    return rep;
}

DisjointnessReport edge_disjointness(const Network& net, const Subgraph& a, const Subgraph& b) {
    DisjointnessReport rep;
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(rep.shared), EdgeOrder{});
    for (const Edge& e : net.edges())
        if (!a.edges.count(e) && !b.edges.count(e)) rep.leftover.push_back(e);
    return rep;
}

std::int64_t tree_depth(const SpanningTree& t) {
    std::map<Node, std::int64_t, NodeOrder> depth{{t.root, 0}};
    // Parent chains are short; walk each node up to the first known depth.
    auto resolve = [&](Node v) {
        std::vector<Node> stack;
        while (!depth.count(v)) {
            stack.push_back(v);
            v = t.parent.at(v);
        }
        std::int64_t d = depth[v];
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) depth[*it] = ++d;
    };
    std::int64_t best = 0;
    for (const auto& [v, p] : t.parent) {
        (void)p;
        resolve(v);
        best = std::max(best, depth[v]);
    }
    return best;
}

PathDecomposition decompose_paths(const Subgraph& g, Axis expected) {
    PathDecomposition out;
    out.axis_ok = true;
    std::map<Node, std::vector<Node>, NodeOrder> adj;
    for (const Edge& e : g.edges) {
        if (e.axis != expected) out.axis_ok = false;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto& [v, nb] : adj) {
        (void)v;
        if (nb.size() > 2) return out;  // is_path_union stays false
    }

    // Each component must have exactly |V|-1 edges; its length is that count.
    std::set<Node, NodeOrder> seen;
    for (const Node& start : g.vertices) {
        if (!seen.insert(start).second) continue;
        std::int64_t comp_nodes = 1;
        std::int64_t comp_edge_ends = static_cast<std::int64_t>(adj[start].size());
        std::deque<Node> queue{start};
        while (!queue.empty()) {
            const Node v = queue.front();
            queue.pop_front();
            for (const Node& w : adj[v]) {
                if (seen.insert(w).second) {
                    ++comp_nodes;
                    comp_edge_ends += static_cast<std::int64_t>(adj[w].size());
                    queue.push_back(w);
                }
            }
        }
        const std::int64_t comp_edges = comp_edge_ends / 2;
        if (comp_edges != comp_nodes - 1) return out;  // cycle
        out.max_len = std::max(out.max_len, comp_edges);
    }
    out.is_path_union = true;
    return out;
}

bool LemmaReport::all_ok() const {
    return hb.is_path_union && hb.axis_ok && hr.is_path_union && hr.axis_ok && hb_rho.is_path_union &&
           hb_rho.axis_ok && hr_rho.is_path_union && hr_rho.axis_ok && hb_bound_ok && hr_bound_ok && horvert_ok &&
           two_tree_bound_ok;
}

namespace {

// All straight paths on one axis with 1..max_len edges, one per starting
// node and length (walking the positive offset only, so each undirected
// path appears exactly once). The unit-offset subgraph on either axis is a
// single n-cycle, so every such walk is a simple path.
struct AxisPath {
    std::vector<std::size_t> sorted_idx;
    std::size_t front = 0, back = 0;
    std::int64_t len = 0;
};

std::vector<AxisPath> axis_paths(const Network& net, Axis axis, std::int64_t max_len) {
    const GInt offset = axis == Axis::Horizontal ? GInt{1, 0} : GInt{0, 1};
    std::vector<AxisPath> out;
    for (const Node& start : net.nodes()) {
        std::vector<std::size_t> walk{net.index_of(start)};
        Node cur = start;
        for (std::int64_t len = 1; len <= max_len; ++len) {
            cur = canonical_mod(cur + offset, net.modulus());
            walk.push_back(net.index_of(cur));
            AxisPath p;
            p.sorted_idx = walk;
            std::sort(p.sorted_idx.begin(), p.sorted_idx.end());
            p.front = walk.front();
            p.back = walk.back();
            p.len = len;
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<std::size_t> sorted_common(const AxisPath& a, const AxisPath& b) {
    std::vector<std::size_t> common;
    std::set_intersection(a.sorted_idx.begin(), a.sorted_idx.end(), b.sorted_idx.begin(), b.sorted_idx.end(),
                          std::back_inserter(common));
    return common;
}

bool endpoints_are(const AxisPath& p, const std::vector<std::size_t>& pair) {
    return (pair[0] == p.front && pair[1] == p.back) || (pair[0] == p.back && pair[1] == p.front);
}

}  // namespace

LemmaReport check_lemmas(const Network& net) {
    const DenseModulus& m = net.modulus();
    LemmaReport rep;

    const auto [hb, hr] = h_subgraphs(m);
    const SymmetryWord rho_word{{SymAtom::Rho}};
    rep.hb = decompose_paths(hb, Axis::Horizontal);
    rep.hr = decompose_paths(hr, Axis::Horizontal);
    rep.hb_rho = decompose_paths(map_subgraph(rho_word, hb, m), Axis::Vertical);
    rep.hr_rho = decompose_paths(map_subgraph(rho_word, hr, m), Axis::Vertical);
    rep.hb_bound_ok = rep.hb.max_len <= m.k && rep.hb_rho.max_len <= m.k;
    rep.hr_bound_ok = rep.hr.max_len <= m.k + 1 && rep.hr_rho.max_len <= m.k + 1;
    if (!rep.hb_bound_ok)
        rep.witnesses.push_back("H_B path longer than k: " + std::to_string(rep.hb.max_len));
    if (!rep.hr_bound_ok)
        rep.witnesses.push_back("H_R path longer than k+1: " + std::to_string(rep.hr.max_len));

    rep.horvert_ok = true;
    const auto hpaths = axis_paths(net, Axis::Horizontal, m.k + 1);
    const auto vpaths = axis_paths(net, Axis::Vertical, m.k + 1);
    for (const AxisPath& hp : hpaths) {
        for (const AxisPath& vp : vpaths) {
            const auto common = sorted_common(hp, vp);
            bool ok = true;
            if (common.size() > 2) {
                ok = false;
            } else if (common.size() == 2) {
                ok = (hp.len == m.k + 1 && endpoints_are(hp, common)) ||
                     (vp.len == m.k + 1 && endpoints_are(vp, common));
            }
            if (!ok) {
                rep.horvert_ok = false;
                if (rep.witnesses.size() < 16) {
                    const Node a = net.nodes()[hp.front];
                    const Node b = net.nodes()[vp.front];
                    rep.witnesses.push_back("axis paths from " + describe(a) + " (len " + std::to_string(hp.len) +
                                            ") and " + describe(b) + " (len " + std::to_string(vp.len) +
                                            ") share " + std::to_string(common.size()) + " nodes");
                }
            }
        }
    }

    const std::int64_t v = net.node_count();
    const std::int64_t e = static_cast<std::int64_t>(net.edges().size());
    rep.two_tree_bound_ok = e < 3 * (v - 1);
    if (!rep.two_tree_bound_ok)
        rep.witnesses.push_back("edge budget violated: |E| = " + std::to_string(e) + " vs 3(|V|-1) = " +
                                std::to_string(3 * (v - 1)));

    return rep;
}

}  // namespace gnet
