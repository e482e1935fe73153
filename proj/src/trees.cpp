#include "gnet/trees.hpp"

#include <deque>
#include <stdexcept>

namespace gnet {

namespace {

void add_edge(Subgraph& g, Node a, Node b, const DenseModulus& m) {
    g.vertices.insert(a);
    g.vertices.insert(b);
    g.edges.insert(make_edge(a, b, m));
}

const SymmetryWord kRho{{SymAtom::Rho}};
const SymmetryWord kRho2{{SymAtom::Rho, SymAtom::Rho}};
const SymmetryWord kRho3{{SymAtom::Rho, SymAtom::Rho, SymAtom::Rho}};
const SymmetryWord kSigma{{SymAtom::Sigma}};
const SymmetryWord kRhoSigma{{SymAtom::Rho, SymAtom::Sigma}};
const SymmetryWord kRho2Sigma{{SymAtom::Rho, SymAtom::Rho, SymAtom::Sigma}};
const SymmetryWord kRho3Sigma{{SymAtom::Rho, SymAtom::Rho, SymAtom::Rho, SymAtom::Sigma}};
const SymmetryWord kSigmaRho{{SymAtom::Sigma, SymAtom::Rho}};

}  // namespace

std::string_view tree_kind_name(TreeKind kind) {
    switch (kind) {
        case TreeKind::Black: return "black";
        case TreeKind::Red: return "red";
        case TreeKind::RedPrime: return "redprime";
    }
    return "?";
}

Subgraph component_A(const DenseModulus& m) {
    Subgraph g;
    for (std::int64_t a = 0; a <= m.k - 1; ++a)
        for (std::int64_t b = 1; b <= m.k - a; ++b) g.vertices.insert(Node{a, b});
    for (std::int64_t a = 0; a <= m.k - 2; ++a)
        for (std::int64_t b = 1; b <= m.k - 1 - a; ++b) add_edge(g, {a, b}, {a + 1, b}, m);
    return g;
}

Subgraph component_B(const DenseModulus& m) {
    Subgraph g;
    for (std::int64_t a = 0; a <= m.k; ++a) g.vertices.insert(Node{a, 0});
    for (std::int64_t a = 0; a <= m.k - 1; ++a) add_edge(g, {a, 0}, {a + 1, 0}, m);
    return g;
}

Subgraph component_WB(const DenseModulus& m) {
    Subgraph g;
    for (std::int64_t a = 0; a <= m.k - 1; ++a) {
        const std::int64_t b = m.k - a;
        add_edge(g, {a, b}, {-(b - 1), -1 - a}, m);
    }
    return g;
}

Subgraph component_WR(const DenseModulus& m) {
    Subgraph g;
    for (std::int64_t a = 1; a <= m.k; ++a) {
        const std::int64_t b = a - m.k;
        add_edge(g, {a, b}, {b, a}, m);
    }
    return g;
}

Subgraph map_subgraph(const SymmetryWord& w, const Subgraph& g, const DenseModulus& m) {
    Subgraph out;
    for (const Node& v : g.vertices) out.vertices.insert(canonical_mod(apply(w, v), m));
    for (const Edge& e : g.edges)
        out.edges.insert(make_edge(canonical_mod(apply(w, e.u), m), canonical_mod(apply(w, e.v), m), m));
    return out;
}

Subgraph disjoint_union(const std::vector<Subgraph>& parts) {
    Subgraph out;
    for (const Subgraph& p : parts) {
        out.vertices.insert(p.vertices.begin(), p.vertices.end());
        for (const Edge& e : p.edges)
            if (!out.edges.insert(e).second) throw std::logic_error("disjoint_union: duplicated edge between parts");
    }
    return out;
}

Subgraph build_black(const DenseModulus& m) {
    const Subgraph a = component_A(m);
    const Subgraph b = component_B(m);
    const Subgraph wb = component_WB(m);
    return disjoint_union({a, map_subgraph(kRho, a, m), map_subgraph(kRho2, a, m), map_subgraph(kRho3, a, m), b,
                           map_subgraph(kRho, b, m), wb, map_subgraph(kRho, wb, m)});
}

Subgraph build_red(const DenseModulus& m) {
    const Subgraph a = component_A(m);
    const Subgraph b = component_B(m);
    const Subgraph wr = component_WR(m);
    return disjoint_union({map_subgraph(kSigma, a, m), map_subgraph(kRhoSigma, a, m), map_subgraph(kRho2Sigma, a, m),
                           map_subgraph(kRho3Sigma, a, m), map_subgraph(kSigma, b, m), map_subgraph(kSigmaRho, b, m),
                           wr, map_subgraph(kRho, wr, m)});
}

Subgraph build_red_prime(const DenseModulus& m) {
    Subgraph g = build_red(m);
    const Edge out_edge = make_edge({m.k, 0}, {0, m.k}, m);
    if (g.edges.erase(out_edge) == 0) throw std::logic_error("build_red_prime: expected wrap edge (k, ki) missing");
    const Edge in_edge = make_edge({m.k, 0}, {0, -m.k}, m);
    if (!g.edges.insert(in_edge).second) throw std::logic_error("build_red_prime: edge (k, -ki) already present");
    return g;
}

std::pair<Subgraph, Subgraph> h_subgraphs(const DenseModulus& m) {
    const Subgraph a = component_A(m);
    const Subgraph hb = disjoint_union({a, component_WB(m), map_subgraph(kRho2, a, m)});
    const Subgraph hr =
        disjoint_union({map_subgraph(kRhoSigma, a, m), component_WR(m), map_subgraph(kRho3Sigma, a, m)});
    return {hb, hr};
}

SpanningTree to_rooted(const Subgraph& g, TreeKind kind, const DenseModulus& m, Node root) {
    if (!g.vertices.count(root)) throw std::invalid_argument("to_rooted: root not in subgraph");
    if (g.edges.size() + 1 != g.vertices.size())
        throw std::invalid_argument("to_rooted: edge count is not |V| - 1");

    std::map<Node, std::vector<Node>, NodeOrder> adj;
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    SpanningTree t;
    t.kind = kind;
    t.root = root;
    t.k = m.k;
    std::deque<Node> queue{root};
    std::set<Node, NodeOrder> seen{root};
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        for (const Node& w : adj[v]) {
            if (seen.insert(w).second) {
                t.parent.emplace(w, v);
                queue.push_back(w);
            }
        }
    }
    if (seen.size() != g.vertices.size()) throw std::invalid_argument("to_rooted: subgraph is not connected");
    return t;
}

SpanningTree rebase(const SpanningTree& t, Node new_root, const DenseModulus& m) {
    const Node offset = canonical_mod(new_root - t.root, m);
    SpanningTree out;
    out.kind = t.kind;
    out.k = t.k;
    out.root = translate(t.root, offset, m);
    for (const auto& [child, parent] : t.parent)
        out.parent.emplace(translate(child, offset, m), translate(parent, offset, m));
    return out;
}

}  // namespace gnet
