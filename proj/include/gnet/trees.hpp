#pragma once

#include "gnet/network.hpp"
#include "gnet/symmetry.hpp"

#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace gnet {

// Vertex/edge set pair over canonical nodes. Isolated vertices are kept:
// some building blocks contribute vertices without edges (e.g. the inner
// quadrant piece at k = 1), and the cover property depends on them.
struct Subgraph {
    std::set<Node, NodeOrder> vertices;
    std::set<Edge, EdgeOrder> edges;
};

enum class TreeKind { Black, Red, RedPrime };
std::string_view tree_kind_name(TreeKind kind);

// Rooted spanning tree given by its parent map (the root has no entry).
// Every (child, parent) pair is an edge of G_k.
struct SpanningTree {
    TreeKind kind = TreeKind::Black;
    Node root;
    std::int64_t k = 0;
    std::map<Node, Node, NodeOrder> parent;
};

// Building blocks of the two tree constructions. The quadrant piece A is a
// stack of horizontal rows in the closed first quadrant above the axis; the
// baseline ray B is the nonnegative real axis; W_B and W_R are the k wrap
// edges that stitch opposite quadrant pieces together (their vertex sets are
// the endpoints of their edges).
Subgraph component_A(const DenseModulus& m);
Subgraph component_B(const DenseModulus& m);
Subgraph component_WB(const DenseModulus& m);
Subgraph component_WR(const DenseModulus& m);

// Image of a subgraph under a symmetry word; every node is re-reduced to
// canonical form and every edge re-canonicalised.
Subgraph map_subgraph(const SymmetryWord& w, const Subgraph& g, const DenseModulus& m);

// Union of parts; vertices merge, edges must be pairwise disjoint.
// Throws std::logic_error if two parts share an edge.
Subgraph disjoint_union(const std::vector<Subgraph>& parts);

// The black tree: A, rho(A), rho^2(A), rho^3(A), B, rho(B), W_B, rho(W_B).
Subgraph build_black(const DenseModulus& m);

// The red tree: sigma- and rho*sigma-images of the same pieces plus the
// W_R wraps. Edge-disjoint from the black tree but only node-independent
// from it for k >= 2.
Subgraph build_red(const DenseModulus& m);

// The red tree with the (k, ki) edge swapped for (k, -ki); this drops the
// depth anomaly at k = 1 and is node-independent from black for all k.
Subgraph build_red_prime(const DenseModulus& m);

// The straightened-path subgraphs {H_B, H_R}: H_B = A + W_B + rho^2(A),
// H_R = rho*sigma(A) + W_R + rho^3*sigma(A). Both decompose into disjoint
// horizontal paths; their rho-images into vertical ones.
std::pair<Subgraph, Subgraph> h_subgraphs(const DenseModulus& m);

// Orients a spanning subgraph from the root by breadth-first traversal.
// Throws std::invalid_argument if the subgraph is not connected or the
// edge count is not |V|-1.
SpanningTree to_rooted(const Subgraph& g, TreeKind kind, const DenseModulus& m, Node root = {});

// Translation of the whole tree so that it is rooted at new_root; the
// parent relation is mapped through the same translation.
SpanningTree rebase(const SpanningTree& t, Node new_root, const DenseModulus& m);

}  // namespace gnet
