#pragma once

#include "gnet/network.hpp"
#include "gnet/trees.hpp"

#include <string>
#include <vector>

namespace gnet {

// Structural checks. Everything here recomputes connectivity, paths and
// intersections from raw edge sets and parent maps; nothing is trusted from
// the construction side.

// True iff g spans all of G_k, is connected, and has exactly |V|-1 edges
// (each of which must be a genuine G_k edge).
bool is_spanning_tree(const Network& net, const Subgraph& g);

// The unique root-to-v path, found by reversing the parent chain.
std::vector<Node> tree_path(const SpanningTree& t, Node v);

struct IndependenceViolation {
    Node dest;    // destination whose two paths collide
    Node shared;  // a common node other than root and dest
};

struct IndependenceReport {
    bool ok = true;
    std::vector<IndependenceViolation> witnesses;
};

// For every v, the root-to-v paths of the two trees may share only the
// root and v itself. Trees must have equal roots.
IndependenceReport check_node_independence(const SpanningTree& a, const SpanningTree& b);

struct DisjointnessReport {
    std::vector<Edge> shared;    // edges present in both subgraphs
    std::vector<Edge> leftover;  // G_k edges used by neither
};

DisjointnessReport edge_disjointness(const Network& net, const Subgraph& a, const Subgraph& b);

// Longest root-to-leaf path length.
std::int64_t tree_depth(const SpanningTree& t);

// Decomposition facts about a subgraph that should be a disjoint union of
// straight paths on one axis.
struct PathDecomposition {
    bool is_path_union = false;  // degrees <= 2, acyclic
    bool axis_ok = false;        // every edge on the expected axis
    std::int64_t max_len = 0;    // longest component, in edges
};

PathDecomposition decompose_paths(const Subgraph& g, Axis expected);

struct LemmaReport {
    PathDecomposition hb, hr;          // horizontal originals
    PathDecomposition hb_rho, hr_rho;  // vertical rho-images
    bool hb_bound_ok = false;          // max_len <= k, and rho-image alike
    bool hr_bound_ok = false;          // max_len <= k+1, and rho-image alike
    bool horvert_ok = false;           // axis-path intersection bound
    bool two_tree_bound_ok = false;    // |E| < 3(|V| - 1)
    std::vector<std::string> witnesses;

    bool all_ok() const;
};

// Checks the straightened-path facts behind the constructions: H_B and H_R
// decompose into horizontal paths of length <= k and <= k+1 (rho-images
// vertical, same bounds); any horizontal path and any vertical path of
// length <= k+1 share at most two nodes, and share two only when one of
// them has length exactly k+1 and the common nodes are its endpoints; and
// the two trees fit inside G_k by edge count.
LemmaReport check_lemmas(const Network& net);

}  // namespace gnet
