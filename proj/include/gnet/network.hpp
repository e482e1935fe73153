#pragma once

#include "gnet/gaussian.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <vector>

namespace gnet {

using Node = GInt;

// Row-major display order: imaginary part descending, then real part
// ascending. Matches the usual drawing of the diamond, top row first.
struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.im != b.im) return a.im > b.im;
        return a.re < b.re;
    }
};

enum class Axis { Horizontal, Vertical };

// Undirected edge. Endpoints are stored sorted by (im, re) ascending so that
// equality is independent of construction order. `wrap` marks pairs whose raw
// coordinate difference is not a unit: the adjacency only exists through
// reduction mod alpha, and both endpoints sit on the diamond boundary.
struct Edge {
    Node u, v;
    Axis axis = Axis::Horizontal;
    bool wrap = false;
};

bool operator==(const Edge& a, const Edge& b);
bool operator!=(const Edge& a, const Edge& b);

struct EdgeOrder {
    bool operator()(const Edge& a, const Edge& b) const;
};

// Builds the canonical edge between two canonical nodes: endpoints sorted,
// axis from the canonical difference (+-1 horizontal, +-i vertical), wrap
// from the raw difference. Throws std::invalid_argument if the nodes are
// not adjacent under the modulus.
Edge make_edge(Node a, Node b, const DenseModulus& m);

// The dense Gaussian network G_k: nodes are the canonical residues mod
// alpha_k, and two residues are adjacent iff they differ by a unit. The
// graph is 4-regular with 2k^2+2k+1 nodes and 4k^2+4k+2 edges.
class Network {
public:
    explicit Network(std::int64_t k);

    std::int64_t k() const { return mod_.k; }
    const DenseModulus& modulus() const { return mod_; }
    std::int64_t node_count() const { return mod_.n; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(Node v) const;
    // Position of v in nodes(); throws if v is not canonical.
    std::size_t index_of(Node v) const;

    // The four neighbours of v, for offsets +1, -1, +i, -i in that order.
    // Always four distinct nodes (n >= 5).
    std::array<Node, 4> neighbors(Node v) const;

    Edge classify_edge(Node u, Node v) const { return make_edge(u, v, mod_); }

    // Hop distances from one node to every node, indexed like nodes().
    std::vector<std::int64_t> bfs_distances(Node from) const;
    std::int64_t bfs_distance(Node u, Node v) const;

    // Eccentricity of node 0; with all_pairs, the maximum over all sources
    // (equal by vertex-transitivity, which the flag lets tests confirm).
    std::int64_t diameter(bool all_pairs = false) const;

    // distance -> number of nodes at that distance from node 0.
    std::map<std::int64_t, std::int64_t> distance_histogram() const;

    // (k*x + (k+1)*y) mod n, mapped into [0, n). Node labels under the
    // isomorphism onto the circulant C_n(k, k+1).
    std::int64_t circulant_label(Node v) const;

    // Checks that relabelling turns the edge set into exactly the edge set
    // of C_n(k, k+1).
    bool circulant_iso_holds() const;

private:
    DenseModulus mod_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> row_offset_;  // by row, im = k down to -k
};

}  // namespace gnet
