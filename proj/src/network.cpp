#include "gnet/network.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

namespace gnet {

namespace {

constexpr std::array<GInt, 4> kUnitOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

bool endpoint_less(const Node& a, const Node& b) {
    if (a.im != b.im) return a.im < b.im;
    return a.re < b.re;
}

}  // namespace

bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
}

bool operator!=(const Edge& a, const Edge& b) {
    return !(a == b);
}

bool EdgeOrder::operator()(const Edge& a, const Edge& b) const {
    if (a.u.im != b.u.im) return a.u.im < b.u.im;
    if (a.u.re != b.u.re) return a.u.re < b.u.re;
    if (a.v.im != b.v.im) return a.v.im < b.v.im;
    return a.v.re < b.v.re;
}

Edge make_edge(Node a, Node b, const DenseModulus& m) {
    if (!is_canonical(a, m) || !is_canonical(b, m))
        throw std::invalid_argument("make_edge: endpoint outside canonical diamond");
    const GInt diff = canonical_mod(a - b, m);
    const bool horizontal = diff == GInt{1, 0} || diff == GInt{-1, 0};
    const bool vertical = diff == GInt{0, 1} || diff == GInt{0, -1};
    if (!horizontal && !vertical) throw std::invalid_argument("make_edge: nodes are not adjacent");
    Edge e;
    e.u = a;
    e.v = b;
    if (endpoint_less(e.v, e.u)) std::swap(e.u, e.v);
    e.axis = horizontal ? Axis::Horizontal : Axis::Vertical;
    e.wrap = l1_norm(a - b) > 1;
    return e;
}

Network::Network(std::int64_t k) : mod_(k) {
    nodes_.reserve(static_cast<std::size_t>(mod_.n));
    row_offset_.reserve(static_cast<std::size_t>(2 * k + 1));
    for (std::int64_t b = k; b >= -k; --b) {
        row_offset_.push_back(nodes_.size());
        const std::int64_t half = k - std::llabs(b);
        for (std::int64_t a = -half; a <= half; ++a) nodes_.push_back(Node{a, b});
    }

    edges_.reserve(static_cast<std::size_t>(2 * mod_.n));
    for (const Node& v : nodes_)
        for (const GInt& d : kUnitOffsets) edges_.push_back(make_edge(v, canonical_mod(v + d, mod_), mod_));
    std::sort(edges_.begin(), edges_.end(), EdgeOrder{});
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Network::contains(Node v) const {
    return is_canonical(v, mod_);
}

std::size_t Network::index_of(Node v) const {
    if (!contains(v)) throw std::invalid_argument("index_of: node outside canonical diamond");
    const std::size_t row = static_cast<std::size_t>(mod_.k - v.im);
    const std::int64_t half = mod_.k - std::llabs(v.im);
    return row_offset_[row] + static_cast<std::size_t>(v.re + half);
}

std::array<Node, 4> Network::neighbors(Node v) const {
    if (!contains(v)) throw std::invalid_argument("neighbors: node outside canonical diamond");
    std::array<Node, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = canonical_mod(v + kUnitOffsets[i], mod_);
    return out;
}

std::vector<std::int64_t> Network::bfs_distances(Node from) const {
    std::vector<std::int64_t> dist(nodes_.size(), -1);
    std::deque<Node> queue;
    dist[index_of(from)] = 0;
    queue.push_back(from);
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        const std::int64_t dv = dist[index_of(v)];
        for (const Node& w : neighbors(v)) {
            std::int64_t& dw = dist[index_of(w)];
            if (dw < 0) {
                dw = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::int64_t Network::bfs_distance(Node u, Node v) const {
    return bfs_distances(u)[index_of(v)];
}

std::int64_t Network::diameter(bool all_pairs) const {
    auto ecc = [this](const Node& v) {
        const auto dist = bfs_distances(v);
        return *std::max_element(dist.begin(), dist.end());
    };
    if (!all_pairs) return ecc(Node{0, 0});
    std::int64_t best = 0;
    for (const Node& v : nodes_) best = std::max(best, ecc(v));
    return best;
}

std::map<std::int64_t, std::int64_t> Network::distance_histogram() const {
    std::map<std::int64_t, std::int64_t> hist;
    for (std::int64_t d : bfs_distances(Node{0, 0})) ++hist[d];
    return hist;
}

std::int64_t Network::circulant_label(Node v) const {
    if (!contains(v)) throw std::invalid_argument("circulant_label: node outside canonical diamond");
    const std::int64_t raw = (mod_.k * v.re + (mod_.k + 1) * v.im) % mod_.n;
    return raw < 0 ? raw + mod_.n : raw;
}

bool Network::circulant_iso_holds() const {
    std::set<std::pair<std::int64_t, std::int64_t>> image;
    for (const Edge& e : edges_) {
        const std::int64_t a = circulant_label(e.u);
        const std::int64_t b = circulant_label(e.v);
        image.emplace(std::min(a, b), std::max(a, b));
    }
    std::set<std::pair<std::int64_t, std::int64_t>> circulant;
    for (std::int64_t u = 0; u < mod_.n; ++u) {
        for (std::int64_t jump : {mod_.k, mod_.k + 1}) {
            const std::int64_t v = (u + jump) % mod_.n;
            circulant.emplace(std::min(u, v), std::max(u, v));
        }
    }
    return image == circulant;
}

}  // namespace gnet
