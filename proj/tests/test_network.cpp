#include "gnet/network.hpp"

#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

using namespace gnet;

TEST_CASE("counts and regularity for k = 1..8") {
    for (std::int64_t k = 1; k <= 8; ++k) {
        const Network net(k);
        CHECK(net.node_count() == 2 * k * k + 2 * k + 1);
        CHECK(static_cast<std::int64_t>(net.nodes().size()) == net.node_count());
        CHECK(static_cast<std::int64_t>(net.edges().size()) == 4 * k * k + 4 * k + 2);
        std::map<Node, int, NodeOrder> deg;
        for (const Edge& e : net.edges()) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (const Node& v : net.nodes()) CHECK(deg[v] == 4);
    }
}

TEST_CASE("k = 1 is a complete graph on five nodes") {
    const Network net(1);
    CHECK(net.node_count() == 5);
    CHECK(net.edges().size() == 10);
    for (const Node& u : net.nodes())
        for (const Node& v : net.nodes())
            if (!(u == v)) CHECK_NOTHROW(net.classify_edge(u, v));
}

TEST_CASE("display order and indexing") {
    const Network net(2);
    const auto& ns = net.nodes();
    CHECK(ns.front() == Node{0, 2});
    CHECK(ns[1] == Node{-1, 1});
    CHECK(ns[4] == Node{-2, 0});
    CHECK(ns[6] == Node{0, 0});
    CHECK(ns.back() == Node{0, -2});
    for (std::size_t i = 0; i < ns.size(); ++i) CHECK(net.index_of(ns[i]) == i);
    CHECK_THROWS_AS(net.index_of({2, 1}), std::invalid_argument);
}

TEST_CASE("neighbors wrap through the modulus") {
    const Network net(2);
    CHECK(net.neighbors({2, 0}) == std::array<Node, 4>{{{0, 2}, {1, 0}, {0, -2}, {-1, 1}}});
    CHECK(net.neighbors({0, 2}) == std::array<Node, 4>{{{-1, -1}, {2, 0}, {-2, 0}, {0, 1}}});
    CHECK(net.neighbors({0, 0}) == std::array<Node, 4>{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}});
    for (const Node& v : net.nodes()) {
        const auto nb = net.neighbors(v);
        std::set<Node, NodeOrder> distinct(nb.begin(), nb.end());
        CHECK(distinct.size() == 4);
        CHECK(distinct.count(v) == 0);
    }
}

TEST_CASE("edge classification") {
    const Network net(2);
    const Edge inner = net.classify_edge({0, 1}, {1, 1});
    CHECK(inner.u == Node{0, 1});
    CHECK(inner.v == Node{1, 1});
    CHECK(inner.axis == Axis::Horizontal);
    CHECK_FALSE(inner.wrap);

    const Edge vert = net.classify_edge({1, 1}, {1, 0});
    CHECK(vert.axis == Axis::Vertical);
    CHECK_FALSE(vert.wrap);

    // 2i and -1-i differ by 1+3i = i*alpha - ... reduced to -1: horizontal wrap
    const Edge wrapped = net.classify_edge({0, 2}, {-1, -1});
    CHECK(wrapped.u == Node{-1, -1});
    CHECK(wrapped.v == Node{0, 2});
    CHECK(wrapped.axis == Axis::Horizontal);
    CHECK(wrapped.wrap);

    const Edge vwrap = net.classify_edge({2, 0}, {0, -2});
    CHECK(vwrap.axis == Axis::Vertical);
    CHECK(vwrap.wrap);

    CHECK_THROWS_AS(net.classify_edge({0, 2}, {0, -2}), std::invalid_argument);
    CHECK_THROWS_AS(net.classify_edge({0, 0}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(net.classify_edge({0, 0}, {0, 0}), std::invalid_argument);
    const DenseModulus m(2);
    CHECK_THROWS_AS(make_edge({3, 0}, {2, 0}, m), std::invalid_argument);
}

TEST_CASE("wrap edges number 4k+2 and live on the boundary") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const Network net(k);
        std::int64_t wraps = 0;
        for (const Edge& e : net.edges())
            if (e.wrap) {
                ++wraps;
                CHECK(l1_norm(e.u) == k);
                CHECK(l1_norm(e.v) == k);
            }
        CHECK(wraps == 4 * k + 2);
    }
}

TEST_CASE("distances, diameter, histogram") {
    const Network net2(2);
    CHECK(net2.bfs_distance({0, 0}, {0, 0}) == 0);
    CHECK(net2.bfs_distance({0, 0}, {1, 1}) == 2);
    CHECK(net2.bfs_distance({0, 2}, {0, -2}) == 2);  // around the wrap, not across the diamond
    CHECK(net2.distance_histogram() == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 4}, {2, 8}});

    const Network net4(4);
    CHECK(net4.bfs_distance({0, 0}, {2, 2}) == 4);
    CHECK(net4.bfs_distance({0, 0}, {0, -4}) == 4);

    for (std::int64_t k = 1; k <= 8; ++k) CHECK(Network(k).diameter() == k);
    CHECK(net2.diameter(true) == 2);
    CHECK(Network(3).diameter(true) == 3);
}

TEST_CASE("circulant relabelling") {
    const Network net(2);
    CHECK(net.circulant_label({0, 0}) == 0);
    CHECK(net.circulant_label({1, 0}) == 2);
    CHECK(net.circulant_label({0, 1}) == 3);
    CHECK(net.circulant_label({1, 1}) == 5);
    CHECK(net.circulant_label({-1, 0}) == 11);
    for (std::int64_t k = 1; k <= 8; ++k) {
        const Network n(k);
        std::set<std::int64_t> labels;
        for (const Node& v : n.nodes()) labels.insert(n.circulant_label(v));
        CHECK(static_cast<std::int64_t>(labels.size()) == n.node_count());  // bijection
        CHECK(n.circulant_iso_holds());
    }
}
