#include "gnet/protocols.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace gnet;

TEST_CASE("fault spec predicates") {
    const auto nf = FaultSpec::node_fault({1, 0});
    CHECK(nf.blocks_node({1, 0}));
    CHECK_FALSE(nf.blocks_node({0, 1}));
    CHECK_FALSE(nf.blocks_link({1, 0}, {0, 0}));  // a dead node is not a dead link
    const auto ef = FaultSpec::edge_fault({0, 0}, {1, 0});
    CHECK(ef.blocks_link({0, 0}, {1, 0}));
    CHECK(ef.blocks_link({1, 0}, {0, 0}));
    CHECK_FALSE(ef.blocks_link({0, 0}, {0, 1}));
    CHECK_FALSE(ef.blocks_node({0, 0}));
    CHECK_FALSE(FaultSpec::none().blocks_node({0, 0}));
}

TEST_CASE("fault-free broadcast floods both trees completely") {
    const Network net(4);
    const auto rep = ft_broadcast(net, {0, 0}, FaultSpec::none());
    CHECK(static_cast<std::int64_t>(rep.delivered.size()) == net.node_count());  // all 41
    CHECK(rep.blocked.empty());
    CHECK(rep.black_transmissions == net.node_count() - 1);
    CHECK(rep.red_transmissions == net.node_count() - 1);
    for (const auto& [v, bits] : rep.exposure) {
        (void)v;
        CHECK(bits == (kExposureBlack | kExposureRed));
    }
}

TEST_CASE("node fault at k = 2, frozen") {
    const Network net(2);
    const auto rep = ft_broadcast(net, {0, 0}, FaultSpec::node_fault({0, 1}));
    CHECK(rep.blocked == std::set<Node, NodeOrder>{Node{0, 1}});
    CHECK(rep.delivered.size() == 12);
    // the black subtree under i is cut off; the red tree still covers it
    CHECK(rep.exposure.at({1, 1}) == kExposureRed);
    CHECK(rep.exposure.at({0, 2}) == kExposureRed);
    CHECK(rep.exposure.at({0, -2}) == kExposureRed);
    CHECK(rep.exposure.at({1, 0}) == (kExposureBlack | kExposureRed));
    CHECK(rep.exposure.count({0, 1}) == 0);
    CHECK(rep.black_transmissions == 7);  // includes the doomed send toward the dead node
    CHECK(rep.red_transmissions == 12);
}

TEST_CASE("link fault at k = 2, frozen") {
    const Network net(2);
    const auto rep = ft_broadcast(net, {0, 0}, FaultSpec::edge_fault({0, 0}, {0, 1}));
    CHECK(rep.blocked.empty());
    CHECK(rep.delivered.size() == 13);
    CHECK(rep.exposure.at({0, 1}) == kExposureRed);
    CHECK(rep.exposure.at({0, 2}) == kExposureRed);
    CHECK(rep.exposure.at({1, 1}) == kExposureRed);
    CHECK(rep.exposure.at({0, -1}) == kExposureRed);
    CHECK(rep.exposure.at({1, 0}) == (kExposureBlack | kExposureRed));
    CHECK(rep.black_transmissions == 6);  // nothing is pushed into a dead link
    CHECK(rep.red_transmissions == 12);
}

TEST_CASE("mismatched roots are rejected") {
    const Network net(2);
    const DenseModulus& m = net.modulus();
    const auto bt = to_rooted(build_black(m), TreeKind::Black, m);
    const auto rt = to_rooted(build_red_prime(m), TreeKind::RedPrime, m);
    CHECK_THROWS_AS(ft_broadcast(net, bt, rebase(rt, {1, 0}, m), FaultSpec::none()), std::invalid_argument);
}

TEST_CASE("any single fault leaves everyone else covered, k = 1..3") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        const Network net(k);
        const DenseModulus& m = net.modulus();
        const auto bt = to_rooted(build_black(m), TreeKind::Black, m);
        const auto rpt = to_rooted(build_red_prime(m), TreeKind::RedPrime, m);
        for (const Node& root : net.nodes()) {
            const auto b = rebase(bt, root, m);
            const auto r = rebase(rpt, root, m);
            for (const Node& f : net.nodes()) {
                if (f == root) continue;
                const auto rep = ft_broadcast(net, b, r, FaultSpec::node_fault(f));
                CHECK(rep.blocked == std::set<Node, NodeOrder>{f});
                CHECK(static_cast<std::int64_t>(rep.delivered.size()) == net.node_count() - 1);
            }
            for (const Edge& e : net.edges()) {
                const auto rep = ft_broadcast(net, b, r, FaultSpec::edge_fault(e.u, e.v));
                CHECK(rep.blocked.empty());
                CHECK(static_cast<std::int64_t>(rep.delivered.size()) == net.node_count());
            }
        }
    }
}

TEST_CASE("secure split at k = 2, frozen") {
    const Network net(2);
    const auto rep = secure_split_send(net, {0, 0}, {1, 1});
    CHECK(rep.delivered == std::set<Node, NodeOrder>{Node{1, 1}});
    CHECK(rep.exposure.size() == 4);
    CHECK(rep.exposure.at({0, 1}) == kExposureBlack);
    CHECK(rep.exposure.at({-1, 0}) == kExposureRed);
    CHECK(rep.exposure.at({-1, -1}) == kExposureRed);
    CHECK(rep.exposure.at({1, 1}) == (kExposureBlack | kExposureRed));
    CHECK(rep.exposure.count({0, 0}) == 0);  // the source holds the original, not a relayed packet
    CHECK(rep.black_transmissions == 2);
    CHECK(rep.red_transmissions == 3);
}

TEST_CASE("no intermediate node ever sees both packets, k = 1..4") {
    for (std::int64_t k = 1; k <= 4; ++k) {
        const Network net(k);
        for (const Node& s : net.nodes()) {
            for (const Node& d : net.nodes()) {
                if (s == d) continue;
                const auto rep = secure_split_send(net, s, d);
                CHECK(rep.exposure.at(d) == (kExposureBlack | kExposureRed));
                CHECK(rep.exposure.count(s) == 0);
                for (const auto& [v, bits] : rep.exposure)
                    if (!(v == d)) CHECK(bits != (kExposureBlack | kExposureRed));
            }
        }
    }
}

TEST_CASE("unicast survives any fault away from the endpoints, k = 1..3") {
    for (std::int64_t k = 1; k <= 3; ++k) {
        const Network net(k);
        for (const Node& s : net.nodes()) {
            for (const Node& d : net.nodes()) {
                if (s == d) continue;
                for (const Node& f : net.nodes()) {
                    if (f == s || f == d) continue;
                    CHECK(ft_unicast(net, s, d, FaultSpec::node_fault(f)));
                }
            }
        }
    }
    const Network net(2);
    for (const Edge& e : net.edges())
        CHECK(ft_unicast(net, {0, 0}, {1, 1}, FaultSpec::edge_fault(e.u, e.v)));
}

TEST_CASE("unicast precondition errors") {
    const Network net(2);
    CHECK_THROWS_AS(ft_unicast(net, {0, 0}, {0, 0}, FaultSpec::none()), SelfRouteError);
    CHECK_THROWS_AS(ft_unicast(net, {0, 0}, {1, 0}, FaultSpec::node_fault({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(ft_unicast(net, {0, 0}, {1, 0}, FaultSpec::node_fault({1, 0})), std::invalid_argument);
}
