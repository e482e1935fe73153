#pragma once

#include "gnet/network.hpp"
#include "gnet/routing.hpp"
#include "gnet/trees.hpp"

#include <map>
#include <set>
#include <utility>

namespace gnet {

// Single failure injected into a run: nothing, one dead node, or one dead
// link. Dead nodes neither receive nor forward; dead links carry nothing.
struct FaultSpec {
    enum class Kind { None, Node, Edge };
    Kind kind = Kind::None;
    Node node{};
    std::pair<Node, Node> edge{};  // endpoints in either order

    static FaultSpec none() { return {}; }
    static FaultSpec node_fault(Node v) { return {Kind::Node, v, {}}; }
    static FaultSpec edge_fault(Node a, Node b) { return {Kind::Edge, {}, {a, b}}; }

    bool blocks_node(Node v) const;
    bool blocks_link(Node a, Node b) const;
};

inline constexpr unsigned kExposureBlack = 1u;
inline constexpr unsigned kExposureRed = 2u;

// Outcome of a dissemination run. delivered and blocked partition the
// intended recipients; exposure records which packet(s) each node carried.
struct DeliveryReport {
    std::set<Node, NodeOrder> delivered;
    std::set<Node, NodeOrder> blocked;
    std::map<Node, unsigned, NodeOrder> exposure;
    std::int64_t black_transmissions = 0;
    std::int64_t red_transmissions = 0;
};

// Floods one message down both trees rooted at `root`, pruning whatever
// the fault cuts off. A node is delivered when at least one tree reaches
// it; with at most one fault that is every non-faulty node.
DeliveryReport ft_broadcast(const Network& net, Node root, const FaultSpec& fault);

// Same, over trees already rooted at the broadcast root (saves rebuilding
// during sweeps). Both trees must share their root.
DeliveryReport ft_broadcast(const Network& net, const SpanningTree& black, const SpanningTree& red_prime,
                            const FaultSpec& fault);

// Splits a message into two packets and sends one along each tree's route
// from s to d. Only d sees both packets; every intermediate node sees at
// most one, which is what makes single-node eavesdropping useless.
DeliveryReport secure_split_send(const Network& net, Node s, Node d);

// True iff at least one of the two routed paths from s to d survives the
// fault. Preconditions: s != d and the fault is not s or d itself.
bool ft_unicast(const Network& net, Node s, Node d, const FaultSpec& fault);

}  // namespace gnet
