#include "gnet/protocols.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace gnet {

bool FaultSpec::blocks_node(Node v) const {
    return kind == Kind::Node && node == v;
}

bool FaultSpec::blocks_link(Node a, Node b) const {
    return kind == Kind::Edge && ((edge.first == a && edge.second == b) || (edge.first == b && edge.second == a));
}

namespace {

struct FloodResult {
    std::set<Node, NodeOrder> reached;
    std::int64_t transmissions = 0;
};

FloodResult flood(const SpanningTree& t, const FaultSpec& fault) {
    std::map<Node, std::vector<Node>, NodeOrder> children;
    for (const auto& [child, parent] : t.parent) children[parent].push_back(child);

    FloodResult out;
    if (fault.blocks_node(t.root)) return out;
    out.reached.insert(t.root);
    std::deque<Node> queue{t.root};
    while (!queue.empty()) {
        const Node v = queue.front();
        queue.pop_front();
        for (const Node& c : children[v]) {
            if (fault.blocks_link(v, c)) continue;
            ++out.transmissions;  // the copy is sent even if the child is dead
            if (fault.blocks_node(c)) continue;
            out.reached.insert(c);
            queue.push_back(c);
        }
    }
    return out;
}

}  // namespace

DeliveryReport ft_broadcast(const Network& net, Node root, const FaultSpec& fault) {
    const DenseModulus& m = net.modulus();
    const SpanningTree black = rebase(to_rooted(build_black(m), TreeKind::Black, m), root, m);
    const SpanningTree red = rebase(to_rooted(build_red_prime(m), TreeKind::RedPrime, m), root, m);
    return ft_broadcast(net, black, red, fault);
}

DeliveryReport ft_broadcast(const Network& net, const SpanningTree& black, const SpanningTree& red_prime,
                            const FaultSpec& fault) {
    if (!(black.root == red_prime.root)) throw std::invalid_argument("ft_broadcast: trees rooted differently");
    const FloodResult fb = flood(black, fault);
    const FloodResult fr = flood(red_prime, fault);

    DeliveryReport rep;
    rep.black_transmissions = fb.transmissions;
    rep.red_transmissions = fr.transmissions;
    for (const Node& v : fb.reached) rep.exposure[v] |= kExposureBlack;
    for (const Node& v : fr.reached) rep.exposure[v] |= kExposureRed;
    for (const Node& v : net.nodes()) {
        if (rep.exposure.count(v))
            rep.delivered.insert(v);
        else
            rep.blocked.insert(v);
    }
    return rep;
}

DeliveryReport secure_split_send(const Network& net, Node s, Node d) {
    const auto black_path = simulate_route(net, s, d, TreeKind::Black);
    const auto red_path = simulate_route(net, s, d, TreeKind::RedPrime);

    DeliveryReport rep;
    rep.black_transmissions = static_cast<std::int64_t>(black_path.size()) - 1;
    rep.red_transmissions = static_cast<std::int64_t>(red_path.size()) - 1;
    for (std::size_t i = 1; i < black_path.size(); ++i) rep.exposure[black_path[i]] |= kExposureBlack;
    for (std::size_t i = 1; i < red_path.size(); ++i) rep.exposure[red_path[i]] |= kExposureRed;
    rep.delivered.insert(d);
    return rep;
}

namespace {

bool path_survives(const std::vector<Node>& path, const FaultSpec& fault) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (fault.blocks_node(path[i])) return false;
        if (i + 1 < path.size() && fault.blocks_link(path[i], path[i + 1])) return false;
    }
    return true;
}

}  // namespace

bool ft_unicast(const Network& net, Node s, Node d, const FaultSpec& fault) {
    if (s == d) throw SelfRouteError{};
    if (fault.blocks_node(s) || fault.blocks_node(d))
        throw std::invalid_argument("ft_unicast: fault at an endpoint");
    return path_survives(simulate_route(net, s, d, TreeKind::Black), fault) ||
           path_survives(simulate_route(net, s, d, TreeKind::RedPrime), fault);
}

}  // namespace gnet
