#include "gnet/serialize.hpp"

#include "json.hpp"

#include <charconv>
#include <sstream>

namespace gnet {

namespace {

using json = nlohmann::ordered_json;

json node_json(const Node& v) {
    return json::array({v.re, v.im});
}

json edge_json(const Edge& e) {
    return json::array({node_json(e.u), node_json(e.v)});
}

json edge_list_json(const std::set<Edge, EdgeOrder>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

json nodes_json(const Network& net) {
    json out = json::array();
    for (const Node& v : net.nodes()) out.push_back(node_json(v));
    return out;
}

std::string dot_id(const Node& v) {
    return '"' + coord_string(v) + '"';
}

void dot_nodes(std::ostream& os, const Network& net) {
    for (const Node& v : net.nodes())
        os << "  " << dot_id(v) << " [pos=\"" << v.re << ',' << v.im << "!\"];\n";
}

void dot_edges(std::ostream& os, const std::set<Edge, EdgeOrder>& edges, std::string_view attrs) {
    for (const Edge& e : edges) {
        os << "  " << dot_id(e.u) << " -- " << dot_id(e.v);
        if (!attrs.empty()) os << " [" << attrs << ']';
        os << ";\n";
    }
}

std::set<Edge, EdgeOrder> tree_edges(const Network& net, ExportWhat what) {
    const DenseModulus& m = net.modulus();
    switch (what) {
        case ExportWhat::Black: return build_black(m).edges;
        case ExportWhat::Red: return build_red(m).edges;
        case ExportWhat::RedPrime: return build_red_prime(m).edges;
        default: throw std::logic_error("tree_edges: not a tree export");
    }
}

std::set<Edge, EdgeOrder> leftover_edges(const Network& net, const std::set<Edge, EdgeOrder>& a,
                                         const std::set<Edge, EdgeOrder>& b) {
    std::set<Edge, EdgeOrder> out;
    for (const Edge& e : net.edges())
        if (!a.count(e) && !b.count(e)) out.insert(e);
    return out;
}

json fault_json(const FaultSpec& fault) {
    switch (fault.kind) {
        case FaultSpec::Kind::None: return {{"kind", "none"}};
        case FaultSpec::Kind::Node: return {{"kind", "node"}, {"node", node_json(fault.node)}};
        case FaultSpec::Kind::Edge:
            return {{"kind", "edge"},
                    {"edge", json::array({node_json(fault.edge.first), node_json(fault.edge.second)})}};
    }
    return {};
}

json report_body(const DeliveryReport& rep) {
    json delivered = json::array();
    for (const Node& v : rep.delivered) delivered.push_back(node_json(v));
    json blocked = json::array();
    for (const Node& v : rep.blocked) blocked.push_back(node_json(v));
    json exposure = json::array();
    for (const auto& [v, bits] : rep.exposure) {
        json packets = json::array();
        if (bits & kExposureBlack) packets.push_back("black");
        if (bits & kExposureRed) packets.push_back("red");
        exposure.push_back({{"node", node_json(v)}, {"packets", packets}});
    }
    return {{"delivered", delivered},
            {"blocked", blocked},
            {"exposure", exposure},
            {"transmissions", {{"black", rep.black_transmissions}, {"red", rep.red_transmissions}}}};
}

}  // namespace

std::string coord_string(Node v) {
    return std::to_string(v.re) + ',' + std::to_string(v.im);
}

std::optional<Node> parse_coord(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const std::string_view a = text.substr(0, comma);
    const std::string_view b = text.substr(comma + 1);
    Node v;
    auto ra = std::from_chars(a.data(), a.data() + a.size(), v.re);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), v.im);
    if (ra.ec != std::errc{} || ra.ptr != a.data() + a.size()) return std::nullopt;
    if (rb.ec != std::errc{} || rb.ptr != b.data() + b.size()) return std::nullopt;
    return v;
}

std::optional<ExportWhat> parse_export_what(std::string_view text) {
    if (text == "network") return ExportWhat::NetworkGraph;
    if (text == "black") return ExportWhat::Black;
    if (text == "red") return ExportWhat::Red;
    if (text == "redprime") return ExportWhat::RedPrime;
    if (text == "both") return ExportWhat::Both;
    return std::nullopt;
}

std::string network_json(const Network& net) {
    json doc = {{"k", net.k()}, {"n", net.node_count()}, {"nodes", nodes_json(net)}};
    json edges = json::array();
    for (const Edge& e : net.edges()) edges.push_back(edge_json(e));
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

std::string export_json(const Network& net, ExportWhat what) {
    if (what == ExportWhat::NetworkGraph) return network_json(net);
    json doc = {{"k", net.k()}, {"n", net.node_count()}};
    if (what == ExportWhat::Both) {
        const auto black = tree_edges(net, ExportWhat::Black);
        const auto red = tree_edges(net, ExportWhat::RedPrime);
        doc["what"] = "both";
        doc["nodes"] = nodes_json(net);
        doc["black_edges"] = edge_list_json(black);
        doc["redprime_edges"] = edge_list_json(red);
        doc["leftover_edges"] = edge_list_json(leftover_edges(net, black, red));
    } else {
        doc["what"] = what == ExportWhat::Black ? "black" : (what == ExportWhat::Red ? "red" : "redprime");
        doc["nodes"] = nodes_json(net);
        doc["edges"] = edge_list_json(tree_edges(net, what));
    }
    return doc.dump(2) + "\n";
}

std::string export_dot(const Network& net, ExportWhat what) {
    std::ostringstream os;
    os << "graph gk" << net.k() << " {\n";
    os << "  layout=neato;\n";
    os << "  node [shape=circle fixedsize=true width=0.5];\n";
    dot_nodes(os, net);
    switch (what) {
        case ExportWhat::NetworkGraph: {
            std::set<Edge, EdgeOrder> all(net.edges().begin(), net.edges().end());
            dot_edges(os, all, "");
            break;
        }
        case ExportWhat::Black: dot_edges(os, tree_edges(net, what), "color=black"); break;
        case ExportWhat::Red:
        case ExportWhat::RedPrime: dot_edges(os, tree_edges(net, what), "color=red"); break;
        case ExportWhat::Both: {
            const auto black = tree_edges(net, ExportWhat::Black);
            const auto red = tree_edges(net, ExportWhat::RedPrime);
            dot_edges(os, black, "color=black");
            dot_edges(os, red, "color=red");
            dot_edges(os, leftover_edges(net, black, red), "style=dashed");
            break;
        }
    }
    os << "}\n";
    return os.str();
}

std::string broadcast_report_json(const Network& net, Node root, const FaultSpec& fault,
                                  const DeliveryReport& rep) {
    json doc = {{"k", net.k()}, {"root", node_json(root)}, {"fault", fault_json(fault)}};
    doc.update(report_body(rep));
    return doc.dump(2) + "\n";
}

std::string split_report_json(const Network& net, Node s, Node d, const DeliveryReport& rep) {
    json doc = {{"k", net.k()}, {"source", node_json(s)}, {"dest", node_json(d)}};
    doc.update(report_body(rep));
    return doc.dump(2) + "\n";
}

}  // namespace gnet
