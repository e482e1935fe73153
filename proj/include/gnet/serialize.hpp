#pragma once

#include "gnet/network.hpp"
#include "gnet/protocols.hpp"
#include "gnet/trees.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gnet {

// "a,b" coordinate text, the node syntax used on the command line and in
// DOT node ids.
std::string coord_string(Node v);
std::optional<Node> parse_coord(std::string_view text);

enum class ExportWhat { NetworkGraph, Black, Red, RedPrime, Both };
std::optional<ExportWhat> parse_export_what(std::string_view text);

// JSON document {"k", "n", "nodes", "edges"} with nodes in display order
// (imaginary part descending, real ascending) and edges sorted by their
// canonical endpoints. Output is byte-stable for a given k.
std::string network_json(const Network& net);

// Tree exports add a "what" field; Both lists black, red-prime and the two
// leftover edges separately.
std::string export_json(const Network& net, ExportWhat what);

// Graphviz text with every node pinned at its lattice position. Tree edges
// carry color=black/red; the leftover pair in Both is dashed.
std::string export_dot(const Network& net, ExportWhat what);

std::string broadcast_report_json(const Network& net, Node root, const FaultSpec& fault,
                                  const DeliveryReport& rep);
std::string split_report_json(const Network& net, Node s, Node d, const DeliveryReport& rep);

}  // namespace gnet
