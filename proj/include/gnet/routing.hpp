#pragma once

#include "gnet/network.hpp"
#include "gnet/trees.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace gnet {

enum class Direction : std::uint8_t { East = 0, West = 1, North = 2, South = 3 };

GInt direction_offset(Direction d);  // +1, -1, +i, -i
std::string_view direction_name(Direction d);

// canonical_mod(t + offset(d)); one link traversal.
Node step(Node t, Direction d, const DenseModulus& m);

// Fixed routing header. Coordinates are relative: mapped_dest is the
// destination translated so the source sits at 0, which makes forwarding
// decisions independent of the source's actual position.
struct MessageHeader {
    Node source;
    Node mapped_dest;  // never 0
    Direction dir = Direction::East;
    std::int64_t hops = 0;
};

struct SelfRouteError : std::invalid_argument {
    SelfRouteError() : std::invalid_argument("cannot route a message to its own source") {}
};

struct HopLimitError : std::runtime_error {
    explicit HopLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Builds the header at the source. The initial direction depends only on
// the signs of the mapped destination and, for the red-prime tree, on the
// two wrap leaves: the mapped destinations k and ki hang below the end of
// the opposite axis ray, so they start South and West respectively, the
// reverse of the generic axis rule. Throws SelfRouteError if s == d, and
// std::invalid_argument for TreeKind::Red (forwarding is defined for the
// black and red-prime trees only).
MessageHeader source_route(const DenseModulus& m, Node s, Node d, TreeKind kind);

struct Forward {
    MessageHeader header;
    Node next;
};

// One forwarding decision at node t (t != source). Returns nullopt when t
// is the destination. Otherwise the direction turns South when t sits on
// the relative horizontal axis at offset d1, d1+k+1 or d1-k, turns East
// when it sits on the relative vertical axis at offset d2, d2+k+1 or
// d2-k (the -k form only for d2 != 0; at d2 = 0 that axis crossing is the
// pass-through below the south ray, not a turn), and is kept otherwise.
// Throws HopLimitError when the forward would exceed 2k hops.
std::optional<Forward> transit_step(const DenseModulus& m, const MessageHeader& hdr, Node t, TreeKind kind);

// Full source-to-destination drive: source_route once, then transit_step
// until acceptance. Returns the node sequence including both endpoints.
std::vector<Node> simulate_route(const Network& net, Node s, Node d, TreeKind kind);

// Wire form: six little-endian int16 fields
// (s.re, s.im, dest.re, dest.im, dir code, hops).
std::array<std::uint8_t, 12> encode_header(const MessageHeader& h);
MessageHeader decode_header(const std::array<std::uint8_t, 12>& bytes);

}  // namespace gnet
