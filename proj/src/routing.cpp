#include "gnet/routing.hpp"

#include <cassert>

namespace gnet {

GInt direction_offset(Direction d) {
    switch (d) {
        case Direction::East: return {1, 0};
        case Direction::West: return {-1, 0};
        case Direction::North: return {0, 1};
        case Direction::South: return {0, -1};
    }
    throw std::invalid_argument("direction_offset: bad direction");
}

std::string_view direction_name(Direction d) {
    switch (d) {
        case Direction::East: return "E";
        case Direction::West: return "W";
        case Direction::North: return "N";
        case Direction::South: return "S";
    }
    return "?";
}

Node step(Node t, Direction d, const DenseModulus& m) {
    return canonical_mod(t + direction_offset(d), m);
}

namespace {

void require_routable_kind(TreeKind kind) {
    if (kind == TreeKind::Red)
        throw std::invalid_argument("routing is defined for the black and red-prime trees only");
}

}  // namespace

MessageHeader source_route(const DenseModulus& m, Node s, Node d, TreeKind kind) {
    require_routable_kind(kind);
    if (!is_canonical(s, m) || !is_canonical(d, m))
        throw std::invalid_argument("source_route: node outside canonical diamond");
    MessageHeader h;
    h.source = s;
    h.mapped_dest = canonical_mod(d - s, m);
    if (h.mapped_dest == Node{0, 0}) throw SelfRouteError{};

    const std::int64_t d1 = h.mapped_dest.re;
    const std::int64_t d2 = h.mapped_dest.im;
    if (kind == TreeKind::Black) {
        if (d2 == 0)
            h.dir = Direction::East;
        else if (d1 == 0)
            h.dir = Direction::North;
        else
            h.dir = (d1 > 0) == (d2 > 0) ? Direction::North : Direction::East;
    } else {
        // Wrap-leaf destinations first: k hangs south of -ki, ki west of -k.
        if (h.mapped_dest == Node{m.k, 0})
            h.dir = Direction::South;
        else if (h.mapped_dest == Node{0, m.k})
            h.dir = Direction::West;
        else if (d2 == 0)
            h.dir = Direction::West;
        else if (d1 == 0)
            h.dir = Direction::South;
        else
            h.dir = (d1 > 0) == (d2 > 0) ? Direction::West : Direction::South;
    }
    h.hops = 0;
    return h;
}

std::optional<Forward> transit_step(const DenseModulus& m, const MessageHeader& hdr, Node t, TreeKind kind) {
    require_routable_kind(kind);
    const Node tm = canonical_mod(t - hdr.source, m);
    assert(!(tm == Node{0, 0}) && "transit ran at the source node");
    if (tm == hdr.mapped_dest) return std::nullopt;

    const std::int64_t d1 = hdr.mapped_dest.re;
    const std::int64_t d2 = hdr.mapped_dest.im;
    const bool turn_south =
        tm.im == 0 && (tm.re == d1 || tm.re == d1 + m.k + 1 || tm.re == d1 - m.k);
    const bool turn_east =
        tm.re == 0 && (tm.im == d2 || tm.im == d2 + m.k + 1 || (d2 != 0 && tm.im == d2 - m.k));
    assert(!(turn_south && turn_east) && "turn rules are mutually exclusive off the source");

    Forward f;
    f.header = hdr;
    if (turn_south)
        f.header.dir = Direction::South;
    else if (turn_east)
        f.header.dir = Direction::East;
    f.header.hops = hdr.hops + 1;
    if (f.header.hops > 2 * m.k)
        throw HopLimitError("hop limit exceeded while heading " + std::string(direction_name(f.header.dir)) +
                            " for relative destination offset (" + std::to_string(d1) + "," + std::to_string(d2) +
                            ")");
    f.next = step(t, f.header.dir, m);
    return f;
}

std::vector<Node> simulate_route(const Network& net, Node s, Node d, TreeKind kind) {
    const DenseModulus& m = net.modulus();
    MessageHeader hdr = source_route(m, s, d, kind);
    std::vector<Node> path{s};
    hdr.hops = 1;
    Node cur = step(s, hdr.dir, m);
    for (;;) {
        path.push_back(cur);
        auto fwd = transit_step(m, hdr, cur, kind);
        if (!fwd) return path;
        hdr = fwd->header;
        cur = fwd->next;
    }
}

namespace {

void put_le16(std::array<std::uint8_t, 12>& out, std::size_t pos, std::int64_t value) {
    const auto v = static_cast<std::int16_t>(value);
    if (static_cast<std::int64_t>(v) != value) throw std::overflow_error("header field out of int16 range");
    const auto u = static_cast<std::uint16_t>(v);
    out[pos] = static_cast<std::uint8_t>(u & 0xff);
    out[pos + 1] = static_cast<std::uint8_t>(u >> 8);
}

std::int64_t get_le16(const std::array<std::uint8_t, 12>& in, std::size_t pos) {
    const auto u = static_cast<std::uint16_t>(in[pos] | (in[pos + 1] << 8));
    return static_cast<std::int16_t>(u);
}

}  // namespace

std::array<std::uint8_t, 12> encode_header(const MessageHeader& h) {
    std::array<std::uint8_t, 12> out{};
    put_le16(out, 0, h.source.re);
    put_le16(out, 2, h.source.im);
    put_le16(out, 4, h.mapped_dest.re);
    put_le16(out, 6, h.mapped_dest.im);
    put_le16(out, 8, static_cast<std::int64_t>(h.dir));
    put_le16(out, 10, h.hops);
    return out;
}

MessageHeader decode_header(const std::array<std::uint8_t, 12>& bytes) {
    MessageHeader h;
    h.source = {get_le16(bytes, 0), get_le16(bytes, 2)};
    h.mapped_dest = {get_le16(bytes, 4), get_le16(bytes, 6)};
    const std::int64_t dir = get_le16(bytes, 8);
    if (dir < 0 || dir > 3) throw std::invalid_argument("decode_header: bad direction code");
    h.dir = static_cast<Direction>(dir);
    h.hops = get_le16(bytes, 10);
    return h;
}

}  // namespace gnet
