#include "gnet/network.hpp"
#include "gnet/protocols.hpp"
#include "gnet/routing.hpp"
#include "gnet/serialize.hpp"
#include "gnet/trees.hpp"
#include "gnet/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // a property or routing check did not hold
constexpr int kExitUsage = 2;     // bad arguments

constexpr std::int64_t kMaxK = 1000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t checked_k(std::int64_t k) {
    if (k < 1 || k > kMaxK) throw UsageError("k must be between 1 and " + std::to_string(kMaxK));
    return k;
}

gnet::Node parse_node(const std::string& text, const gnet::DenseModulus& m, const std::string& what) {
    const auto v = gnet::parse_coord(text);
    if (!v) throw UsageError(what + ": expected coordinates \"a,b\", got \"" + text + "\"");
    if (!gnet::is_canonical(*v, m))
        throw UsageError(what + ": " + text + " is outside the canonical diamond for k = " + std::to_string(m.k));
    return *v;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << content;
}

// ": "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    std::int64_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("bad k range: \"" + text + "\" (expected e.g. \"1..8\" or \"4\")");
    }
    checked_k(lo);
    checked_k(hi);
    if (hi < lo) throw UsageError("empty k range: " + text);
    return {lo, hi};
}

struct CheckPrinter {
    std::int64_t k = 0;
    bool all_ok = true;

    void report(const std::string& name, bool ok, const std::vector<std::string>& witnesses = {}) {
        std::cout << "k=" << k << ' ' << name << (ok ? " ok" : " FAIL") << '\n';
        if (!ok) {
            all_ok = false;
            for (const auto& w : witnesses) std::cout << "    " << w << '\n';
        }
    }
};

std::string edge_text(const gnet::Edge& e) {
    return '(' + gnet::coord_string(e.u) + ")-(" + gnet::coord_string(e.v) + ')';
}

// Re-attaches the leaf at node k from -ki to k-1, which keeps a spanning
// tree but shares an edge with the black baseline and (for k >= 2) routes
// through a node the black path to k also uses. Lets the failure paths of
// the checks be exercised end to end.
gnet::Subgraph sabotage_red_prime(gnet::Subgraph g, const gnet::DenseModulus& m) {
    g.edges.erase(gnet::make_edge({m.k, 0}, {0, -m.k}, m));
    g.edges.insert(gnet::make_edge({m.k, 0}, {m.k - 1, 0}, m));
    return g;
}

int run_verify(const std::string& range_text, bool sabotage) {
    const auto [lo, hi] = parse_range(range_text);
    bool all_ok = true;
    for (std::int64_t k = lo; k <= hi; ++k) {
        const gnet::Network net(k);
        const gnet::DenseModulus& m = net.modulus();
        CheckPrinter out;
        out.k = k;

        const std::int64_t n = net.node_count();
        out.report("counts", n == 2 * k * k + 2 * k + 1 &&
                                 static_cast<std::int64_t>(net.edges().size()) == 4 * k * k + 4 * k + 2);

        const auto comp_a = gnet::component_A(m);
        const auto comp_b = gnet::component_B(m);
        const auto comp_wb = gnet::component_WB(m);
        const auto comp_wr = gnet::component_WR(m);
        out.report("component-sizes",
                   static_cast<std::int64_t>(comp_a.edges.size()) == k * (k - 1) / 2 &&
                       static_cast<std::int64_t>(comp_b.edges.size()) == k &&
                       static_cast<std::int64_t>(comp_wb.edges.size()) == k &&
                       static_cast<std::int64_t>(comp_wr.edges.size()) == k);

        const auto black = gnet::build_black(m);
        const auto red = gnet::build_red(m);
        auto red_prime = gnet::build_red_prime(m);
        if (sabotage) red_prime = sabotage_red_prime(red_prime, m);

        out.report("spanning-black", gnet::is_spanning_tree(net, black));
        out.report("spanning-red", gnet::is_spanning_tree(net, red));
        out.report("spanning-redprime", gnet::is_spanning_tree(net, red_prime));

        const auto expect_leftover = [&](const gnet::DisjointnessReport& rep, const gnet::Edge& e1,
                                         const gnet::Edge& e2) {
            return rep.shared.empty() && rep.leftover.size() == 2 &&
                   ((rep.leftover[0] == e1 && rep.leftover[1] == e2) ||
                    (rep.leftover[0] == e2 && rep.leftover[1] == e1));
        };
        const gnet::Edge neg_wrap = gnet::make_edge({-k, 0}, {0, -k}, m);
        const gnet::Edge pos_down = gnet::make_edge({k, 0}, {0, -k}, m);
        const gnet::Edge pos_up = gnet::make_edge({k, 0}, {0, k}, m);

        const auto dis_br = gnet::edge_disjointness(net, black, red);
        std::vector<std::string> w1;
        for (const auto& e : dis_br.shared) w1.push_back("shared edge " + edge_text(e));
        out.report("disjoint-black-red", expect_leftover(dis_br, neg_wrap, pos_down), w1);

        const auto dis_brp = gnet::edge_disjointness(net, black, red_prime);
        std::vector<std::string> w2;
        for (const auto& e : dis_brp.shared) w2.push_back("shared edge " + edge_text(e));
        for (const auto& e : dis_brp.leftover) w2.push_back("leftover edge " + edge_text(e));
        out.report("disjoint-black-redprime", expect_leftover(dis_brp, neg_wrap, pos_up), w2);

        const auto black_t = gnet::to_rooted(black, gnet::TreeKind::Black, m);
        const auto red_t = gnet::to_rooted(red, gnet::TreeKind::Red, m);
        const auto redp_t = gnet::to_rooted(red_prime, gnet::TreeKind::RedPrime, m);

        const auto ind_brp = gnet::check_node_independence(black_t, redp_t);
        std::vector<std::string> w3;
        for (const auto& v : ind_brp.witnesses)
            w3.push_back("paths to " + gnet::coord_string(v.dest) + " share node " + gnet::coord_string(v.shared));
        out.report("independence-black-redprime", ind_brp.ok, w3);

        if (k >= 2) {
            const auto ind_br = gnet::check_node_independence(black_t, red_t);
            std::vector<std::string> w4;
            for (const auto& v : ind_br.witnesses)
                w4.push_back("paths to " + gnet::coord_string(v.dest) + " share node " +
                             gnet::coord_string(v.shared));
            out.report("independence-black-red", ind_br.ok, w4);
        }

        out.report("depth-black", gnet::tree_depth(black_t) == 2 * k);
        out.report("depth-redprime", gnet::tree_depth(redp_t) == 2 * k);
        out.report("depth-red", gnet::tree_depth(red_t) == (k == 1 ? 3 : 2 * k));

        const auto lemmas = gnet::check_lemmas(net);
        out.report("lemma-paths", lemmas.hb.is_path_union && lemmas.hb.axis_ok && lemmas.hr.is_path_union &&
                                      lemmas.hr.axis_ok && lemmas.hb_rho.is_path_union && lemmas.hb_rho.axis_ok &&
                                      lemmas.hr_rho.is_path_union && lemmas.hr_rho.axis_ok && lemmas.hb_bound_ok &&
                                      lemmas.hr_bound_ok,
                   lemmas.witnesses);
        out.report("lemma-horvert", lemmas.horvert_ok, lemmas.witnesses);
        out.report("lemma-edge-budget", lemmas.two_tree_bound_ok);

        out.report("diameter", net.diameter() == k);
        out.report("circulant-iso", net.circulant_iso_holds());

        all_ok = all_ok && out.all_ok;
    }
    std::cout << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return all_ok ? kExitOk : kExitFailure;
}

int run_route(std::int64_t k, const std::string& from, const std::string& to, const std::string& tree) {
    const gnet::Network net(checked_k(k));
    const gnet::DenseModulus& m = net.modulus();
    const gnet::Node s = parse_node(from, m, "--from");
    const gnet::Node d = parse_node(to, m, "--to");
    const gnet::TreeKind kind = tree == "black" ? gnet::TreeKind::Black : gnet::TreeKind::RedPrime;

    gnet::MessageHeader hdr;
    try {
        hdr = gnet::source_route(m, s, d, kind);
    } catch (const gnet::SelfRouteError& e) {
        throw UsageError(e.what());
    }

    std::vector<gnet::Node> path{s};
    std::vector<std::string> trace;
    hdr.hops = 1;
    gnet::Node cur = gnet::step(s, hdr.dir, m);
    trace.push_back("send from " + gnet::coord_string(s) + " heading " + std::string(gnet::direction_name(hdr.dir)) +
                    " toward relative offset " + gnet::coord_string(hdr.mapped_dest));
    for (;;) {
        path.push_back(cur);
        const auto fwd = gnet::transit_step(m, hdr, cur, kind);
        if (!fwd) {
            trace.push_back("hop " + std::to_string(hdr.hops) + ": " + gnet::coord_string(cur) + " accepts");
            break;
        }
        trace.push_back("hop " + std::to_string(hdr.hops) + ": " + gnet::coord_string(cur) + " forwards " +
                        std::string(gnet::direction_name(fwd->header.dir)) + " to " +
                        gnet::coord_string(fwd->next));
        hdr = fwd->header;
        cur = fwd->next;
    }

    std::string line;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) line += ' ';
        line += gnet::coord_string(path[i]);
    }
    std::cout << line << '\n';
    for (const auto& t : trace) std::cout << "# " << t << '\n';
    return kExitOk;
}

gnet::FaultSpec parse_fault(const std::string& fault_node, const std::string& fault_edge, const gnet::Network& net) {
    const gnet::DenseModulus& m = net.modulus();
    if (!fault_node.empty()) return gnet::FaultSpec::node_fault(parse_node(fault_node, m, "--fault-node"));
    if (!fault_edge.empty()) {
        const auto colon = fault_edge.find(':');
        if (colon == std::string::npos)
            throw UsageError("--fault-edge: expected \"a,b:c,d\", got \"" + fault_edge + "\"");
        const gnet::Node a = parse_node(fault_edge.substr(0, colon), m, "--fault-edge");
        const gnet::Node b = parse_node(fault_edge.substr(colon + 1), m, "--fault-edge");
        try {
            net.classify_edge(a, b);
        } catch (const std::invalid_argument&) {
            throw UsageError("--fault-edge: " + fault_edge + " is not an edge of the network");
        }
        return gnet::FaultSpec::edge_fault(a, b);
    }
    return gnet::FaultSpec::none();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dense Gaussian network toolkit"};
    app.require_subcommand(1);

    std::int64_t k = 0;
    std::string out_path, what_text = "network", format = "json";
    std::string range_text, from_text, to_text, tree_text = "black", root_text = "0,0";
    std::string fault_node, fault_edge;
    bool all_pairs = false, sabotage = false;

    auto* cmd_build = app.add_subcommand("build", "construct the network and write it as JSON");
    cmd_build->add_option("--k", k, "diamond radius")->required();
    cmd_build->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_export = app.add_subcommand("export", "write the network or its spanning trees");
    cmd_export->add_option("--k", k, "diamond radius")->required();
    cmd_export->add_option("--what", what_text, "network|black|red|redprime|both");
    cmd_export->add_option("--format", format, "json|dot");
    cmd_export->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "run the structural checks for a range of k");
    cmd_verify->add_option("range", range_text, "k range, e.g. 1..8 or 4")->required();
    cmd_verify->add_flag("--sabotage", sabotage, "swap one tree edge first (the checks must then fail)");

    auto* cmd_route = app.add_subcommand("route", "simulate header routing between two nodes");
    cmd_route->add_option("--k", k, "diamond radius")->required();
    cmd_route->add_option("--from", from_text, "source \"a,b\"")->required();
    cmd_route->add_option("--to", to_text, "destination \"a,b\"")->required();
    cmd_route->add_option("--tree", tree_text, "black|redprime");

    auto* cmd_broadcast = app.add_subcommand("broadcast", "flood a message down both trees");
    cmd_broadcast->add_option("--k", k, "diamond radius")->required();
    cmd_broadcast->add_option("--root", root_text, "broadcast root \"a,b\"");
    cmd_broadcast->add_option("--fault-node", fault_node, "dead node \"a,b\"");
    cmd_broadcast->add_option("--fault-edge", fault_edge, "dead link \"a,b:c,d\"");

    auto* cmd_split = app.add_subcommand("split", "send one packet along each tree");
    cmd_split->add_option("--k", k, "diamond radius")->required();
    cmd_split->add_option("--from", from_text, "source \"a,b\"")->required();
    cmd_split->add_option("--to", to_text, "destination \"a,b\"")->required();

    auto* cmd_stats = app.add_subcommand("stats", "node count, edge count, diameter, distance histogram");
    cmd_stats->add_option("--k", k, "diamond radius")->required();
    cmd_stats->add_flag("--all-pairs", all_pairs, "compute the diameter over every source");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_build->parsed()) {
            const gnet::Network net(checked_k(k));
            write_output(gnet::network_json(net), out_path);
            return kExitOk;
        }
        if (cmd_export->parsed()) {
            const auto what = gnet::parse_export_what(what_text);
            if (!what) throw UsageError("unknown --what: " + what_text);
            if (format != "json" && format != "dot") throw UsageError("unknown --format: " + format);
            const gnet::Network net(checked_k(k));
            write_output(format == "json" ? gnet::export_json(net, *what) : gnet::export_dot(net, *what), out_path);
            return kExitOk;
        }
        if (cmd_verify->parsed()) return run_verify(range_text, sabotage);
        if (cmd_route->parsed()) {
            if (tree_text != "black" && tree_text != "redprime")
                throw UsageError("--tree must be black or redprime");
            return run_route(k, from_text, to_text, tree_text);
        }
        if (cmd_broadcast->parsed()) {
            if (!fault_node.empty() && !fault_edge.empty())
                throw UsageError("--fault-node and --fault-edge are mutually exclusive");
            const gnet::Network net(checked_k(k));
            const gnet::Node root = parse_node(root_text, net.modulus(), "--root");
            const gnet::FaultSpec fault = parse_fault(fault_node, fault_edge, net);
            const auto rep = gnet::ft_broadcast(net, root, fault);
            std::cout << gnet::broadcast_report_json(net, root, fault, rep);
            return kExitOk;
        }
        if (cmd_split->parsed()) {
            const gnet::Network net(checked_k(k));
            const gnet::Node s = parse_node(from_text, net.modulus(), "--from");
            const gnet::Node d = parse_node(to_text, net.modulus(), "--to");
            if (s == d) throw UsageError("--from and --to must differ");
            const auto rep = gnet::secure_split_send(net, s, d);
            std::cout << gnet::split_report_json(net, s, d, rep);
            return kExitOk;
        }
        if (cmd_stats->parsed()) {
            const gnet::Network net(checked_k(k));
            std::cout << "k " << net.k() << '\n';
            std::cout << "n " << net.node_count() << '\n';
            std::cout << "edges " << net.edges().size() << '\n';
            std::cout << "diameter " << net.diameter(all_pairs) << '\n';
            std::cout << "histogram {";
            bool first = true;
            for (const auto& [dist, count] : net.distance_histogram()) {
                if (!first) std::cout << ", ";
                first = false;
                std::cout << dist << ':' << count;
            }
            std::cout << "}\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const gnet::HopLimitError& e) {
        std::cerr << "routing failure: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
