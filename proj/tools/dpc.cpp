// dpc: exact DP-coloring computations on small graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dpcolor/certificate.hpp"
#include "dpcolor/coloring.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/errors.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/invariants.hpp"
#include "dpcolor/product.hpp"
#include "dpcolor/solver.hpp"

namespace {

using dpc::EnumOptions;
using dpc::SimpleGraph;
using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dpc::PreconditionError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --graph accepts a path, "g6:<graph6>" inline, or "name:<shorthand>".
SimpleGraph load_graph(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return dpc::parse_graph6(spec.substr(3));
    if (spec.rfind("name:", 0) == 0) return dpc::named_graph(spec.substr(5));
    std::string text = slurp(spec);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (spec.size() >= 3 && spec.substr(spec.size() - 3) == ".g6") return dpc::parse_graph6(text);
    if (text.find(' ') == std::string::npos) return dpc::parse_graph6(text);
    return dpc::parse_edge_list(text);
}

struct Common {
    std::string graph;
    int k = 0, l = 1, t = 0;
    std::uint64_t seed = 0;
    std::string mode = "reduced";
    int threads = 1;
    std::uint64_t cap_covers = 10'000'000;
    std::uint64_t cap_nodes = 10'000'000;
    std::string out;
    std::string format = "json";
};

EnumOptions enum_opts(const Common& c) {
    EnumOptions o;
    o.cover_cap = c.cap_covers;
    o.node_cap = c.cap_nodes;
    o.threads = c.threads;
    return o;
}

void write_out(const Common& c, const json& j) {
    if (c.out.empty()) return;
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw dpc::PreconditionError("cannot write " + c.out);
    if (c.format == "text") {
        for (auto& [key, val] : j.items())
            f << key << " " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    } else {
        f << j.dump(2) << "\n";
    }
}

void add_common(CLI::App* cmd, Common& c, bool graph = true) {
    if (graph) cmd->add_option("--graph", c.graph, "path | g6:<inline> | name:<shorthand>")->required();
    cmd->add_option("--threads", c.threads);
    cmd->add_option("--cap-covers", c.cap_covers);
    cmd->add_option("--cap-nodes", c.cap_nodes);
    cmd->add_option("--out", c.out);
    cmd->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
}

json matrix_json(const std::vector<std::vector<int>>& m) { return json(m); }

int dispatch(CLI::App& app, Common& c) {
    if (auto* cmd = app.get_subcommand("chrompoly"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        mpz_class v = dpc::chromatic_polynomial_eval(g, c.k, c.cap_nodes);
        std::cout << v.get_str() << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"k", c.k}, {"P", v.get_str()}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("chi"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        int v = dpc::chromatic_number(g, c.cap_nodes);
        std::cout << v << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"chi", v}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("col"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        int v = dpc::coloring_number(g);
        std::cout << v << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"col", v}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("chidp"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        int v = dpc::chi_dp(g, enum_opts(c));
        std::cout << v << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"chi_dp", v}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("pdp"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        mpz_class v = dpc::p_dp(g, c.k, enum_opts(c));
        std::cout << v.get_str() << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"k", c.k}, {"P_DP", v.get_str()}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("critical"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        bool v = dpc::is_k_critical(g, c.k, c.cap_nodes);
        std::cout << (v ? "critical" : "not critical") << "\n";
        write_out(c, {{"graph6", dpc::to_graph6(g)}, {"k", c.k}, {"critical", v}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("robust"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        auto mode = c.mode == "oracle" ? dpc::RobustMode::oracle : dpc::RobustMode::reduced;
        auto r = dpc::is_robustly_critical(g, c.k, mode, enum_opts(c));
        std::cout << (r.robust ? "robustly critical"
                               : r.critical ? "critical but not robust" : "not critical")
                  << "\n";
        json j{{"graph6", dpc::to_graph6(g)}, {"k", c.k},      {"mode", c.mode},
               {"critical", r.critical},     {"robust", r.robust}};
        if (r.witness) j["witness_matchings"] = r.witness->matchings;
        write_out(c, j);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("classes"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        auto cls = dpc::shift_classes(g, c.k, c.cap_nodes);
        std::cout << cls.class_count() << " classes of size " << c.k << "\n";
        for (const auto& rep : cls.representatives) {
            for (std::size_t i = 0; i < rep.size(); ++i) std::cout << (i ? " " : "") << rep[i];
            std::cout << "\n";
        }
        write_out(c, {{"graph6", dpc::to_graph6(g)},
                      {"k", c.k},
                      {"count", cls.class_count()},
                      {"representatives", matrix_json(cls.representatives)}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("star-cover"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        auto cert = dpc::build_star_bad_cover(g, c.k, c.t, enum_opts(c));
        std::cout << (cert.verified ? "BAD verified" : "NOT bad") << " (star, k=" << c.k
                  << ", t=" << c.t << ", hash " << dpc::certificate_content_hash(cert) << ")\n";
        if (!c.out.empty()) {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw dpc::PreconditionError("cannot write " + c.out);
            f << dpc::certificate_to_json(cert);
        }
        return 0;
    }
    if (auto* cmd = app.get_subcommand("random-cover"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        auto cert = dpc::build_random_bad_cover(g, c.k, c.l, c.t, c.seed, enum_opts(c));
        std::cout << (cert.verified ? "BAD verified" : "NOT bad") << " (random, k=" << c.k
                  << ", l=" << c.l << ", t=" << c.t << ", seed=" << c.seed << ", c=" << cert.c
                  << ", blocks resampled " << cert.blocks_resampled << ", hash "
                  << dpc::certificate_content_hash(cert) << ")\n";
        if (!c.out.empty()) {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw dpc::PreconditionError("cannot write " + c.out);
            f << dpc::certificate_to_json(cert);
        }
        return 0;
    }
    if (auto* cmd = app.get_subcommand("verify-cover"); cmd->parsed()) {
        auto cert = dpc::certificate_from_json(slurp(c.graph));
        bool replay = dpc::replay_matches(cert);
        auto verdict = dpc::verify_bad_by_volatility(cert.product, enum_opts(c));
        bool ok = replay && verdict.bad == cert.verified;
        std::cout << (verdict.bad ? "BAD verified" : "NOT bad") << " (replay "
                  << (replay ? "matches" : "MISMATCH") << ", " << verdict.x_colorings
                  << " X-colorings)\n";
        write_out(c, {{"kind", cert.kind},
                      {"bad", verdict.bad},
                      {"replay_matches", replay},
                      {"recorded_verified", cert.verified},
                      {"x_colorings", verdict.x_colorings}});
        return ok ? 0 : 1;
    }
    if (auto* cmd = app.get_subcommand("fdp-bracket"); cmd->parsed()) {
        auto g = load_graph(c.graph);
        auto br = dpc::f_dp_bracket(g, c.k, enum_opts(c));
        std::cout << "lower " << br.lower.get_str() << ", upper " << br.upper.get_str();
        if (br.exact) std::cout << ", exact " << br.exact->get_str();
        std::cout << "\n";
        json j{{"graph6", dpc::to_graph6(g)},
               {"k", c.k},
               {"lower", br.lower.get_str()},
               {"upper", br.upper.get_str()}};
        if (br.exact) j["exact"] = br.exact->get_str();
        write_out(c, j);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("prob"); cmd->parsed()) {
        auto formula = dpc::volatility_probability_formula(c.k, c.l);
        std::cout << "formula " << formula.get_str() << " = " << formula.get_d() << "\n";
        json j{{"k", c.k}, {"l", c.l}, {"formula", formula.get_str()}};
        std::uint64_t exact_cap = 100'000'000;
        try {
            auto exact = dpc::volatility_probability_exact(c.k, c.l, exact_cap);
            std::cout << "exact   " << exact.get_str() << "\n";
            j["exact"] = exact.get_str();
        } catch (const dpc::CapExceeded&) {
            std::cout << "exact   (tuple space too large)\n";
        }
        double mc = dpc::volatility_probability_montecarlo(c.k, c.l, 100'000, c.seed);
        std::cout << "mc      " << mc << " (1e5 samples, seed " << c.seed << ")\n";
        j["montecarlo"] = mc;
        j["seed"] = c.seed;
        write_out(c, j);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("c-const"); cmd->parsed()) {
        int v = dpc::c_constant(c.k, c.l);
        bool bound = dpc::c_bound_check(c.k, c.l);
        std::cout << v << (bound ? " (within closed-form bound)" : " (EXCEEDS closed-form bound)")
                  << "\n";
        write_out(c, {{"k", c.k}, {"l", c.l}, {"c", v}, {"bound_holds", bound}});
        return 0;
    }
    if (auto* cmd = app.get_subcommand("explore-questions"); cmd->parsed()) {
        std::istringstream corpus(c.graph.empty() ? "" : slurp(c.graph));
        json rows = json::array();
        std::cout << "graph6\tcritical\trobust\tbad_covers_full\tP\tP_DP\n";
        std::string line;
        auto opts = enum_opts(c);
        while (std::getline(corpus, line)) {
            if (line.empty()) continue;
            SimpleGraph g = dpc::parse_graph6(line);
            json row{{"graph6", line}};
            try {
                bool crit = dpc::is_k_critical(g, c.k, c.cap_nodes);
                auto rr = dpc::is_robustly_critical(g, c.k, dpc::RobustMode::reduced, opts);
                bool full = dpc::every_bad_cover_full(g, c.k - 1, opts);
                mpz_class p = dpc::chromatic_polynomial_eval(g, c.k, c.cap_nodes);
                mpz_class pdp = dpc::p_dp(g, c.k, opts);
                std::cout << line << "\t" << crit << "\t" << rr.robust << "\t" << full << "\t"
                          << p.get_str() << "\t" << pdp.get_str() << "\n";
                row["critical"] = crit;
                row["robust"] = rr.robust;
                row["bad_covers_full"] = full;
                row["P"] = p.get_str();
                row["P_DP"] = pdp.get_str();
                row["P_equals_P_DP"] = (p == pdp);
            } catch (const dpc::CapExceeded& e) {
                std::cout << line << "\tskipped: " << e.what() << "\n";
                row["skipped"] = e.what();
            }
            rows.push_back(row);
        }
        write_out(c, {{"k", c.k}, {"rows", rows}});
        return 0;
    }
    std::cerr << app.help() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact DP-coloring toolkit"};
    app.require_subcommand(1);
    Common c;

    auto with_k = [&](CLI::App* cmd, bool graph = true) {
        add_common(cmd, c, graph);
        cmd->add_option("--k", c.k)->required();
        return cmd;
    };

    with_k(app.add_subcommand("chrompoly", "chromatic polynomial P(G,k)"));
    add_common(app.add_subcommand("chi", "chromatic number"), c);
    add_common(app.add_subcommand("col", "coloring number (degeneracy + 1)"), c);
    add_common(app.add_subcommand("chidp", "DP chromatic number"), c);
    with_k(app.add_subcommand("pdp", "DP color function P_DP(G,k)"));
    with_k(app.add_subcommand("critical", "k-criticality"));
    with_k(app.add_subcommand("robust", "robust k-criticality"))
        ->add_option("--mode", c.mode)
        ->check(CLI::IsMember({"reduced", "oracle"}));
    with_k(app.add_subcommand("classes", "shift classes of proper k-colorings"));
    {
        auto* cmd = with_k(app.add_subcommand("star-cover", "deterministic bad cover of G x K_{1,t}"));
        cmd->add_option("--t", c.t)->required();
    }
    {
        auto* cmd = with_k(app.add_subcommand("random-cover", "randomized bad cover of G x K_{l,t}"));
        cmd->add_option("--l", c.l)->required();
        cmd->add_option("--t", c.t)->required();
        cmd->add_option("--seed", c.seed);
    }
    {
        auto* cmd = app.add_subcommand("verify-cover", "re-verify a certificate file");
        cmd->add_option("certificate", c.graph, "certificate JSON path")->required();
        add_common(cmd, c, false);
    }
    with_k(app.add_subcommand("fdp-bracket", "bracket for f_DP(G, l=1) = P_DP/k vs P/k"));
    {
        auto* cmd = app.add_subcommand("prob", "volatility probability (formula/exact/Monte Carlo)");
        add_common(cmd, c, false);
        cmd->add_option("--k", c.k)->required();
        cmd->add_option("--l", c.l)->required();
        cmd->add_option("--seed", c.seed);
    }
    {
        auto* cmd = app.add_subcommand("c-const", "leaves-per-block constant c_{k,l}");
        add_common(cmd, c, false);
        cmd->add_option("--k", c.k)->required();
        cmd->add_option("--l", c.l)->required();
    }
    {
        auto* cmd = app.add_subcommand("explore-questions",
                                       "per-graph evidence table for the open questions");
        cmd->add_option("corpus", c.graph, "file with one graph6 per line")->required();
        add_common(cmd, c, false);
        cmd->add_option("--k", c.k)->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app, c);
    } catch (const dpc::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dpc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dpc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
