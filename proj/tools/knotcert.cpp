// Command-line front end: parse diagrams, compute invariants, apply moves,
// and run the non-equivalence certifications.
//
// Exit codes: 0 success (including Distinguished verdicts), 2 input or
// validation error, 3 certification returned Inconclusive, 4 crossing cap
// exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "knotcert/json_io.hpp"
#include "knotcert/knotcert.hpp"

namespace {

using namespace knotcert;

struct GlobalOpts {
    bool json = false;
    int cap = 24;
    int threads = 1;
    BracketOptions bracket() const { return BracketOptions{cap, threads}; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DiagramError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Diagram files hold either PD text or the JSON schema; JSON starts with '{'.
Diagram load_diagram(const std::string& path) {
    std::string text = slurp(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{')
        return diagram_from_json(nlohmann::json::parse(text));
    return Diagram::parse_pd(text);
}

MarkedDiagram load_marked(const std::string& path) {
    return marked_from_json(nlohmann::json::parse(slurp(path)));
}

void print_poly(const Laurent& p, const GlobalOpts& g) {
    if (g.json)
        std::cout << to_json(p).dump() << "\n";
    else
        std::cout << p.to_string() << "\n";
}

void print_diagram(const Diagram& d, const GlobalOpts& g) {
    if (g.json)
        std::cout << to_json(d).dump() << "\n";
    else
        std::cout << d.to_pd_string() << "\n";
}

int print_verdict(const Verdict& v, const GlobalOpts& g) {
    if (g.json) {
        std::cout << to_json(v).dump() << "\n";
    } else {
        bool dist = v.outcome == Verdict::Outcome::Distinguished;
        std::cout << (dist ? "Distinguished" : "Inconclusive") << "\n"
                  << "lhs = " << v.lhs.to_string() << "\n"
                  << "rhs = " << v.rhs.to_string() << "\n"
                  << "delta_w = " << v.delta_w << "\n";
        if (v.triviality_check != "not_applicable")
            std::cout << "triviality_check = " << v.triviality_check << "\n";
    }
    return v.outcome == Verdict::Outcome::Distinguished ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link-diagram invariants and Jones-polynomial non-equivalence "
                 "certificates"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of plain text");
    app.add_option("--cap", g.cap, "crossing cap for bracket computations")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for the state sum")
        ->capture_default_str();

    std::string file1, file2;
    int c1 = 1, c2 = 2, torus_n = 1, torus_m = 1;
    bool emit_pd = false, emit_jones = false;
    std::vector<int> consum_arcs;

    auto* validate = app.add_subcommand("validate", "parse and validate a diagram file");
    validate->add_option("file", file1)->required();

    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a diagram");
    jones_cmd->add_option("file", file1)->required();

    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
    bracket_cmd->add_option("file", file1)->required();

    auto* writhe_cmd = app.add_subcommand("writhe", "writhe of a diagram");
    writhe_cmd->add_option("file", file1)->required();

    auto* lk = app.add_subcommand("lk", "linking number of two components (1-based)");
    lk->add_option("file", file1)->required();
    lk->add_option("--c1", c1, "first component, 1-based")->required();
    lk->add_option("--c2", c2, "second component, 1-based")->required();

    auto* saddle = app.add_subcommand("saddle", "apply the saddle move to a marked diagram");
    saddle->add_option("file", file1)->required();

    auto* crossing =
        app.add_subcommand("crossing", "apply the crossing move to a marked diagram");
    crossing->add_option("file", file1)->required();

    auto* identity = app.add_subcommand(
        "identity", "check the Jones identity relating a marked diagram's moves");
    identity->add_option("file", file1)->required();

    auto* certify = app.add_subcommand("certify", "certify two marked diagrams distinct");
    certify->add_option("x", file1)->required();
    certify->add_option("y", file2)->required();

    auto* certify_torus = app.add_subcommand(
        "certify-torus", "certify a marked diagram distinct from the (2,2m) torus family");
    certify_torus->add_option("x", file1)->required();
    certify_torus->add_option("--m", torus_m, "torus-link parameter")->required();

    auto* torus = app.add_subcommand("torus", "(2,n) torus knot/link diagram");
    torus->add_option("--n", torus_n, "crossing count of the 2-strand braid")->required();
    torus->add_flag("--emit-pd", emit_pd, "print the PD code (default)");
    torus->add_flag("--jones", emit_jones, "print the closed-form Jones polynomial");

    auto* consum = app.add_subcommand("consum", "connected sum of two diagrams");
    consum->add_option("f1", file1)->required();
    consum->add_option("f2", file2)->required();
    consum->add_option("--arc", consum_arcs, "cut arc in each summand, in order")
        ->expected(2)
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            Diagram d = load_diagram(file1);
            if (g.json)
                std::cout << to_json(d).dump() << "\n";
            else
                std::cout << "valid: " << d.crossing_count() << " crossings, "
                          << d.component_count() << " components" << "\n";
        } else if (*jones_cmd) {
            print_poly(jones(load_diagram(file1), g.bracket()), g);
        } else if (*bracket_cmd) {
            print_poly(kauffman_bracket(load_diagram(file1), g.bracket()), g);
        } else if (*writhe_cmd) {
            std::cout << load_diagram(file1).writhe() << "\n";
        } else if (*lk) {
            std::cout << load_diagram(file1).linking_number(c1 - 1, c2 - 1) << "\n";
        } else if (*saddle) {
            print_diagram(saddle_move(load_marked(file1)), g);
        } else if (*crossing) {
            print_diagram(crossing_move(load_marked(file1)), g);
        } else if (*identity) {
            IdentityReport r = check_jones1_identity(load_marked(file1), g.bracket());
            if (g.json) {
                nlohmann::json out{{"holds", r.holds},
                                   {"lhs", to_json(r.lhs)},
                                   {"rhs", to_json(r.rhs)},
                                   {"delta_w", r.delta_w}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << (r.holds ? "holds" : "VIOLATED") << "\n"
                          << "lhs = " << r.lhs.to_string() << "\n"
                          << "rhs = " << r.rhs.to_string() << "\n";
            }
            return r.holds ? 0 : 1;
        } else if (*certify) {
            return print_verdict(
                certify_distinct(load_marked(file1), load_marked(file2), g.bracket()), g);
        } else if (*certify_torus) {
            return print_verdict(
                certify_distinct_torus(load_marked(file1), torus_m, g.bracket()), g);
        } else if (*torus) {
            if (emit_jones) {
                Laurent j = (torus_n % 2 == 1) ? jones_torus_knot_closed(torus_n / 2)
                                               : jones_torus_link_closed(torus_n / 2);
                print_poly(j, g);
            } else {
                print_diagram(torus_diagram(torus_n), g);
            }
        } else if (*consum) {
            if (consum_arcs.size() != 2)
                throw DiagramError("consum: exactly two --arc values required");
            print_diagram(connected_sum(load_diagram(file1), consum_arcs[0],
                                        load_diagram(file2), consum_arcs[1]),
                          g);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
