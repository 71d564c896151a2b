#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubkit/bounds.hpp"
#include "schubkit/diagram.hpp"
#include "schubkit/errors.hpp"
#include "schubkit/io.hpp"
#include "schubkit/perm.hpp"
#include "schubkit/poly.hpp"
#include "schubkit/support.hpp"

namespace schubkit::cli {

namespace {

// Default worker count; --jobs overrides.
int jobs_from_env() {
    const char* s = std::getenv("SCHUBKIT_JOBS");
    if (!s) return 1;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<int>(v);
}

std::vector<int> parse_blocks(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw std::invalid_argument("blocks: expected comma-separated integers, got '" + text +
                                        "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("blocks: empty list");
    return out;
}

int report_exit(const BoundReport& r) { return r.holds ? 0 : 2; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact supports of Schubert and Grothendieck polynomials"};
    app.require_subcommand(1);
    int code = 0;

    // rothe <w> [--ascii | --format {json,ascii}]
    std::string rothe_w;
    std::string rothe_format = "json";
    bool rothe_ascii = false;
    auto* rothe_cmd = app.add_subcommand("rothe", "Rothe diagram of a permutation");
    rothe_cmd->add_option("w", rothe_w, "one-line form, e.g. 31542 or 3,1,5,4,2")->required();
    rothe_cmd->add_option("--format", rothe_format, "output format")
        ->check(CLI::IsMember({"json", "ascii"}));
    rothe_cmd->add_flag("--ascii", rothe_ascii, "shorthand for --format ascii");
    rothe_cmd->callback([&] {
        const Diagram d = rothe(parse_permutation(rothe_w));
        if (rothe_ascii || rothe_format == "ascii")
            out << ascii_grid(d);
        else
            out << to_json(d) << "\n";
    });

    // schubert <w> / grothendieck <w>
    std::string sch_w;
    auto* sch_cmd = app.add_subcommand("schubert", "Schubert polynomial as JSON");
    sch_cmd->add_option("w", sch_w, "one-line form")->required();
    sch_cmd->callback([&] { out << to_json(schubert(parse_permutation(sch_w))) << "\n"; });

    std::string gro_w;
    auto* gro_cmd = app.add_subcommand("grothendieck", "Grothendieck polynomial as JSON");
    gro_cmd->add_option("w", gro_w, "one-line form")->required();
    gro_cmd->callback([&] { out << to_json(grothendieck(parse_permutation(gro_w))) << "\n"; });

    // support <w> [--groth] [--via {auto,diagram,poly,both}]
    std::string sup_w;
    std::string sup_via = "auto";
    bool sup_groth = false;
    auto* sup_cmd = app.add_subcommand("support", "Exact monomial support and its size");
    sup_cmd->add_option("w", sup_w, "one-line form")->required();
    sup_cmd->add_flag("--groth", sup_groth, "Grothendieck instead of Schubert");
    sup_cmd->add_option("--via", sup_via, "route: combinatorial, polynomial, or both compared")
        ->check(CLI::IsMember({"auto", "diagram", "poly", "both"}));
    sup_cmd->callback([&] {
        const Permutation w = parse_permutation(sup_w);
        auto diagram_route = [&] {
            return sup_groth ? grothendieck_support_fireworks(w) : schubert_support_via_diagrams(w);
        };
        auto poly_route = [&] { return support(sup_groth ? grothendieck(w) : schubert(w)); };
        std::string via = sup_via;
        if (via == "auto") via = (sup_groth && !is_fireworks(w)) ? "poly" : "diagram";
        const SupportSet s = [&] {
            if (via == "diagram") return diagram_route();
            if (via == "poly") return poly_route();
            SupportSet a = diagram_route();
            if (!(poly_route() == a))
                throw std::runtime_error("support routes disagree for w = " + to_string(w));
            return a;
        }();
        out << to_json(s) << "\n";
        out << "size " << support_size(s).get_str() << "\n";
        if (via == "both") out << "paths agree\n";
    });

    // schubitope <w> [--saturation] [--max-points N]
    std::string sb_w;
    bool sb_sat = false;
    long sb_max_points = kDefaultSchubitopeBudget;
    auto* sb_cmd =
        app.add_subcommand("schubitope", "Lattice points of the Rothe diagram's Schubitope");
    sb_cmd->add_option("w", sb_w, "one-line form")->required();
    sb_cmd->add_flag("--saturation", sb_sat,
                     "also check every lattice point is a realized weight vector");
    sb_cmd->add_option("--max-points", sb_max_points, "bounding-box enumeration budget");
    sb_cmd->callback([&] {
        const Diagram d = rothe(parse_permutation(sb_w));
        const SupportSet pts = schubitope_lattice_points(d, sb_max_points);
        out << to_json(pts) << "\n";
        out << "size " << support_size(pts).get_str() << "\n";
        if (sb_sat) out << "saturated " << (pts == weights_dominated_by(d) ? "true" : "false")
                        << "\n";
    });

    // construct --corollary <n> | --groth <n> [--no-verify]
    int con_cor = 0;
    int con_gro = 0;
    bool con_no_verify = false;
    auto* con_cmd =
        app.add_subcommand("construct", "Layered families with large guaranteed support");
    auto* cor_opt =
        con_cmd->add_option("--corollary", con_cor, "near-maximal Schubert family at n");
    auto* gro_opt = con_cmd->add_option("--groth", con_gro, "large Grothendieck family at n");
    cor_opt->excludes(gro_opt);
    con_cmd->add_flag("--no-verify", con_no_verify,
                      "emit the construction and bound without computing the support");
    con_cmd->callback([&] {
        if (!*cor_opt && !*gro_opt)
            throw std::invalid_argument("construct requires exactly one of --corollary, --groth");
        if (*cor_opt) {
            const auto [spec, bound] = corollary_construction(con_cor);
            out << "blocks " << to_string(spec) << "\n";
            out << "w " << to_string(layered(spec)) << "\n";
            if (con_no_verify) {
                out << "bound " << bound.get_str() << "\n";
            } else {
                const BoundReport r = corollary_report(con_cor);
                out << to_json(r) << "\n";
                code = report_exit(r);
            }
        } else {
            const LayeredSpec spec = groth_construction(con_gro);
            const Permutation w = layered(spec);
            out << "blocks " << to_string(spec) << "\n";
            out << "w " << to_string(w) << "\n";
            if (con_no_verify) {
                out << "bound " << crude_groth_rhs(w).get_str() << "\n";
            } else {
                const BoundReport r = groth_report(con_gro);
                out << to_json(r) << "\n";
                code = report_exit(r);
            }
        }
    });

    // verify --thm31 <blocks> | --eqstar <w> | --lemmas <n_max>
    std::string ver_blocks;
    std::string ver_w;
    int ver_lemmas = 0;
    auto* ver_cmd =
        app.add_subcommand("verify", "Check the support inequalities and analytic estimates");
    auto* thm_opt = ver_cmd->add_option("--thm31", ver_blocks,
                                        "block-factorial support inequality for a layered spec, "
                                        "e.g. 2,2");
    auto* eqs_opt = ver_cmd->add_option("--eqstar", ver_w,
                                        "box-product lower bound for a fireworks permutation");
    auto* lem_opt =
        ver_cmd->add_option("--lemmas", ver_lemmas, "certified factorial estimates up to n");
    ver_cmd->callback([&] {
        const int given = (thm_opt->count() > 0) + (eqs_opt->count() > 0) + (lem_opt->count() > 0);
        if (given != 1)
            throw std::invalid_argument(
                "verify requires exactly one of --thm31, --eqstar, --lemmas");
        if (thm_opt->count() > 0) {
            const BoundReport r = verify_block_inequality(LayeredSpec{parse_blocks(ver_blocks)});
            out << to_json(r) << "\n";
            code = report_exit(r);
        } else if (eqs_opt->count() > 0) {
            const BoundReport r = crude_groth_lower(parse_permutation(ver_w));
            out << to_json(r) << "\n";
            code = report_exit(r);
        } else {
            if (ver_lemmas < 1) throw std::invalid_argument("--lemmas requires n >= 1");
            long pass = 0;
            for (long n = 1; n <= ver_lemmas; ++n)
                if (factorial_bounds_check(n)) ++pass;
            const BoundReport fact{"factorial-bounds n=1.." + std::to_string(ver_lemmas), pass,
                                   ver_lemmas, pass >= ver_lemmas,
                                   "e(n/e)^n <= n! <= e((n+1)/e)^(n+1), certified; passed/total"};
            long fpass = 0, ftotal = 0;
            for (long j = 1; 4 + j <= 4L * ver_lemmas; ++j) {
                mpq_class k(4 + j, 4);
                k.canonicalize();
                ++ftotal;
                if (floor_fact_bound_check(k)) ++fpass;
            }
            const BoundReport floor{"floor-factorial-bound quarter-grid (1," +
                                        std::to_string(ver_lemmas) + "]",
                                    fpass, ftotal, fpass >= ftotal,
                                    "floor(k)! >= (1/2k)(k/e)^k, certified; passed/total"};
            out << to_json(fact) << "\n" << to_json(floor) << "\n";
            code = (fact.holds && floor.holds) ? 0 : 2;
        }
    });

    // beta --max <n> [--groth] [--jobs k] [--cross-check] [--max-n B]
    int beta_max = 0;
    bool beta_groth = false;
    bool beta_cross = false;
    int beta_jobs = jobs_from_env();
    int beta_budget = 0;
    auto* beta_cmd =
        app.add_subcommand("beta", "Exhaustive maximum support size over S_n, as CSV");
    beta_cmd->add_option("--max", beta_max, "largest n to sweep")->required();
    beta_cmd->add_flag("--groth", beta_groth, "Grothendieck supports instead of Schubert");
    beta_cmd->add_flag("--cross-check", beta_cross,
                       "recompute every size from the polynomial and compare");
    beta_cmd->add_option("--jobs", beta_jobs, "worker threads (default $SCHUBKIT_JOBS or 1)");
    beta_cmd->add_option("--max-n", beta_budget, "raise the sweep budget");
    beta_cmd->callback([&] {
        SweepOptions o;
        o.jobs = beta_jobs;
        o.cross_check = beta_cross;
        o.budget = beta_budget;
        out << beta_sweep_csv(beta_max, beta_groth ? PolyKind::Grothendieck : PolyKind::Schubert,
                              o);
    });

    // asymptotics --max <n> [--jobs k] [--max-n B]
    int asy_max = 0;
    int asy_jobs = jobs_from_env();
    int asy_budget = 0;
    auto* asy_cmd = app.add_subcommand("asymptotics", "Support-growth trend table, as CSV");
    asy_cmd->add_option("--max", asy_max, "largest n to tabulate")->required();
    asy_cmd->add_option("--jobs", asy_jobs, "worker threads (default $SCHUBKIT_JOBS or 1)");
    asy_cmd->add_option("--max-n", asy_budget, "raise the sweep budget");
    asy_cmd->callback([&] {
        SweepOptions o;
        o.jobs = asy_jobs;
        o.budget = asy_budget;
        out << asymptotic_table_csv(asy_max, o);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("schubkit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace schubkit::cli
