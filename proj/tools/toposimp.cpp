#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "topo/experiment.hpp"
#include "topo/oracle.hpp"
#include "topo/transpose.hpp"

namespace {

using namespace topo;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ComplexDocument load(const std::string& path, bool need_values) {
    ComplexDocument doc = parse_complex(slurp(path));
    if (need_values && !doc.values)
        throw std::runtime_error("document carries no filter values; use random-dmf first");
    return doc;
}

BirthDeathPair find_pair(const ReducedState& s, const std::string& birth_name) {
    for (const BirthDeathPair& p : s.pairs())
        if (s.complex().name(p.birth) == birth_name) return p;
    throw std::runtime_error("no pair with birth cell '" + birth_name + "'");
}

int run_verified(ReducedState& s) {
    oracle::BruteState b = oracle::brute_reduce(s.complex(), s.order());
    oracle::StateDiff diff = oracle::compare_states(s, b);
    if (!diff.empty()) {
        std::cerr << "oracle divergence:\n" << diff.to_string();
        return 2;
    }
    return 0;
}

DiagramFormat parse_format(const std::string& f) {
    if (f == "json") return DiagramFormat::json;
    if (f == "csv") return DiagramFormat::csv;
    if (f == "svg") return DiagramFormat::svg;
    throw std::runtime_error("unknown format '" + f + "' (expected json, csv or svg)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Morse function simplification via forbidden regions"};
    app.require_subcommand(1);

    std::string input, format = "json", pair_name, output;
    bool verify = false;
    std::uint64_t seed = 1;
    app.add_flag("--verify", verify, "cross-check every step against the brute-force oracle");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--format", format, "output format: json, csv or svg");

    auto* c_validate = app.add_subcommand("validate", "check complex and filter validity");
    c_validate->add_option("input", input)->required();

    auto* c_reduce = app.add_subcommand("reduce", "run the lazy reduction and report ranks");
    c_reduce->add_option("input", input)->required();

    auto* c_pairs = app.add_subcommand("pairs", "emit the persistence pairing");
    c_pairs->add_option("input", input)->required();

    auto* c_rel = app.add_subcommand("relations", "emit the relation graph");
    c_rel->add_option("input", input)->required();

    auto* c_regions = app.add_subcommand("regions", "forbidden regions of one pair");
    c_regions->add_option("input", input)->required();
    c_regions->add_option("pair", pair_name, "birth cell of the pair")->required();

    auto* c_elig = app.add_subcommand("eligible", "cancellability of one pair");
    c_elig->add_option("input", input)->required();
    c_elig->add_option("pair", pair_name)->required();

    auto* c_cancel = app.add_subcommand("cancel", "cancel one pair and emit the new filter");
    c_cancel->add_option("input", input)->required();
    c_cancel->add_option("pair", pair_name)->required();

    auto* c_simp = app.add_subcommand("simplify", "cancel everything cancellable");
    c_simp->add_option("input", input)->required();
    std::string policy = "two-phase";
    c_simp->add_option("--policy", policy, "two-phase or regions-only");

    auto* c_rand = app.add_subcommand("random-dmf", "attach a random injective filter");
    c_rand->add_option("input", input)->required();
    bool banded = false;
    c_rand->add_flag("--banded", banded, "sort value bands by dimension");

    auto* c_exp = app.add_subcommand("experiment", "full-simplex simplification run");
    int exp_dim = 10;
    c_exp->add_option("--d", exp_dim, "simplex dimension");
    bool scaling = false;
    c_exp->add_flag("--scaling", scaling, "also run the doubling-size probe");

    try {
        app.parse(argc, argv);

        if (c_validate->parsed()) {
            ComplexDocument doc = parse_complex(slurp(input));
            std::cout << "complex: " << doc.complex.size() << " cells, valid\n";
            if (doc.values) std::cout << "filter: valid discrete Morse function\n";
            return 0;
        }
        if (c_rand->parsed()) {
            ComplexDocument doc = parse_complex(slurp(input));
            DiscreteMorseFunction h = random_dmf(doc.complex, seed, banded);
            std::cout << emit_complex(doc.complex, &h) << "\n";
            return 0;
        }
        if (c_exp->parsed()) {
            ExperimentReport rep = run_experiment(exp_dim, seed, verify);
            LefschetzComplex X = simplex_skeleton(exp_dim);
            if (format == "json")
                std::cout << rep.to_json() << "\n";
            else
                std::cout << rep.to_string(X);
            if (scaling) {
                ScalingReport sc = scaling_probe();
                std::cout << sc.to_string();
            }
            if (verify && rep.oracle_diffs > 0) return 2;
            return 0;
        }

        ComplexDocument doc = load(input, true);
        ReducedState state(doc.complex, *doc.values);
        if (verify) {
            int rc = run_verified(state);
            if (rc) return rc;
        }

        if (c_reduce->parsed()) {
            for (int n = 0; n <= state.max_dim(); ++n) {
                int zero = 0;
                for (CellId c : state.bd(n).col_ids())
                    if (state.primal(n).R.col_zero(c)) ++zero;
                std::cout << "dim " << n << ": " << state.bd(n).col_ids().size() << " cells, "
                          << zero << " birth columns\n";
            }
            return 0;
        }
        if (c_pairs->parsed()) {
            std::cout << emit_diagram(state, parse_format(format));
            return 0;
        }
        if (c_rel->parsed()) {
            std::cout << emit_diagram(state, DiagramFormat::json);
            return 0;
        }
        if (c_regions->parsed()) {
            BirthDeathPair p = find_pair(state, pair_name);
            Staircase dr = death_region(state, p);
            Staircase br = birth_region(state, p);
            std::cout << "death region corners:";
            for (auto [x, y] : dr.corners) std::cout << " (" << x << "," << y << ")";
            std::cout << "\nbirth region corners:";
            for (auto [x, y] : br.corners) std::cout << " (" << x << "," << y << ")";
            std::cout << "\nintersect: " << (regions_intersect(dr, br) ? "yes" : "no") << "\n";
            return 0;
        }
        if (c_elig->parsed()) {
            BirthDeathPair p = find_pair(state, pair_name);
            Eligibility e = eligible(state, p);
            std::cout << (e.eligible ? "eligible" : "not eligible") << "\n";
            if (!e.diagnostic.empty()) std::cout << e.diagnostic << "\n";
            return e.eligible ? 0 : 1;
        }
        if (c_cancel->parsed()) {
            BirthDeathPair p = find_pair(state, pair_name);
            cancel_pair(state, p);
            if (verify) {
                int rc = run_verified(state);
                if (rc) return rc;
            }
            std::cout << emit_complex(state.complex(), &state.dmf()) << "\n";
            return 0;
        }
        if (c_simp->parsed()) {
            SimplifyPolicy pol = policy == "regions-only" ? SimplifyPolicy::regions_only
                                                          : SimplifyPolicy::shallow_first_then_regions;
            SimplifyOptions opts;
            if (verify) {
                opts.after_cancel = [&](ReducedState& s, const CancelRecord&) {
                    return run_verified(s) == 0;
                };
            }
            SimplifyReport rep = simplify_all(state, pol, opts);
            std::cerr << "cancelled " << rep.cancelled.size() << " of "
                      << rep.initial_off_diagonal << " off-diagonal pairs\n";
            std::cout << emit_complex(state.complex(), &state.dmf()) << "\n";
            if (verify) {
                int rc = run_verified(state);
                if (rc) return rc;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
