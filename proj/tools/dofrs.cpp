// dofrs: exact-rational construction, projection and verification of the
// rate-splitting DoF region of the K-user MISO BC with partial CSIT.
//
// Subcommands: verify, region, project, synthesize, vertices, sumdof.
// Exit codes: 0 success, 1 verification/achievability failure, 2 usage or
// malformed input, 3 degenerate geometry (infeasible constant / unbounded).

#include "dofrs/errors.hpp"
#include "dofrs/json_io.hpp"
#include "dofrs/lp.hpp"
#include "dofrs/profile.hpp"
#include "dofrs/regions.hpp"
#include "dofrs/strategy.hpp"
#include "dofrs/system.hpp"
#include "dofrs/verification.hpp"
#include "dofrs/vertices.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

using namespace dofrs;

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Builds the requested region in sorted space and reports it in the
// caller's original user indexing.
InequalitySystem build_region(const std::string& kind, const model::CsitProfile& profile,
                              int k, bool k_given) {
    InequalitySystem sys;
    if (kind == "outer") {
        sys = model::outer_bound(profile);
    } else if (kind == "rs") {
        sys = model::rs_region_single_power(profile);
    } else if (kind == "rs9") {
        sys = model::rs_after_power_elim(profile);
    } else if (kind == "intermediate") {
        if (!k_given) throw ParseError("region 'intermediate' requires --k");
        sys = model::expected_intermediate(profile, k);
    } else {
        throw ParseError("unknown region '" + kind + "'");
    }
    if (!profile.was_sorted()) {
        sys = canonicalize(rename_indices(sys, profile.permutation));
    }
    return sys;
}

struct VerifyArgs {
    std::string alpha;
    std::string json_path;
    std::string prune = "pairwise";
    bool trace = false;
    int batch = 0;
    int k = 0;
    unsigned long long seed = 12345;
};

int run_verify_single(const VerifyArgs& args) {
    verification::VerifyOptions options;
    options.prune = fme::parse_prune_mode(args.prune);
    options.record_trace = args.trace;

    verification::VerificationReport report =
        verification::run_verification(parse_rational_list(args.alpha), options);

    bool induction_ok = true;
    for (const auto& s : report.induction_steps) induction_ok &= s.match;
    std::cout << "theorem2: " << (report.theorem2.equivalent ? "PASS" : "FAIL") << "\n"
              << "induction: " << (induction_ok ? "PASS" : "FAIL") << " ("
              << report.induction_steps.size() << " steps)\n"
              << "final-step redundancy: " << (report.final_step.all_certified ? "PASS" : "FAIL")
              << " (" << report.final_step.certified.size() << " rows)\n"
              << "alpha-lemma: " << (report.alpha_lemma.all_hold ? "PASS" : "FAIL") << " ("
              << report.alpha_lemma.checks << " checks)\n"
              << "sum-dof: " << (report.sum_dof.agree ? "PASS" : "FAIL") << " ("
              << to_string(report.sum_dof.formula) << ")\n"
              << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";

    if (!args.json_path.empty()) write_json_file(args.json_path, to_json(report));
    return report.pass ? kExitOk : kExitVerificationFailed;
}

int run_verify_batch(const VerifyArgs& args) {
    if (args.k < 1) throw ParseError("--batch requires --k K with K >= 1");
    verification::VerifyOptions options;
    options.prune = fme::parse_prune_mode(args.prune);
    options.record_trace = false;  // traces across a batch would dwarf the report

    const int n = args.batch;
    std::vector<verification::VerificationReport> reports(n);
    std::vector<std::string> errors(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= n) return;
            // Per-case seeding keeps results independent of thread timing.
            std::mt19937_64 rng(args.seed + static_cast<unsigned long long>(idx));
            model::CsitProfile profile = model::random_profile(args.k, rng);
            std::vector<Rational> raw = profile.alphas;
            try {
                reports[idx] = verification::run_verification(raw, options);
            } catch (const std::exception& e) {
                errors[idx] = e.what();
            }
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<unsigned>(hw, n); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    int passed = 0;
    Json cases = Json::array();
    for (int i = 0; i < n; ++i) {
        bool ok = errors[i].empty() && reports[i].pass;
        passed += ok;
        std::cout << "case " << i << ": " << (ok ? "PASS" : "FAIL");
        if (!errors[i].empty()) std::cout << " (" << errors[i] << ")";
        std::cout << "\n";
        if (errors[i].empty()) {
            cases.push_back(to_json(reports[i]));
        } else {
            cases.push_back(Json{{"error", errors[i]}});
        }
    }
    std::cout << "batch verdict: " << (passed == n ? "PASS" : "FAIL") << " (" << passed << "/"
              << n << ")\n";
    if (!args.json_path.empty()) {
        write_json_file(args.json_path,
                        Json{{"seed", args.seed},
                             {"k", args.k},
                             {"batch", n},
                             {"passed", passed},
                             {"pass", passed == n},
                             {"cases", std::move(cases)}});
    }
    return passed == n ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact DoF-region computation for the MISO BC with partial CSIT"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Project the rate-splitting region and certify it against the outer bound");
    cmd_verify->add_option("--alpha", verify_args.alpha, "CSIT levels, e.g. 9/10,3/10");
    cmd_verify->add_option("--json", verify_args.json_path, "write the report to this path");
    cmd_verify->add_option("--prune", verify_args.prune, "per-step prune mode")
        ->check(CLI::IsMember({"syntactic", "pairwise", "full"}));
    cmd_verify->add_flag("--trace", verify_args.trace, "embed the elimination trace");
    cmd_verify->add_option("--batch", verify_args.batch, "verify N random profiles");
    cmd_verify->add_option("--k", verify_args.k, "users per random profile (batch mode)");
    cmd_verify->add_option("--seed", verify_args.seed, "seed for random profiles");

    std::string region_kind, region_alpha, region_json;
    int region_k = 0;
    auto* cmd_region = app.add_subcommand("region", "Emit a region as a JSON system");
    cmd_region->add_option("kind", region_kind, "outer | rs | rs9 | intermediate")->required();
    cmd_region->add_option("--alpha", region_alpha, "CSIT levels")->required();
    auto* region_k_opt = cmd_region->add_option("--k", region_k, "elimination depth");
    cmd_region->add_option("--json", region_json, "also write the system to this path");

    std::string project_input, project_eliminate, project_prune = "pairwise";
    bool project_trace = false;
    auto* cmd_project = app.add_subcommand("project", "Fourier-Motzkin projection of a system");
    cmd_project->add_option("--input", project_input, "system JSON path ('-' for stdin)")
        ->required();
    cmd_project->add_option("--eliminate", project_eliminate, "variables, e.g. dc1,dc2");
    cmd_project->add_option("--prune", project_prune, "prune mode")
        ->check(CLI::IsMember({"syntactic", "pairwise", "full"}));
    cmd_project->add_flag("--trace", project_trace, "emit {system, trace}");

    std::string synth_alpha, synth_dof;
    auto* cmd_synth = app.add_subcommand("synthesize", "Find a strategy for a DoF tuple");
    cmd_synth->add_option("--alpha", synth_alpha, "CSIT levels")->required();
    cmd_synth->add_option("--dof", synth_dof, "target DoF tuple, e.g. 1,3/10")->required();

    std::string vert_input, vert_alpha, vert_region = "outer";
    int vert_k = 0;
    auto* cmd_vertices = app.add_subcommand("vertices", "Enumerate the vertices of a polytope");
    cmd_vertices->add_option("--input", vert_input, "system JSON path ('-' for stdin)");
    cmd_vertices->add_option("--alpha", vert_alpha, "CSIT levels (build a region instead)");
    cmd_vertices->add_option("--region", vert_region, "outer | rs | rs9 | intermediate");
    auto* vert_k_opt = cmd_vertices->add_option("--k", vert_k, "elimination depth");

    std::string sumdof_alpha, sumdof_json;
    auto* cmd_sumdof = app.add_subcommand("sumdof", "Closed-form sum-DoF with LP cross-check");
    cmd_sumdof->add_option("--alpha", sumdof_alpha, "CSIT levels")->required();
    cmd_sumdof->add_option("--json", sumdof_json, "write {formula, lp, agree} to this path");

    try {
        app.parse(argc, argv);

        if (cmd_verify->parsed()) {
            if (verify_args.batch > 0) return run_verify_batch(verify_args);
            if (verify_args.alpha.empty()) {
                throw ParseError("verify needs --alpha or --batch N --k K");
            }
            return run_verify_single(verify_args);
        }

        if (cmd_region->parsed()) {
            model::CsitProfile profile = model::parse_profile(region_alpha);
            InequalitySystem sys =
                build_region(region_kind, profile, region_k, !region_k_opt->empty());
            std::cout << dump_system(sys);
            if (!region_json.empty()) write_json_file(region_json, to_json(sys));
            return kExitOk;
        }

        if (cmd_project->parsed()) {
            InequalitySystem sys = parse_system_text(read_input(project_input));
            std::vector<VarId> eliminate;
            if (!project_eliminate.empty()) {
                size_t pos = 0;
                while (pos <= project_eliminate.size()) {
                    size_t comma = project_eliminate.find(',', pos);
                    if (comma == std::string::npos) comma = project_eliminate.size();
                    eliminate.push_back(
                        parse_var(project_eliminate.substr(pos, comma - pos)));
                    pos = comma + 1;
                    if (comma == project_eliminate.size()) break;
                }
            }
            fme::EliminationTrace trace;
            InequalitySystem projected =
                fme::project(sys, eliminate, fme::parse_prune_mode(project_prune),
                             project_trace ? &trace : nullptr);
            if (project_trace) {
                Json out{{"system", to_json(projected)}, {"trace", to_json(trace)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << dump_system(projected);
            }
            return kExitOk;
        }

        if (cmd_synth->parsed()) {
            model::CsitProfile profile = model::parse_profile(synth_alpha);
            std::vector<Rational> dof = parse_rational_list(synth_dof);
            model::SynthesisResult result = model::synthesize_strategy(profile, dof);
            std::cout << to_json(result).dump(2) << "\n";
            return std::holds_alternative<model::Strategy>(result) ? kExitOk
                                                                   : kExitVerificationFailed;
        }

        if (cmd_vertices->parsed()) {
            InequalitySystem sys;
            if (!vert_input.empty()) {
                sys = parse_system_text(read_input(vert_input));
            } else if (!vert_alpha.empty()) {
                model::CsitProfile profile = model::parse_profile(vert_alpha);
                sys = build_region(vert_region, profile, vert_k, !vert_k_opt->empty());
            } else {
                throw ParseError("vertices needs --input or --alpha");
            }
            geometry::VertexSet vs = geometry::enumerate_vertices(sys);
            std::cout << to_json(vs).dump(2) << "\n";
            return kExitOk;
        }

        if (cmd_sumdof->parsed()) {
            model::CsitProfile profile = model::parse_profile(sumdof_alpha);
            Rational formula = model::sum_dof(profile);
            std::map<VarId, Rational> objective;
            for (int i = 1; i <= profile.users(); ++i) objective[dof_var(i)] = 1;
            Rational lp = geometry::maximize(model::outer_bound(profile), objective).value;
            std::cout << to_string(formula) << "\n";
            if (!sumdof_json.empty()) {
                write_json_file(sumdof_json, Json{{"formula", to_string(formula)},
                                                  {"lp", to_string(lp)},
                                                  {"agree", formula == lp}});
            }
            return formula == lp ? kExitOk : kExitVerificationFailed;
        }

        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const InfeasibleConstantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const UnboundedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
