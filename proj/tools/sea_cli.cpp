// Copyright 2026 The SEA Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   sea entropy <problem.json> A [B [C]]
//   sea refine <problem.json> A B --out refined.json
//   sea check-theorem --instance quantum --dim 3 --sizes 2,3,2 --trials 1000
//   sea axioms --instance fuzzy --dim 4
//   sea logsum --trials 10000 --seed 1
//   sea example-2-3
//
// Exit codes: 0 ok, 1 a law or verdict failed, 2 bad input or flags,
// 3 numeric failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "sea/sea.hpp"

namespace {

using sea::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// Pads by code points so labels containing ∘ line up.
void row(const std::string &name, double value) {
    std::size_t width = 0;
    for (unsigned char c : name) {
        width += (c & 0xC0U) != 0x80U;
    }
    const std::string pad(width < 26 ? 26 - width : 0, ' ');
    std::printf("%s%s %.15g\n", name.c_str(), pad.c_str(), value);
}

void maybe_write(const std::string &path, const Json &report) {
    if (!path.empty()) {
        sea::io::write_json_file(path, report);
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("SEA_SEED"); env != nullptr && *env) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw sea::UsageError(std::string("SEA_SEED is not an unsigned "
                                          "integer: ") +
                              env);
    }
    return 1;
}

void print_campaign(const sea::verify::CampaignReport &r) {
    std::printf("%-24s %8s %8s %24s %8s\n", "law", "pass", "fail", "worst",
                "trial");
    for (const auto &t : r.laws) {
        const std::string trial =
            t.worst_trial ? std::to_string(*t.worst_trial) : "-";
        std::printf("%-24s %8zu %8zu %24.15g %8s\n", t.law.c_str(), t.pass,
                    t.fail, t.worst.value_or(0.0), trial.c_str());
    }
    if (r.generator_errors > 0) {
        std::printf("generator errors: %zu (first at trial %zu: %s)\n",
                    r.generator_errors, r.first_error_trial.value_or(0),
                    r.first_error.c_str());
    }
    if (r.generator_redraws > 0) {
        std::printf("generator redraws: %zu\n", r.generator_redraws);
    }
    std::printf("runtime: %.3f s\n", r.runtime_seconds);
    std::printf("%s\n", r.all_passed() ? "ALL PASS" : "VIOLATIONS FOUND");
}

void print_scenario(const sea::verify::ScenarioRecord &rec) {
    std::printf("scenario %s\n", rec.id.c_str());
    for (const auto &[name, ok] : rec.verdicts) {
        std::printf("  %-28s %s\n", name.c_str(), ok ? "true" : "FALSE");
    }
}

// entropy ----------------------------------------------------------------

struct EntropyArgs {
    std::string input;
    std::vector<std::string> names;
    std::optional<double> base;
    std::string json;
};

int cmd_entropy(const EntropyArgs &args) {
    const auto problem = sea::io::load_problem(args.input);
    if (args.names.empty() || args.names.size() > 3) {
        throw sea::UsageError("entropy takes one to three partition names");
    }
    Json results;
    Json verdicts = Json::object();
    std::visit(
        [&](const auto &p) {
            auto opts = p.options;
            if (args.base) {
                opts.log_base = *args.base;
                opts.validate();
            }
            const auto &alg = p.algebra;
            const auto &pa = p.partition(args.names[0]);
            std::printf("instance %s, size %zu, log base %g\n",
                        std::string(sea::to_string(alg.kind)).c_str(),
                        alg.size(), opts.log_base);
            const double h_a = sea::entropy(alg, p.state, pa, opts);
            results["H_A"] = h_a;
            row("H_s(A)", h_a);
            if (args.names.size() >= 2) {
                const auto &pb = p.partition(args.names[1]);
                const double h_ab =
                    sea::refinement_entropy(alg, p.state, pa, pb, opts);
                const double h_b_a =
                    sea::cond_entropy(alg, p.state, pb, pa, opts);
                const double r1 = h_ab - h_b_a - h_a;
                results["H_AB"] = h_ab;
                results["H_B_given_A"] = h_b_a;
                results["r1"] = r1;
                row("H_s(A∘B)", h_ab);
                row("H_s(B|A)", h_b_a);
                row("r1", r1);
                verdicts["chain_rule"] = std::abs(r1) <= p.tolerance;
            }
            if (args.names.size() == 3) {
                const auto &pb = p.partition(args.names[1]);
                const auto &pc = p.partition(args.names[2]);
                const auto r =
                    sea::theorem_residuals(alg, p.state, pa, pb, pc, opts);
                Json res;
                for (std::size_t k = 0; k < 6; ++k) {
                    const auto name = "r" + std::to_string(k + 1);
                    res[name] = r[k];
                    if (k > 0) {
                        row(name, r[k]);
                    }
                }
                results["residuals"] = res;
                verdicts["entropy_laws"] = r.holds(p.tolerance);
            }
            Json config;
            config["input"] = args.input;
            config["partitions"] = args.names;
            config["log_base"] = opts.log_base;
            config["tolerance"] = p.tolerance;
            maybe_write(args.json, sea::io::make_report("entropy", config,
                                                        results, verdicts));
        },
        problem);
    return kExitOk;
}

// refine -----------------------------------------------------------------

struct RefineArgs {
    std::string input;
    std::string left;
    std::string right;
    std::string out;
    std::string as;
    std::string json;
};

int cmd_refine(const RefineArgs &args) {
    auto problem = sea::io::load_problem(args.input);
    const std::string name =
        args.as.empty() ? args.left + "∘" + args.right : args.as;
    std::visit(
        [&](auto &p) {
            auto refined = sea::refine(p.algebra, p.partition(args.left),
                                       p.partition(args.right));
            const auto elements = sea::io::to_json(refined);
            std::printf("%s has %zu elements\n", name.c_str(), refined.size());
            for (std::size_t k = 0; k < refined.size(); ++k) {
                std::printf("  [%zu] %s\n", k, elements[k].dump().c_str());
            }
            p.set_partition(name, std::move(refined));
            if (!args.out.empty()) {
                sea::io::write_json_file(args.out, sea::io::to_json(p));
            }
            Json config;
            config["input"] = args.input;
            config["left"] = args.left;
            config["right"] = args.right;
            config["name"] = name;
            maybe_write(args.json,
                        sea::io::make_report(
                            "refine", config, Json{{"elements", elements}},
                            Json{{"is_partition", true}}));
        },
        problem);
    return kExitOk;
}

// campaigns --------------------------------------------------------------

struct TheoremArgs {
    std::string instance = "quantum";
    std::size_t dim = 2;
    std::vector<std::size_t> sizes{2, 2, 2};
    std::vector<std::size_t> size_pool;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    double tol = 1e-9;
    double base = 2.0;
    unsigned workers = 1;
    std::optional<std::size_t> trial;
    bool timing = false;
    std::string json;
};

int cmd_check_theorem(const TheoremArgs &args) {
    sea::verify::CampaignConfig config;
    config.kind = sea::parse_instance_kind(args.instance);
    config.dim = args.dim;
    config.sizes = args.sizes;
    config.size_pool = args.size_pool;
    config.trials = args.trials;
    config.seed = resolve_seed(args.seed);
    config.tolerance = args.tol;
    config.log_base = args.base;
    config.workers = args.workers;
    config.validate();

    if (args.trial) {
        const auto t = sea::verify::run_theorem_trial(config, *args.trial);
        std::printf("trial %zu (seed %llu), sizes %zu,%zu,%zu\n", *args.trial,
                    static_cast<unsigned long long>(
                        sea::verify::trial_seed(config.seed, *args.trial)),
                    t.sizes[0], t.sizes[1], t.sizes[2]);
        for (std::size_t k = 0; k < 6; ++k) {
            row(sea::verify::kTheoremLaws[k], t.residuals[k]);
        }
        const bool ok = t.residuals.holds(config.tolerance);
        std::printf("%s\n", ok ? "PASS" : "VIOLATION");
        return ok ? kExitOk : kExitViolation;
    }

    const auto report = sea::verify::run_theorem_campaign(config);
    print_campaign(report);
    maybe_write(args.json,
                sea::io::campaign_report("check-theorem", report, args.timing));
    if (!report.all_passed()) {
        for (const auto &law : report.laws) {
            if (law.fail > 0 && law.worst_trial) {
                std::printf("reproduce %s: sea check-theorem --instance %s "
                            "--dim %zu --seed %llu --trial %zu\n",
                            law.law.c_str(), args.instance.c_str(), config.dim,
                            static_cast<unsigned long long>(config.seed),
                            *law.worst_trial);
            }
        }
        return kExitViolation;
    }
    return kExitOk;
}

struct AxiomArgs {
    std::string instance = "quantum";
    std::size_t dim = 3;
    std::size_t trials = 500;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    bool timing = false;
    std::string json;
};

int cmd_axioms(const AxiomArgs &args) {
    sea::verify::AxiomConfig config;
    config.kind = sea::parse_instance_kind(args.instance);
    config.dim = args.dim;
    config.trials = args.trials;
    config.seed = resolve_seed(args.seed);
    config.workers = args.workers;
    const auto report = sea::verify::check_sea_axioms(config);
    print_campaign(report);
    bool ok = report.all_passed();
    auto out = sea::io::campaign_report("axioms", report, args.timing);
    if (config.kind == sea::InstanceKind::Quantum) {
        sea::verify::OrthomodularConfig om;
        om.seed = config.seed;
        const auto lattice = sea::verify::run_orthomodular_campaign(om);
        std::printf("\nprojection lattice (d <= %zu)\n", om.max_dim);
        print_campaign(lattice);
        out["results"]["orthomodular"] = sea::io::to_json(lattice);
        out["verdicts"]["orthomodular"] = lattice.all_passed();
        ok = ok && lattice.all_passed();
    }
    maybe_write(args.json, out);
    return ok ? kExitOk : kExitViolation;
}

struct LogSumArgs {
    std::size_t trials = 10000;
    std::optional<std::uint64_t> seed;
    double base = 2.0;
    unsigned workers = 1;
    bool timing = false;
    std::string json;
};

int cmd_logsum(const LogSumArgs &args) {
    sea::verify::LogSumConfig config;
    config.trials = args.trials;
    config.seed = resolve_seed(args.seed);
    config.log_base = args.base;
    config.workers = args.workers;
    const auto report = sea::verify::run_log_sum_campaign(config);
    print_campaign(report);
    maybe_write(args.json,
                sea::io::campaign_report("logsum", report, args.timing));
    return report.all_passed() ? kExitOk : kExitViolation;
}

int cmd_example_2_3(const std::string &json) {
    const auto example = sea::verify::scenario_example_2_3();
    const auto lattice = sea::verify::scenario_nondistributivity();
    print_scenario(example);
    const auto &v = example.values;
    row("  H(A)", v["H_A"].get<double>());
    row("  H(B|A)", v["H_B_given_A"].get<double>());
    row("  H(A∘B)", v["H_AB"].get<double>());
    print_scenario(lattice);
    row("  distributivity gap", lattice.values["gap"].get<double>());
    const bool ok = example.passed() && lattice.passed();
    maybe_write(json,
                sea::io::make_report(
                    "example-2-3", Json::object(),
                    Json{{"scenarios",
                          Json::array({example.to_json(), lattice.to_json()})}},
                    Json{{"example-2-3", example.passed()},
                         {"nondistributivity", lattice.passed()}}));
    return ok ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sequential effect algebras: partitions, refinements and "
                 "their entropies"};
    app.require_subcommand(1);

    EntropyArgs entropy_args;
    auto *entropy = app.add_subcommand(
        "entropy", "entropy, refinement entropy and conditional entropy of "
                   "named partitions");
    entropy->add_option("input", entropy_args.input, "problem file")
        ->required();
    entropy->add_option("names", entropy_args.names,
                        "partition names A [B [C]]")
        ->required()
        ->expected(1, 3);
    entropy->add_option("--base", entropy_args.base, "logarithm base");
    entropy->add_option("--json", entropy_args.json, "write a JSON report");

    RefineArgs refine_args;
    auto *refine =
        app.add_subcommand("refine", "sequential refinement of two partitions");
    refine->add_option("input", refine_args.input, "problem file")->required();
    refine->add_option("left", refine_args.left, "outer partition")
        ->required();
    refine->add_option("right", refine_args.right, "inner partition")
        ->required();
    refine->add_option("--out", refine_args.out,
                       "write the problem with the refinement added");
    refine->add_option("--as", refine_args.as, "name of the new partition");
    refine->add_option("--json", refine_args.json, "write a JSON report");

    TheoremArgs theorem_args;
    auto *theorem = app.add_subcommand(
        "check-theorem", "randomized verification of the entropy laws");
    theorem->add_option("--instance", theorem_args.instance)
        ->check(CLI::IsMember({"boolean", "fuzzy", "quantum"}));
    theorem->add_option("--dim", theorem_args.dim,
                        "Hilbert space dimension or ground set size");
    theorem->add_option("--sizes", theorem_args.sizes,
                        "sizes of A, B and C")
        ->delimiter(',')
        ->expected(3);
    theorem->add_option("--size-pool", theorem_args.size_pool,
                        "draw each partition size from this list per trial")
        ->delimiter(',');
    theorem->add_option("--trials", theorem_args.trials);
    theorem->add_option("--seed", theorem_args.seed,
                        "master seed (falls back to SEA_SEED)");
    theorem->add_option("--tol", theorem_args.tol);
    theorem->add_option("--base", theorem_args.base);
    theorem->add_option("--workers", theorem_args.workers,
                        "threads; never changes results");
    theorem->add_option("--trial", theorem_args.trial,
                        "rerun a single trial index");
    theorem->add_flag("--timing", theorem_args.timing,
                      "include wall time in the JSON report");
    theorem->add_option("--json", theorem_args.json, "write a JSON report");

    AxiomArgs axiom_args;
    auto *axioms = app.add_subcommand(
        "axioms", "randomized checks of the effect algebra and sequential "
                  "product axioms");
    axioms->add_option("--instance", axiom_args.instance)
        ->check(CLI::IsMember({"boolean", "fuzzy", "quantum"}));
    axioms->add_option("--dim", axiom_args.dim);
    axioms->add_option("--trials", axiom_args.trials);
    axioms->add_option("--seed", axiom_args.seed);
    axioms->add_option("--workers", axiom_args.workers);
    axioms->add_flag("--timing", axiom_args.timing);
    axioms->add_option("--json", axiom_args.json, "write a JSON report");

    LogSumArgs logsum_args;
    auto *logsum =
        app.add_subcommand("logsum", "fuzz the log sum inequality");
    logsum->add_option("--trials", logsum_args.trials);
    logsum->add_option("--seed", logsum_args.seed);
    logsum->add_option("--base", logsum_args.base);
    logsum->add_option("--workers", logsum_args.workers);
    logsum->add_flag("--timing", logsum_args.timing);
    logsum->add_option("--json", logsum_args.json, "write a JSON report");

    std::string example_json;
    auto *example = app.add_subcommand(
        "example-2-3", "meet-based refinement failure in the projection "
                       "lattice of C^2, and its sequential repair");
    example->add_option("--json", example_json, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*entropy) {
            return cmd_entropy(entropy_args);
        }
        if (*refine) {
            return cmd_refine(refine_args);
        }
        if (*theorem) {
            return cmd_check_theorem(theorem_args);
        }
        if (*axioms) {
            return cmd_axioms(axiom_args);
        }
        if (*logsum) {
            return cmd_logsum(logsum_args);
        }
        return cmd_example_2_3(example_json);
    } catch (const sea::NumericError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const sea::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
