#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mis/bench.hpp"
#include "mis/cmsa.hpp"
#include "mis/convergence.hpp"
#include "mis/dimacs.hpp"
#include "mis/stats.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Flat key-value parameter file: `key = value` lines, `#` comments.
// Command-line flags override anything set here.
mis::CmsaParams params_from_file(const std::string& path,
                                 mis::CmsaParams base) {
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n_a") base.n_a = std::stoi(value);
            else if (key == "age_max") base.age_max = std::stoi(value);
            else if (key == "t_max") base.t_max_s = std::stod(value);
            else if (key == "t_limit") base.t_limit_s = std::stod(value);
            else if (key == "d_rate") base.d_rate = std::stod(value);
            else if (key == "candidate_list_size") base.candidate_list_size = std::stoi(value);
            else if (key == "seed") base.seed = std::stoull(value);
            else if (key == "variant") base.variant = mis::variant_from_name(value);
            else if (key == "deterministic_pick") {
                if (value == "max") base.deterministic_pick = mis::DeterministicPick::max;
                else if (value == "min") base.deterministic_pick = mis::DeterministicPick::min;
                else throw std::runtime_error("bad value");
            } else {
                throw std::runtime_error("unknown key");
            }
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": bad parameter line '" + line + "'");
        }
    }
    return base;
}

std::vector<mis::HeuristicVariant> parse_variants(const std::string& csv) {
    std::vector<mis::HeuristicVariant> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(mis::variant_from_name(item));
    }
    if (out.empty()) throw std::runtime_error("no variants given");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CMSA solver and benchmark harness for maximum independent set"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a benchmark instance suite");
    std::string gen_spec_path, gen_out_dir;
    bool gen_print_default = false;
    gen->add_option("--spec", gen_spec_path, "Suite spec JSON (default: built-in grid)");
    gen->add_option("--out", gen_out_dir, "Output directory");
    gen->add_flag("--print-default-spec", gen_print_default,
                  "Print the built-in suite spec JSON and exit");

    // solve
    auto* solve = app.add_subcommand("solve", "Run CMSA once on an instance");
    std::string sol_instance, sol_variant = "v1", sol_params_path;
    double sol_tmax = 10.0, sol_tlimit = -1.0, sol_drate = -1.0;
    std::uint64_t sol_seed = 1;
    int sol_na = -1, sol_agemax = -1, sol_cls = -1;
    solve->add_option("--instance", sol_instance, "DIMACS instance file")->required();
    auto* sol_variant_opt = solve->add_option("--variant", sol_variant, "original|v1|v2");
    auto* sol_tmax_opt = solve->add_option("--tmax", sol_tmax, "Total budget in seconds");
    auto* sol_seed_opt = solve->add_option("--seed", sol_seed, "Run seed");
    sol_seed_opt->envname("MIS_SEED");
    solve->add_option("--params", sol_params_path, "Parameter file (key = value)");
    auto* sol_tlimit_opt = solve->add_option("--tlimit", sol_tlimit, "Solver budget per iteration");
    auto* sol_drate_opt = solve->add_option("--drate", sol_drate, "Determinism rate");
    auto* sol_na_opt = solve->add_option("--na", sol_na, "Constructions per iteration");
    auto* sol_agemax_opt = solve->add_option("--agemax", sol_agemax, "Maximum component age");
    auto* sol_cls_opt = solve->add_option("--cls", sol_cls, "Candidate list size");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark batch");
    std::string b_manifest, b_variants = "original,v1,v2", b_out, b_params_path;
    std::string b_params_original, b_params_v1, b_params_v2;
    int b_workers = 1, b_runs = 1;
    double b_scale = 1.0;
    bool b_include_tuning = false;
    bench->add_option("--manifest", b_manifest, "Suite manifest JSON")->required();
    bench->add_option("--variants", b_variants, "Comma-separated variant list");
    bench->add_option("--out", b_out, "Results JSON-lines file (append)")->required();
    bench->add_option("--workers", b_workers, "Concurrent workers");
    bench->add_option("--runs", b_runs, "Runs per (instance, variant)");
    bench->add_option("--params", b_params_path, "Parameter file for all variants");
    bench->add_option("--params-original", b_params_original, "Parameter file for original");
    bench->add_option("--params-v1", b_params_v1, "Parameter file for v1");
    bench->add_option("--params-v2", b_params_v2, "Parameter file for v2");
    bench->add_option("--tmax-scale", b_scale, "Scale factor on manifest budgets");
    bench->add_flag("--include-tuning", b_include_tuning, "Also run tuning instances");

    // stats
    auto* stats = app.add_subcommand("stats", "Rank results and run Friedman/Nemenyi");
    std::string st_results, st_summary_csv;
    double st_alpha = 0.05;
    stats->add_option("--results", st_results, "Results JSON-lines file")->required();
    stats->add_option("--alpha", st_alpha, "Significance level (0.05 or 0.10)");
    stats->add_option("--summary-csv", st_summary_csv, "Write per-group score summary CSV here");

    // convergence
    auto* conv = app.add_subcommand("convergence", "Export convergence plot data");
    std::vector<std::string> cv_runs;
    std::string cv_out;
    int cv_grid = 200;
    conv->add_option("--runs", cv_runs, "RunResult JSON files")->required()->expected(-1);
    conv->add_option("--out", cv_out, "Output directory")->required();
    conv->add_option("--grid-points", cv_grid, "Grid resolution for mean trajectories");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (*gen) {
            mis::SuiteSpec spec = gen_spec_path.empty()
                                      ? mis::default_suite_spec()
                                      : mis::suite_spec_from_json(read_file(gen_spec_path));
            if (gen_print_default) {
                std::cout << mis::suite_spec_to_json(mis::default_suite_spec());
                return 0;
            }
            if (gen_out_dir.empty()) {
                std::cerr << "gen: --out is required\n";
                return 1;
            }
            const mis::Manifest m = mis::generate_suite(spec, gen_out_dir);
            std::cerr << "generated " << m.entries.size() << " instances in "
                      << gen_out_dir << "\n";
            std::cout << gen_out_dir << "/manifest.json\n";
        } else if (*solve) {
            mis::CmsaParams params;
            if (!sol_params_path.empty()) {
                params = params_from_file(sol_params_path, params);
            }
            if (sol_variant_opt->count() || sol_params_path.empty()) {
                params.variant = mis::variant_from_name(sol_variant);
            }
            if (sol_tmax_opt->count() || sol_params_path.empty()) {
                params.t_max_s = sol_tmax;
            }
            if (sol_seed_opt->count() || sol_params_path.empty()) {
                params.seed = sol_seed;
            }
            if (sol_tlimit_opt->count()) params.t_limit_s = sol_tlimit;
            if (sol_drate_opt->count()) params.d_rate = sol_drate;
            if (sol_na_opt->count()) params.n_a = sol_na;
            if (sol_agemax_opt->count()) params.age_max = sol_agemax;
            if (sol_cls_opt->count()) params.candidate_list_size = sol_cls;

            const mis::Graph g = mis::load_instance_file(sol_instance);
            const std::string id =
                std::filesystem::path(sol_instance).stem().string();
            const mis::RunResult rr = mis::run(g, params, id);
            std::cout << mis::run_result_to_json(rr) << "\n";
        } else if (*bench) {
            mis::BenchOptions opt;
            opt.variants = parse_variants(b_variants);
            opt.workers = b_workers;
            opt.runs_per_instance = b_runs;
            opt.tmax_scale = b_scale;
            opt.include_tuning = b_include_tuning;
            mis::CmsaParams base;
            if (!b_params_path.empty()) base = params_from_file(b_params_path, base);
            for (mis::HeuristicVariant v : opt.variants) {
                opt.params_by_variant[mis::variant_name(v)] = base;
            }
            auto per_variant = [&](const std::string& name, const std::string& path) {
                if (!path.empty()) {
                    opt.params_by_variant[name] = params_from_file(path, base);
                }
            };
            per_variant("original", b_params_original);
            per_variant("v1", b_params_v1);
            per_variant("v2", b_params_v2);

            const mis::Manifest m = mis::load_manifest(b_manifest);
            const auto records = mis::run_benchmark(m, opt, b_out);
            std::cerr << "results: " << records.size() << " records in "
                      << b_out << "\n";
            std::cout << b_out << "\n";
        } else if (*stats) {
            const auto records = mis::load_results(st_results);
            if (records.empty()) {
                throw std::runtime_error("no records in " + st_results);
            }
            const mis::CdReport report =
                mis::friedman_from_records(records, st_alpha);
            std::cout << mis::cd_report_to_json(report) << "\n";
            if (!st_summary_csv.empty()) {
                std::ofstream out(st_summary_csv, std::ios::binary);
                if (!out) {
                    throw std::runtime_error("cannot write " + st_summary_csv);
                }
                out << mis::group_summary_csv(records);
                std::cerr << "summary: " << st_summary_csv << "\n";
            }
        } else if (*conv) {
            std::vector<mis::RunResult> runs;
            for (const auto& path : cv_runs) {
                runs.push_back(mis::run_result_from_json(read_file(path)));
            }
            const auto written = mis::convergence_export(runs, cv_out, cv_grid);
            for (const auto& p : written) std::cout << p << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
