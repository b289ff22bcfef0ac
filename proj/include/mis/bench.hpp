#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mis/cmsa.hpp"
#include "mis/generators.hpp"
#include "mis/stats.hpp"

namespace mis {

// One family with its density ladder. The density level is the family's
// own knob: edge probability p for ER, attachment count m for BA, ring
// degree k for WS (whose rewire probability is fixed per family).
struct FamilyGroupSpec {
    GraphFamily family = GraphFamily::erdos_renyi;
    std::vector<double> density_levels;
    double ws_rewire_p = 0.1;
};

struct SuiteSpec {
    std::uint64_t base_seed = 20240101;
    int instances_per_group = 5;
    int tuning_instances_per_group = 1;
    std::vector<int> sizes;
    std::vector<double> time_budgets_s;  // aligned with sizes
    std::vector<FamilyGroupSpec> families;

    void validate() const;
};

// Desk-scale default grid: 3 families x 4 sizes x 4 density levels,
// 5 test + 1 tuning instance per group, budgets 3/6/9/12 s.
SuiteSpec default_suite_spec();

SuiteSpec suite_spec_from_json(const std::string& text);
std::string suite_spec_to_json(const SuiteSpec& spec);

struct ManifestEntry {
    std::string instance_id;
    std::string file;  // relative to the manifest's directory
    std::string group_id;
    std::string role;  // "test" or "tuning"
    GraphFamilySpec spec;
    double t_max_s = 0.0;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
    std::string dir;  // directory the manifest was loaded from / written to
};

// Writes one canonical .dimacs file per (group, index) with a seed hashed
// from (base_seed, group, role, index), plus manifest.json. Regeneration
// from the same spec is byte-identical.
Manifest generate_suite(const SuiteSpec& spec, const std::string& out_dir);

Manifest load_manifest(const std::string& manifest_path);

struct BenchRecord {
    std::string instance_id;
    std::string group_id;
    std::string variant;
    std::uint64_t seed = 0;
    int run_index = 0;
    int best_score = 0;
    double best_time_s = 0.0;
    double t_max_s = 0.0;
};

std::string bench_record_to_json(const BenchRecord& r);
BenchRecord bench_record_from_json(const std::string& line);

struct BenchOptions {
    std::vector<HeuristicVariant> variants;
    // Base parameters per variant; t_max/t_limit/seed/variant are filled in
    // per task from the manifest and task identity.
    std::map<std::string, CmsaParams> params_by_variant;
    int runs_per_instance = 1;
    int workers = 1;
    double tmax_scale = 1.0;
    bool include_tuning = false;
};

// Runs every (instance, variant, run) combination, streaming records to an
// append-only JSON-lines file. Tasks already present in the results file
// are skipped, so an interrupted batch resumes by rerunning the command.
// Returns all records (existing and new). Throws on missing instance
// files and on corrupt results lines (naming the offending line).
std::vector<BenchRecord> run_benchmark(const Manifest& manifest,
                                       const BenchOptions& options,
                                       const std::string& results_path);

std::vector<BenchRecord> load_results(const std::string& results_path);

// Complete block design extracted from records: one block per
// (instance_id, run_index), one column per variant. Throws if any block
// is missing a variant or has duplicates.
struct BlockDesign {
    std::vector<std::string> algorithms;
    std::vector<std::string> block_ids;
    std::vector<std::vector<double>> scores;  // [block][algorithm]
};

BlockDesign design_from_records(const std::vector<BenchRecord>& records);

CdReport friedman_from_records(const std::vector<BenchRecord>& records,
                               double alpha);

// Per (group, variant) score summary rows for box plots.
std::string group_summary_csv(const std::vector<BenchRecord>& records);

}  // namespace mis
