#include "mis/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "mis/dimacs.hpp"
#include "mis/rng.hpp"

namespace fs = std::filesystem;

namespace mis {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format_level(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string group_id_for(const FamilyGroupSpec& fam, int n, double level) {
    switch (fam.family) {
        case GraphFamily::erdos_renyi:
            return "er_n" + std::to_string(n) + "_p" + format_level(level);
        case GraphFamily::barabasi_albert:
            return "ba_n" + std::to_string(n) + "_m" + format_level(level);
        case GraphFamily::watts_strogatz:
            return "ws_n" + std::to_string(n) + "_k" + format_level(level);
    }
    throw std::logic_error("unreachable");
}

GraphFamilySpec family_spec_for(const FamilyGroupSpec& fam, int n,
                                double level, std::uint64_t seed) {
    GraphFamilySpec gs;
    gs.family = fam.family;
    gs.n = n;
    gs.seed = seed;
    switch (fam.family) {
        case GraphFamily::erdos_renyi:
            gs.p = level;
            break;
        case GraphFamily::barabasi_albert:
            gs.m = static_cast<int>(std::lround(level));
            break;
        case GraphFamily::watts_strogatz:
            gs.k = static_cast<int>(std::lround(level));
            gs.p = fam.ws_rewire_p;
            break;
    }
    return gs;
}

nlohmann::ordered_json family_spec_to_json(const GraphFamilySpec& gs) {
    nlohmann::ordered_json j;
    j["family"] = family_name(gs.family);
    j["n"] = gs.n;
    switch (gs.family) {
        case GraphFamily::erdos_renyi:
            j["p"] = gs.p;
            break;
        case GraphFamily::barabasi_albert:
            j["m"] = gs.m;
            break;
        case GraphFamily::watts_strogatz:
            j["k"] = gs.k;
            j["p"] = gs.p;
            break;
    }
    j["seed"] = gs.seed;
    return j;
}

GraphFamilySpec family_spec_from_json(const nlohmann::json& j) {
    GraphFamilySpec gs;
    gs.family = family_from_name(j.at("family").get<std::string>());
    gs.n = j.at("n").get<int>();
    gs.seed = j.at("seed").get<std::uint64_t>();
    gs.p = j.value("p", 0.0);
    gs.m = j.value("m", 0);
    gs.k = j.value("k", 0);
    return gs;
}

}  // namespace

void SuiteSpec::validate() const {
    if (instances_per_group < 1 || tuning_instances_per_group < 0) {
        throw std::invalid_argument("suite: instance counts must be >= 1 (tuning >= 0)");
    }
    if (sizes.empty() || families.empty()) {
        throw std::invalid_argument("suite: need at least one size and one family");
    }
    if (!time_budgets_s.empty() && time_budgets_s.size() != sizes.size()) {
        throw std::invalid_argument("suite: time_budgets_s must align with sizes");
    }
    for (const auto& f : families) {
        if (f.density_levels.empty()) {
            throw std::invalid_argument("suite: family without density levels");
        }
    }
}

SuiteSpec default_suite_spec() {
    SuiteSpec s;
    s.base_seed = 20240101;
    s.instances_per_group = 5;
    s.tuning_instances_per_group = 1;
    s.sizes = {250, 500, 1000, 2000};
    s.time_budgets_s = {3.0, 6.0, 9.0, 12.0};
    s.families = {
        {GraphFamily::erdos_renyi, {0.005, 0.01, 0.02, 0.05}, 0.1},
        {GraphFamily::barabasi_albert, {2, 5, 10, 20}, 0.1},
        {GraphFamily::watts_strogatz, {4, 10, 20, 40}, 0.1},
    };
    return s;
}

SuiteSpec suite_spec_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SuiteSpec s;
    s.base_seed = j.value("base_seed", s.base_seed);
    s.instances_per_group = j.value("instances_per_group", s.instances_per_group);
    s.tuning_instances_per_group =
        j.value("tuning_instances_per_group", s.tuning_instances_per_group);
    s.sizes = j.at("sizes").get<std::vector<int>>();
    if (j.contains("time_budgets_s")) {
        s.time_budgets_s = j.at("time_budgets_s").get<std::vector<double>>();
    }
    for (const auto& f : j.at("families")) {
        FamilyGroupSpec fam;
        fam.family = family_from_name(f.at("family").get<std::string>());
        fam.density_levels = f.at("density_levels").get<std::vector<double>>();
        fam.ws_rewire_p = f.value("rewire_p", 0.1);
        s.families.push_back(std::move(fam));
    }
    s.validate();
    return s;
}

std::string suite_spec_to_json(const SuiteSpec& spec) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["base_seed"] = spec.base_seed;
    j["instances_per_group"] = spec.instances_per_group;
    j["tuning_instances_per_group"] = spec.tuning_instances_per_group;
    j["sizes"] = spec.sizes;
    j["time_budgets_s"] = spec.time_budgets_s;
    auto fams = nlohmann::ordered_json::array();
    for (const auto& f : spec.families) {
        nlohmann::ordered_json fj;
        fj["family"] = family_name(f.family);
        fj["density_levels"] = f.density_levels;
        if (f.family == GraphFamily::watts_strogatz) {
            fj["rewire_p"] = f.ws_rewire_p;
        }
        fams.push_back(std::move(fj));
    }
    j["families"] = std::move(fams);
    return j.dump(2) + "\n";
}

Manifest generate_suite(const SuiteSpec& spec, const std::string& out_dir) {
    spec.validate();
    fs::create_directories(out_dir);

    std::vector<double> budgets = spec.time_budgets_s;
    if (budgets.empty()) {
        // Paper-shaped defaults scaled to desk time: 150s * (i+1) * 0.02.
        for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
            budgets.push_back(150.0 * (static_cast<double>(i) + 1.0) * 0.02);
        }
    }

    Manifest manifest;
    manifest.dir = out_dir;
    for (const auto& fam : spec.families) {
        for (std::size_t si = 0; si < spec.sizes.size(); ++si) {
            const int n = spec.sizes[si];
            for (double level : fam.density_levels) {
                const std::string group = group_id_for(fam, n, level);
                auto emit = [&](const std::string& role, int count,
                                const char* infix) {
                    for (int i = 0; i < count; ++i) {
                        const std::uint64_t seed = mix_seed(
                            mix_seed(spec.base_seed,
                                     fnv1a64(group + "/" + role)),
                            static_cast<std::uint64_t>(i));
                        ManifestEntry e;
                        e.spec = family_spec_for(fam, n, level, seed);
                        char idx[16];
                        std::snprintf(idx, sizeof idx, "%s%02d", infix, i);
                        e.instance_id = group + "_" + idx;
                        e.file = e.instance_id + ".dimacs";
                        e.group_id = group;
                        e.role = role;
                        e.t_max_s = budgets[si];
                        const Graph g = generate(e.spec);
                        save_instance_file(g, (fs::path(out_dir) / e.file).string());
                        manifest.entries.push_back(std::move(e));
                    }
                };
                emit("tuning", spec.tuning_instances_per_group, "u");
                emit("test", spec.instances_per_group, "t");
            }
        }
    }

    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["base_seed"] = spec.base_seed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : manifest.entries) {
        nlohmann::ordered_json ej;
        ej["instance_id"] = e.instance_id;
        ej["file"] = e.file;
        ej["group_id"] = e.group_id;
        ej["role"] = e.role;
        ej["spec"] = family_spec_to_json(e.spec);
        ej["t_max_s"] = e.t_max_s;
        arr.push_back(std::move(ej));
    }
    j["instances"] = std::move(arr);

    std::ofstream out(fs::path(out_dir) / "manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir);
    out << j.dump(2) << '\n';
    return manifest;
}

Manifest load_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    nlohmann::json j;
    in >> j;
    Manifest m;
    m.dir = fs::path(manifest_path).parent_path().string();
    for (const auto& ej : j.at("instances")) {
        ManifestEntry e;
        e.instance_id = ej.at("instance_id").get<std::string>();
        e.file = ej.at("file").get<std::string>();
        e.group_id = ej.at("group_id").get<std::string>();
        e.role = ej.at("role").get<std::string>();
        e.spec = family_spec_from_json(ej.at("spec"));
        e.t_max_s = ej.at("t_max_s").get<double>();
        m.entries.push_back(std::move(e));
    }
    return m;
}

std::string bench_record_to_json(const BenchRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["instance_id"] = r.instance_id;
    j["group_id"] = r.group_id;
    j["variant"] = r.variant;
    j["seed"] = r.seed;
    j["run_index"] = r.run_index;
    j["best_score"] = r.best_score;
    j["best_time_s"] = r.best_time_s;
    j["t_max_s"] = r.t_max_s;
    return j.dump();
}

BenchRecord bench_record_from_json(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    BenchRecord r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.group_id = j.at("group_id").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.run_index = j.at("run_index").get<int>();
    r.best_score = j.at("best_score").get<int>();
    r.best_time_s = j.at("best_time_s").get<double>();
    r.t_max_s = j.at("t_max_s").get<double>();
    return r;
}

std::vector<BenchRecord> load_results(const std::string& results_path) {
    std::vector<BenchRecord> records;
    std::ifstream in(results_path, std::ios::binary);
    if (!in) return records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(bench_record_from_json(line));
        } catch (const std::exception& e) {
            throw std::runtime_error("results file corrupt at line " +
                                     std::to_string(line_no) + ": " + line);
        }
    }
    return records;
}

std::vector<BenchRecord> run_benchmark(const Manifest& manifest,
                                       const BenchOptions& options,
                                       const std::string& results_path) {
    if (options.variants.empty()) {
        throw std::invalid_argument("bench: no variants selected");
    }
    if (options.runs_per_instance < 1) {
        throw std::invalid_argument("bench: runs_per_instance must be >= 1");
    }

    const std::vector<BenchRecord> existing = load_results(results_path);
    std::set<std::string> done;
    for (const auto& r : existing) {
        done.insert(r.instance_id + "|" + r.variant + "|" +
                    std::to_string(r.run_index));
    }

    struct Task {
        const ManifestEntry* entry;
        HeuristicVariant variant;
        int run_index;
    };
    std::vector<Task> tasks;
    for (const auto& e : manifest.entries) {
        if (e.role == "tuning" && !options.include_tuning) continue;
        for (HeuristicVariant v : options.variants) {
            for (int r = 0; r < options.runs_per_instance; ++r) {
                const std::string key =
                    e.instance_id + "|" + variant_name(v) + "|" + std::to_string(r);
                if (!done.count(key)) tasks.push_back({&e, v, r});
            }
        }
    }

    std::ofstream out(results_path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open results file: " + results_path);

    std::mutex io_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;

    auto worker = [&]() {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            try {
                const Graph g = load_instance_file(
                    (fs::path(manifest.dir) / t.entry->file).string());
                CmsaParams params;
                const std::string vname = variant_name(t.variant);
                if (auto it = options.params_by_variant.find(vname);
                    it != options.params_by_variant.end()) {
                    params = it->second;
                }
                params.variant = t.variant;
                params.t_max_s = t.entry->t_max_s * options.tmax_scale;
                if (params.t_limit_s > params.t_max_s) params.t_limit_s = -1.0;
                params.seed = mix_seed(
                    mix_seed(t.entry->spec.seed, fnv1a64(vname)),
                    static_cast<std::uint64_t>(t.run_index));

                const RunResult rr = run(g, params, t.entry->instance_id);

                BenchRecord rec;
                rec.instance_id = t.entry->instance_id;
                rec.group_id = t.entry->group_id;
                rec.variant = vname;
                rec.seed = params.seed;
                rec.run_index = t.run_index;
                rec.best_score = rr.best.score;
                rec.best_time_s = rr.best_time_s;
                rec.t_max_s = params.t_max_s;

                std::lock_guard<std::mutex> lock(io_mutex);
                out << bench_record_to_json(rec) << '\n';
                out.flush();
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(io_mutex);
                failure = e.what();
                failed.store(true);
                return;
            }
        }
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    out.close();
    if (failed.load()) throw std::runtime_error("bench failed: " + failure);

    return load_results(results_path);
}

BlockDesign design_from_records(const std::vector<BenchRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("no records to rank");
    }
    std::set<std::string> algo_set;
    for (const auto& r : records) algo_set.insert(r.variant);

    BlockDesign d;
    d.algorithms.assign(algo_set.begin(), algo_set.end());
    std::map<std::string, std::size_t> algo_index;
    for (std::size_t i = 0; i < d.algorithms.size(); ++i) {
        algo_index[d.algorithms[i]] = i;
    }

    std::map<std::string, std::vector<const BenchRecord*>> blocks;
    for (const auto& r : records) {
        blocks[r.instance_id + "#" + std::to_string(r.run_index)].push_back(&r);
    }

    for (const auto& [block_id, recs] : blocks) {
        std::vector<double> row(d.algorithms.size(),
                                std::numeric_limits<double>::quiet_NaN());
        for (const BenchRecord* r : recs) {
            auto& cell = row[algo_index[r->variant]];
            if (!std::isnan(cell)) {
                throw std::invalid_argument("duplicate record for " + block_id +
                                            " / " + r->variant);
            }
            cell = r->best_score;
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::isnan(row[i])) {
                throw std::invalid_argument("incomplete design: block " +
                                            block_id + " missing " +
                                            d.algorithms[i]);
            }
        }
        d.block_ids.push_back(block_id);
        d.scores.push_back(std::move(row));
    }
    return d;
}

CdReport friedman_from_records(const std::vector<BenchRecord>& records,
                               double alpha) {
    const BlockDesign d = design_from_records(records);
    return friedman_nemenyi(d.algorithms, d.scores, alpha);
}

std::string group_summary_csv(const std::vector<BenchRecord>& records) {
    std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
    for (const auto& r : records) {
        groups[{r.group_id, r.variant}].push_back(r.best_score);
    }
    auto quantile = [](const std::vector<double>& sorted, double q) {
        if (sorted.size() == 1) return sorted[0];
        const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
    };
    std::ostringstream out;
    out << "group_id,variant,count,mean,stddev,min,q25,median,q75,max\n";
    char buf[64];
    for (auto& [key, vals] : groups) {
        std::sort(vals.begin(), vals.end());
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(vals.size());
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var = vals.size() > 1 ? var / (static_cast<double>(vals.size()) - 1.0) : 0.0;
        out << key.first << ',' << key.second << ',' << vals.size();
        const double cols[] = {mean,          std::sqrt(var),
                               vals.front(),  quantile(vals, 0.25),
                               quantile(vals, 0.5), quantile(vals, 0.75),
                               vals.back()};
        for (double c : cols) {
            std::snprintf(buf, sizeof buf, "%.6g", c);
            out << ',' << buf;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mis
