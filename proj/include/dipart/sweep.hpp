#pragma once

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dipart/alis.hpp"
#include "dipart/build.hpp"
#include "dipart/detect.hpp"
#include "dipart/enumerate.hpp"
#include "dipart/io.hpp"
#include "dipart/partition.hpp"

namespace dipart {

enum class SweepMode { conjecture_B, conjecture_D, alis_builder, structure_facts };

inline const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::conjecture_B: return "conjecture_B";
        case SweepMode::conjecture_D: return "conjecture_D";
        case SweepMode::alis_builder: return "alis_builder";
        case SweepMode::structure_facts: return "structure_facts";
    }
    return "?";
}

inline std::optional<SweepMode> sweep_mode_from(const std::string& s) {
    if (s == "conjecture_B") return SweepMode::conjecture_B;
    if (s == "conjecture_D") return SweepMode::conjecture_D;
    if (s == "alis_builder") return SweepMode::alis_builder;
    if (s == "structure_facts") return SweepMode::structure_facts;
    return std::nullopt;
}

struct SweepConfig {
    int n_max = 4;
    SweepMode mode = SweepMode::conjecture_D;
    Shard shard;
    bool canonical_only = false;
    std::string out_path;      // empty: no per-record file
    std::string summary_path;  // empty: derive from out_path, else none
    int workers = 0;           // 0: DIPART_WORKERS env or hardware concurrency
    int oracle_limit = 14;     // refuse property checks beyond this size
    bool fill_diperfection = false;  // also decide hereditary verdicts (slow)
};

struct SweepRecord {
    std::string encoding;
    int n = 0;
    bool in_B = false, in_D = false;
    bool alpha_property = false, be_property = false;
    std::optional<bool> alpha_diperfect, be_diperfect;
    nlohmann::json witness;  // null when absent
    bool counterexample = false;
};

inline nlohmann::json to_json(const SweepRecord& r) {
    nlohmann::json j;
    j["encoding"] = r.encoding;
    j["n"] = r.n;
    j["in_B"] = r.in_B;
    j["in_D"] = r.in_D;
    j["alpha_property"] = r.alpha_property;
    j["be_property"] = r.be_property;
    j["alpha_diperfect"] = r.alpha_diperfect ? nlohmann::json(*r.alpha_diperfect) : nlohmann::json();
    j["be_diperfect"] = r.be_diperfect ? nlohmann::json(*r.be_diperfect) : nlohmann::json();
    j["witness"] = r.witness.is_null() ? nlohmann::json() : r.witness;
    return j;
}

struct SweepSummary {
    std::uint64_t scanned = 0;
    std::uint64_t recorded = 0;
    std::uint64_t in_class = 0;        // in_D (mode D) or in_B (mode B) or ALIS count
    std::uint64_t property_holds = 0;  // among in_class
    std::uint64_t counterexamples = 0;
    std::uint64_t builder_runs = 0;    // alis_builder: (digraph, stable set) builds
    std::uint64_t decompositions = 0;  // structure_facts
    std::optional<SweepRecord> first_counterexample;

    void merge(const SweepSummary& o) {
        scanned += o.scanned;
        recorded += o.recorded;
        in_class += o.in_class;
        property_holds += o.property_holds;
        counterexamples += o.counterexamples;
        builder_runs += o.builder_runs;
        decompositions += o.decompositions;
        if (!first_counterexample && o.first_counterexample) first_counterexample = o.first_counterexample;
    }
};

namespace sweepdetail {

inline nlohmann::json witness_json(const ForbiddenWitness& w) {
    return nlohmann::json{{"type", to_string(w.kind)}, {"vertices", w.vertices}};
}

inline nlohmann::json stable_witness_json(VertexSet s) {
    return nlohmann::json{{"type", "failing_stable_set"}, {"S", s.to_list()}};
}

/// One digraph under one mode; returns the record when it should be persisted.
inline std::optional<SweepRecord> evaluate(const Digraph& d, const SweepConfig& cfg, SweepSummary& sum) {
    SweepRecord r;
    r.n = d.n();
    sum.scanned += 1;

    switch (cfg.mode) {
        case SweepMode::conjecture_B:
        case SweepMode::conjecture_D: {
            auto blocking = find_blocking_odd_cycle(d);
            auto anti = find_anti_directed_odd_cycle(d);
            r.in_D = !blocking.has_value();
            r.in_B = !anti.has_value();
            r.alpha_property = satisfies_property(d, PropertyMode::alpha).holds;
            auto be = satisfies_property(d, PropertyMode::be);
            r.be_property = be.holds;
            if (cfg.fill_diperfection) {
                r.alpha_diperfect = is_diperfect_property(d, PropertyMode::alpha).holds;
                r.be_diperfect = is_diperfect_property(d, PropertyMode::be).holds;
            }
            bool conj_d_cex = r.in_D && !r.be_property;
            bool conj_b_cex = r.in_B && !r.alpha_property;
            if (cfg.mode == SweepMode::conjecture_D) {
                sum.in_class += r.in_D;
                sum.property_holds += (r.in_D && r.be_property);
                r.counterexample = conj_d_cex;
            } else {
                sum.in_class += r.in_B;
                sum.property_holds += (r.in_B && r.alpha_property);
                r.counterexample = conj_b_cex;
            }
            if (r.counterexample) {
                auto v = satisfies_property(d, cfg.mode == SweepMode::conjecture_D ? PropertyMode::be : PropertyMode::alpha);
                r.witness = stable_witness_json(*v.failing_stable_set);
            } else if (blocking) {
                r.witness = witness_json(*blocking);
            } else if (anti) {
                r.witness = witness_json(*anti);
            }
            break;
        }
        case SweepMode::alis_builder: {
            if (!is_alis(d)) return std::nullopt;
            auto blocking = find_blocking_odd_cycle(d);
            auto anti = find_anti_directed_odd_cycle(d);
            r.in_D = !blocking.has_value();
            r.in_B = !anti.has_value();
            if (!r.in_D && !r.in_B) return std::nullopt;
            sum.in_class += 1;
            StableSets ss = alpha_and_max_stable_sets(d);
            bool all_ok = true;
            for (VertexSet s : ss.witnesses) {
                if (r.in_D) {
                    sum.builder_runs += 1;
                    try {
                        BuildTrace tr = build(d, s, PropertyMode::be);
                        if (!validate(d, tr.result, s, PartitionMode::be)) all_ok = false;
                    } catch (const std::exception&) {
                        all_ok = false;
                    }
                    if (!all_ok) {
                        r.witness = stable_witness_json(s);
                        break;
                    }
                }
                if (r.in_B) {
                    sum.builder_runs += 1;
                    try {
                        BuildTrace tr = build(d, s, PropertyMode::alpha);
                        if (!validate(d, tr.result, s, PartitionMode::orthogonal)) all_ok = false;
                    } catch (const std::exception&) {
                        all_ok = false;
                    }
                    if (!all_ok) {
                        r.witness = stable_witness_json(s);
                        break;
                    }
                }
            }
            r.be_property = r.in_D ? all_ok : satisfies_property(d, PropertyMode::be).holds;
            r.alpha_property = r.in_B ? all_ok : satisfies_property(d, PropertyMode::alpha).holds;
            r.counterexample = !all_ok;
            sum.property_holds += all_ok;
            break;
        }
        case SweepMode::structure_facts: {
            if (!is_alis(d) || !underlying_graph(d).connected()) return std::nullopt;
            auto dec = try_decompose(d);
            if (!dec) return std::nullopt;
            sum.in_class += 1;
            sum.decompositions += 1;
            LayerStructure ls = layer_structure(d, *dec);
            StructureReport rep = verify_structure_facts(d, *dec, ls);
            r.in_D = in_class_D(d);
            r.in_B = in_class_B(d);
            r.alpha_property = satisfies_property(d, PropertyMode::alpha).holds;
            r.be_property = satisfies_property(d, PropertyMode::be).holds;
            r.counterexample = !rep.ok();
            if (!rep.ok()) {
                nlohmann::json v = nlohmann::json::array();
                for (auto& viol : rep.violations) v.push_back({{"fact", viol.fact}, {"detail", viol.detail}});
                r.witness = {{"type", "structure_violation"}, {"violations", v}};
            }
            sum.property_holds += rep.ok();
            break;
        }
    }
    if (r.be_diperfect && r.alpha_diperfect && *r.be_diperfect && !*r.alpha_diperfect)
        throw invariant_error("sweep: BE-diperfect without alpha-diperfect");
    sum.recorded += 1;
    if (r.counterexample) {
        sum.counterexamples += 1;
        if (!sum.first_counterexample) sum.first_counterexample = r;
    }
    return r;
}

inline int decide_workers(const SweepConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("DIPART_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace sweepdetail

struct SweepResult {
    SweepSummary summary;
    std::vector<SweepRecord> records;  // sorted by encoding
    bool halted = false;
};

/// Runs the sweep over all labeled digraphs on exactly n_max vertices within
/// the shard. Workers process fixed-size chunks of the index space; a genuine
/// counterexample halts the sweep and is dumped with the summary.
inline SweepResult sweep(const SweepConfig& cfg) {
    if (cfg.n_max > 7) throw std::invalid_argument("sweep: n_max > 7 labeled exhaustion refused");
    if (cfg.shard.count == 0 || cfg.shard.index >= cfg.shard.count)
        throw std::invalid_argument("sweep: bad shard");
    SweepResult result;
    std::uint64_t total = labeled_digraph_count(cfg.n_max);
    std::uint64_t shard_items = (total - cfg.shard.index + cfg.shard.count - 1) / cfg.shard.count;
    const std::uint64_t chunk = 4096;
    std::uint64_t n_chunks = (shard_items + chunk - 1) / chunk;

    int workers = sweepdetail::decide_workers(cfg);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> halt{false};
    std::mutex merge_mu;
    std::map<std::uint64_t, std::vector<SweepRecord>> by_chunk;
    SweepSummary total_sum;
    std::vector<std::string> errors;

    auto work = [&]() {
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks || halt.load()) return;
            SweepSummary sum;
            std::vector<SweepRecord> recs;
            std::uint64_t lo = c * chunk, hi = std::min(shard_items, lo + chunk);
            try {
                for (std::uint64_t t = lo; t < hi; ++t) {
                    std::uint64_t idx = cfg.shard.index + t * cfg.shard.count;
                    Digraph d = Enumerator::from_index(cfg.n_max, idx);
                    if (cfg.canonical_only && !Enumerator::is_canonical(d)) continue;
                    auto rec = sweepdetail::evaluate(d, cfg, sum);
                    if (rec) {
                        rec->encoding = encode_digraph6(d);
                        if (rec->counterexample) halt.store(true);
                        recs.push_back(std::move(*rec));
                    }
                    if (halt.load() && sum.counterexamples == 0) break;
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(merge_mu);
                errors.push_back(e.what());
                halt.store(true);
            }
            std::lock_guard<std::mutex> lk(merge_mu);
            total_sum.merge(sum);
            by_chunk[c] = std::move(recs);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (!errors.empty()) throw invariant_error("sweep: worker failed: " + errors.front());

    for (auto& [c, recs] : by_chunk)
        for (auto& r : recs) result.records.push_back(std::move(r));
    std::sort(result.records.begin(), result.records.end(),
              [](const SweepRecord& a, const SweepRecord& b) { return a.encoding < b.encoding; });
    result.summary = total_sum;
    result.halted = total_sum.counterexamples > 0;

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::invalid_argument("sweep: cannot open output file " + cfg.out_path);
        for (const auto& r : result.records) out << to_json(r).dump() << '\n';
    }
    std::string summary_path = cfg.summary_path;
    if (summary_path.empty() && !cfg.out_path.empty()) summary_path = cfg.out_path + ".summary.csv";
    if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw std::invalid_argument("sweep: cannot open summary file " + summary_path);
        out << "mode,n,scanned,recorded,in_class,property_holds,counterexamples\n";
        out << to_string(cfg.mode) << ',' << cfg.n_max << ',' << result.summary.scanned << ','
            << result.summary.recorded << ',' << result.summary.in_class << ','
            << result.summary.property_holds << ',' << result.summary.counterexamples << '\n';
    }
    return result;
}

// ---------------------------------------------------------------------------
// Trace serialization for the harness and the CLI.
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const PathPartition& pp) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : pp.paths) paths.push_back(p.vertices);
    return paths;
}

inline nlohmann::json to_json(const BuildTrace& tr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : tr.steps) {
        nlohmann::json sets;
        for (auto& [name, vs] : st.sets) sets[name] = vs;
        nlohmann::json js{{"rule", st.rule}, {"sets", sets}};
        if (!st.matched.empty()) {
            nlohmann::json m = nlohmann::json::array();
            for (auto [a, b] : st.matched) m.push_back({a, b});
            js["matching"] = m;
        }
        if (!st.sub_instance.empty()) js["sub_instance"] = st.sub_instance;
        steps.push_back(std::move(js));
    }
    return nlohmann::json{{"mode", tr.mode == PropertyMode::be ? "be" : "alpha"},
                          {"oracle_used", tr.oracle_used},
                          {"breach_fallbacks", tr.breach_fallbacks},
                          {"reversed_from_inverse", tr.reversed_from_inverse},
                          {"steps", steps},
                          {"result", to_json(tr.result)}};
}

}  // namespace dipart
