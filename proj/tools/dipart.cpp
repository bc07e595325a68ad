// Command-line front end: property checks, forbidden-structure detection,
// decomposition, constructive builds, partition verification, and the
// exhaustive sweeps.
//
// Exit codes: 0 success / verdict true, 1 verdict false (witness on stdout),
// 2 usage error, 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dipart/dipart.hpp"

namespace {

using namespace dipart;

int run_check(const std::string& file, const std::string& mode_str, bool hereditary) {
    Digraph d = read_digraph_file(file);
    PropertyMode mode = mode_str == "alpha" ? PropertyMode::alpha : PropertyMode::be;
    if (hereditary) {
        auto v = is_diperfect_property(d, mode);
        if (v.holds) {
            std::cout << (mode == PropertyMode::be ? "BE-diperfect" : "alpha-diperfect") << ": yes\n";
            return 0;
        }
        std::cout << (mode == PropertyMode::be ? "BE-diperfect" : "alpha-diperfect") << ": no\n";
        std::cout << "failing induced subdigraph: " << to_string(*v.failing_subset) << "\n";
        std::cout << "failing stable set: " << to_string(*v.failing_stable_set) << "\n";
        return 1;
    }
    auto v = satisfies_property(d, mode);
    if (v.holds) {
        std::cout << (mode == PropertyMode::be ? "BE-property" : "alpha-property") << ": yes\n";
        return 0;
    }
    std::cout << (mode == PropertyMode::be ? "BE-property" : "alpha-property") << ": no\n";
    std::cout << "failing stable set: " << to_string(*v.failing_stable_set) << "\n";
    return 1;
}

int run_detect(const std::string& file, const std::string& structure) {
    Digraph d = read_digraph_file(file);
    if (structure == "cliquecut") {
        auto cut = find_clique_cut(d);
        if (cut) {
            std::cout << "clique cut: " << to_string(*cut) << "\n";
            return 0;
        }
        std::cout << "clique cut: none\n";
        return 1;
    }
    std::optional<ForbiddenWitness> w;
    if (structure == "blocking") w = find_blocking_odd_cycle(d);
    else if (structure == "anti") w = find_anti_directed_odd_cycle(d);
    else if (structure == "nonoriented") w = find_non_oriented_odd_cycle(d);
    else throw CLI::ValidationError("--structure", "unknown structure " + structure);
    if (w) {
        std::cout << to_string(w->kind) << ":";
        for (int v : w->vertices) std::cout << ' ' << v;
        std::cout << "\n";
        return 0;
    }
    std::cout << "none\n";
    return 1;
}

int run_decompose(const std::string& file) {
    Digraph d = read_digraph_file(file);
    if (!underlying_graph(d).connected()) {
        std::cout << "disconnected\n";
        return 1;
    }
    if (!is_alis(d)) {
        std::cout << "not arc-locally in-semicomplete\n";
        return 1;
    }
    auto dec = try_decompose(d);
    if (!dec) {
        if (is_diperfect_fast(d)) std::cout << "diperfect (branch i)\n";
        else if (find_clique_cut(d)) std::cout << "clique cut (branch iii): " << to_string(*find_clique_cut(d)) << "\n";
        else std::cout << "no decomposition found\n";
        return 1;
    }
    nlohmann::json j;
    j["V1"] = dec->v1.to_list();
    j["classes"] = nlohmann::json::array();
    for (VertexSet c : dec->classes) j["classes"].push_back(c.to_list());
    j["V3"] = dec->v3.to_list();
    std::cout << j.dump(2) << "\n";
    return 0;
}

VertexSet parse_stable(const std::string& csv) {
    VertexSet s;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) s.add(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return s;
}

int run_build(const std::string& file, const std::string& stable_csv, const std::string& mode_str,
              const std::string& trace_path) {
    Digraph d = read_digraph_file(file);
    VertexSet s = parse_stable(stable_csv);
    PropertyMode mode = mode_str == "alpha" ? PropertyMode::alpha : PropertyMode::be;
    BuildTrace tr = build(d, s, mode);
    std::cout << write_partition(tr.result);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::invalid_argument("cannot open trace file " + trace_path);
        out << to_json(tr).dump(2) << "\n";
    }
    return 0;
}

int run_verify(const std::string& dfile, const std::string& pfile, const std::string& stable_csv,
               const std::string& mode_str) {
    Digraph d = read_digraph_file(dfile);
    PathPartition pp = read_partition_file(pfile);
    PartitionMode mode = PartitionMode::plain;
    VertexSet s;
    if (!stable_csv.empty()) {
        s = parse_stable(stable_csv);
        mode = mode_str == "alpha" ? PartitionMode::orthogonal
             : mode_str == "be"    ? PartitionMode::be
                                   : PartitionMode::orthogonal;
    }
    auto rep = validate(d, pp, s, mode);
    if (rep.ok) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid: " << rep.reason << "\n";
    return 1;
}

int run_sweep(const std::string& mode_str, int n_max, const std::string& shard_str, const std::string& out,
              bool canonical, bool fill_diperfection) {
    SweepConfig cfg;
    auto mode = sweep_mode_from(mode_str);
    if (!mode) throw CLI::ValidationError("--mode", "unknown sweep mode " + mode_str);
    cfg.mode = *mode;
    cfg.n_max = n_max;
    cfg.canonical_only = canonical;
    cfg.out_path = out;
    cfg.fill_diperfection = fill_diperfection;
    if (!shard_str.empty()) {
        auto slash = shard_str.find('/');
        if (slash == std::string::npos) throw CLI::ValidationError("--shard", "expected i/k");
        cfg.shard.index = std::stoull(shard_str.substr(0, slash));
        cfg.shard.count = std::stoull(shard_str.substr(slash + 1));
    }
    SweepResult res = sweep(cfg);
    std::cout << res.summary.counterexamples << " counterexamples / " << res.summary.scanned
              << " digraphs scanned (" << res.summary.in_class << " in class, " << res.summary.recorded
              << " recorded)\n";
    if (res.summary.first_counterexample) {
        std::cout << "counterexample: " << to_json(*res.summary.first_counterexample).dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph path-partition toolkit"};
    app.require_subcommand(1);

    std::string file, mode = "be", structure = "blocking", stable, trace_path, pfile, shard, out;
    bool hereditary = false, canonical = false, fill_dip = false;
    int n_max = 4;

    auto* check = app.add_subcommand("check", "decide the alpha- or BE-property of a digraph");
    check->add_option("file", file)->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"alpha", "be"}));
    check->add_flag("--diperfect", hereditary, "quantify over every induced subdigraph");

    auto* detect = app.add_subcommand("detect", "search for a forbidden structure");
    detect->add_option("file", file)->required();
    detect->add_option("--structure", structure)->check(CLI::IsMember({"blocking", "anti", "cliquecut", "nonoriented"}));

    auto* decomp = app.add_subcommand("decompose", "compute the (V1, V2, V3) partition");
    decomp->add_option("file", file)->required();

    auto* build_cmd = app.add_subcommand("build", "construct a path partition for a maximum stable set");
    build_cmd->add_option("file", file)->required();
    build_cmd->add_option("--stable", stable, "comma-separated stable set")->required();
    build_cmd->add_option("--mode", mode)->check(CLI::IsMember({"alpha", "be"}));
    build_cmd->add_option("--trace", trace_path, "write the build trace as JSON");

    auto* verify = app.add_subcommand("verify", "validate a partition file against a digraph");
    verify->add_option("digraph", file)->required();
    verify->add_option("partition", pfile)->required();
    verify->add_option("--stable", stable);
    verify->add_option("--mode", mode)->check(CLI::IsMember({"alpha", "be"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive enumeration sweeps");
    sweep_cmd->add_option("--mode", mode)->required();
    sweep_cmd->add_option("--n-max", n_max)->required();
    sweep_cmd->add_option("--shard", shard, "i/k");
    sweep_cmd->add_option("--out", out, "JSON Lines report path");
    sweep_cmd->add_flag("--canonical", canonical, "keep only lexicographically-least isomorphs");
    sweep_cmd->add_flag("--diperfection", fill_dip, "also decide hereditary verdicts (slow)");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return run_check(file, mode, hereditary);
        if (detect->parsed()) return run_detect(file, structure);
        if (decomp->parsed()) return run_decompose(file);
        if (build_cmd->parsed()) return run_build(file, stable, mode, trace_path);
        if (verify->parsed()) return run_verify(file, pfile, stable, mode);
        if (sweep_cmd->parsed()) return run_sweep(mode, n_max, shard, out, canonical, fill_dip);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const dipart::invariant_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
