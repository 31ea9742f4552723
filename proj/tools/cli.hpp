#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <splitvd/splitvd.hpp>

namespace splitvd::cli {

using json = nlohmann::json;

enum exit_code : int { ok = 0, infeasible = 1, usage = 2 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json ids(const vertex_set& s) {
    json a = json::array();
    for (vertex v : s)
        a.push_back(v + 1);
    return a;
}

inline std::string plain_ids(const vertex_set& s) {
    std::string out;
    for (vertex v : s) {
        out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

inline graph load_graph(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-")
        return read_graph(in);
    std::ifstream f(path);
    if (!f)
        throw usage_error("cannot open " + path);
    return read_graph(f);
}

inline unsigned default_threads() {
    if (const char* env = std::getenv("SPLITVD_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1)
                return static_cast<unsigned>(t);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline json stats_json(const solve_stats& s, std::size_t n, double parse_ms) {
    json k = {
        {"ran", s.kernel_ran},
        {"verdict", std::string(to_string(s.kernel_outcome))},
        {"constraints_found", s.kernel.constraints_found},
        {"forced_vertices", s.kernel.forced_vertices},
        {"cores_added", s.kernel.cores_added},
        {"isolated_removed", s.kernel.isolated_removed},
        {"universal_removed", s.kernel.universal_removed},
        {"remaining_constraints", s.kernel.remaining_constraints},
        {"remaining_constraint_vertices", s.kernel.remaining_constraint_vertices},
    };
    return {
        {"partitions_tried", s.partitions_tried},
        {"vc_calls", s.vc_calls},
        {"kernel_rules_fired", s.kernel.rules_fired()},
        {"elapsed_ms", s.elapsed_ms},
        {"prune_checks", s.prune_checks},
        {"generator_nodes", s.generator_nodes},
        {"pruned_states", s.pruned_states},
        {"baseline_nodes", s.baseline_nodes},
        {"max_depth", s.max_depth},
        {"depth_bound", depth_bound(n)},
        {"kernel", k},
        {"stage_ms", {{"parse", parse_ms}, {"kernel", s.kernel_ms}, {"search", s.search_ms}}},
    };
}

struct solve_args {
    std::string file;
    std::optional<std::size_t> k;
    bool minimize = false;
    std::string kernelize = "on";
    std::string engine_name = "partition";
    unsigned parallel = default_threads();
    std::string format = "json";
    bool no_prune = false;
};

inline int cmd_solve(const solve_args& a, std::istream& in, std::ostream& out) {
    if (!a.k && !a.minimize)
        throw usage_error("solve needs -k <budget> or --minimize");
    solve_options opts;
    opts.kernelize = a.kernelize == "on";
    opts.method = a.engine_name == "baseline" ? engine::baseline
                  : a.engine_name == "oracle" ? engine::oracle
                                              : engine::partition;
    opts.threads = std::max(1U, a.parallel);
    opts.prune = !a.no_prune;

    auto t0 = std::chrono::steady_clock::now();
    graph g = load_graph(a.file, in);
    double parse_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::size_t k_used = 0;
    solve_outcome res;
    if (a.minimize) {
        auto [k, r] = svd_minimize(g, opts);
        k_used = k;
        res = std::move(r);
    } else {
        k_used = *a.k;
        res = svd_solve({g, k_used}, opts);
    }

    const vertex_set none = g.empty_set();
    const auto& deleted = res.solution ? res.solution->deleted : none;
    const auto& cside = res.solution ? res.solution->certificate.clique_side : none;
    const auto& iside = res.solution ? res.solution->certificate.independent_side : none;

    if (a.format == "plain") {
        out << "feasible: " << (res.feasible() ? "yes" : "no") << '\n';
        out << "k: " << k_used << '\n';
        if (res.feasible()) {
            out << "deleted:" << plain_ids(deleted) << '\n';
            out << "clique:" << plain_ids(cside) << '\n';
            out << "independent:" << plain_ids(iside) << '\n';
        }
        out << "partitions_tried: " << res.stats.partitions_tried << '\n';
        out << "vc_calls: " << res.stats.vc_calls << '\n';
        out << "elapsed_ms: " << std::fixed << std::setprecision(3) << res.stats.elapsed_ms << '\n';
    } else {
        json j = {
            {"feasible", res.feasible()},
            {"k_used", k_used},
            {"engine", std::string(to_string(opts.method))},
            {"deleted", ids(deleted)},
            {"clique_side", ids(cside)},
            {"independent_side", ids(iside)},
            {"stats", stats_json(res.stats, g.num_vertices(), parse_ms)},
        };
        out << j.dump(2) << '\n';
    }
    return res.feasible() ? ok : infeasible;
}

inline int cmd_vc(const std::string& file, std::size_t k, const std::string& format, std::istream& in,
                  std::ostream& out) {
    graph g = load_graph(file, in);
    vc_stats st;
    auto cover = vc_solve(g, k, &st);
    if (format == "plain") {
        out << "feasible: " << (cover ? "yes" : "no") << '\n';
        if (cover)
            out << "cover:" << plain_ids(*cover) << '\n';
    } else {
        json j = {{"feasible", cover.has_value()},
                  {"k", k},
                  {"cover", cover ? ids(*cover) : json::array()},
                  {"stats", {{"search_nodes", st.search_nodes}, {"folds", st.folds}}}};
        out << j.dump(2) << '\n';
    }
    return cover ? ok : infeasible;
}

inline int cmd_recognize(const std::string& file, const std::string& format, std::istream& in, std::ostream& out) {
    graph g = load_graph(file, in);
    auto r = recognize_split(g);
    const auto* cert = std::get_if<split_certificate>(&r);
    if (format == "plain") {
        if (cert) {
            out << "split: yes\nclique:" << plain_ids(cert->clique_side)
                << "\nindependent:" << plain_ids(cert->independent_side) << '\n';
        } else {
            const auto& w = std::get<forbidden_witness>(r);
            out << "split: no\nwitness: " << to_string(w.kind);
            for (vertex v : w.vertices)
                out << ' ' << v + 1;
            out << '\n';
        }
    } else {
        json j;
        j["split"] = cert != nullptr;
        if (cert) {
            j["clique_side"] = ids(cert->clique_side);
            j["independent_side"] = ids(cert->independent_side);
        } else {
            const auto& w = std::get<forbidden_witness>(r);
            json vs = json::array();
            for (vertex v : w.vertices)
                vs.push_back(v + 1);
            j["witness"] = {{"kind", std::string(to_string(w.kind))}, {"vertices", vs}};
        }
        out << j.dump(2) << '\n';
    }
    return cert ? ok : infeasible;
}

inline int cmd_partitions(const std::string& file, std::uint64_t limit, bool show_stats, std::istream& in,
                          std::ostream& out, std::ostream& err) {
    graph g = load_graph(file, in);
    std::uint64_t count = 0;
    auto st = generate_partitions(g, [&](const partition& p) {
        out << "C:" << plain_ids(p.clique_side) << " | I:" << plain_ids(p.independent_side) << '\n';
        return limit == 0 || ++count < limit;
    });
    if (show_stats)
        err << "emitted " << st.emitted << " nodes " << st.nodes << " max_depth " << st.max_depth << " depth_bound "
            << depth_bound(g.num_vertices()) << " size_bound " << family_size_bound(g.num_vertices()) << '\n';
    return ok;
}

inline int cmd_gen(std::size_t n, double p, std::uint64_t seed, std::optional<std::size_t> noise, std::size_t budget,
                   std::ostream& out) {
    random_instance_spec spec;
    spec.n = n;
    spec.edge_probability = p;
    spec.seed = seed;
    spec.budget = budget;
    if (noise) {
        if (*noise > n)
            throw usage_error("--noise exceeds --n");
        spec.planted = planted_spec{n - *noise, *noise};
    }
    auto inst = generate_random_instance(spec);
    write_graph(out, inst.g,
                {"generated n=" + std::to_string(n) + " p=" + std::to_string(p) + " seed=" + std::to_string(seed) +
                     (noise ? " planted_noise=" + std::to_string(*noise) : std::string()),
                 "budget " + std::to_string(inst.budget)});
    return ok;
}

inline int cmd_oracle(const std::string& file, const std::string& format, std::istream& in, std::ostream& out) {
    graph g = load_graph(file, in);
    if (g.num_vertices() > 12)
        throw usage_error("oracle is limited to 12 vertices");
    auto svd = oracle_min_svd(g);
    auto vc = oracle_min_vc(g);
    if (format == "plain") {
        out << "min_svd: " << svd.minimum << "\nsvd_witness:" << plain_ids(svd.witness) << "\nmin_vc: " << vc.minimum
            << "\nvc_witness:" << plain_ids(vc.witness) << '\n';
    } else {
        json j = {{"min_svd", svd.minimum},
                  {"svd_witness", ids(svd.witness)},
                  {"min_vc", vc.minimum},
                  {"vc_witness", ids(vc.witness)}};
        out << j.dump(2) << '\n';
    }
    return ok;
}

struct bench_args {
    std::size_t n = 30;
    std::size_t k_min = 2;
    std::size_t k_max = 6;
    std::size_t instances = 1;
    std::uint64_t seed = 1;
    double p = 0.5;
    std::vector<std::string> engines{"partition", "baseline"};
    std::string kernelize = "off";
};

/// One CSV row per (instance, engine). Instance i at budget k uses seed + 1000 * k + i.
inline int cmd_bench(const bench_args& a, std::ostream& out) {
    out << "n,k,engine,verdict,elapsed_ms,partitions_tried,vc_calls\n";
    for (std::size_t k = a.k_min; k <= a.k_max; ++k) {
        for (std::size_t i = 0; i < a.instances; ++i) {
            if (k > a.n)
                throw usage_error("budget exceeds instance size");
            random_instance_spec spec;
            spec.n = a.n;
            spec.edge_probability = a.p;
            spec.seed = a.seed + 1000 * k + i;
            spec.planted = planted_spec{a.n - k, k};
            auto inst = generate_random_instance(spec);
            for (const auto& e : a.engines) {
                solve_options opts;
                opts.kernelize = a.kernelize == "on";
                opts.method = e == "baseline" ? engine::baseline : e == "oracle" ? engine::oracle : engine::partition;
                auto r = svd_solve(inst, opts);
                out << a.n << ',' << k << ',' << e << ',' << (r.feasible() ? "yes" : "no") << ',' << std::fixed
                    << std::setprecision(3) << r.stats.elapsed_ms << ',' << r.stats.partitions_tried << ','
                    << r.stats.vc_calls << '\n';
            }
        }
    }
    return ok;
}

/// Entry point. Exit status: 0 feasible / valid, 1 infeasible verdict, 2 usage or input error.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Split Vertex Deletion solver"};
    app.require_subcommand(1);

    solve_args sa;
    auto* solve = app.add_subcommand("solve", "delete at most k vertices to leave a split graph");
    solve->add_option("file", sa.file, "edge-list file (default: stdin)");
    solve->add_option("-k", sa.k, "deletion budget");
    solve->add_flag("--minimize", sa.minimize, "find the smallest feasible budget");
    solve->add_option("--kernelize", sa.kernelize)->check(CLI::IsMember({"on", "off"}));
    solve->add_option("--engine", sa.engine_name)->check(CLI::IsMember({"partition", "baseline", "oracle"}));
    solve->add_option("--parallel", sa.parallel, "worker threads (default: SPLITVD_THREADS or 1)");
    solve->add_option("--format", sa.format)->check(CLI::IsMember({"json", "plain"}));
    solve->add_flag("--no-prune", sa.no_prune, "disable generator subtree pruning");

    std::string vc_file, vc_format = "json";
    std::size_t vc_k = 0;
    auto* vc = app.add_subcommand("vc", "vertex cover of size at most k");
    vc->add_option("file", vc_file);
    vc->add_option("-k", vc_k)->required();
    vc->add_option("--format", vc_format)->check(CLI::IsMember({"json", "plain"}));

    std::string rec_file, rec_format = "json";
    auto* rec = app.add_subcommand("recognize", "split certificate or forbidden induced subgraph");
    rec->add_option("file", rec_file);
    rec->add_option("--format", rec_format)->check(CLI::IsMember({"json", "plain"}));

    std::string part_file;
    std::uint64_t part_limit = 0;
    bool part_stats = false;
    auto* parts = app.add_subcommand("partitions", "dump the generated partition family");
    parts->add_option("file", part_file);
    parts->add_option("--limit", part_limit, "stop after this many partitions (0: all)");
    parts->add_flag("--stats", part_stats, "print generator statistics to stderr");

    std::size_t gen_n = 10, gen_budget = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::optional<std::size_t> gen_noise;
    auto* gen = app.add_subcommand("gen", "random instance in edge-list format");
    gen->add_option("--n", gen_n);
    gen->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed);
    gen->add_option("--noise", gen_noise, "planted mode: number of noise vertices");
    gen->add_option("--budget", gen_budget, "budget recorded for G(n,p) mode");

    std::string or_file, or_format = "json";
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth (n <= 12)");
    orc->add_option("file", or_file);
    orc->add_option("--format", or_format)->check(CLI::IsMember({"json", "plain"}));

    bench_args ba;
    auto* bench = app.add_subcommand("bench", "CSV timings on planted instances");
    bench->add_option("--n", ba.n);
    bench->add_option("--k-min", ba.k_min);
    bench->add_option("--k-max", ba.k_max);
    bench->add_option("--instances", ba.instances);
    bench->add_option("--seed", ba.seed);
    bench->add_option("--p", ba.p)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--engines", ba.engines)->delimiter(',')->check(CLI::IsMember({"partition", "baseline", "oracle"}));
    bench->add_option("--kernelize", ba.kernelize)->check(CLI::IsMember({"on", "off"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*solve)
            return cmd_solve(sa, in, out);
        if (*vc)
            return cmd_vc(vc_file, vc_k, vc_format, in, out);
        if (*rec)
            return cmd_recognize(rec_file, rec_format, in, out);
        if (*parts)
            return cmd_partitions(part_file, part_limit, part_stats, in, out, err);
        if (*gen)
            return cmd_gen(gen_n, gen_p, gen_seed, gen_noise, gen_budget, out);
        if (*orc)
            return cmd_oracle(or_file, or_format, in, out);
        if (*bench)
            return cmd_bench(ba, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace splitvd::cli
