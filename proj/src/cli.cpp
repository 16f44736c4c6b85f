#include "divrank/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include "CLI11.hpp"

#include "divrank/chipfire.hpp"
#include "divrank/distance.hpp"
#include "divrank/errors.hpp"
#include "divrank/io.hpp"
#include "divrank/oracles.hpp"
#include "divrank/reductions.hpp"
#include "divrank/tss.hpp"

namespace divrank::cli {

namespace {

using io::json;

struct Options {
    std::string format = "text";
    bool witness = false;
    bool oracle = false;
    std::size_t max_n = kDefaultMaxVertices;
    std::optional<std::uint64_t> seed;

    std::string graph_path;
    std::string second_path;  // divisor or thresholds
    std::string out_prefix;
    std::optional<Chips> m;
    bool verify_m = false;

    bool json() const { return format == "json"; }
};

std::string join(std::span<const Chips> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

template <class T>
std::string join_ids(const std::vector<T>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

void guard(const Options& opt, std::size_t n, const char* what) {
    if (n > opt.max_n) {
        throw InputError(std::string(what) + " has " + std::to_string(n) +
                         " vertices, above the --max-n guard of " + std::to_string(opt.max_n));
    }
}

struct GraphAndDivisor {
    Multigraph g;
    Divisor f;
};

GraphAndDivisor load_pair(const Options& opt) {
    GraphAndDivisor p{io::read_graph_file(opt.graph_path), io::read_divisor_file(opt.second_path)};
    require_connected(p.g, p.f);
    return p;
}

struct GraphAndThresholds {
    Multigraph g;
    Thresholds tau;
};

GraphAndThresholds load_tss(const Options& opt) {
    GraphAndThresholds p{io::read_graph_file(opt.graph_path),
                         io::read_thresholds_file(opt.second_path)};
    validate_tss_instance(p.g, p.tau);
    return p;
}

int cmd_rank(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    guard(opt, g.vertex_count(), "graph");
    const Chips r = rank(g, f);
    std::optional<Chips> check;
    if (opt.oracle) check = oracles::rank_definitional(g, f);
    const bool ok = !check || *check == r;
    if (opt.json()) {
        json j{{"rank", r}};
        if (check) {
            j["oracle"] = *check;
            j["agrees"] = ok;
        }
        out << j.dump() << "\n";
    } else {
        out << r << "\n";
        if (check) out << "oracle " << *check << (ok ? " OK" : " MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_winnable(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    const bool w = is_winnable(g, f);
    std::optional<bool> check;
    if (opt.oracle) {
        guard(opt, g.vertex_count(), "graph");
        check = oracles::LaplacianLattice(g).winnable(f);
    }
    const bool ok = !check || *check == w;
    if (opt.json()) {
        json j{{"winnable", w}};
        if (check) {
            j["oracle"] = *check;
            j["agrees"] = ok;
        }
        out << j.dump() << "\n";
    } else {
        out << (w ? "winnable" : "not winnable") << "\n";
        if (check) out << "oracle " << (*check ? "winnable" : "not winnable") << (ok ? " OK" : " MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_halting(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    HaltVerdict v;
    if (opt.seed) {
        std::mt19937_64 rng(*opt.seed);
        v = classify_halting(g, f, rng);
    } else {
        v = classify_halting(g, f);
    }
    if (opt.json()) {
        json j{{"kind", v.halting() ? "halting" : "non-halting"}};
        if (v.stable) j["stable"] = v.stable->vector();
        if (v.witness) j["witness"] = io::to_json(*v.witness);
        out << j.dump() << "\n";
    } else if (v.halting()) {
        out << "halting\nstable: " << join(v.stable->values()) << "\n";
    } else {
        out << "non-halting\nwitness: " << join_ids(v.witness->order) << "\n";
    }
    return kExitOk;
}

int cmd_trace(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    GameTrace t = canonical_game(g, f);
    const bool nonhalting = std::all_of(t.counts.begin(), t.counts.end(), [](auto c) { return c > 0; });
    if (opt.json()) {
        out << json{{"kind", nonhalting ? "non-halting" : "halting"}, {"trace", io::to_json(t)}}.dump()
            << "\n";
        return kExitOk;
    }
    Divisor cur = f;
    out << "start: " << join(cur.values()) << "\n";
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        cur = fire(g, cur, t.order[i]);
        out << "step " << i + 1 << ": fire " << t.order[i] << " -> " << join(cur.values()) << "\n";
    }
    out << (nonhalting ? "non-halting (every vertex fired)" : "halting (stable)") << "\n";
    return kExitOk;
}

int cmd_recurrent(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    auto r = is_recurrent(g, f);
    std::optional<bool> check;
    if (opt.oracle) check = oracles::recurrent_permutation(g, f);
    const bool ok = !check || *check == r.recurrent;
    if (opt.json()) {
        json j{{"recurrent", r.recurrent}};
        if (opt.witness && r.witness) j["witness"] = io::to_json(*r.witness);
        if (check) {
            j["oracle"] = *check;
            j["agrees"] = ok;
        }
        out << j.dump() << "\n";
    } else {
        out << (r.recurrent ? "recurrent" : "not recurrent") << "\n";
        if (opt.witness && r.witness) out << "order: " << join_ids(r.witness->order) << "\n";
        if (check) out << "oracle " << (*check ? "recurrent" : "not recurrent") << (ok ? " OK" : " MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_distance(const Options& opt, std::ostream& out, bool to_recurrent) {
    auto [g, f] = load_pair(opt);
    guard(opt, g.vertex_count(), "graph");
    DistanceResult r = to_recurrent ? dist_rec(g, f) : dist_nonhalt(g, f);
    if (opt.json()) {
        out << io::to_json(r).dump() << "\n";
    } else {
        out << r.value << "\n";
        if (opt.witness) out << "witness: " << join(r.witness.values()) << "\n";
    }
    return kExitOk;
}

int cmd_tss(const Options& opt, std::ostream& out) {
    auto [g, tau] = load_tss(opt);
    guard(opt, g.vertex_count(), "graph");
    TargetSet s = min_target_set(g, tau);
    std::optional<std::size_t> check;
    if (opt.oracle) check = oracles::ts_subset_enumeration(g, tau);
    const bool ok = !check || *check == s.size();
    if (opt.json()) {
        json j{{"size", s.size()}, {"target_set", io::to_json(s)}};
        if (check) {
            j["oracle"] = *check;
            j["agrees"] = ok;
        }
        out << j.dump() << "\n";
    } else {
        out << s.size() << "\n" << join_ids(s.members) << "\n";
        if (check) out << "oracle " << *check << (ok ? " OK" : " MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << content;
}

// Writes prefix.graph / prefix.div / prefix.json, or prints the bundle.
int emit_bundle(const Options& opt, std::ostream& out, const Multigraph& g, const Divisor& f,
                const json& bundle) {
    json sidecar{{"N", bundle.at("N")}, {"M", bundle.at("M")}, {"roles", bundle.at("roles")}};
    if (bundle.contains("new_vertex")) sidecar["new_vertex"] = bundle.at("new_vertex");
    if (!opt.out_prefix.empty()) {
        write_file(opt.out_prefix + ".graph", io::graph_text(g));
        write_file(opt.out_prefix + ".div", io::divisor_text(f));
        write_file(opt.out_prefix + ".json", sidecar.dump() + "\n");
        if (opt.json()) {
            out << json{{"graph", opt.out_prefix + ".graph"},
                        {"divisor", opt.out_prefix + ".div"},
                        {"sidecar", opt.out_prefix + ".json"}}
                       .dump()
                << "\n";
        } else {
            out << "wrote " << opt.out_prefix << ".graph " << opt.out_prefix << ".div "
                << opt.out_prefix << ".json\n";
        }
        return kExitOk;
    }
    if (opt.json()) {
        out << bundle.dump() << "\n";
    } else {
        out << "# vertices " << g.vertex_count() << ", edges " << g.edge_count() << "\n";
        if (!bundle.at("N").is_null()) out << "# N = " << bundle.at("N").get<Chips>() << "\n";
        if (!bundle.at("M").is_null()) out << "# M = " << bundle.at("M").get<Chips>() << "\n";
        out << io::graph_text(g) << "# chips\n" << io::divisor_text(f);
    }
    return kExitOk;
}

int cmd_reduce_tss_to_rec(const Options& opt, std::ostream& out) {
    auto [g, tau] = load_tss(opt);
    auto inst = reduce_tss_to_rec(g, tau);
    return emit_bundle(opt, out, inst.gprime, inst.x, io::to_json(inst));
}

int cmd_reduce_rec_to_nonhalt(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    if (opt.verify_m) guard(opt, g.vertex_count(), "graph");
    auto inst = reduce_rec_to_nonhalt(g, f, opt.m, opt.verify_m);
    return emit_bundle(opt, out, inst.gpp, inst.fpp, io::to_json(inst));
}

int cmd_reduce_tss_to_nonhalt(const Options& opt, std::ostream& out) {
    auto [g, tau] = load_tss(opt);
    auto inst = reduce_tss_to_nonhalt(g, tau);
    return emit_bundle(opt, out, inst.second.gpp, inst.second.fpp, io::to_json(inst));
}

int cmd_subdivide(const Options& opt, std::ostream& out) {
    auto [g, f] = load_pair(opt);
    auto inst = subdivide_to_simple(g, f);
    return emit_bundle(opt, out, inst.graph, inst.divisor, io::to_json(inst));
}

bool verify_one(const Options& opt, const Multigraph& g, const Thresholds& tau, std::ostream& out) {
    validate_tss_instance(g, tau);
    const std::size_t n_pp = 3 * g.vertex_count() + 2 * static_cast<std::size_t>(g.edge_count()) + 1;
    guard(opt, n_pp, "reduced graph");
    auto reports = oracles::verify_reduction_chain(g, tau);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.agrees;
        if (opt.json()) {
            out << io::to_json(r).dump() << "\n";
        } else {
            out << r.quantity << ": " << r.pipeline << (r.relation == oracles::Relation::Equal ? " vs " : " > ")
                << r.oracle << (r.agrees ? "" : "  FAILED") << "\n";
        }
    }
    if (!opt.json()) out << (ok ? "OK" : "FAIL") << "\n";
    return ok;
}

int cmd_verify_chain(const Options& opt, std::ostream& out) {
    namespace fs = std::filesystem;
    if (fs::is_directory(opt.graph_path)) {
        std::vector<fs::path> graphs;
        for (const auto& entry : fs::directory_iterator(opt.graph_path)) {
            if (entry.path().extension() == ".graph") graphs.push_back(entry.path());
        }
        std::sort(graphs.begin(), graphs.end());
        bool ok = true;
        for (const auto& path : graphs) {
            fs::path thr = path;
            thr.replace_extension(".thr");
            if (!opt.json()) out << "== " << path.filename().string() << "\n";
            ok = verify_one(opt, io::read_graph_file(path.string()),
                            io::read_thresholds_file(thr.string()), out) && ok;
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }
    if (opt.second_path.empty()) throw InputError("verify-chain needs a thresholds file");
    auto [g, tau] = load_tss(opt);
    return verify_one(opt, g, tau, out) ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Chip-firing, divisor rank, and target-set reductions", "divrank"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--witness", opt.witness, "Print witnesses");
    app.add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracle");
    app.add_option("--max-n", opt.max_n, "Vertex-count guard for exponential solvers");
    app.add_option("--seed", opt.seed, "Randomised firing policy seed (halting)");

    auto pair_cmd = [&](const std::string& name, const std::string& help, const std::string& second) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("graph", opt.graph_path, "Graph file")->required();
        sub->add_option(second, opt.second_path, second + " file")->required();
        return sub;
    };

    auto* rank_cmd = pair_cmd("rank", "Rank of a divisor", "divisor");
    auto* winnable_cmd = pair_cmd("winnable", "Winnability of a divisor", "divisor");
    auto* halting_cmd = pair_cmd("halting", "Halting verdict with stable divisor or witness", "divisor");
    auto* recurrent_cmd = pair_cmd("recurrent", "Recurrence via the exactly-once game", "divisor");
    auto* nonhalt_cmd = pair_cmd("dist-nonhalt", "Distance to a non-halting divisor", "divisor");
    auto* rec_cmd = pair_cmd("dist-rec", "Distance to a recurrent divisor", "divisor");
    auto* tss_cmd = pair_cmd("tss", "Minimum target set", "thresholds");
    auto* subdivide_cmd = pair_cmd("subdivide", "Subdivide every edge", "divisor");
    subdivide_cmd->add_option("--out", opt.out_prefix, "Write PREFIX.graph/.div/.json");
    auto* trace_cmd = pair_cmd("trace", "Canonical lowest-index game log", "divisor");

    auto* verify_cmd = app.add_subcommand("verify-chain", "Check the reduction chain on a TSS instance");
    verify_cmd->add_option("graph", opt.graph_path, "Graph file or directory of NAME.graph/NAME.thr")
        ->required();
    verify_cmd->add_option("thresholds", opt.second_path, "Thresholds file");

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a reduced instance");
    reduce_cmd->require_subcommand(1);
    reduce_cmd->fallthrough();
    reduce_cmd->add_option("--out", opt.out_prefix, "Write PREFIX.graph/.div/.json");
    auto reduce_sub = [&](const std::string& name, const std::string& help, const std::string& second) {
        auto* sub = reduce_cmd->add_subcommand(name, help);
        sub->add_option("graph", opt.graph_path, "Graph file")->required();
        sub->add_option(second, opt.second_path, second + " file")->required();
        return sub;
    };
    auto* r_tss_rec = reduce_sub("tss-to-rec", "Min-TSS to Dist-Rec", "thresholds");
    auto* r_rec_nh = reduce_sub("rec-to-nonhalt", "Dist-Rec to Dist-Nonhalt", "divisor");
    r_rec_nh->add_option("--m", opt.m, "Apex multiplicity M");
    r_rec_nh->add_flag("--verify", opt.verify_m, "Check a supplied M against dist_rec");
    auto* r_tss_nh = reduce_sub("tss-to-nonhalt", "Composed reduction with M = |V| + 1", "thresholds");

    // CLI11 reports a stray word as a missing subcommand; name it instead.
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format" || a == "--max-n" || a == "--seed") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        if (app.get_subcommand_no_throw(a) == nullptr) {
            err << "error: unknown command '" << a << "'\n";
            return kExitInputError;
        }
        break;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (opt.max_n > kDefaultMaxVertices) {
        err << "warning: --max-n " << opt.max_n
            << " exceeds the desk-scale default; the exact solvers are exponential\n";
    }

    try {
        if (rank_cmd->parsed()) return cmd_rank(opt, out);
        if (winnable_cmd->parsed()) return cmd_winnable(opt, out);
        if (halting_cmd->parsed()) return cmd_halting(opt, out);
        if (recurrent_cmd->parsed()) return cmd_recurrent(opt, out);
        if (nonhalt_cmd->parsed()) return cmd_distance(opt, out, false);
        if (rec_cmd->parsed()) return cmd_distance(opt, out, true);
        if (tss_cmd->parsed()) return cmd_tss(opt, out);
        if (subdivide_cmd->parsed()) return cmd_subdivide(opt, out);
        if (trace_cmd->parsed()) return cmd_trace(opt, out);
        if (verify_cmd->parsed()) return cmd_verify_chain(opt, out);
        if (r_tss_rec->parsed()) return cmd_reduce_tss_to_rec(opt, out);
        if (r_rec_nh->parsed()) return cmd_reduce_rec_to_nonhalt(opt, out);
        if (r_tss_nh->parsed()) return cmd_reduce_tss_to_nonhalt(opt, out);
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: no command\n";
    return kExitInputError;
}

}  // namespace divrank::cli
