// mvpark: command-line front end for the mvp library.
//
// Exit codes: 0 success / PASS, 1 property failure, 2 usage or contract error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvp/mvp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "pretty";
    std::string out;
    int jobs = 1;
    bool force = false;
    std::uint64_t seed = 1;
    bool trace = false;
};

// A command's result: tables for csv/json, free text for pretty.
struct Output {
    std::vector<mvp::ReportTable> tables;
    std::string pretty;
    int exit_code = kExitOk;
};

std::string render(const Output& o, const std::string& format) {
    if (format == "pretty") return o.pretty;
    if (format == "csv") {
        std::string s;
        for (std::size_t k = 0; k < o.tables.size(); ++k) s += (k ? "\n" : "") + mvp::to_csv(o.tables[k]);
        return s;
    }
    if (o.tables.size() == 1) return mvp::to_json(o.tables.front()).dump(2) + "\n";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : o.tables) arr.push_back(mvp::to_json(t));
    return arr.dump(2) + "\n";
}

mvp::Cell cell(std::int64_t v) { return mvp::Cell(v); }
mvp::Cell cell(std::string s) { return mvp::Cell(std::move(s)); }

Output single_value(const std::string& name, const std::string& header, const std::string& value) {
    Output o;
    o.tables.push_back({name, {header}, {{cell(value)}}, {}});
    o.pretty = value + "\n";
    return o;
}

void require(bool present, const std::string& what) {
    if (!present) throw UsageError("missing required option " + what);
}

int guarded(int value, int guard, const std::string& what, bool force) {
    if (value < 1) throw UsageError(what + " must be >= 1");
    if (value > guard && !force)
        throw UsageError(what + " = " + std::to_string(value) + " exceeds the feasibility guard " + std::to_string(guard) +
                         "; pass --force to run anyway");
    return value;
}

// ++ outcome ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

Output cmd_outcome(const std::string& model, const std::string& prefs, const Globals& g) {
    const auto p = mvp::parse_preference(prefs);
    Output o;
    if (model == "classical") {
        const auto pi = mvp::outcome_classical(p);
        o.tables.push_back({"outcome", {"model", "preference", "outcome"}, {{cell(model), cell(prefs), cell(mvp::to_string(pi))}}, {}});
        o.pretty = mvp::to_string(pi) + "\n";
        return o;
    }
    const auto res = mvp::outcome_mvp(p);
    o.tables.push_back({"outcome", {"model", "preference", "outcome"}, {{cell(model), cell(prefs), cell(mvp::to_string(res.outcome))}}, {}});
    o.pretty = mvp::to_string(res.outcome) + "\n";
    if (g.trace) {
        mvp::ReportTable bumps{"bumps", {"car", "from_spot", "to_spot", "bumper"}, {}, {}};
        for (const auto& b : res.bump_log) {
            bumps.add_row({cell(b.car), cell(b.from_spot), cell(b.to_spot), cell(b.bumper)});
            o.pretty += "car " + std::to_string(b.car) + " bumped by car " + std::to_string(b.bumper) + ": spot " +
                        std::to_string(b.from_spot) + " -> " + std::to_string(b.to_spot) + "\n";
        }
        o.tables.push_back(std::move(bumps));
    }
    return o;
}

// ++ fibre ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

Output cmd_fibre(const std::string& perm, const std::string& method, const Globals& g) {
    const auto pi = mvp::parse_permutation(perm);
    const int cap = g.force ? pi.size() : mvp::kDefaultBruteForceCap;
    std::optional<std::vector<mvp::ParkingPreference>> via_subgraph, via_brute;
    if (method != "brute") via_subgraph = mvp::fibre_via_subgraphs(pi, true, g.jobs);
    if (method != "subgraph") via_brute = mvp::fibre_brute(pi, cap);

    const auto& fibre = via_subgraph ? *via_subgraph : *via_brute;
    Output o;
    mvp::ReportTable t{"fibre", {"preference", "subgraph"}, {}, {{"permutation", mvp::to_string(pi)}, {"method", method}}};
    for (const auto& p : fibre) {
        const std::string arcs = mvp::to_string(mvp::pf_to_subgraph(p));
        t.add_row({cell(mvp::to_string(p)), cell(arcs)});
        o.pretty += mvp::to_string(p) + (arcs.empty() ? "" : "  {" + arcs + "}") + "\n";
    }
    t.metadata.emplace_back("size", std::to_string(fibre.size()));
    o.pretty += "size " + std::to_string(fibre.size()) + "\n";
    if (via_subgraph && via_brute) {
        const bool same = *via_subgraph == *via_brute;
        t.metadata.emplace_back("subgraph_equals_brute", same ? "PASS" : "FAIL");
        o.pretty += std::string(same ? "PASS" : "FAIL") + " subgraph fibre (" + std::to_string(via_subgraph->size()) + ") vs brute force (" +
                    std::to_string(via_brute->size()) + ")\n";
        if (!same) o.exit_code = kExitFailure;
    }
    o.tables.push_back(std::move(t));
    return o;
}

// ++ table ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

Output cmd_table(const std::string& which, std::optional<int> max_n, std::optional<int> max_m, const Globals& g) {
    using G = mvp::TableGuards;
    mvp::ReportTable t;
    if (which == "bounds") {
        t = mvp::bounds_table(guarded(max_n.value_or(G::bounds_max_n), G::bounds_max_n, "--max-n", g.force), g.jobs);
    } else if (which == "bipartite") {
        const int m = guarded(max_m.value_or(G::bipartite_max), G::bipartite_max, "--max-m", g.force);
        const int n = guarded(max_n.value_or(G::bipartite_max), G::bipartite_max, "--max-n", g.force);
        t = mvp::bipartite_table(m, n, g.jobs);
    } else if (which == "dec-vs-split") {
        const int n = guarded(max_n.value_or(G::dec_vs_split_max_n), G::dec_vs_split_max_n, "--max-n", g.force);
        if (n < 3) throw UsageError("--max-n must be >= 3 for dec-vs-split");
        t = mvp::dec_vs_split_table(n, g.jobs);
    } else {
        const int n = guarded(max_n.value_or(G::conjecture_max_n), G::conjecture_max_n, "--max-n", g.force);
        if (n < 3) throw UsageError("--max-n must be >= 3 for conjecture");
        t = mvp::conjecture_table(n, g.jobs);
    }
    Output o;
    o.pretty = mvp::to_pretty(t);
    o.tables.push_back(std::move(t));
    return o;
}

// ++ motzkin ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

struct MotzkinArgs {
    std::string sub;
    std::optional<std::string> prefs, path, arcs;
    std::optional<int> n;
    bool count = false;
};

Output cmd_motzkin(const MotzkinArgs& a) {
    if (a.sub == "phi") {
        require(a.prefs.has_value(), "-p");
        return single_value("phi", "path", mvp::to_string(mvp::phi(mvp::parse_preference(*a.prefs))));
    }
    if (a.sub == "inverse") {
        require(a.path.has_value(), "--path");
        return single_value("phi_inverse", "preference", mvp::to_string(mvp::phi_inverse(mvp::parse_path(*a.path))));
    }
    if (a.sub == "rep") {
        require(a.prefs.has_value(), "-p");
        return single_value("representative", "preference", mvp::to_string(mvp::class_representative_dec(mvp::parse_preference(*a.prefs))));
    }
    require(a.n.has_value(), "-n");
    const int n = *a.n;
    if (a.sub == "noncross") {
        if (n < 0) throw UsageError("-n must be >= 0");
        const auto all = mvp::enumerate_noncrossing(n);
        Output o;
        if (a.count) {
            o = single_value("noncross_count", "count", std::to_string(all.size()));
            o.tables.front().rows.front().front() = cell(static_cast<std::int64_t>(all.size()));
            return o;
        }
        mvp::ReportTable t{"noncross", {"arcs", "path"}, {}, {{"n", std::to_string(n)}}};
        for (const auto& m : all) {
            const std::string arcs = mvp::to_string(m.arcs()), path = mvp::to_string(mvp::noncross_to_motzkin(m));
            t.add_row({cell(arcs), cell(path)});
            o.pretty += path + "  {" + arcs + "}\n";
        }
        o.pretty += "count " + std::to_string(all.size()) + "\n";
        o.tables.push_back(std::move(t));
        return o;
    }
    require(a.arcs.has_value(), "--arcs");
    const auto s = mvp::parse_arcset(*a.arcs, n);
    if (a.sub == "psi") return single_value("psi", "arcs", mvp::to_string(mvp::psi_dec_to_split(s, n)));

    // primes
    Output o;
    mvp::ReportTable t{"primes", {"first", "last"}, {}, {}};
    for (const auto& iv : mvp::prime_decomposition(mvp::NonCrossingMatching(s))) {
        t.add_row({cell(iv.first), cell(iv.last)});
        o.pretty += "[" + std::to_string(iv.first) + "," + std::to_string(iv.last) + "]\n";
    }
    o.tables.push_back(std::move(t));
    return o;
}

// ++ sandpile +++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

Output minrec_output(const mvp::SandpileConfig& c, mvp::MinrecVariant variant, const Globals& g) {
    std::vector<mvp::MinrecIteration> trace;
    const auto result = variant == mvp::MinrecVariant::mvp ? mvp::minrec(c, &trace) : mvp::minrec_classical(c, &trace);
    Output o = single_value(variant == mvp::MinrecVariant::mvp ? "minrec" : "minrec_classical", "config", mvp::to_string(result));
    if (!g.trace) return o;
    mvp::ReportTable t{"minrec_trace", {"j", "i", "vertex", "path"}, {}, {}};
    std::string lines;
    for (const auto& it : trace) {
        const std::string path = mvp::text::join_ints(it.values, "->");
        t.add_row({cell(it.j), cell(it.i), cell(it.decremented), cell(path)});
        lines += "j=" + std::to_string(it.j) + " i=" + std::to_string(it.i) + " c_" + std::to_string(it.decremented) + ": " + path + "\n";
    }
    o.pretty = lines + o.pretty;
    o.tables.push_back(std::move(t));
    return o;
}

Output cmd_sandpile(const std::string& sub, const std::optional<std::string>& config, const std::optional<std::string>& prefs,
                    const Globals& g) {
    if (sub == "mvp-outcome") {
        require(prefs.has_value(), "-p");
        return single_value("mvp_outcome", "outcome", mvp::to_string(mvp::mvp_outcome_via_asm(mvp::parse_preference(*prefs))));
    }
    require(config.has_value(), "-c");
    const auto c = mvp::parse_config(*config);
    if (sub == "stabilise") {
        const auto s = mvp::stabilise(c);
        Output o = single_value("stabilise", "config", mvp::to_string(s.config));
        o.tables.front().metadata.emplace_back("topplings", mvp::text::join_ints(s.topplings));
        if (g.trace) o.pretty = "topplings " + mvp::text::join_ints(s.topplings) + "\n" + o.pretty;
        return o;
    }
    if (sub == "recurrent") {
        Output o = single_value("recurrent", "recurrent", mvp::is_recurrent(c) ? "recurrent" : "not recurrent");
        o.tables.push_back({"minimal", {"minimal_recurrent"}, {{cell(std::int64_t{mvp::is_min_recurrent(c) ? 1 : 0})}}, {}});
        return o;
    }
    if (sub == "minrec") return minrec_output(c, mvp::MinrecVariant::mvp, g);
    if (sub == "minrec-classical") return minrec_output(c, mvp::MinrecVariant::classical, g);
    return single_value("cantop", "permutation", mvp::to_string(mvp::canonical_toppling(c)));
}

// ++ verify +++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

Output cmd_verify(const std::string& suite, std::optional<int> n, std::optional<int> m, const Globals& g) {
    std::vector<const mvp::verify::Suite*> selected;
    if (suite == "all") {
        for (const auto& s : mvp::verify::suites()) selected.push_back(&s);
    } else {
        const auto* s = mvp::verify::find_suite(suite);
        if (!s) throw UsageError("unknown suite '" + suite + "'");
        selected.push_back(s);
    }

    Output o;
    mvp::ReportTable t{"verify", {"suite", "result", "checked", "coverage", "counterexample"}, {}, {{"seed", std::to_string(g.seed)}}};
    for (const auto* s : selected) {
        mvp::verify::SuiteArgs args;
        args.seed = g.seed;
        if (s->uses_m)
            args.m = s->name == "thm-4.1" && m.value_or(s->default_n) == 0 ? 0 : guarded(m.value_or(s->default_n), s->guard_n, "--m", g.force);
        else
            args.n = guarded(n.value_or(s->default_n), s->guard_n, "--n", g.force);
        const auto r = s->run(args);
        const std::string verdict = r.passed() ? "PASS" : "FAIL";
        t.add_row({cell(r.name), cell(verdict), cell(static_cast<std::int64_t>(r.checked)), cell(r.coverage), cell(r.counterexample.value_or(""))});
        o.pretty += verdict + " " + r.name + ": " + std::to_string(r.checked) + " checks, " + r.coverage + "\n";
        if (!r.passed()) {
            o.pretty += "  counterexample: " + *r.counterexample + "\n";
            o.exit_code = kExitFailure;
        }
    }
    o.tables.push_back(std::move(t));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MVP and classical parking functions, inversion-graph fibres, Motzkin paths and sandpiles"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "Worker threads for fibre enumeration")->check(CLI::Range(1, 256));
    app.add_flag("--force", g.force, "Allow sizes beyond the feasibility guards");
    app.add_option("--seed", g.seed, "Seed for randomised toppling orders");
    app.add_flag("--trace", g.trace, "Print bump events, toppling orders and minrec iterations");

    std::string model = "mvp", prefs_arg, perm, method = "subgraph";
    auto* outcome = app.add_subcommand("outcome", "Outcome permutation of a parking function");
    outcome->add_option("--model", model)->check(CLI::IsMember({"mvp", "classical"}));
    outcome->add_option("-p,--prefs", prefs_arg)->required();

    auto* fibre = app.add_subcommand("fibre", "MVP fibre of a permutation");
    fibre->add_option("--perm", perm)->required();
    fibre->add_option("--method", method)->check(CLI::IsMember({"subgraph", "brute", "both"}));

    std::string which;
    std::optional<int> max_n, max_m;
    auto* table = app.add_subcommand("table", "Enumerative tables");
    table->add_option("which", which)->required()->check(CLI::IsMember({"bounds", "bipartite", "dec-vs-split", "conjecture"}));
    table->add_option("--max-n", max_n);
    table->add_option("--max-m", max_m);

    MotzkinArgs mz;
    auto* motzkin = app.add_subcommand("motzkin", "Motzkin paths and non-crossing matchings");
    motzkin->add_option("sub", mz.sub)->required()->check(CLI::IsMember({"phi", "inverse", "rep", "noncross", "psi", "primes"}));
    motzkin->add_option("-p,--prefs", mz.prefs);
    motzkin->add_option("--path", mz.path);
    motzkin->add_option("--arcs", mz.arcs, "Arcs as a-b,c-d");
    motzkin->add_option("-n", mz.n);
    motzkin->add_flag("--count", mz.count);

    std::string sp_sub;
    std::optional<std::string> sp_config, sp_prefs;
    auto* sandpile = app.add_subcommand("sandpile", "Abelian sandpile on the complete graph");
    sandpile->add_option("sub", sp_sub)
        ->required()
        ->check(CLI::IsMember({"stabilise", "recurrent", "minrec", "minrec-classical", "cantop", "mvp-outcome"}));
    sandpile->add_option("-c,--config", sp_config);
    sandpile->add_option("-p,--prefs", sp_prefs);

    std::string suite = "all";
    std::optional<int> v_n, v_m;
    auto* verify = app.add_subcommand("verify", "Exhaustive property suites");
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : mvp::verify::suites()) suite_names.push_back(s.name);
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names));
    verify->add_option("--n", v_n);
    verify->add_option("--m", v_m);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Output o;
        if (*outcome) o = cmd_outcome(model, prefs_arg, g);
        else if (*fibre) o = cmd_fibre(perm, method, g);
        else if (*table) o = cmd_table(which, max_n, max_m, g);
        else if (*motzkin) o = cmd_motzkin(mz);
        else if (*sandpile) o = cmd_sandpile(sp_sub, sp_config, sp_prefs, g);
        else o = cmd_verify(suite, v_n, v_m, g);

        const std::string text = render(o, g.format);
        if (g.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(g.out, std::ios::binary);
            if (!f || !(f << text)) {
                std::cerr << "error: cannot write " << g.out << "\n";
                return kExitUsage;
            }
        }
        return o.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mvp::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}
