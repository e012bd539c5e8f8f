// Command-line front end. Exit codes: 0 success (AllDegreeOne / AllGenerated,
// suite all passing), 2 NotDegreeOne / extension found / suite failures,
// 3 Unknown or undecided, 1 errors.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "coideal/cache.hpp"
#include "coideal/classify.hpp"
#include "coideal/inputs.hpp"

using namespace coideal;
using nlohmann::json;

namespace {

struct Job {
    std::string rack, cocycle, format = "table", engine = "exact", cache_dir, effort = "fast", manifest, gens, W, word;
    int max_degree = -1, primes = 2;
    uint64_t seed = 0;
    bool no_cache = false;
    size_t budget = kDefaultOrbitBudget;
};

enum Exit { kOk = 0, kError = 1, kNot = 2, kUnknown = 3 };

std::vector<int> letters(const Rack& r, const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        int x = r.index_of(item);
        if (x < 0) throw Error("ParseError", "unknown letter '" + item + "'");
        out.push_back(x);
    }
    return out;
}

json labels(const Rack& r, const std::vector<int>& xs) {
    json j = json::array();
    for (int x : xs) j.push_back(r.label(x));
    return j;
}

json input_key(const Rack& r, const Cocycle& c) { return {{"rack", r.rows()}, {"cocycle", cocycle_to_json(c)}}; }

ResultCache cache_for(const Job& job) {
    if (job.no_cache) return ResultCache();
    return ResultCache(job.cache_dir.empty() ? ResultCache::default_dir() : job.cache_dir);
}

void warn_all(const std::vector<std::string>& w) {
    for (const auto& s : w) std::cerr << "warning: " << s << "\n";
}

// Cached JSON result for one (command, engine) pair.
template <class Compute>
json cached(const Job& job, json key, Compute compute) {
    ResultCache cache = cache_for(job);
    std::vector<std::string> warnings;
    if (auto hit = cache.get(key, &warnings)) {
        warn_all(warnings);
        return *hit;
    }
    warn_all(warnings);
    json result = compute();
    cache.put(key, result);
    return result;
}

void print_series(const Job& job, const json& j, const std::string& title) {
    const auto& dims = j["dims"];
    if (job.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    size_t sum = 0;
    if (job.format == "csv") {
        std::cout << "degree,dim,partial_sum\n";
        for (size_t n = 0; n < dims.size(); ++n) {
            sum += dims[n].get<size_t>();
            std::cout << n << "," << dims[n] << "," << sum << "\n";
        }
        return;
    }
    std::cout << title << "\n" << std::setw(6) << "degree" << std::setw(12) << "dim" << std::setw(14) << "partial sum\n";
    for (size_t n = 0; n < dims.size(); ++n) {
        sum += dims[n].get<size_t>();
        std::cout << std::setw(6) << n << std::setw(12) << dims[n].get<size_t>() << std::setw(13) << sum << "\n";
    }
    for (const auto& [k, v] : j.items())
        if (k != "dims") std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int cmd_rack(const Job& job, bool info) {
    Rack r = parse_rack(job.rack);
    auto p = predicates(r);
    json j{{"size", r.size()},          {"quandle", p.quandle},         {"braided", p.braided},
           {"conj_symmetric", p.conj_symmetric}, {"indecomposable", p.indecomposable}, {"phi_order", p.phi_order}};
    if (info) {
        auto id = identify_standard(r);
        j["labels"] = r.labels();
        j["orbits"] = r.num_orbits();
        j["standard"] = to_string(id.kind) + (id.kind == StandardKind::Transpositions ? std::to_string(id.n) : "");
        if (!id.note.empty()) j["note"] = id.note;
        j["table"] = r.rows();
    }
    if (job.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : j.items())
            if (k != "table") std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return kOk;
}

int cmd_cocycle(const Job& job) {
    Rack r = parse_rack(job.rack);
    Cocycle c = parse_cocycle(r, job.cocycle);
    auto inv = gauge_invariants(c);
    json diag = json::array(), comm = json::array(), tri = json::array();
    for (const auto& s : inv.diagonal) diag.push_back(s.str());
    for (const auto& [ab, s] : inv.commuting) comm.push_back({r.label(ab.first), r.label(ab.second), s.str()});
    for (const auto& [ab, s] : inv.triangles) tri.push_back({r.label(ab.first), r.label(ab.second), s.str()});
    json j{{"valid", true}, {"domain", c.domain() ? c.domain()->name() : "Q"}, {"diagonal", diag},
           {"commuting_products", comm}, {"triangle_products", tri}};
    if (predicates(r).conj_symmetric) {
        auto s = slimness(c);
        j["slim"] = s.slim;
        if (s.failure)
            j["slim_failure"] = {{"a", r.label(s.failure->a)}, {"b", r.label(s.failure->b)},
                                 {"product", s.failure->product.str()}, {"commuting", s.failure->commuting}};
    }
    if (job.format == "json") {
        j["q"] = cocycle_to_json(c)["q"];
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "valid: true\ndomain: " << j["domain"].get<std::string>() << "\n";
        if (j.contains("slim")) std::cout << "slim in degree two: " << (j["slim"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "diagonal: " << diag.dump() << "\n";
    }
    return kOk;
}

json dims_for(const Job& job, const Cocycle& c, Engine e) {
    int N = job.max_degree < 0 ? 20 : job.max_degree;
    json key = input_key(c.rack(), c);
    key["command"] = "dims";
    key["engine"] = to_string(e);
    key["N"] = N;
    if (e == Engine::Modular) key["primes"] = job.primes, key["seed"] = job.seed;
    return cached(job, key, [&] {
        auto rep = nichols_dims(c, N, e, job.primes, job.seed);
        return json{{"dims", rep.dims},      {"total", rep.total()},         {"engine", rep.engine},
                    {"accepted", rep.accepted}, {"vanished", rep.vanished}, {"primes", rep.primes}};
    });
}

int cmd_dims(const Job& job) {
    Rack r = parse_rack(job.rack);
    Cocycle c = parse_cocycle(r, job.cocycle);
    Engine e = parse_engine(job.engine);
    json out;
    if (e == Engine::Both) {
        json a = dims_for(job, c, Engine::Exact), b = dims_for(job, c, Engine::Modular);
        if (a["dims"] != b["dims"]) throw Error("EngineMismatch", "exact and modular graded dimensions differ");
        out = a;
        out["engine"] = "both-agree";
        out["primes"] = b["primes"];
    } else {
        out = dims_for(job, c, e);
    }
    print_series(job, out, "graded dimensions of B(V)");
    return kOk;
}

template <class F>
json subalg_series(GradedQuotient<F>& q, const std::vector<int>& gens, int N) {
    auto s = subalgebra_until_zero(q, letter_generators(q, gens), N);
    size_t total = 0;
    for (size_t d : s.dims) total += d;
    bool closed = !s.dims.empty() && s.dims.back() == 0;
    return json{{"dims", s.dims}, {"total", total}, {"complete", closed}};
}

json subalg_for(const Job& job, const Cocycle& c, const std::vector<int>& gens, Engine e) {
    int N = job.max_degree < 0 ? 30 : job.max_degree;
    json key = input_key(c.rack(), c);
    key["command"] = "subalg";
    key["gens"] = gens;
    key["engine"] = to_string(e);
    key["N"] = N;
    if (e == Engine::Modular) key["seed"] = job.seed;
    return cached(job, key, [&] {
        if (e == Engine::Exact) {
            auto q = make_exact_quotient(c);
            json j = subalg_series(q, gens, N);
            j["engine"] = "exact";
            return j;
        }
        // Two primes have to agree.
        std::vector<json> runs;
        for (int i = 0; i < 6; ++i) {
            try {
                auto q = make_mod_quotient(c, i, job.seed);
                json j = subalg_series(q, gens, N);
                j["prime"] = q.field().ctx.p();
                for (const auto& prev : runs)
                    if (prev["dims"] == j["dims"]) {
                        j["engine"] = "modular";
                        j["primes"] = {prev["prime"], j["prime"]};
                        j.erase("prime");
                        return j;
                    }
                runs.push_back(j);
            } catch (const Error& err) {
                if (err.kind() != "BadPrime") throw;
            }
        }
        throw Error("EngineMismatch", "no two primes agree on the subalgebra dimensions");
    });
}

int cmd_subalg(const Job& job) {
    Rack r = parse_rack(job.rack);
    Cocycle c = parse_cocycle(r, job.cocycle);
    auto gens = letters(r, job.gens);
    Engine e = parse_engine(job.engine);
    json out;
    if (e == Engine::Both) {
        json a = subalg_for(job, c, gens, Engine::Exact), b = subalg_for(job, c, gens, Engine::Modular);
        if (a["dims"] != b["dims"]) throw Error("EngineMismatch", "exact and modular subalgebra dimensions differ");
        out = a;
        out["engine"] = "both-agree";
    } else {
        out = subalg_for(job, c, gens, e);
    }
    out["generators"] = labels(r, gens);
    print_series(job, out, "dimensions of the subalgebra generated by " + job.gens);
    return kOk;
}

template <class F>
json verdict_json(const GradedQuotient<F>& q, const Rack& r, const std::vector<int>& W, int N, size_t budget) {
    auto v = degree_one_generation_verdict(q, W, N, budget);
    json j{{"W", labels(r, W)},           {"N", N},
           {"all_generated", v.all_generated}, {"coideal_dims", v.coideal_dims},
           {"generated_dims", v.generated_dims}, {"exact_partition", v.exact_partition}};
    j["result"] = v.all_generated ? "AllGenerated" : "ExtensionAt(" + std::to_string(v.degree) + ")";
    if (v.witness) {
        json terms = json::array();
        for (const auto& [w, a] : v.witness->representative) {
            json word = json::array();
            for (int x : w) word.push_back(r.label(x));
            if constexpr (std::is_same_v<F, ExactField>)
                terms.push_back({{"word", word}, {"coeff", a.str()}});
            else
                terms.push_back({{"word", word}, {"coeff", a}});
        }
        j["witness"] = {{"degree", v.witness->degree}, {"representative", terms},
                        {"provenance", v.witness->provenance}, {"verified", v.witness->verified()}};
    }
    return j;
}

int cmd_verdict(const Job& job) {
    Rack r = parse_rack(job.rack);
    Cocycle c = parse_cocycle(r, job.cocycle);
    auto W = letters(r, job.W);
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    int N = job.max_degree < 0 ? 4 : job.max_degree;
    Engine e = parse_engine(job.engine);
    json j;
    if (e == Engine::Modular) {
        auto q = make_mod_quotient(c, 0, job.seed);
        q.compute_through(N);
        j = verdict_json(q, r, W, N, job.budget);
        j["engine"] = "modular(" + std::to_string(q.field().ctx.p()) + ")";
    } else {
        auto q = make_exact_quotient(c);
        q.compute_through(N);
        j = verdict_json(q, r, W, N, job.budget);
        j["engine"] = "exact";
    }
    bool all = j["all_generated"].get<bool>();
    bool undecided = !all && !j["exact_partition"].get<bool>();
    if (job.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j["result"].get<std::string>() << "\n";
        std::cout << "coideal dims:   " << j["coideal_dims"].dump() << "\n";
        std::cout << "generated dims: " << j["generated_dims"].dump() << "\n";
        if (undecided) std::cout << "warning: orbit partition was coarse; the extension may be inhomogeneous\n";
        if (j.contains("witness")) std::cout << "witness: " << j["witness"]["representative"].dump() << "\n";
    }
    return all ? kOk : undecided ? kUnknown : kNot;
}

int cmd_orbit(const Job& job) {
    Rack r = parse_rack(job.rack);
    Word w;
    for (int x : letters(r, job.word)) w.push_back(x);
    auto orb = hurwitz_orbit(r, w, job.budget);
    json members = json::array();
    for (const auto& t : orb) members.push_back(labels(r, std::vector<int>(t.begin(), t.end())));
    json j{{"word", labels(r, std::vector<int>(w.begin(), w.end()))}, {"size", orb.size()}, {"members", members}};
    if (job.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        if (job.format != "csv") std::cout << "orbit size " << orb.size() << "\n";
        for (const auto& m : members) {
            std::string row;
            for (const auto& x : m) row += (row.empty() ? "" : ",") + x.get<std::string>();
            std::cout << row << "\n";
        }
    }
    return kOk;
}

int cmd_classify(const Job& job) {
    Rack r = parse_rack(job.rack);
    Cocycle c = parse_cocycle(r, job.cocycle);
    Verdict v = classify(c, parse_effort(job.effort));
    json j = verdict_to_json(v, r);
    if (job.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::string head = to_string(v.outcome);
        if (v.outcome == Outcome::AllDegreeOne) {
            std::string cs;
            for (const auto& s : v.cases) cs += (cs.empty() ? "" : ",") + std::to_string(s.number);
            head += "(case " + cs + ")";
        }
        std::cout << head << "\n";
        if (v.witness)
            std::cout << "witness: degree " << v.witness->witness.degree << ", W = " << j["witness"]["W"].dump()
                      << ", verified " << (v.witness->witness.verified() ? "yes" : "no") << "\n";
        if (v.cited_not_recomputed) std::cout << "cited, not recomputed: " << v.cited << "\n";
        if (!v.recomputed.empty()) std::cout << "recomputed: " << v.recomputed << "\n";
        if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
        for (const auto& s : v.justification) std::cout << "  - " << s << "\n";
    }
    switch (v.outcome) {
        case Outcome::AllDegreeOne: return kOk;
        case Outcome::NotDegreeOne: return kNot;
        case Outcome::Unknown: return kUnknown;
    }
    return kError;
}

int cmd_suite(const Job& job) {
    auto rows = run_suite(load_manifest(job.manifest), parse_effort(job.effort));
    if (job.format == "json") {
        std::cout << suite_to_json(rows).dump(2) << "\n";
    } else if (job.format == "csv") {
        std::cout << "label,expected,outcome,pass,seconds\n";
        for (const auto& row : rows)
            std::cout << '"' << row.entry.label << "\"," << row.entry.expected << ","
                      << (row.verdict ? to_string(row.verdict->outcome) : "error") << "," << row.pass << ","
                      << row.seconds << "\n";
    } else {
        std::cout << suite_table(rows);
    }
    for (const auto& row : rows)
        if (!row.pass) return kNot;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coideal subalgebras of Nichols algebras over racks"};
    app.require_subcommand(1);
    app.fallthrough();
    Job job;
    app.add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--cache-dir", job.cache_dir, "Cache directory (default $COIDEAL_CACHE_DIR)");
    app.add_flag("--no-cache", job.no_cache, "Do not read or write the cache");
    app.add_option("--seed", job.seed, "Seed for the modular prime choice");
    app.add_option("--primes", job.primes, "Primes to agree on for the modular engine")->check(CLI::PositiveNumber);

    auto rack_cocycle = [&](CLI::App* s, bool cocycle) {
        s->add_option("--rack", job.rack, "Rack name or JSON file")->required();
        if (cocycle) s->add_option("--cocycle", job.cocycle, "Cocycle expression or JSON file")->required();
    };
    auto degree = [&](CLI::App* s) {
        s->add_option("--max-degree", job.max_degree, "Degree bound N")->check(CLI::NonNegativeNumber);
    };
    auto engine = [&](CLI::App* s) {
        s->add_option("--engine", job.engine, "exact, modular or both")
            ->check(CLI::IsMember({"exact", "modular", "both"}));
    };

    auto* rack = app.add_subcommand("rack", "Rack checks");
    rack->require_subcommand(1);
    auto* rack_check = rack->add_subcommand("check", "Axioms and predicates");
    auto* rack_info = rack->add_subcommand("info", "Predicates, orbits and identification");
    rack_cocycle(rack_check, false);
    rack_cocycle(rack_info, false);

    auto* cocycle = app.add_subcommand("cocycle", "Cocycle checks");
    cocycle->require_subcommand(1);
    auto* cocycle_check = cocycle->add_subcommand("check", "Validate and list gauge invariants");
    rack_cocycle(cocycle_check, true);

    auto* dims = app.add_subcommand("dims", "Graded dimensions of the Nichols algebra");
    rack_cocycle(dims, true);
    degree(dims);
    engine(dims);

    auto* subalg = app.add_subcommand("subalg", "Dimensions of the subalgebra generated by letters");
    rack_cocycle(subalg, true);
    subalg->add_option("--gens", job.gens, "Comma-separated letters")->required();
    degree(subalg);
    engine(subalg);

    auto* coideal = app.add_subcommand("coideal", "Coideal subalgebra checks");
    coideal->require_subcommand(1);
    auto* verdict = coideal->add_subcommand("verdict", "Is every coideal subalgebra over W generated by W?");
    rack_cocycle(verdict, true);
    verdict->add_option("--W", job.W, "Comma-separated letters spanning W")->required();
    degree(verdict);
    verdict->add_option("--engine", job.engine, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
    verdict->add_option("--orbit-budget", job.budget, "Hurwitz orbit budget");

    auto* orbit = app.add_subcommand("orbit", "Hurwitz orbit of a tuple");
    rack_cocycle(orbit, false);
    orbit->add_option("--word", job.word, "Comma-separated letters")->required();
    orbit->add_option("--budget", job.budget, "Orbit size budget");

    auto* cls = app.add_subcommand("classify", "Decide whether all coideal subalgebras are generated in degree one");
    rack_cocycle(cls, true);
    cls->add_option("--effort", job.effort, "fast, thorough or stretch")
        ->check(CLI::IsMember({"fast", "thorough", "stretch"}));

    auto* suite = app.add_subcommand("suite", "Classify every entry of a manifest");
    suite->add_option("--manifest", job.manifest, "Manifest JSON")->required();
    suite->add_option("--effort", job.effort, "fast, thorough or stretch")
        ->check(CLI::IsMember({"fast", "thorough", "stretch"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (rack_check->parsed()) return cmd_rack(job, false);
        if (rack_info->parsed()) return cmd_rack(job, true);
        if (cocycle_check->parsed()) return cmd_cocycle(job);
        if (dims->parsed()) return cmd_dims(job);
        if (subalg->parsed()) return cmd_subalg(job);
        if (verdict->parsed()) return cmd_verdict(job);
        if (orbit->parsed()) return cmd_orbit(job);
        if (cls->parsed()) return cmd_classify(job);
        if (suite->parsed()) return cmd_suite(job);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
