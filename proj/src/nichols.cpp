#include "coideal/nichols.hpp"

namespace coideal {

Engine parse_engine(const std::string& s) {
    if (s == "exact") return Engine::Exact;
    if (s == "modular") return Engine::Modular;
    if (s == "both") return Engine::Both;
    throw Error("ParseError", "unknown engine '" + s + "' (exact|modular|both)");
}

std::string to_string(Engine e) {
    switch (e) {
        case Engine::Exact: return "exact";
        case Engine::Modular: return "modular";
        default: return "both";
    }
}

ExactQuotient make_exact_quotient(const Cocycle& c, QuotientOptions o) {
    if (!o.candidate_budget) o.candidate_budget = kExactCandidateBudget;
    return ExactQuotient(c, ExactField{c.domain()}, o);
}

ModQuotient make_mod_quotient(const Cocycle& c, int prime_index, uint64_t seed, QuotientOptions o) {
    if (!o.candidate_budget) o.candidate_budget = kModularCandidateBudget;
    return ModQuotient(c, ModField{ModularContext::choose(c.domain(), prime_index, seed)}, o);
}

namespace {
struct ModRun {
    std::vector<size_t> dims;
    uint64_t p;
};

std::vector<size_t> run(auto& q, int max_degree) {
    q.compute_until_zero(max_degree);
    return q.dims();
}
}  // namespace

DimsReport nichols_dims(const Cocycle& c, int max_degree, Engine e, int primes, uint64_t seed, QuotientOptions o) {
    DimsReport rep;
    std::vector<size_t> exact;
    if (e != Engine::Modular) {
        auto q = make_exact_quotient(c, o);
        exact = run(q, max_degree);
    }
    std::vector<size_t> modular;
    if (e != Engine::Exact) {
        // Unlucky primes only change ranks; look for two agreeing runs among a few primes.
        std::vector<ModRun> runs;
        int need = primes >= 2 ? 2 : 1;
        int tries = std::max(primes, 2) + 2;
        for (int i = 0; i < tries && modular.empty(); ++i) {
            ModRun r;
            try {
                auto q = make_mod_quotient(c, i, seed, o);
                r.dims = run(q, max_degree);
                r.p = q.field().ctx.p();
            } catch (const Error& err) {
                if (err.kind() != "BadPrime") throw;
                continue;
            }
            runs.push_back(r);
            int agree = 0;
            for (const auto& s : runs) agree += s.dims == r.dims;
            if (agree >= need) {
                modular = r.dims;
                for (const auto& s : runs)
                    if (s.dims == r.dims) rep.primes.push_back(s.p);
            }
        }
        if (modular.empty()) throw Error("EngineMismatch", "no two primes agree on the graded dimensions");
    }
    if (e == Engine::Exact) {
        rep.dims = exact;
        rep.engine = "exact";
        rep.accepted = true;
    } else if (e == Engine::Modular) {
        rep.dims = modular;
        rep.engine = "modular(" + std::to_string(rep.primes.front()) + ")";
        rep.accepted = rep.primes.size() >= 2;
    } else {
        if (exact != modular) throw Error("EngineMismatch", "exact and modular graded dimensions differ");
        rep.dims = exact;
        rep.engine = "both-agree";
        rep.accepted = true;
    }
    rep.vanished = !rep.dims.empty() && rep.dims.back() == 0;
    return rep;
}

}  // namespace coideal
