#include "deltanu/periodicity.hpp"

#include <numeric>

namespace deltanu {

Value lcm_period(const NumericalSemigroup& S) {
    return std::lcm(S.multiplicity(), S.max_generator());
}

bool verify_shift_invariance(const NumericalSemigroup& S, const BoundsProfile& B,
                             int cycles) {
    const Value delta = lcm_period(S);
    const Value hi = B.N0 + cycles * delta;
    for (Value n = B.N0; n <= hi; ++n) {
        if (delta_nu_fast(S, n, B).delta_nu != delta_nu_fast(S, n + delta, B).delta_nu)
            return false;
    }
    for (Value n = B.N0; n <= hi; ++n) {
        const auto z = decompose(S, n, B);
        for (Value mu = 1; mu <= 2; ++mu) {
            if (gaps_of(z.B1) != gaps_of(decompose(S, n + mu * S.multiplicity(), B).B1))
                return false;
            if (gaps_of(z.B3) != gaps_of(decompose(S, n + mu * S.max_generator(), B).B3))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<Value> divisors_of(Value v) {
    std::vector<Value> out;
    for (Value d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PeriodReport minimal_period_report(const NumericalSemigroup& S, Value n_max,
                                   const Deadline& deadline) {
    PeriodReport r;
    r.generators = S.generators();
    r.delta = lcm_period(S);
    r.empirical = S.embedding_dimension() < 3;

    std::optional<BoundsProfile> B;
    if (!r.empirical) {
        B = compute_bounds(S);
        r.N0 = B->N0;
    }

    // Table fill; on a deadline hit the range shrinks and the report is
    // built from whatever completed, provided the minimal window survives.
    std::vector<SortedSet> table;
    table.reserve(static_cast<std::size_t>(n_max) + 1);
    for (Value n = 0; n <= n_max; ++n) {
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            r.truncated = true;
            n_max = n - 1;
            break;
        }
        table.push_back(delta_nu_auto(S, n, B ? &*B : nullptr).delta_nu);
    }
    const Value window_floor = (r.empirical ? 0 : r.N0) + 2 * r.delta;
    if (n_max < window_floor)
        throw WindowTooSmallError("n_max = " + std::to_string(n_max) +
                                  " below required window " + std::to_string(window_floor));
    r.verified_upto = n_max;
    if (r.empirical) r.N0 = n_max - 2 * r.delta;  // scan ceiling stands in for the bound

    auto dnu = [&](Value n) -> const SortedSet& { return table[static_cast<std::size_t>(n)]; };

    // Theorem check: full period shift from the bound upward.
    r.theorem_holds = true;
    for (Value n = r.N0; n + r.delta <= n_max; ++n)
        if (dnu(n) != dnu(n + r.delta)) {
            r.theorem_holds = false;
            break;
        }

    // Minimal period: least divisor of delta verifying on the top window.
    const Value w0 = n_max - 2 * r.delta;
    for (Value rho : divisors_of(r.delta)) {
        bool ok = true;
        for (Value n = w0; n + rho <= n_max; ++n)
            if (dnu(n) != dnu(n + rho)) {
                ok = false;
                break;
            }
        if (ok) {
            r.minimal_period = rho;
            break;
        }
    }
    if (r.minimal_period == 0)
        throw Error("no divisor of delta verifies as a period on the top window");

    // Final residue table, then scan down for how far it extends.
    for (Value n = w0; n < w0 + r.minimal_period && n <= n_max; ++n)
        r.residue_table[n % r.minimal_period] = dnu(n);
    Value n0 = w0;
    while (n0 > 0 && dnu(n0 - 1) == r.residue_table[(n0 - 1) % r.minimal_period]) --n0;
    r.minimal_preperiod = n0;

    r.periodic_part_constant = true;
    const SortedSet& head = r.residue_table.begin()->second;
    for (const auto& [res, val] : r.residue_table)
        if (val != head) {
            r.periodic_part_constant = false;
            break;
        }
    for (Value n = 0; n < r.minimal_preperiod; ++n)
        if (dnu(n) != r.residue_table[n % r.minimal_period]) {
            r.nonconstant_preperiod = true;
            break;
        }
    return r;
}

nlohmann::json to_json(const PeriodReport& r) {
    nlohmann::json table = nlohmann::json::object();
    for (const auto& [res, val] : r.residue_table) table[std::to_string(res)] = val;
    return nlohmann::json{
        {"generators", r.generators},
        {"delta", r.delta},
        {"N0", r.N0},
        {"minimal_period", r.minimal_period},
        {"minimal_preperiod", r.minimal_preperiod},
        {"residue_table", table},
        {"theorem_holds", r.theorem_holds},
        {"verified_upto", r.verified_upto},
        {"empirical", r.empirical},
        {"truncated", r.truncated},
        {"periodic_part_constant", r.periodic_part_constant},
        {"nonconstant_preperiod", r.nonconstant_preperiod},
    };
}

}  // namespace deltanu
