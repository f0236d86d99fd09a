#pragma once

#include <json.hpp>

#include "deltanu/factorization.hpp"
#include "deltanu/rational.hpp"

namespace deltanu {

/// Exact-rational record of every closed-form bound the windowed
/// algorithm needs. Immutable once computed; shareable across workers.
struct BoundsProfile {
    Value d = 0;                      // gcd of consecutive generator gaps
    std::vector<Value> g;             // gcd(a_i - a1, a1 - ap, ap - a_i), i = 2..p-1
    std::vector<Rational> S_lower;    // S_i,  i = 2..p-1
    std::vector<Rational> S_upper;    // S'_i, i = 2..p-1
    Value NS = 0;                     // ceil(max(S_lower u S_upper))
    Rational Lw;                      // (a1 - a2) NS / (a1 a2), <= 0
    Rational Lwp;                     // (ap - a_{p-1}) NS / (ap a_{p-1}), >= 0
    Rational C1, C2, C3, C4;
    Rational lambda1;                 // max(C1, C4)
    Rational lambda2;                 // -min(C2, C3)
    Value N0 = 0;                     // ceil(max(NS/a1, (ap-a1+l1+l2)/(ap-a1)))
};

/// d = gcd{a_{i+1} - a_i}. Needs only p >= 2; equals min of the Delta set
/// of S (validated empirically in tests, not assumed).
Value compute_d(const NumericalSemigroup& S);

/// Evaluate every bound formula exactly. Throws EmbeddingDimensionError
/// for p = 2, where the index range i = 2..p-1 is empty.
BoundsProfile compute_bounds(const NumericalSemigroup& S);

enum class Zone { Z1, Z2, Z3 };

/// Which length-interval zones does the factorization x of s fall in?
/// Exact rational comparisons; diagnostic only. Throws BelowBoundError
/// for s < NS. Zones may overlap, so the result is a subset of {Z1,Z2,Z3}.
std::vector<Zone> zone_classify(const NumericalSemigroup& S, Value s,
                                const Factorization& x, const BoundsProfile& B);

nlohmann::json to_json(const BoundsProfile& B);

}  // namespace deltanu
