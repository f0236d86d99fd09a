#pragma once

#include <json.hpp>

#include "deltanu/bounds.hpp"

namespace deltanu {

/// W(n) restricted to [lo, hi], computed through offset DP anchored at
/// whichever end of [n*a1, n*ap] is closer; never materializes W(n).
SortedSet window_w_set(const NumericalSemigroup& S, Value n, Value lo, Value hi);

/// The two windows of W(n) that can contribute gaps other than d, and
/// the filtered length sets drawn from them.
struct ZoneDecomposition {
    Value n = 0;
    Value x1 = 0;   // n*a1 + ceil(lambda1)
    Value x2 = 0;   // n*ap - floor(lambda2)
    SortedSet W3;   // W(n) in [n*a1, x1]
    SortedSet W1;   // W(n) in [x2, n*ap]
    SortedSet B3;   // lengths <= x1/ap drawn from the W3 length sets
    SortedSet B1;   // lengths >= x2/a1 drawn from the W1 length sets
};

/// Throws BelowBoundError when n < N0.
ZoneDecomposition decompose(const NumericalSemigroup& S, Value n, const BoundsProfile& B);

struct DeltaNuRecord {
    enum class Method { Fast, Naive };
    Value n = 0;
    Method method = Method::Fast;
    SortedSet delta_nu;
    std::size_t evaluated_elements = 0;  // elements whose length set was consulted
};

/// Windowed computation of the gap set of nu(n): gaps(B3) u {d} u gaps(B1)
/// for n >= N0, delegation to the naive path below. Must agree with
/// delta_nu_naive for every n; that equality is this module's contract.
DeltaNuRecord delta_nu_fast(const NumericalSemigroup& S, Value n, const BoundsProfile& B);

/// Fast path when p >= 3 (profile computed on the fly), naive otherwise.
DeltaNuRecord delta_nu_auto(const NumericalSemigroup& S, Value n,
                            const BoundsProfile* B = nullptr);

nlohmann::json to_json(const DeltaNuRecord& rec);

}  // namespace deltanu
