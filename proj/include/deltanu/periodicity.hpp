#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "deltanu/fastdnu.hpp"

namespace deltanu {

/// delta = lcm(a1, ap), the proven period.
Value lcm_period(const NumericalSemigroup& S);

/// Check delta-nu(n + delta) = delta-nu(n) for n in [N0, N0 + cycles*delta],
/// plus the finer per-zone claims gaps(B1(n)) = gaps(B1(n + mu*a1)) and
/// gaps(B3(n)) = gaps(B3(n + mu*ap)) for mu in {1, 2} on the same range.
bool verify_shift_invariance(const NumericalSemigroup& S, const BoundsProfile& B,
                             int cycles);

struct PeriodReport {
    std::vector<Value> generators;
    Value delta = 0;
    Value N0 = 0;             // proven bound, or the scan ceiling for p = 2
    Value verified_upto = 0;  // largest n computed
    bool theorem_holds = false;
    bool empirical = false;   // p = 2: no bound machinery, top-window check only
    bool truncated = false;   // set by the scanner when a budget cut the range
    Value minimal_period = 0;      // least divisor of delta verifying on the top window
    Value minimal_preperiod = 0;   // least n0 from which the final residue table replays
    std::map<Value, SortedSet> residue_table;  // n mod minimal_period -> value
    bool periodic_part_constant = false;       // single distinct residue value
    bool nonconstant_preperiod = false;        // some n < preperiod deviates from the table
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Compute delta-nu up to n_max (windowed path where available), measure the
/// true minimal period over the final 2*delta window and how far down it
/// extends. Throws WindowTooSmallError when n_max < N0 + 2*delta.
/// A deadline, when given, truncates the table fill; the report is then
/// built on the shortened range (or the error propagates if even the
/// minimal window is missing) with `truncated` set.
PeriodReport minimal_period_report(const NumericalSemigroup& S, Value n_max,
                                   const Deadline& deadline = {});

nlohmann::json to_json(const PeriodReport& r);

}  // namespace deltanu
