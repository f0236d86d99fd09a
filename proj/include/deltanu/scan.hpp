#pragma once

#include "deltanu/periodicity.hpp"

namespace deltanu {

/// True iff the minimal generators form an arithmetic progression
/// m, m+k, ..., m+qk with k >= 1 (every 2-generated semigroup qualifies).
bool is_generalized_arithmetic(const NumericalSemigroup& S);

struct ScanFilter {
    int max_genus = 8;
    bool skip_generalized_arithmetic = true;
    bool require_nonconstant = false;  // keep only non-constant periodic parts
};

/// Minimal generator lists of every numerical semigroup of genus <=
/// max_genus, ordered by genus then lexicographically. Walked through the
/// standard tree: each child removes one minimal generator exceeding the
/// Frobenius number, so every semigroup is visited exactly once.
/// The root <1> (genus 0) is excluded; it has no 2-generated system.
std::vector<std::pair<int, std::vector<Value>>> semigroups_by_genus(int max_genus);

struct ScanItem {
    int genus = 0;
    std::vector<Value> generators;
    std::optional<PeriodReport> report;
    std::string error;  // nonempty when the report could not be produced
};

/// One PeriodReport per surviving semigroup. n_max = 0 picks the default
/// N0 + 3*delta per semigroup. DELTANU_BUDGET_MS, when set, caps the time
/// spent on each semigroup. Output order is (genus, generators) regardless
/// of the worker count.
std::vector<ScanItem> genus_tree_scan(const ScanFilter& filter, Value n_max, int jobs);

nlohmann::json to_json(const ScanItem& item);

}  // namespace deltanu
