// Test-only brute-force oracles. Deliberately independent of the DP
// implementations they validate: everything here is plain enumeration.
#pragma once

#include <set>

#include "deltanu/semigroup.hpp"

namespace deltanu::oracles {

// Membership by exhaustive search over coefficient vectors.
inline bool contains_brute(const std::vector<Value>& gens, Value s) {
    if (s == 0) return true;
    if (s < 0) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] <= s && contains_brute(gens, s - gens[i])) return true;
    return false;
}

// Lengths of s via full enumeration of coefficient vectors.
inline void lengths_rec(const std::vector<Value>& gens, std::size_t i, Value rem,
                        Value len, std::set<Value>& out) {
    if (i + 1 == gens.size()) {
        if (rem % gens[i] == 0) out.insert(len + rem / gens[i]);
        return;
    }
    for (Value x = 0; x * gens[i] <= rem; ++x)
        lengths_rec(gens, i + 1, rem - x * gens[i], len + x, out);
}

inline SortedSet lengths_brute(const std::vector<Value>& gens, Value s) {
    std::set<Value> out;
    lengths_rec(gens, 0, s, 0, out);
    return SortedSet(out.begin(), out.end());
}

// W(n) by enumerating coefficient multisets of total size n.
inline void wset_rec(const std::vector<Value>& gens, std::size_t i, Value rem,
                     Value acc, std::set<Value>& out) {
    if (i + 1 == gens.size()) {
        out.insert(acc + rem * gens[i]);
        return;
    }
    for (Value x = 0; x <= rem; ++x)
        wset_rec(gens, i + 1, rem - x, acc + x * gens[i], out);
}

inline SortedSet wset_brute(const std::vector<Value>& gens, Value n) {
    std::set<Value> out;
    wset_rec(gens, 0, n, 0, out);
    return SortedSet(out.begin(), out.end());
}

}  // namespace deltanu::oracles
