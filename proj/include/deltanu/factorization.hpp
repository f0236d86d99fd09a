#pragma once

#include "deltanu/semigroup.hpp"

namespace deltanu {

/// A point of Z(s): coordinates x with sum(x_i * a_i) = s. The length
/// (coordinate sum) is cached on construction.
struct Factorization {
    std::vector<Value> coordinates;
    Value length = 0;

    static Factorization of(std::vector<Value> coords) {
        Factorization f;
        f.length = 0;
        for (Value c : coords) f.length += c;
        f.coordinates = std::move(coords);
        return f;
    }
};

struct LengthSet {
    Value element = 0;
    SortedSet lengths;  // empty iff element is not in S (and > 0)
};

/// All factorizations of s, in descending lexicographic order of the
/// coordinate vector. Empty iff s is not in S.
std::vector<Factorization> factorizations(const NumericalSemigroup& S, Value s);

/// The set of lengths of s, by dynamic programming over reachable
/// (value, length) pairs; `factorizations` is the test oracle.
LengthSet length_set(const NumericalSemigroup& S, Value s);

/// gaps_of(length_set(S, s).lengths)
SortedSet delta_of_element(const NumericalSemigroup& S, Value s);

/// W(n): elements of S admitting a factorization of length exactly n.
/// n-step reachable-sum DP; min is n*a1 and max is n*ap.
SortedSet w_set(const NumericalSemigroup& S, Value n);

/// |W(n)| without materializing the set.
std::size_t w_count(const NumericalSemigroup& S, Value n);

/// nu(n) = union of length sets over W(n); always contains n.
SortedSet nu(const NumericalSemigroup& S, Value n);

struct NaiveResult {
    SortedSet delta_nu;
    std::size_t w_count = 0;  // elements whose length set was consulted
};

/// Reference implementation of the gap set of nu(n), valid for every n.
/// The windowed path must agree with it everywhere.
NaiveResult delta_nu_naive_counted(const NumericalSemigroup& S, Value n);

inline SortedSet delta_nu_naive(const NumericalSemigroup& S, Value n) {
    return delta_nu_naive_counted(S, n).delta_nu;
}

}  // namespace deltanu
