#pragma once

#include <string_view>

#include "deltanu/core.hpp"

namespace deltanu {

/// A numerical semigroup, held by its minimal generating system
/// a1 < a2 < ... < ap with gcd 1. Construct through new_semigroup or
/// parse_semigroup; the constructor is not reachable with a non-canonical
/// system. Immutable, safe to share across threads.
class NumericalSemigroup {
public:
    const std::vector<Value>& generators() const { return gens_; }
    int embedding_dimension() const { return static_cast<int>(gens_.size()); }
    Value multiplicity() const { return gens_.front(); }    // a1
    Value max_generator() const { return gens_.back(); }    // ap
    Value generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }

    std::string str() const;

private:
    explicit NumericalSemigroup(std::vector<Value> gens) : gens_(std::move(gens)) {}
    friend NumericalSemigroup new_semigroup(std::vector<Value> raw);

    std::vector<Value> gens_;
};

/// Canonicalize a raw generator list: sort, deduplicate, drop every
/// generator representable by the others. Throws NotPrimitiveError when
/// gcd != 1 and DegenerateError when the minimal system ends up with a
/// single element.
NumericalSemigroup new_semigroup(std::vector<Value> raw);

/// Parse "4,9,10,15" (whitespace tolerated) and canonicalize.
NumericalSemigroup parse_semigroup(std::string_view text);

/// Membership test: is s a nonnegative integer combination of the
/// generators? Dynamic programming over [0, s].
bool contains(const NumericalSemigroup& S, Value s);

}  // namespace deltanu
