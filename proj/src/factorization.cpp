#include "deltanu/factorization.hpp"

#include <cassert>

#include "deltanu/kernels.hpp"

namespace deltanu {
namespace {

namespace k = deltanu::kernels;

// Walks v = 0..smax producing the length-set bit row of each value:
// row(v) = union over generators a of row(v-a) << 1. A ring buffer of
// ap+1 rows keeps memory at O(ap * smax / a1) bits.
class LengthScan {
public:
    LengthScan(const NumericalSemigroup& S, Value smax)
        : gens_(S.generators()),
          smax_(smax),
          words_(k::words_for(static_cast<std::size_t>(smax / S.multiplicity()) + 1)),
          ring_(static_cast<std::size_t>(S.max_generator()) + 1,
                std::vector<std::uint64_t>(words_, 0)),
          v_(-1) {}

    // Row for the next value; returns nullptr past smax.
    const std::uint64_t* next(Value* value_out) {
        if (v_ >= smax_) return nullptr;
        ++v_;
        auto& row = ring_[slot(v_)];
        std::fill(row.begin(), row.end(), 0);
        if (v_ == 0) {
            row[0] = 1;  // the empty factorization
        } else {
            const auto& ker = k::active();
            for (Value a : gens_)
                if (a <= v_) ker.or_shl1(row.data(), ring_[slot(v_ - a)].data(), words_);
        }
        *value_out = v_;
        return row.data();
    }

    std::size_t words() const { return words_; }

private:
    std::size_t slot(Value v) const {
        return static_cast<std::size_t>(v % static_cast<Value>(ring_.size()));
    }

    const std::vector<Value>& gens_;
    Value smax_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> ring_;
    Value v_;
};

SortedSet bits_to_set(const std::uint64_t* row, std::size_t words, Value base = 0) {
    SortedSet out;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            const int b = __builtin_ctzll(bits);
            out.push_back(base + static_cast<Value>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

void enumerate(const std::vector<Value>& gens, std::size_t i, Value rem,
               std::vector<Value>& coords, std::vector<Factorization>& out) {
    if (i + 1 == gens.size()) {
        if (rem % gens[i] == 0) {
            coords[i] = rem / gens[i];
            out.push_back(Factorization::of(coords));
        }
        return;
    }
    for (Value x = rem / gens[i]; x >= 0; --x) {
        coords[i] = x;
        enumerate(gens, i + 1, rem - x * gens[i], coords, out);
    }
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& S, Value s) {
    std::vector<Factorization> out;
    if (s < 0) return out;
    std::vector<Value> coords(S.generators().size(), 0);
    enumerate(S.generators(), 0, s, coords, out);
    return out;
}

LengthSet length_set(const NumericalSemigroup& S, Value s) {
    LengthSet ls;
    ls.element = s;
    if (s < 0) return ls;
    LengthScan scan(S, s);
    Value v = 0;
    const std::uint64_t* row = nullptr;
    const std::uint64_t* last = nullptr;
    while ((row = scan.next(&v)) != nullptr) last = row;
    assert(v == s);
    ls.lengths = bits_to_set(last, scan.words());
    return ls;
}

SortedSet delta_of_element(const NumericalSemigroup& S, Value s) {
    return gaps_of(length_set(S, s).lengths);
}

namespace {

// Reachable sums of exactly n generators, as a bit row over [0, n*ap].
std::vector<std::uint64_t> w_bits(const NumericalSemigroup& S, Value n, std::size_t* words_out) {
    const std::size_t bits = static_cast<std::size_t>(n * S.max_generator()) + 1;
    const std::size_t words = k::words_for(bits);
    std::vector<std::uint64_t> cur(words, 0), next(words, 0);
    cur[0] = 1;
    const auto& ker = k::active();
    for (Value step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (Value a : S.generators())
            ker.or_shl(next.data(), cur.data(), static_cast<std::size_t>(a), words);
        cur.swap(next);
    }
    // mask stray bits above n*ap
    const std::size_t top = bits % 64;
    if (top) cur[words - 1] &= (std::uint64_t{1} << top) - 1;
    *words_out = words;
    return cur;
}

}  // namespace

SortedSet w_set(const NumericalSemigroup& S, Value n) {
    std::size_t words = 0;
    const auto bits = w_bits(S, n, &words);
    return bits_to_set(bits.data(), words);
}

std::size_t w_count(const NumericalSemigroup& S, Value n) {
    std::size_t words = 0;
    const auto bits = w_bits(S, n, &words);
    std::size_t c = 0;
    for (std::uint64_t w : bits) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

namespace {

std::pair<SortedSet, std::size_t> nu_impl(const NumericalSemigroup& S, Value n) {
    const Value smax = n * S.max_generator();
    LengthScan scan(S, smax);
    const std::size_t words = scan.words();
    std::vector<std::uint64_t> acc(words, 0);
    std::size_t witnesses = 0;
    Value v = 0;
    const auto& ker = k::active();
    const std::uint64_t* row = nullptr;
    while ((row = scan.next(&v)) != nullptr) {
        if (k::test_bit(row, static_cast<std::size_t>(n))) {
            ker.or_rows(acc.data(), row, words);
            ++witnesses;
        }
    }
    return {bits_to_set(acc.data(), words), witnesses};
}

}  // namespace

SortedSet nu(const NumericalSemigroup& S, Value n) {
    return nu_impl(S, n).first;
}

NaiveResult delta_nu_naive_counted(const NumericalSemigroup& S, Value n) {
    auto [lengths, witnesses] = nu_impl(S, n);
    return NaiveResult{gaps_of(lengths), witnesses};
}

}  // namespace deltanu
