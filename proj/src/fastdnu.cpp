#include "deltanu/fastdnu.hpp"

#include <limits>

namespace deltanu {
namespace {

constexpr Value kUnreachable = std::numeric_limits<Value>::max() / 2;

// Fewest coins from `coins` summing to each offset in [0, width].
// An offset is a sum of at most n coins iff mc[offset] <= n.
std::vector<Value> min_coins(const std::vector<Value>& coins, Value width) {
    std::vector<Value> mc(static_cast<std::size_t>(width) + 1, kUnreachable);
    mc[0] = 0;
    for (Value o = 1; o <= width; ++o)
        for (Value c : coins)
            if (c <= o && mc[static_cast<std::size_t>(o - c)] + 1 < mc[static_cast<std::size_t>(o)])
                mc[static_cast<std::size_t>(o)] = mc[static_cast<std::size_t>(o - c)] + 1;
    return mc;
}

std::vector<Value> low_coins(const NumericalSemigroup& S) {
    std::vector<Value> c;  // a_i - a1, i >= 2
    for (std::size_t i = 1; i < S.generators().size(); ++i)
        c.push_back(S.generators()[i] - S.multiplicity());
    return c;
}

std::vector<Value> high_coins(const NumericalSemigroup& S) {
    std::vector<Value> c;  // ap - a_i, i <= p-1
    for (std::size_t i = 0; i + 1 < S.generators().size(); ++i)
        c.push_back(S.max_generator() - S.generators()[i]);
    return c;
}

}  // namespace

SortedSet window_w_set(const NumericalSemigroup& S, Value n, Value lo, Value hi) {
    const Value bottom = n * S.multiplicity();
    const Value top = n * S.max_generator();
    lo = std::max(lo, bottom);
    hi = std::min(hi, top);
    SortedSet out;
    if (lo > hi) return out;

    // s = bottom + o with o a sum of at most n low coins; equivalently
    // s = top - o' with o' a sum of at most n high coins. Anchor at the
    // nearer end so the DP width is the window width, not n*(ap-a1).
    if (hi - bottom <= top - lo) {
        const auto mc = min_coins(low_coins(S), hi - bottom);
        for (Value o = lo - bottom; o <= hi - bottom; ++o)
            if (mc[static_cast<std::size_t>(o)] <= n) out.push_back(bottom + o);
    } else {
        const auto mc = min_coins(high_coins(S), top - lo);
        for (Value o = top - hi; o <= top - lo; ++o)
            if (mc[static_cast<std::size_t>(o)] <= n) out.push_back(top - o);
        std::reverse(out.begin(), out.end());
    }
    return out;
}

ZoneDecomposition decompose(const NumericalSemigroup& S, Value n, const BoundsProfile& B) {
    if (n < B.N0)
        throw BelowBoundError("n = " + std::to_string(n) + " is below N0 = " +
                              std::to_string(B.N0));
    const Value a1 = S.multiplicity();
    const Value ap = S.max_generator();
    const Value l1 = B.lambda1.ceil();
    const Value l2 = B.lambda2.floor();

    ZoneDecomposition z;
    z.n = n;
    z.x1 = n * a1 + l1;
    z.x2 = n * ap - l2;

    const Value width = std::max(l1, l2);
    const auto mcl = min_coins(low_coins(S), width);
    const auto mch = min_coins(high_coins(S), width);

    for (Value o = 0; o <= l1; ++o)
        if (mcl[static_cast<std::size_t>(o)] <= n) z.W3.push_back(n * a1 + o);
    for (Value o = l2; o >= 0; --o)
        if (mch[static_cast<std::size_t>(o)] <= n) z.W1.push_back(n * ap - o);

    // A length l belongs to some L(s) iff the slack against either anchor
    // is a bounded coin sum: s has a length-l factorization exactly when
    // mch[l*ap - s] <= l (equivalently mcl[s - l*a1] <= l).
    for (Value l = 0; l * ap <= z.x1; ++l) {  // threshold l <= x1/ap, exact
        for (Value s : z.W3) {
            if (s > l * ap) break;
            if (mch[static_cast<std::size_t>(l * ap - s)] <= l) {
                z.B3.push_back(l);
                break;
            }
        }
    }
    const Value lmin = Rational(z.x2, a1).ceil();  // threshold l >= x2/a1, exact
    for (Value l = lmin; l * a1 <= n * ap; ++l) {
        for (auto it = z.W1.rbegin(); it != z.W1.rend(); ++it) {
            const Value s = *it;
            if (s < l * a1) break;
            if (mcl[static_cast<std::size_t>(s - l * a1)] <= l) {
                z.B1.push_back(l);
                break;
            }
        }
    }
    return z;
}

DeltaNuRecord delta_nu_fast(const NumericalSemigroup& S, Value n, const BoundsProfile& B) {
    if (S.embedding_dimension() < 3) throw EmbeddingDimensionError();
    DeltaNuRecord rec;
    rec.n = n;
    if (n < B.N0) {
        const auto naive = delta_nu_naive_counted(S, n);
        rec.method = DeltaNuRecord::Method::Naive;
        rec.delta_nu = naive.delta_nu;
        rec.evaluated_elements = naive.w_count;
        return rec;
    }
    const auto z = decompose(S, n, B);
    SortedSet result = gaps_of(z.B3);
    result.push_back(B.d);
    const SortedSet high = gaps_of(z.B1);
    result.insert(result.end(), high.begin(), high.end());
    canonicalize(result);
    rec.method = DeltaNuRecord::Method::Fast;
    rec.delta_nu = std::move(result);
    rec.evaluated_elements = z.W3.size() + z.W1.size();
    return rec;
}

DeltaNuRecord delta_nu_auto(const NumericalSemigroup& S, Value n, const BoundsProfile* B) {
    if (S.embedding_dimension() >= 3) {
        if (B) return delta_nu_fast(S, n, *B);
        const BoundsProfile local = compute_bounds(S);
        return delta_nu_fast(S, n, local);
    }
    const auto naive = delta_nu_naive_counted(S, n);
    DeltaNuRecord rec;
    rec.n = n;
    rec.method = DeltaNuRecord::Method::Naive;
    rec.delta_nu = naive.delta_nu;
    rec.evaluated_elements = naive.w_count;
    return rec;
}

nlohmann::json to_json(const DeltaNuRecord& rec) {
    return nlohmann::json{
        {"n", rec.n},
        {"method", rec.method == DeltaNuRecord::Method::Fast ? "fast" : "naive"},
        {"delta_nu", rec.delta_nu},
        {"evaluated_elements", rec.evaluated_elements},
    };
}

}  // namespace deltanu
