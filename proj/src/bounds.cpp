#include "deltanu/bounds.hpp"

#include <numeric>

namespace deltanu {

Value compute_d(const NumericalSemigroup& S) {
    const auto& a = S.generators();
    Value d = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) d = std::gcd(d, a[i + 1] - a[i]);
    return d;
}

BoundsProfile compute_bounds(const NumericalSemigroup& S) {
    const auto& a = S.generators();
    const int p = S.embedding_dimension();
    if (p < 3) throw EmbeddingDimensionError();

    const Value a1 = a.front();
    const Value a2 = a[1];
    const Value ap = a.back();
    const Value ap1 = a[a.size() - 2];

    BoundsProfile B;
    B.d = compute_d(S);

    Rational best(0);
    bool first = true;
    for (int i = 1; i + 1 < p; ++i) {  // a_i for i = 2..p-1 (one-based)
        const Value ai = a[static_cast<std::size_t>(i)];
        const Value g = std::gcd(ai - a1, std::gcd(a1 - ap, ap - ai));
        B.g.push_back(g);
        const Rational Si(-a2 * (a1 * B.d * g + (p - 2) * (a1 - ai) * (a1 - ap)),
                          (a1 - a2) * g);
        const Rational Spi(ap1 * ((p - 2) * (a1 - ap) * (ap - ai) - B.d * ap * g),
                           (ap1 - ap) * g);
        B.S_lower.push_back(Si);
        B.S_upper.push_back(Spi);
        best = first ? rat_max(Si, Spi) : rat_max(best, rat_max(Si, Spi));
        first = false;
    }
    B.NS = best.ceil();

    B.Lw = Rational((a1 - a2) * B.NS, a1 * a2);
    B.Lwp = Rational((ap - ap1) * B.NS, ap * ap1);
    B.C1 = Rational((ap - ap1) * B.NS, ap1);
    B.C2 = Rational((a1 - a2) * B.NS, a2);
    B.C3 = (Rational(-ap, a1) + Rational(ap, a2) - Rational(ap, ap1) + Rational(1)) * Rational(B.NS);
    B.C4 = (Rational(a1, ap1) - Rational(a1, ap) - Rational(a1, a2) + Rational(1)) * Rational(B.NS);
    B.lambda1 = rat_max(B.C1, B.C4);
    B.lambda2 = -rat_min(B.C2, B.C3);

    const Rational n0 = rat_max(Rational(B.NS, a1),
                                (Rational(ap - a1) + B.lambda1 + B.lambda2) / Rational(ap - a1));
    B.N0 = n0.ceil();
    return B;
}

std::vector<Zone> zone_classify(const NumericalSemigroup& S, Value s,
                                const Factorization& x, const BoundsProfile& B) {
    if (s < B.NS)
        throw BelowBoundError("element " + std::to_string(s) + " is below N_S = " +
                              std::to_string(B.NS));
    const Rational L(x.length);
    const Rational lo1 = Rational(s, S.multiplicity()) + B.Lw;   // Z1 floor (open)
    const Rational hi1 = Rational(s, S.multiplicity());
    const Rational lo3 = Rational(s, S.max_generator());
    const Rational hi3 = lo3 + B.Lwp;                            // Z3 ceiling (open)

    std::vector<Zone> zones;
    if (lo1 < L && L <= hi1) zones.push_back(Zone::Z1);
    if (lo3 + B.Lwp - Rational(B.d) <= L && L <= lo1 + Rational(B.d)) zones.push_back(Zone::Z2);
    if (lo3 <= L && L < hi3) zones.push_back(Zone::Z3);
    return zones;
}

namespace {

nlohmann::json rat_json(const Rational& r) {
    return nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

}  // namespace

nlohmann::json to_json(const BoundsProfile& B) {
    nlohmann::json j;
    j["d"] = B.d;
    j["g"] = B.g;
    j["S_lower"] = nlohmann::json::array();
    j["S_upper"] = nlohmann::json::array();
    for (const auto& r : B.S_lower) j["S_lower"].push_back(rat_json(r));
    for (const auto& r : B.S_upper) j["S_upper"].push_back(rat_json(r));
    j["NS"] = B.NS;
    j["Lw"] = rat_json(B.Lw);
    j["Lwp"] = rat_json(B.Lwp);
    j["C1"] = rat_json(B.C1);
    j["C2"] = rat_json(B.C2);
    j["C3"] = rat_json(B.C3);
    j["C4"] = rat_json(B.C4);
    j["lambda1"] = rat_json(B.lambda1);
    j["lambda2"] = rat_json(B.lambda2);
    j["N0"] = B.N0;
    return j;
}

}  // namespace deltanu
