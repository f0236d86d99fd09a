#include "deltanu/semigroup.hpp"

#include <charconv>
#include <numeric>

namespace deltanu {
namespace {

// Membership in the monoid generated by `gens` (not necessarily primitive).
bool representable(const std::vector<Value>& gens, Value s) {
    if (s < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(s) + 1, 0);
    reach[0] = 1;
    for (Value v = 1; v <= s; ++v)
        for (Value a : gens)
            if (a <= v && reach[static_cast<std::size_t>(v - a)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reach[static_cast<std::size_t>(s)] != 0;
}

}  // namespace

std::string NumericalSemigroup::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(gens_[i]);
    }
    return out + ">";
}

NumericalSemigroup new_semigroup(std::vector<Value> raw) {
    if (raw.empty()) throw ValidationError("empty generator list");
    for (Value a : raw)
        if (a < 1) throw ValidationError("generators must be positive");
    canonicalize(raw);

    Value g = 0;
    for (Value a : raw) g = std::gcd(g, a);
    if (g != 1) throw NotPrimitiveError(g);

    // Drop non-minimal generators, largest first so survivors stay minimal.
    for (std::size_t i = raw.size(); i-- > 0;) {
        std::vector<Value> others;
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (j != i) others.push_back(raw[j]);
        if (!others.empty() && representable(others, raw[i]))
            raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (raw.size() < 2) throw DegenerateError();
    return NumericalSemigroup(std::move(raw));
}

NumericalSemigroup parse_semigroup(std::string_view text) {
    std::vector<Value> gens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        if (tok.empty()) throw ValidationError("malformed generator list");
        Value v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw ValidationError("malformed generator list: '" + std::string(tok) + "'");
        gens.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return new_semigroup(std::move(gens));
}

bool contains(const NumericalSemigroup& S, Value s) {
    return representable(S.generators(), s);
}

}  // namespace deltanu
