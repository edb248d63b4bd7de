#pragma once

#include <string>

#include "hecke/algebra.hpp"

namespace hecke {

namespace detail {

// Coefficient in multiplicand position: must re-parse as a single factor.
// Multi-term numerators get parentheses, as do non-constant denominators.
inline std::string coeff_factor_str(const Rat& c) { return rat_str(c); }

inline std::string coeff_factor_str(const RatFunc& c) {
    auto [p, q] = integer_form(c);
    int terms = 0;
    for (const auto& x : p.icoeffs())
        if (x != 0) ++terms;
    std::string ps = terms > 1 ? "(" + p.str() + ")" : p.str();
    if (q.degree() == 0 && q.coeff(0) == 1) return ps;
    std::string qs = q.degree() == 0 ? q.str() : "(" + q.str() + ")";
    return ps + "/" + qs;
}

inline Rat coeff_abs(const Rat& c) { return c < 0 ? Rat(-c) : c; }
inline RatFunc coeff_abs(const RatFunc& c) { return coeff_is_negative(c) ? -c : c; }

}  // namespace detail

// Canonical display form: terms in descending window order, signs pulled
// out of the coefficients, unit coefficients elided. Round-trips through
// the expression grammar.
template <class K>
std::string to_display(const HeckeElementT<K>& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        bool neg = coeff_is_negative(c);
        K a = detail::coeff_abs(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (!coeff_is_one(a)) out += detail::coeff_factor_str(a) + "*";
        out += w.str();
    }
    return out;
}

}  // namespace hecke
