#pragma once

#include <optional>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Choice of coefficient field and Hecke parameter: Symbolic works over
// Q(v) with the indeterminate as parameter, Numeric over Q with a fixed
// nonzero rational.
class CoeffMode {
public:
    static CoeffMode symbolic() { return CoeffMode(std::nullopt); }

    static CoeffMode numeric(Rat z) {
        if (z == 0) throw Error(Errc::InvalidParameter, "numeric Hecke parameter must be nonzero");
        return CoeffMode(std::move(z));
    }

    bool is_symbolic() const { return !z_.has_value(); }

    const Rat& numeric_value() const {
        if (is_symbolic()) throw Error(Errc::ModeMismatch, "symbolic mode has no numeric value");
        return *z_;
    }

    friend bool operator==(const CoeffMode& a, const CoeffMode& b) = default;

private:
    explicit CoeffMode(std::optional<Rat> z) : z_(std::move(z)) {}
    std::optional<Rat> z_;
};

// "p" for symbolic, else a rational literal; accepts "v"/"symbolic"/"a/b".
CoeffMode coeff_mode_parse(std::string_view text);

// Uniform coefficient-ring hooks used by the templated algebra code.
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }

inline bool coeff_is_one(const Rat& c) { return c == 1; }
inline bool coeff_is_one(const RatFunc& c) { return c.is_one(); }

inline Rat coeff_inv(const Rat& c) {
    if (c == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return rat_inv(c);
}
inline RatFunc coeff_inv(const RatFunc& c) { return c.inv(); }

// sign used by the pretty-printer; for functions, the sign of the leading
// numerator coefficient (the monic denominator is positive)
inline bool coeff_is_negative(const Rat& c) { return c < 0; }
inline bool coeff_is_negative(const RatFunc& c) { return c.num().leading() < 0; }

inline std::string coeff_str(const Rat& c) { return rat_str(c); }
inline std::string coeff_str(const RatFunc& c) { return c.str(); }

}  // namespace hecke
