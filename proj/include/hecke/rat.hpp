#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "hecke/errors.hpp"

namespace hecke {

// Exact scalars. Rat is always stored in lowest terms with a positive
// denominator (the backend maintains that canonical form). Expression
// templates are disabled so arithmetic yields concrete values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// The backend's (num, den) constructor rejects negative denominators;
// this normalizes the sign and guards zero.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Rat rat_inv(const Rat& r) {
    if (r == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return make_rat(rat_den(r), rat_num(r));
}

// "a" or "a/b", reduced.
std::string rat_str(const Rat& r);

// Accepts "a", "-a", "a/b" with optional sign on the numerator.
Rat rat_parse(std::string_view text);

// r^e for integer e; negative exponents require r != 0.
Rat rat_pow(const Rat& r, long long e);

// Floor of the n-th root, n >= 1, x >= 0.
Int int_nth_root(const Int& x, unsigned n);

// base^e for rational e, exact or nothing. base must be positive.
// Defined when both numerator and denominator of base are perfect
// den(e)-th powers.
std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& e);

bool is_prime_power(const Int& q);

}  // namespace hecke
