#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "hecke/rat.hpp"

namespace hecke {

// Univariate polynomial over the rationals in the central indeterminate v.
// Stored as an integer coefficient vector (ascending degree, no trailing
// zeros) over a single positive denominator, with gcd(content, den) = 1.
// Keeping one shared denominator makes products integer convolutions.
class Poly {
public:
    Poly() : den_(1) {}
    explicit Poly(const Rat& c);
    Poly(std::vector<Int> coeffs, Int den);

    static Poly variable();
    static Poly from_coeffs(const std::vector<Rat>& ascending);

    bool is_zero() const { return coef_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    Rat coeff(int i) const;
    Rat leading() const;

    const std::vector<Int>& icoeffs() const { return coef_; }
    const Int& iden() const { return den_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rat& s, const Poly& p);
    Poly scaled(const Rat& s) const { return s * *this; }

    Rat eval(const Rat& x) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    // Quotient and remainder over the rationals; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact quotient; throws if the division leaves a remainder.
    Poly divexact(const Poly& g) const;

    // Greatest common divisor, normalized to a primitive integer
    // polynomial with positive leading coefficient (1 for coprime input).
    static Poly gcd(const Poly& a, const Poly& b);

    std::string str() const;  // diagnostics only; canonical rendering lives with RatFunc

private:
    void normalize_();

    std::vector<Int> coef_;
    Int den_;
};

// Integer content (gcd of a coefficient vector), 0 for the empty vector.
Int content_of(const std::vector<Int>& v);

}  // namespace hecke
