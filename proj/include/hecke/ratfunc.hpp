#pragma once

#include <optional>
#include <string>

#include "hecke/poly.hpp"

namespace hecke {

// Element of the rational-function field Q(v). Canonical form: numerator
// and denominator coprime, denominator monic, zero stored as 0/1. All
// arithmetic preserves the canonical form, so operator== is structural.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // implicit: Q embeds in Q(v)
    RatFunc(int c) : num_(Rat(c)), den_(Rat(1)) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }
    // The constant value when the function is a constant, nothing otherwise.
    std::optional<Rat> as_constant() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const;
    RatFunc pow(long long e) const;

    // Exact specialization v -> at; throws PoleAtPoint when the reduced
    // denominator vanishes there.
    Rat eval_at(const Rat& at) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    // "p(v)/q(v)" with integer-coefficient polynomials in descending-degree
    // form, coprime content, positive denominator; "/q" omitted when q = 1.
    std::string str() const;

private:
    void reduce_();

    Poly num_;
    Poly den_;
};

// Integer-normalized view used by the renderer and the CLI: clears all
// rational content so both parts have integer coefficients with overall
// content 1 and the denominator has a positive leading coefficient.
std::pair<Poly, Poly> integer_form(const RatFunc& f);

}  // namespace hecke
