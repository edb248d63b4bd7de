#include "hecke/poly.hpp"

#include <algorithm>

namespace hecke {

namespace {

Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

std::vector<Int> primitive_part(std::vector<Int> v) {
    Int c = content_of(v);
    if (c > 1)
        for (auto& x : v) x /= c;
    return v;
}

// pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        Int la = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

Int content_of(const std::vector<Int>& v) {
    Int c = 0;
    for (const auto& x : v) {
        c = igcd(c, x);
        if (c == 1) break;
    }
    return boost::multiprecision::abs(c);
}

Poly::Poly(const Rat& c) : den_(1) {
    if (c != 0) {
        coef_.push_back(rat_num(c));
        den_ = rat_den(c);
    }
}

Poly::Poly(std::vector<Int> coeffs, Int den) : coef_(std::move(coeffs)), den_(std::move(den)) {
    if (den_ == 0) throw Error(Errc::DivisionByZero, "zero polynomial denominator");
    normalize_();
}

Poly Poly::variable() { return Poly({Int(0), Int(1)}, Int(1)); }

Poly Poly::from_coeffs(const std::vector<Rat>& ascending) {
    Int den = 1;
    for (const auto& c : ascending) den = den / igcd(den, rat_den(c)) * rat_den(c);
    std::vector<Int> v;
    v.reserve(ascending.size());
    for (const auto& c : ascending) v.push_back(rat_num(c) * (den / rat_den(c)));
    return Poly(std::move(v), std::move(den));
}

void Poly::normalize_() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    if (coef_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : coef_) x = -x;
    }
    Int g = igcd(content_of(coef_), den_);
    if (g > 1) {
        for (auto& x : coef_) x /= g;
        den_ /= g;
    }
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coef_.size())) return Rat(0);
    return Rat(coef_[static_cast<std::size_t>(i)], den_);
}

Rat Poly::leading() const {
    if (is_zero()) return Rat(0);
    return Rat(coef_.back(), den_);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coef_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Int g = igcd(a.den_, b.den_);
    Int ma = b.den_ / g;
    Int mb = a.den_ / g;
    std::vector<Int> v(std::max(a.coef_.size(), b.coef_.size()), Int(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) v[i] = a.coef_[i] * ma;
    for (std::size_t i = 0; i < b.coef_.size(); ++i) v[i] += b.coef_[i] * mb;
    return Poly(std::move(v), a.den_ * ma);
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> v(a.coef_.size() + b.coef_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
    return Poly(std::move(v), a.den_ * b.den_);
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0 || p.is_zero()) return Poly();
    std::vector<Int> v = p.coef_;
    for (auto& x : v) x *= rat_num(s);
    return Poly(std::move(v), p.den_ * rat_den(s));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc / Rat(den_);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem(a.coef_.size());
    for (std::size_t i = 0; i < a.coef_.size(); ++i) rem[i] = Rat(a.coef_[i], a.den_);
    int db = b.degree();
    Rat lb = b.leading();
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    for (int d = a.degree(); d >= db; --d) {
        Rat c = rem[static_cast<std::size_t>(d)] / lb;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeff(i);
    }
    rem.resize(static_cast<std::size_t>(db) > rem.size() ? rem.size() : static_cast<std::size_t>(db));
    return {Poly::from_coeffs(quo), Poly::from_coeffs(rem)};
}

Poly Poly::divexact(const Poly& g) const {
    auto [q, r] = divmod(*this, g);
    if (!r.is_zero()) throw Error(Errc::BadInput, "inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    std::vector<Int> pa = primitive_part(a.coef_);
    std::vector<Int> pb = primitive_part(b.coef_);
    if (pa.empty()) std::swap(pa, pb);
    while (!pb.empty()) {
        std::vector<Int> r = primitive_part(prem(pa, pb));
        pa = std::move(pb);
        pb = std::move(r);
    }
    if (pa.back() < 0)
        for (auto& x : pa) x = -x;
    return Poly(std::move(pa), Int(1));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        Rat c = coeff(d);
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        Rat a = boost::multiprecision::abs(c);
        if (d == 0 || a != 1) {
            s += rat_str(a);
            if (d > 0) s += "*";
        }
        if (d > 0) {
            s += "v";
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

}  // namespace hecke
