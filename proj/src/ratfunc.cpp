#include "hecke/ratfunc.hpp"

namespace hecke {

namespace {

int term_count(const Poly& p) {
    int n = 0;
    for (const auto& c : p.icoeffs())
        if (c != 0) ++n;
    return n;
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    reduce_();
}

void RatFunc::reduce_() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    Rat l = den_.leading();
    if (l != 1) {
        Rat li = rat_inv(l);
        num_ = li * num_;
        den_ = li * den_;
    }
}

std::optional<Rat> RatFunc::as_constant() const {
    if (num_.degree() <= 0 && den_.degree() == 0) return num_.coeff(0);
    return std::nullopt;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        // monic constant denominators are exactly 1
        RatFunc r;
        r.num_ = a.num_ + b.num_;
        r.den_ = Poly(Rat(1));
        return r;
    }
    RatFunc r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        r.reduce_();
        return r;
    }
    // lcm-based sum: any common factor of the result divides gcd(d1, d2)
    Poly g = Poly::gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        Rat l = r.den_.leading();
        if (l != 1) {
            Rat li = rat_inv(l);
            r.num_ = li * r.num_;
            r.den_ = li * r.den_;
        }
        return r;
    }
    Poly bq = b.den_.divexact(g);
    r.num_ = a.num_ * bq + b.num_ * a.den_.divexact(g);
    Poly common = Poly::gcd(r.num_, g);
    if (common.degree() > 0) {
        r.num_ = r.num_.divexact(common);
        r.den_ = a.den_.divexact(common) * bq;
    } else {
        r.den_ = a.den_ * bq;
    }
    Rat l = r.den_.leading();
    if (l != 1) {
        Rat li = rat_inv(l);
        r.num_ = li * r.num_;
        r.den_ = li * r.den_;
    }
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    Poly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    if (d2.degree() > 0) {
        Poly g = Poly::gcd(n1, d2);
        if (g.degree() > 0) {
            n1 = n1.divexact(g);
            d2 = d2.divexact(g);
        }
    }
    if (d1.degree() > 0) {
        Poly g = Poly::gcd(n2, d1);
        if (g.degree() > 0) {
            n2 = n2.divexact(g);
            d1 = d1.divexact(g);
        }
    }
    RatFunc r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    // cross-reduced product of reduced fractions is reduced; only fix the scale
    Rat l = r.den_.leading();
    if (l != 1) {
        Rat li = rat_inv(l);
        r.num_ = li * r.num_;
        r.den_ = li * r.den_;
    }
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    Rat l = r.den_.leading();
    if (l != 1) {
        Rat li = rat_inv(l);
        r.num_ = li * r.num_;
        r.den_ = li * r.den_;
    }
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc acc(Rat(1));
    RatFunc base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rat RatFunc::eval_at(const Rat& at) const {
    Rat d = den_.eval(at);
    if (d == 0)
        throw Error(Errc::PoleAtPoint, "denominator vanishes at v = " + rat_str(at));
    return num_.eval(at) / d;
}

std::pair<Poly, Poly> integer_form(const RatFunc& f) {
    const Int& dn = f.num().iden();
    const Int& dd = f.den().iden();
    Int l = dn / boost::multiprecision::gcd(dn, dd) * dd;
    std::vector<Int> p = f.num().icoeffs();
    std::vector<Int> q = f.den().icoeffs();
    Int mp = l / dn, mq = l / dd;
    for (auto& x : p) x *= mp;
    for (auto& x : q) x *= mq;
    Int g = boost::multiprecision::gcd(content_of(p), content_of(q));
    if (g > 1) {
        for (auto& x : p) x /= g;
        for (auto& x : q) x /= g;
    }
    return {Poly(std::move(p), Int(1)), Poly(std::move(q), Int(1))};
}

std::string RatFunc::str() const {
    auto [p, q] = integer_form(*this);
    if (q.degree() == 0 && q.coeff(0) == 1) return p.str();
    std::string ps = term_count(p) > 1 ? "(" + p.str() + ")" : p.str();
    std::string qs = q.degree() == 0 ? q.str() : "(" + q.str() + ")";
    return ps + "/" + qs;
}

}  // namespace hecke
