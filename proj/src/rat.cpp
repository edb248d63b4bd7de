#include "hecke/rat.hpp"

#include <cctype>

namespace hecke {

std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

Rat rat_parse(std::string_view text) {
    auto bad = [&] { return Error(Errc::BadInput, "invalid rational literal '" + std::string(text) + "'"); };
    std::size_t i = 0;
    auto read_int = [&]() -> Int {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw bad();
        Int v(std::string(text.substr(start, i - start)));
        return neg ? Int(-v) : v;
    };
    Int num = read_int();
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in rational literal");
    }
    if (i != text.size()) throw bad();
    return make_rat(std::move(num), std::move(den));
}

Rat rat_pow(const Rat& r, long long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (r == 0) throw Error(Errc::DivisionByZero, "0 raised to a negative power");
        return rat_pow(rat_inv(r), -e);
    }
    Rat acc(1);
    Rat base = r;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Int int_nth_root(const Int& x, unsigned n) {
    if (x < 0) throw Error(Errc::BadInput, "nth root of a negative integer");
    if (n == 0) throw Error(Errc::BadInput, "0th root");
    if (x <= 1 || n == 1) return x;
    Int lo = 1;
    Int hi = x;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<Rat> rat_pow_exact(const Rat& base, const Rat& e) {
    if (base <= 0) throw Error(Errc::InvalidParameter, "exact power requires a positive base");
    if (is_integer(e)) {
        long long k = static_cast<long long>(rat_num(e));
        return rat_pow(base, k);
    }
    Int p = rat_num(e);
    Int q = rat_den(e);
    unsigned n = static_cast<unsigned>(q);
    Int bn = rat_num(base);
    Int bd = rat_den(base);
    Int rn = int_nth_root(bn, n);
    Int rd = int_nth_root(bd, n);
    if (boost::multiprecision::pow(rn, n) != bn || boost::multiprecision::pow(rd, n) != bd)
        return std::nullopt;
    return rat_pow(Rat(rn, rd), static_cast<long long>(p));
}

bool is_prime_power(const Int& q) {
    if (q < 2) return false;
    Int m = q;
    Int p = 0;
    // smallest prime factor by trial division; inputs are small residue cardinalities
    for (Int f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            p = f;
            break;
        }
    }
    if (p == 0) return true;  // q itself prime
    while (m % p == 0) m /= p;
    return m == 1;
}

}  // namespace hecke
