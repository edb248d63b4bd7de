#pragma once

#include <map>
#include <utility>

#include "hecke/coeff.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Rank and Hecke parameter, over the coefficient ring K (Rat or RatFunc).
// The symbolic algebra takes K = RatFunc with the indeterminate as
// parameter; a numeric algebra takes K = Rat with a nonzero rational.
// Other combinations are legitimate (the rank-2 parameter-1 algebra over
// Q(v) is the target of the generator substitution in iso.hpp).
template <class K>
class HeckeConfigT {
public:
    HeckeConfigT(int rank, K param) : rank_(rank), param_(std::move(param)) {
        if (rank_ < 1) throw Error(Errc::BadInput, "rank must be at least 1");
        if (coeff_is_zero(param_)) throw Error(Errc::InvalidParameter, "Hecke parameter must be nonzero");
    }

    int rank() const { return rank_; }
    const K& param() const { return param_; }

    friend bool operator==(const HeckeConfigT& a, const HeckeConfigT& b) = default;

private:
    int rank_;
    K param_;
};

inline HeckeConfigT<RatFunc> symbolic_config(int rank) {
    return HeckeConfigT<RatFunc>(rank, RatFunc::variable());
}

inline HeckeConfigT<Rat> numeric_config(int rank, Rat z) {
    return HeckeConfigT<Rat>(rank, std::move(z));
}

// Finitely supported K-linear combination of basis elements indexed by the
// extended affine Weyl group. Stored coefficients are never zero.
template <class K>
class HeckeElementT {
public:
    using Coeff = K;
    using Support = std::map<AffinePerm, K>;

    explicit HeckeElementT(HeckeConfigT<K> config) : config_(std::move(config)) {}

    const HeckeConfigT<K>& config() const { return config_; }
    const Support& terms() const& { return supp_; }
    // rvalue access yields a value so iterating a temporary's terms is safe
    Support terms() && { return std::move(supp_); }
    bool is_zero() const { return supp_.empty(); }
    std::size_t term_count() const { return supp_.size(); }

    void add_term(const AffinePerm& w, const K& c) {
        if (w.rank() != config_.rank())
            throw Error(Errc::RankMismatch, "basis index rank does not match the algebra");
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = supp_.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) supp_.erase(it);
        }
    }

    friend bool operator==(const HeckeElementT& a, const HeckeElementT& b) = default;

private:
    HeckeConfigT<K> config_;
    Support supp_;
};

namespace detail {

template <class K>
void require_same_config(const HeckeElementT<K>& a, const HeckeElementT<K>& b) {
    if (!(a.config() == b.config()))
        throw Error(Errc::ConfigMismatch, "operands live in different algebras");
}

template <class K>
void accumulate(std::map<AffinePerm, K>& into, const AffinePerm& w, K c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = into.try_emplace(w, std::move(c));
    if (!fresh) {
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) into.erase(it);
    }
}

// In-place right multiplication of a support map by T_{s_i}:
// T_x T_{s_i} = T_{x s_i} when s_i raises the length, and
// z T_{x s_i} + (z-1) T_x otherwise.
template <class K>
void fold_right_s(std::map<AffinePerm, K>& cur, int i, const K& z, const K& zm1) {
    std::map<AffinePerm, K> next;
    for (auto& [x, c] : cur) {
        if (!x.right_descent(i)) {
            accumulate(next, x.times_s(i), c);
        } else {
            accumulate(next, x.times_s(i), z * c);
            accumulate(next, x, zm1 * c);
        }
    }
    cur = std::move(next);
}

template <class K>
void fold_right_t(std::map<AffinePerm, K>& cur, std::int64_t k) {
    if (k == 0) return;
    std::map<AffinePerm, K> next;
    for (auto& [x, c] : cur) next.emplace(x.times_t(k), c);
    cur = std::move(next);
}

}  // namespace detail

template <class K>
HeckeElementT<K> unit(const HeckeConfigT<K>& config) {
    HeckeElementT<K> e(config);
    e.add_term(AffinePerm::identity(config.rank()), K(1));
    return e;
}

template <class K>
HeckeElementT<K> basis_element(const HeckeConfigT<K>& config, const AffinePerm& w) {
    HeckeElementT<K> e(config);
    e.add_term(w, K(1));
    return e;
}

template <class K>
HeckeElementT<K> operator+(const HeckeElementT<K>& a, const HeckeElementT<K>& b) {
    detail::require_same_config(a, b);
    HeckeElementT<K> out = a;
    for (const auto& [w, c] : b.terms()) out.add_term(w, c);
    return out;
}

template <class K>
HeckeElementT<K> operator-(const HeckeElementT<K>& a) {
    HeckeElementT<K> out(a.config());
    for (const auto& [w, c] : a.terms()) out.add_term(w, -c);
    return out;
}

template <class K>
HeckeElementT<K> operator-(const HeckeElementT<K>& a, const HeckeElementT<K>& b) {
    return a + (-b);
}

template <class K>
HeckeElementT<K> operator*(const K& s, const HeckeElementT<K>& a) {
    HeckeElementT<K> out(a.config());
    for (const auto& [w, c] : a.terms()) out.add_term(w, s * c);
    return out;
}

// Length-driven product. Each basis index of b is split into its rotation
// power and reduced word; the rotation acts freely on indices and each
// letter folds through the quadratic rewrite.
template <class K>
HeckeElementT<K> mul(const HeckeElementT<K>& a, const HeckeElementT<K>& b) {
    detail::require_same_config(a, b);
    HeckeElementT<K> out(a.config());
    if (a.is_zero() || b.is_zero()) return out;
    const K& z = a.config().param();
    const K zm1 = z - K(1);
    for (const auto& [y, cb] : b.terms()) {
        ReducedDecomposition rd = reduced_decomposition(y);
        std::map<AffinePerm, K> cur;
        for (const auto& [x, ca] : a.terms()) cur.emplace(x, ca * cb);
        detail::fold_right_t(cur, rd.omega_power);
        for (int i : rd.word) detail::fold_right_s(cur, i, z, zm1);
        for (auto& [w, c] : cur) out.add_term(w, std::move(c));
    }
    return out;
}

template <class K>
HeckeElementT<K> operator*(const HeckeElementT<K>& a, const HeckeElementT<K>& b) {
    return mul(a, b);
}

// T_{S(i)}, T_T, T_{T^{-1}}; the i = 0 reflection is produced as the
// conjugate T_T T_{S(1)} T_{T^{-1}}, which collapses to a single term.
template <class K>
HeckeElementT<K> gen(const HeckeConfigT<K>& config, GenName which) {
    if (which.kind == GenName::Kind::S && which.index == 0) {
        HeckeElementT<K> t = basis_element(config, t_power(config.rank(), 1));
        HeckeElementT<K> s1 = basis_element(config, generator(config.rank(), GenName::s(1)));
        HeckeElementT<K> tinv = basis_element(config, t_power(config.rank(), -1));
        return mul(mul(t, s1), tinv);
    }
    return basis_element(config, generator(config.rank(), which));
}

// Inverse of a single-term element c T_w:
// T_w^{-1} = T_{s_im}^{-1} ... T_{s_i1}^{-1} T_{t^{-k}} with
// T_s^{-1} = z^{-1} T_s + (z^{-1} - 1).
template <class K>
HeckeElementT<K> invert(const HeckeElementT<K>& a) {
    if (a.term_count() != 1)
        throw Error(Errc::NotInvertible, "only single-term elements are inverted");
    const auto& [w, c] = *a.terms().begin();
    const K zinv = coeff_inv(a.config().param());
    ReducedDecomposition rd = reduced_decomposition(w);
    HeckeElementT<K> acc(a.config());
    acc.add_term(AffinePerm::identity(a.config().rank()), coeff_inv(c));
    for (auto it = rd.word.rbegin(); it != rd.word.rend(); ++it) {
        HeckeElementT<K> sinv = zinv * gen(a.config(), GenName::s(*it));
        sinv.add_term(AffinePerm::identity(a.config().rank()), zinv - K(1));
        acc = mul(acc, sinv);
    }
    acc = mul(acc, basis_element(a.config(), t_power(a.config().rank(), -rd.omega_power)));
    return acc;
}

template <class K>
HeckeElementT<K> power(const HeckeElementT<K>& a, long long e) {
    if (e < 0) return power(invert(a), -e);
    HeckeElementT<K> acc = unit(a.config());
    HeckeElementT<K> base = a;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = n > 1 ? mul(base, base) : base;
        n >>= 1;
    }
    return acc;
}

// Rank-1 identification with Laurent polynomials. The exponent of a basis
// index is its displacement degree (sum(w(i)-i))/r, so the rotation t
// itself sits at exponent -1; products correspond to convolution.
template <class K>
std::map<std::int64_t, K> laurent_form(const HeckeElementT<K>& a) {
    if (a.config().rank() != 1)
        throw Error(Errc::RankMismatch, "laurent_form is defined at rank 1");
    std::map<std::int64_t, K> out;
    for (const auto& [w, c] : a.terms()) out.emplace(-w.omega_power(), c);
    return out;
}

template <class K>
HeckeElementT<K> from_laurent(const HeckeConfigT<K>& config, const std::map<std::int64_t, K>& coeffs) {
    if (config.rank() != 1) throw Error(Errc::RankMismatch, "from_laurent is defined at rank 1");
    HeckeElementT<K> e(config);
    for (const auto& [k, c] : coeffs) e.add_term(t_power(1, -k), c);
    return e;
}

// Coefficientwise evaluation of the symbolic parameter at a rational point.
inline HeckeElementT<Rat> specialize(const HeckeElementT<RatFunc>& a, const Rat& z) {
    Rat pz = a.config().param().eval_at(z);
    if (pz == 0)
        throw Error(Errc::InvalidParameter, "specialization sends the Hecke parameter to zero");
    HeckeElementT<Rat> out(numeric_config(a.config().rank(), pz));
    for (const auto& [w, c] : a.terms()) out.add_term(w, c.eval_at(z));
    return out;
}

}  // namespace hecke
