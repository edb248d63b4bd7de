#pragma once

#include <vector>

#include "hecke/algebra.hpp"

namespace hecke {

// Element of a tensor product of Hecke algebras over a common coefficient
// ring, supported on tuples of basis indices. Factor parameters may differ.
template <class K>
class TensorElementT {
public:
    using Key = std::vector<AffinePerm>;

    explicit TensorElementT(std::vector<HeckeConfigT<K>> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw Error(Errc::BadInput, "tensor product needs at least one factor");
    }

    const std::vector<HeckeConfigT<K>>& factors() const { return factors_; }
    const std::map<Key, K>& terms() const& { return supp_; }
    std::map<Key, K> terms() && { return std::move(supp_); }
    bool is_zero() const { return supp_.empty(); }

    void add_term(const Key& key, const K& c) {
        if (key.size() != factors_.size())
            throw Error(Errc::RankMismatch, "tuple arity does not match the factor count");
        for (std::size_t i = 0; i < key.size(); ++i)
            if (key[i].rank() != factors_[i].rank())
                throw Error(Errc::RankMismatch, "tuple component rank does not match its factor");
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = supp_.try_emplace(key, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) supp_.erase(it);
        }
    }

    friend bool operator==(const TensorElementT& a, const TensorElementT& b) = default;

private:
    std::vector<HeckeConfigT<K>> factors_;
    std::map<Key, K> supp_;
};

template <class K>
TensorElementT<K> tensor_unit(const std::vector<HeckeConfigT<K>>& factors) {
    TensorElementT<K> e(factors);
    typename TensorElementT<K>::Key key;
    for (const auto& f : factors) key.push_back(AffinePerm::identity(f.rank()));
    e.add_term(key, K(1));
    return e;
}

// Outer product of one element per factor.
template <class K>
TensorElementT<K> tensor_of(const std::vector<HeckeElementT<K>>& parts) {
    std::vector<HeckeConfigT<K>> factors;
    for (const auto& p : parts) factors.push_back(p.config());
    TensorElementT<K> out(factors);
    std::vector<typename HeckeElementT<K>::Support::const_iterator> its;
    for (const auto& p : parts) {
        if (p.is_zero()) return out;
        its.push_back(p.terms().begin());
    }
    while (true) {
        typename TensorElementT<K>::Key key;
        K c(1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            key.push_back(its[i]->first);
            c = c * its[i]->second;
        }
        out.add_term(key, c);
        std::size_t i = parts.size();
        while (i > 0) {
            --i;
            if (++its[i] != parts[i].terms().end()) break;
            its[i] = parts[i].terms().begin();
            if (i == 0) return out;
        }
    }
}

// Slot-i embedding a -> 1 x ... x a x ... x 1.
template <class K>
TensorElementT<K> tensor_embed(const std::vector<HeckeConfigT<K>>& factors, std::size_t slot,
                               const HeckeElementT<K>& a) {
    if (slot >= factors.size()) throw Error(Errc::IndexOutOfRange, "tensor slot out of range");
    if (!(a.config() == factors[slot]))
        throw Error(Errc::ConfigMismatch, "element does not match the factor it is embedded into");
    std::vector<HeckeElementT<K>> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
        parts.push_back(i == slot ? a : unit(factors[i]));
    return tensor_of(parts);
}

template <class K>
TensorElementT<K> operator+(const TensorElementT<K>& a, const TensorElementT<K>& b) {
    if (!(a.factors() == b.factors()))
        throw Error(Errc::ConfigMismatch, "tensor operands have different factor lists");
    TensorElementT<K> out = a;
    for (const auto& [k, c] : b.terms()) out.add_term(k, c);
    return out;
}

// Componentwise product with bilinear expansion across both supports.
template <class K>
TensorElementT<K> tensor_mul(const TensorElementT<K>& a, const TensorElementT<K>& b) {
    if (!(a.factors() == b.factors()))
        throw Error(Errc::ConfigMismatch, "tensor operands have different factor lists");
    TensorElementT<K> out(a.factors());
    const auto& factors = a.factors();
    for (const auto& [xs, ca] : a.terms()) {
        for (const auto& [ys, cb] : b.terms()) {
            std::vector<HeckeElementT<K>> partials;
            partials.reserve(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i)
                partials.push_back(mul(basis_element(factors[i], xs[i]), basis_element(factors[i], ys[i])));
            TensorElementT<K> piece = tensor_of(partials);
            for (const auto& [k, c] : piece.terms()) out.add_term(k, ca * cb * c);
        }
    }
    return out;
}

}  // namespace hecke
