#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "hecke/render.hpp"

namespace hecke {

// Generator substitution between the rank-2 algebra with parameter z and
// the rank-2 algebra with parameter 1, over a common coefficient ring.
// Built by phi_assignment / psi_assignment; the quadratic satisfied by
// image_of_s inside the target is checked at construction.
template <class K>
struct GeneratorAssignmentT {
    HeckeConfigT<K> source;
    HeckeConfigT<K> target;
    HeckeElementT<K> image_of_s;
    HeckeElementT<K> image_of_t;
};

namespace detail {

template <class K>
void require_valid_iso_param(const K& z) {
    if (coeff_is_zero(z)) throw Error(Errc::InvalidParameter, "parameter must be nonzero");
    if (coeff_is_zero(z + K(1)))
        throw Error(Errc::InvalidParameter, "parameter -1 is excluded: the construction needs z + 1 != 0");
}

}  // namespace detail

// s |-> ((z+1)/2) s + (z-1)/2, t |-> t : carries the parameter-z algebra
// into the parameter-1 algebra (the substituted generator satisfies the
// z-quadratic there).
template <class K>
GeneratorAssignmentT<K> phi_assignment(const K& z) {
    detail::require_valid_iso_param(z);
    HeckeConfigT<K> source(2, z);
    HeckeConfigT<K> target(2, K(1));
    K half = coeff_inv(K(2));
    HeckeElementT<K> s_img = ((z + K(1)) * half) * gen(target, GenName::s(1));
    s_img.add_term(AffinePerm::identity(2), (z - K(1)) * half);
    HeckeElementT<K> t_img = gen(target, GenName::t());
    HeckeElementT<K> expect = (z - K(1)) * s_img + z * unit(target);
    if (!(mul(s_img, s_img) == expect))
        throw Error(Errc::InvalidParameter, "substituted generator fails the source quadratic");
    return {source, target, s_img, t_img};
}

// s |-> (2 s - (z-1)) / (z+1), t |-> t : the inverse assignment, from the
// parameter-1 algebra into the parameter-z algebra (the image squares to 1).
template <class K>
GeneratorAssignmentT<K> psi_assignment(const K& z) {
    detail::require_valid_iso_param(z);
    HeckeConfigT<K> source(2, K(1));
    HeckeConfigT<K> target(2, z);
    K d = coeff_inv(z + K(1));
    HeckeElementT<K> s_img = (K(2) * d) * gen(target, GenName::s(1));
    s_img.add_term(AffinePerm::identity(2), -((z - K(1)) * d));
    HeckeElementT<K> t_img = gen(target, GenName::t());
    if (!(mul(s_img, s_img) == unit(target)))
        throw Error(Errc::InvalidParameter, "substituted generator fails to be an involution");
    return {source, target, s_img, t_img};
}

// Memoized images of basis elements under an assignment. The image of T_w
// is the product of generator images along the canonical reduced word of
// w; entries are built by peeling the last letter, so each costs a single
// multiplication given the shorter one.
template <class K>
class ImageCache {
public:
    explicit ImageCache(const GeneratorAssignmentT<K>& assign)
        : assign_(&assign),
          s_images_{mul(mul(assign.image_of_t, assign.image_of_s), invert(assign.image_of_t)),
                    assign.image_of_s} {}

    const HeckeElementT<K>& of(const AffinePerm& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        HeckeElementT<K> img = [&] {
            if (w.length() == 0) return power(assign_->image_of_t, w.omega_power());
            int i = 0;
            while (!w.right_descent(i)) ++i;
            return mul(of(w.times_s(i)), s_images_[static_cast<std::size_t>(i)]);
        }();
        return memo_.emplace(w, std::move(img)).first->second;
    }

    const HeckeElementT<K>& s_image(int i) const { return s_images_[static_cast<std::size_t>(i)]; }

    HeckeElementT<K> of_element(const HeckeElementT<K>& x) {
        std::map<AffinePerm, K> acc;
        for (const auto& [w, c] : x.terms())
            for (const auto& [u, d] : of(w).terms()) detail::accumulate(acc, u, c * d);
        HeckeElementT<K> out(assign_->target);
        for (auto& [u, d] : acc) out.add_term(u, std::move(d));
        return out;
    }

private:
    const GeneratorAssignmentT<K>* assign_;
    std::array<HeckeElementT<K>, 2> s_images_;  // images of s_0 and s_1
    std::map<AffinePerm, HeckeElementT<K>> memo_;
};

// T_{S(0)} is routed through T_T T_{S(1)} T_{T^{-1}}; everything else
// follows the canonical reduced decomposition, extended linearly.
template <class K>
HeckeElementT<K> apply(const GeneratorAssignmentT<K>& assign, const HeckeElementT<K>& x) {
    if (!(x.config() == assign.source))
        throw Error(Errc::ConfigMismatch, "element does not live in the assignment source");
    ImageCache<K> cache(assign);
    return cache.of_element(x);
}

struct IsoFailure {
    std::string check;   // "phi-mult", "psi-mult", "roundtrip", "internal"
    std::string detail;  // offending basis pair or element
};

struct IsoReport {
    std::string header;
    long long checked_pairs = 0;
    long long roundtrips = 0;
    bool passed = true;
    std::vector<IsoFailure> failures;
};

namespace detail {

inline void record_failure(IsoReport& rep, const std::string& check, const std::string& what) {
    rep.passed = false;
    if (rep.failures.size() < 32) rep.failures.push_back({check, what});
}

// Multiplicativity of the assignment on every ordered pair of ball
// elements. Both T_x T_y and img(x) img(y) are extended incrementally in
// y along canonical last letters; every 101st pair is recomputed from
// scratch to guard the incremental tables.
template <class K>
void check_multiplicative(IsoReport& rep, const std::string& label,
                          const GeneratorAssignmentT<K>& assign, ImageCache<K>& cache,
                          const std::vector<AffinePerm>& ball) {
    const K& z = assign.source.param();
    const K zm1 = z - K(1);
    for (const AffinePerm& x : ball) {
        std::map<AffinePerm, HeckeElementT<K>> source_prod;  // y -> T_x T_y
        std::map<AffinePerm, HeckeElementT<K>> image_prod;   // y -> img(x) img(y)
        long long n = 0;
        for (const AffinePerm& y : ball) {
            HeckeElementT<K> p(assign.source);
            HeckeElementT<K> r(assign.target);
            if (y.length() == 0) {
                std::int64_t k = y.omega_power();
                p = basis_element(assign.source, x.times_t(k));
                for (const auto& [w, c] : cache.of(x).terms()) r.add_term(w.times_t(k), c);
            } else {
                int i = 0;
                while (!y.right_descent(i)) ++i;
                AffinePerm yp = y.times_s(i);
                std::map<AffinePerm, K> cur(source_prod.at(yp).terms());
                fold_right_s(cur, i, z, zm1);
                for (auto& [w, c] : cur) p.add_term(w, std::move(c));
                r = mul(image_prod.at(yp), cache.s_image(i));
            }
            if (!(cache.of_element(p) == r))
                record_failure(rep, label, "x=" + x.str() + " y=" + y.str());
            if (++n % 101 == 0 && !(mul(cache.of(x), cache.of(y)) == r))
                record_failure(rep, "internal", "x=" + x.str() + " y=" + y.str());
            source_prod.emplace(y, std::move(p));
            image_prod.emplace(y, std::move(r));
            ++rep.checked_pairs;
        }
    }
}

}  // namespace detail

// Desk-scale certification of the rank-2 parameter-erasing isomorphism:
// (a) multiplicativity of the forward assignment on all ball pairs,
// (b) the same for the inverse assignment, and (c) two-sided round trips
// on every ball element.
template <class K>
IsoReport verify_isomorphism(const K& z, int max_len) {
    if (max_len < 0 || max_len > length_guard_cap())
        throw Error(Errc::ResourceLimit,
                    "verification ball exceeds the guard (" + std::to_string(length_guard_cap()) + ")");
    GeneratorAssignmentT<K> phi = phi_assignment(z);
    GeneratorAssignmentT<K> psi = psi_assignment(z);

    auto ball_map = bfs_ball(2, max_len);
    std::vector<AffinePerm> ball;
    ball.reserve(ball_map.size());
    for (const auto& [w, len] : ball_map) ball.push_back(w);
    std::sort(ball.begin(), ball.end(), [](const AffinePerm& a, const AffinePerm& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });

    IsoReport rep;
    rep.header =
        "the substitution s -> ((z+1)/2)s + (z-1)/2, t -> t carries the parameter-z algebra into the "
        "parameter-1 algebra; s -> (2s-(z-1))/(z+1), t -> t is its inverse; either direction may be "
        "taken as the defining map, so both are certified here";

    ImageCache<K> phi_images(phi);
    ImageCache<K> psi_images(psi);

    detail::check_multiplicative(rep, "phi-mult", phi, phi_images, ball);
    detail::check_multiplicative(rep, "psi-mult", psi, psi_images, ball);

    for (const AffinePerm& w : ball) {
        if (!(psi_images.of_element(phi_images.of(w)) == basis_element(phi.source, w)))
            detail::record_failure(rep, "roundtrip", "psi(phi(T_w)) != T_w at w=" + w.str());
        if (!(phi_images.of_element(psi_images.of(w)) == basis_element(psi.source, w)))
            detail::record_failure(rep, "roundtrip", "phi(psi(T_w)) != T_w at w=" + w.str());
        rep.roundtrips += 2;
    }
    return rep;
}

}  // namespace hecke
