#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

using Window = std::vector<std::int64_t>;

// Named generators of the extended affine Weyl group of GL_r:
// the simple reflections s_0..s_{r-1} and the rotation t with its inverse.
struct GenName {
    enum class Kind { S, T, TInv };
    Kind kind;
    int index = 0;

    static GenName s(int i) { return {Kind::S, i}; }
    static GenName t() { return {Kind::T, 0}; }
    static GenName t_inv() { return {Kind::TInv, 0}; }
};

// Element of the extended affine Weyl group of GL_r, stored as the window
// (w(1),...,w(r)) of a bijection of Z with w(i+r) = w(i)+r. The window
// residues mod r are pairwise distinct and sum(w(i)-i) is divisible by r.
class AffinePerm {
public:
    AffinePerm(int rank, Window window);

    static AffinePerm identity(int rank);

    int rank() const { return rank_; }
    const Window& window() const { return w_; }

    // value at any integer, via the periodic extension
    std::int64_t at(std::int64_t i) const;

    // k with w = t^k * (Coxeter part); equals -(sum(w(i)-i))/r. The
    // displacement sum itself, (sum(w(i)-i))/r, is -omega_power().
    std::int64_t omega_power() const;

    // Coxeter length of the degree-zero part:
    // sum over i<j of |floor((w(j)-w(i))/r)|.
    std::int64_t length() const;

    // true iff length(w*s_i) < length(w); i in {0,...,r-1}
    bool right_descent(int i) const;

    AffinePerm times_s(int i) const;              // right multiplication by s_i
    AffinePerm times_t(std::int64_t k) const;     // right multiplication by t^k
    AffinePerm omega_shifted(std::int64_t k) const;  // left multiplication by t^k

    bool is_identity() const;

    friend bool operator==(const AffinePerm& a, const AffinePerm& b) = default;
    friend std::strong_ordering operator<=>(const AffinePerm& a, const AffinePerm& b);

    // "T(a1,...,ar)", the window literal of the expression grammar
    std::string str() const;

private:
    int rank_;
    Window w_;
};

// convention: (u o w)(i) = u(w(i))
AffinePerm compose(const AffinePerm& u, const AffinePerm& w);

AffinePerm generator(int rank, GenName which);
AffinePerm t_power(int rank, std::int64_t k);

// Normal form w = t^omega_power * s_{word[0]} * ... * s_{word[m-1]},
// with the word reduced: m = length(w).
struct ReducedDecomposition {
    std::int64_t omega_power = 0;
    std::vector<int> word;
};

enum class TieBreak { SmallestIndex, LargestIndex };

// Greedy descent stripping after factoring out the rotation part.
// Ties default to the smallest descent index.
ReducedDecomposition reduced_decomposition(const AffinePerm& w,
                                           TieBreak tie = TieBreak::SmallestIndex);

AffinePerm reassemble(int rank, const ReducedDecomposition& rd);

// Breadth-first word lengths over {s_0,...,s_{r-1}}, replicated over the
// rotation cosets t^k with |k| <= max_len. Independent oracle for length().
// Guarded: rank <= 6 and max_len <= length_guard_cap().
std::map<AffinePerm, int> bfs_ball(int rank, int max_len);

// Resource guard for ball-shaped enumerations. Defaults to 8; the
// HECKE_MAX_LEN environment variable can override it, hard-capped at 10.
int length_guard_cap();

}  // namespace hecke
