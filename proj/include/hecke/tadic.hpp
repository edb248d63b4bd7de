#pragma once

#include <optional>
#include <string>

#include "hecke/bernstein.hpp"

namespace hecke::tadic {

// Cuspidal datum with its unramified twist split into a rational exponent
// part (twist_r, normalized so the twist takes a uniformizer to
// q^{-twist_r}) and an angular part twist_theta in [0,1) on which the
// torsion group acts.
struct TwistedCuspidal {
    std::string label;
    int a = 1;        // segment length of the square-integrable lift
    int torsion = 1;  // order of the twist-stabilizer group
    Rat twist_r = 0;
    Rat twist_theta = 0;
};

void validate(const TwistedCuspidal& s);

// Inertial-twist equivalence: equal labels, equal exponent parts, and
// angular parts congruent mod 1/torsion.
bool equivalent(const TwistedCuspidal& s1, const TwistedCuspidal& s2);

// The twist by |.|^{x/d}: shifts the exponent part by x.
TwistedCuspidal twist(TwistedCuspidal s, const Rat& x);

// The induced pair s1 x s2 is reducible iff s2 is equivalent to s1
// twisted by +a(s1) or -a(s1).
bool reducible(const TwistedCuspidal& s1, const TwistedCuspidal& s2);

// Midpoint datum of a reducible pair: both named constituents wrap the
// same core, shifted half a segment from s1 along the matching branch.
struct ConstituentPair {
    TwistedCuspidal core;
    int branch = 1;  // +1 when s2 ~ s1 twisted by +a, else -1
};

ConstituentPair constituents(const TwistedCuspidal& s1, const TwistedCuspidal& s2);  // NotReducible

struct Gl2Rep {
    enum class Kind { Cuspidal, Induced, OneDimensional };
    Kind kind = Kind::Cuspidal;
    std::string label;  // cuspidal or one-dimensional character label
    std::optional<TwistedCuspidal> sigma1, sigma2;
};

enum class RepKind { I, II, III, IVSt, IVSp };

const char* rep_kind_str(RepKind k);

enum class ConstituentChoice { St, Sp };

// The four-way classification. A reducible induced pair needs a
// constituent choice; without one the caller should fall back to
// constituents() (signalled by AmbiguousConstituent).
RepKind classify_kind(const Gl2Rep& rep, std::optional<ConstituentChoice> choice = std::nullopt);

// Cross-check against the block-level invariants when both views describe
// the same label: the reducibility number must equal the segment length.
bool consistent_with(const TwistedCuspidal& s, const bernstein::CuspidalFactor& f);

}  // namespace hecke::tadic
