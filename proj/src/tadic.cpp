#include "hecke/tadic.hpp"

namespace hecke::tadic {

void validate(const TwistedCuspidal& s) {
    if (s.a < 1) throw Error(Errc::InvalidParameter, "segment length must be >= 1");
    if (s.torsion < 1) throw Error(Errc::InvalidParameter, "torsion number must be >= 1");
    if (s.twist_theta < 0 || s.twist_theta >= 1)
        throw Error(Errc::InvalidParameter, "angular twist must lie in [0,1)");
}

bool equivalent(const TwistedCuspidal& s1, const TwistedCuspidal& s2) {
    validate(s1);
    validate(s2);
    if (s1.label != s2.label) return false;
    if (s1.a != s2.a || s1.torsion != s2.torsion)
        throw Error(Errc::InconsistentLabels,
                    "label '" + s1.label + "' carries conflicting invariants");
    if (s1.twist_r != s2.twist_r) return false;
    return is_integer((s1.twist_theta - s2.twist_theta) * s1.torsion);
}

TwistedCuspidal twist(TwistedCuspidal s, const Rat& x) {
    s.twist_r += x;
    return s;
}

bool reducible(const TwistedCuspidal& s1, const TwistedCuspidal& s2) {
    return equivalent(s2, twist(s1, s1.a)) || equivalent(s2, twist(s1, -Rat(s1.a)));
}

ConstituentPair constituents(const TwistedCuspidal& s1, const TwistedCuspidal& s2) {
    Rat half(s1.a, 2);
    if (equivalent(s2, twist(s1, s1.a))) return {twist(s1, half), 1};
    if (equivalent(s2, twist(s1, -Rat(s1.a)))) return {twist(s1, -half), -1};
    throw Error(Errc::NotReducible, "the induced pair is irreducible");
}

const char* rep_kind_str(RepKind k) {
    switch (k) {
        case RepKind::I: return "I";
        case RepKind::II: return "II";
        case RepKind::III: return "III";
        case RepKind::IVSt: return "IV-St";
        case RepKind::IVSp: return "IV-Sp";
    }
    return "?";
}

RepKind classify_kind(const Gl2Rep& rep, std::optional<ConstituentChoice> choice) {
    switch (rep.kind) {
        case Gl2Rep::Kind::Cuspidal:
            return RepKind::I;
        case Gl2Rep::Kind::OneDimensional:
            return RepKind::III;
        case Gl2Rep::Kind::Induced: {
            if (!rep.sigma1 || !rep.sigma2)
                throw Error(Errc::BadInput, "induced descriptor needs both factors");
            if (!reducible(*rep.sigma1, *rep.sigma2)) return RepKind::II;
            if (!choice)
                throw Error(Errc::AmbiguousConstituent,
                            "reducible pair: pick a constituent or ask for the pair");
            return *choice == ConstituentChoice::St ? RepKind::IVSt : RepKind::IVSp;
        }
    }
    throw Error(Errc::BadInput, "unknown descriptor kind");
}

bool consistent_with(const TwistedCuspidal& s, const bernstein::CuspidalFactor& f) {
    if (s.label != f.label) return true;
    return f.reducibility == s.a && f.torsion == s.torsion;
}

}  // namespace hecke::tadic
