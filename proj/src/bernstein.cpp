#include "hecke/bernstein.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hecke::bernstein {

void validate(const DivisionAlgebra& alg) {
    if (alg.q < 2 || !is_prime_power(alg.q))
        throw Error(Errc::InvalidParameter, "residue cardinality must be a prime power >= 2");
    if (alg.d < 1) throw Error(Errc::InvalidParameter, "division algebra index must be >= 1");
}

void validate(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    validate(desc.algebra);
    if (desc.N < 1) throw Error(Errc::BadInput, "N must be >= 1");
    if (desc.levi.empty()) throw Error(Errc::BadInput, "empty Levi partition");
    int sum = 0;
    for (int n : desc.levi) {
        if (n < 1) throw Error(Errc::BadInput, "Levi parts must be positive");
        sum += n;
    }
    if (sum != desc.N) throw Error(Errc::BadInput, "Levi partition does not sum to N");
    if (desc.factors.size() != desc.levi.size())
        throw Error(Errc::BadInput, "factor list arity does not match the Levi partition");

    std::map<std::string, const CuspidalFactor*> seen;
    for (std::size_t i = 0; i < desc.factors.size(); ++i) {
        const CuspidalFactor& f = desc.factors[i];
        if (f.m != desc.levi[i])
            throw Error(Errc::BadInput, "factor block size does not match its Levi part");
        if (f.torsion < 1) throw Error(Errc::InvalidParameter, "torsion number must be >= 1");
        if (f.reducibility <= 0)
            throw Error(Errc::InvalidParameter, "reducibility number must be positive");
        if (!allow_nonintegral_f && !is_integer(Rat(f.torsion) * f.reducibility))
            throw Error(Errc::InvalidParameter,
                        "torsion * reducibility must be a positive integer for factor '" + f.label +
                            "' (pass allow-nonintegral-f to relax)");
        auto [it, fresh] = seen.emplace(f.label, &f);
        if (!fresh) {
            const CuspidalFactor& g = *it->second;
            if (g.m != f.m || g.torsion != f.torsion || g.reducibility != f.reducibility)
                throw Error(Errc::InconsistentLabels,
                            "label '" + f.label + "' carries conflicting invariants");
        }
    }
}

namespace {

Rat parameter_from_f(const DivisionAlgebra& alg, const Rat& f) {
    std::optional<Rat> z = rat_pow_exact(Rat(alg.q), f);
    if (!z)
        throw Error(Errc::InvalidParameter,
                    "q^f is irrational for q=" + alg.q.str() + ", f=" + rat_str(f));
    return *z;
}

}  // namespace

SSDecomposition group_factors(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    validate(desc, allow_nonintegral_f);
    SSDecomposition out;
    std::map<std::pair<int, std::string>, std::size_t> index_of;
    for (std::size_t i = 0; i < desc.factors.size(); ++i) {
        const CuspidalFactor& f = desc.factors[i];
        auto key = std::make_pair(f.m, f.label);
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            SSClass cls;
            cls.indices.push_back(static_cast<int>(i) + 1);
            cls.r = 1;
            cls.f = Rat(f.torsion) * f.reducibility;
            cls.z = parameter_from_f(desc.algebra, cls.f);
            index_of.emplace(key, out.classes.size());
            out.classes.push_back(std::move(cls));
        } else {
            SSClass& cls = out.classes[it->second];
            cls.indices.push_back(static_cast<int>(i) + 1);
            cls.r += 1;
        }
    }
    return out;
}

TensorAffine ss_decompose(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    SSDecomposition groups = group_factors(desc, allow_nonintegral_f);
    TensorAffine out;
    out.reserve(groups.classes.size());
    for (const SSClass& cls : groups.classes) out.push_back({cls.r, cls.z});
    std::sort(out.begin(), out.end());
    return out;
}

const char* gl2_class_str(Gl2Class c) {
    switch (c) {
        case Gl2Class::Cusp: return "cusp";
        case Gl2Class::Neqv: return "neqv";
        case Gl2Class::Eqv: return "eqv";
    }
    return "?";
}

Gl2Class gl2_classify(const InertialClassDescriptor& desc) {
    validate(desc, true);
    if (desc.N != 2) throw Error(Errc::NotRankTwo, "the trichotomy is defined for N = 2");
    if (desc.levi.size() == 1) return Gl2Class::Cusp;
    return desc.factors[0].label == desc.factors[1].label ? Gl2Class::Eqv : Gl2Class::Neqv;
}

std::string AlgebraPresentation::name() const {
    switch (kind) {
        case Kind::LaurentPoly: return "LaurentPoly" + std::to_string(laurent_vars);
        case Kind::DihedralQuotient: return "DihedralQuotient";
        case Kind::TensorAffine: return "TensorAffine";
    }
    return "?";
}

std::string AlgebraPresentation::display() const {
    switch (kind) {
        case Kind::LaurentPoly:
            return laurent_vars == 1 ? "C[x,x^-1]" : "C[y,z,y^-1,z^-1]";
        case Kind::DihedralQuotient:
            return "C~[s,t,t^-1]/<s^2-1, t^2*s-s*t^2>";
        case Kind::TensorAffine: {
            std::string s;
            for (const TensorFactor& t : tensor) {
                if (!s.empty()) s += " (x) ";
                s += "H(" + std::to_string(t.r) + "," + rat_str(t.z) + ")";
            }
            return s;
        }
    }
    return "?";
}

AlgebraPresentation presentation_of(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    AlgebraPresentation out;
    out.tensor = ss_decompose(desc, allow_nonintegral_f);
    if (desc.levi.size() == 1) {  // cuspidal support, any N
        out.kind = AlgebraPresentation::Kind::LaurentPoly;
        out.laurent_vars = 1;
        return out;
    }
    if (desc.N == 2) {
        switch (gl2_classify(desc)) {
            case Gl2Class::Cusp:
                out.kind = AlgebraPresentation::Kind::LaurentPoly;
                out.laurent_vars = 1;
                return out;
            case Gl2Class::Neqv:
                out.kind = AlgebraPresentation::Kind::LaurentPoly;
                out.laurent_vars = 2;
                return out;
            case Gl2Class::Eqv:
                out.kind = AlgebraPresentation::Kind::DihedralQuotient;
                return out;
        }
    }
    // no normalized presentation below the cuspidal/N=2 range
    out.kind = AlgebraPresentation::Kind::TensorAffine;
    out.normalized = false;
    return out;
}

std::string MoritaFactorTag::str() const {
    switch (kind) {
        case Kind::A1: return "A1";
        case Kind::A2Generic: return "A2generic";
        case Kind::Ar: {
            // displayed with the representative >= 1 of {z, 1/z}
            Rat shown = zclass < 1 ? rat_inv(zclass) : zclass;
            return "Ar(" + std::to_string(r) + "," + rat_str(shown) + ")";
        }
    }
    return "?";
}

MoritaTag morita_tag_of(const TensorAffine& tensor) {
    MoritaTag out;
    for (const TensorFactor& t : tensor) {
        if (t.r < 1) throw Error(Errc::BadInput, "tensor factor with nonpositive rank");
        if (t.z == 0) throw Error(Errc::InvalidParameter, "tensor factor with zero parameter");
        MoritaFactorTag tag;
        if (t.r == 1) {
            tag.kind = MoritaFactorTag::Kind::A1;
        } else if (t.r == 2) {
            if (t.z == -1)
                throw Error(Errc::InvalidParameter, "rank-2 parameter -1 cannot be normalized");
            tag.kind = MoritaFactorTag::Kind::A2Generic;
        } else {
            tag.kind = MoritaFactorTag::Kind::Ar;
            tag.r = t.r;
            Rat inv = rat_inv(t.z);
            tag.zclass = t.z < inv ? t.z : inv;
        }
        out.factors.push_back(std::move(tag));
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

MoritaTag morita_tag(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    return morita_tag_of(ss_decompose(desc, allow_nonintegral_f));
}

std::vector<std::string> MoritaTag::strs() const {
    std::vector<std::string> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.str());
    return out;
}

BernsteinReport analyze(const InertialClassDescriptor& desc, bool allow_nonintegral_f) {
    BernsteinReport rep;
    rep.ss = group_factors(desc, allow_nonintegral_f);
    rep.presentation = presentation_of(desc, allow_nonintegral_f);
    rep.tag = morita_tag(desc, allow_nonintegral_f);
    if (desc.N == 2)
        rep.trichotomy = gl2_classify(desc);
    else if (desc.levi.size() == 1)
        rep.trichotomy = Gl2Class::Cusp;
    return rep;
}

InertialClassDescriptor realize_shape(const CensusShape& shape, const DivisionAlgebra& alg) {
    if (shape.levi.size() != shape.label_class.size() ||
        shape.levi.size() != shape.invariants.size())
        throw Error(Errc::BadInput, "malformed shape '" + shape.name + "'");
    InertialClassDescriptor desc;
    desc.algebra = alg;
    desc.N = std::accumulate(shape.levi.begin(), shape.levi.end(), 0);
    desc.levi = shape.levi;
    for (std::size_t i = 0; i < shape.levi.size(); ++i) {
        CuspidalFactor f;
        f.label = "L" + std::to_string(shape.label_class[i]);
        f.m = shape.levi[i];
        f.torsion = shape.invariants[i].first;
        f.reducibility = shape.invariants[i].second;
        desc.factors.push_back(std::move(f));
    }
    return desc;
}

std::vector<CensusShape> gl2_shape_grid() {
    std::vector<CensusShape> shapes;
    for (int n = 1; n <= 3; ++n) {
        for (int s = 1; s <= 3; ++s) {
            std::string suffix = "(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
            Rat red(s);
            shapes.push_back({"cusp" + suffix, {2}, {1}, {{n, red}}});
            shapes.push_back({"neqv" + suffix, {1, 1}, {1, 2}, {{n, red}, {n, red}}});
            shapes.push_back({"eqv" + suffix, {1, 1}, {1, 1}, {{n, red}, {n, red}}});
        }
    }
    return shapes;
}

CensusReport census_compare(const std::vector<CensusShape>& shapes, const DivisionAlgebra& alg_a,
                            const DivisionAlgebra& alg_b, bool allow_nonintegral_f) {
    validate(alg_a);
    validate(alg_b);
    CensusReport rep;
    rep.alg_a = alg_a;
    rep.alg_b = alg_b;
    for (const CensusShape& shape : shapes) {
        CensusEntry entry;
        entry.shape = shape.name;
        int n = std::accumulate(shape.levi.begin(), shape.levi.end(), 0);
        bool cuspidal = shape.levi.size() == 1;
        if (n > 2 && !cuspidal) {
            entry.unsupported = true;  // no parameter erasure beyond rank 2
            rep.entries.push_back(std::move(entry));
            continue;
        }
        entry.tag_a = morita_tag(realize_shape(shape, alg_a), allow_nonintegral_f).strs();
        entry.tag_b = morita_tag(realize_shape(shape, alg_b), allow_nonintegral_f).strs();
        entry.equal = entry.tag_a == entry.tag_b;
        if (!entry.equal) rep.pass = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace hecke::bernstein
