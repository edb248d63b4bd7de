#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rat.hpp"

namespace hecke::bernstein {

// Ambient arithmetic data: residue cardinality of the base field and the
// index of the division algebra (dimension d^2). The index is carried for
// fidelity of the input; the computed invariants never depend on it.
struct DivisionAlgebra {
    Int q = 2;
    int d = 1;
};

void validate(const DivisionAlgebra& alg);  // q a prime power >= 2, d >= 1

// One cuspidal factor of the Levi: inertial label plus the numerical
// invariants attached to it (torsion number and reducibility number).
struct CuspidalFactor {
    std::string label;
    int m = 1;
    int torsion = 1;
    Rat reducibility = 1;
};

struct InertialClassDescriptor {
    DivisionAlgebra algebra;
    int N = 1;
    std::vector<int> levi;
    std::vector<CuspidalFactor> factors;
};

// Full descriptor validation: the Levi is a partition of N matched by the
// factor blocks, equal labels carry equal invariants, and each torsion *
// reducibility product is a positive integer unless allow_nonintegral_f.
void validate(const InertialClassDescriptor& desc, bool allow_nonintegral_f = false);

struct SSClass {
    std::vector<int> indices;  // 1-based positions into the Levi, ascending
    int r = 0;                 // class size
    Rat f;                     // torsion * reducibility
    Rat z;                     // q^f, exact
};

struct SSDecomposition {
    std::vector<SSClass> classes;  // in order of first occurrence
};

// Groups the factors by inertial equivalence, modeled as equality of
// (block size, label); emits one class per group with its parameter q^f.
SSDecomposition group_factors(const InertialClassDescriptor& desc, bool allow_nonintegral_f = false);

struct TensorFactor {
    int r = 0;
    Rat z;
    friend bool operator==(const TensorFactor&, const TensorFactor&) = default;
    friend std::strong_ordering operator<=>(const TensorFactor& a, const TensorFactor& b) {
        if (a.r != b.r) return a.r <=> b.r;
        if (a.z < b.z) return std::strong_ordering::less;
        if (b.z < a.z) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

using TensorAffine = std::vector<TensorFactor>;  // sorted by (r, z)

TensorAffine ss_decompose(const InertialClassDescriptor& desc, bool allow_nonintegral_f = false);

enum class Gl2Class { Cusp, Neqv, Eqv };

const char* gl2_class_str(Gl2Class c);

// The three-way split of rank-2 inertial classes: cuspidal support,
// non-equivalent pair, equivalent pair.
Gl2Class gl2_classify(const InertialClassDescriptor& desc);  // NotRankTwo unless N = 2

// Normal form of the decomposed algebra. LaurentPoly(1) is C[x,x^-1],
// LaurentPoly(2) is C[y,z,y^-1,z^-1], DihedralQuotient is
// C~[s,t,t^-1]/<s^2-1, t^2*s-s*t^2>. Non-cuspidal descriptors with N >= 3
// have no normalized presentation and fall back to the raw tensor data.
struct AlgebraPresentation {
    enum class Kind { LaurentPoly, DihedralQuotient, TensorAffine };
    Kind kind = Kind::LaurentPoly;
    int laurent_vars = 1;
    TensorAffine tensor;
    bool normalized = true;

    std::string name() const;     // "LaurentPoly1", "DihedralQuotient", ...
    std::string display() const;  // "C[x,x^-1]", ...
};

AlgebraPresentation presentation_of(const InertialClassDescriptor& desc,
                                    bool allow_nonintegral_f = false);

// Canonical Morita normal form per tensor factor: rank-1 and rank-2
// factors forget their parameter (A1 / A2generic); rank >= 3 factors keep
// it up to inversion, stored as min(z, 1/z).
struct MoritaFactorTag {
    enum class Kind { A1, A2Generic, Ar };
    Kind kind = Kind::A1;
    int r = 0;
    Rat zclass;

    std::string str() const;
    friend bool operator==(const MoritaFactorTag&, const MoritaFactorTag&) = default;
    friend std::strong_ordering operator<=>(const MoritaFactorTag& a, const MoritaFactorTag& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        if (a.r != b.r) return a.r <=> b.r;
        if (a.zclass < b.zclass) return std::strong_ordering::less;
        if (b.zclass < a.zclass) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

struct MoritaTag {
    std::vector<MoritaFactorTag> factors;  // sorted multiset

    std::vector<std::string> strs() const;
    friend bool operator==(const MoritaTag&, const MoritaTag&) = default;
};

MoritaTag morita_tag_of(const TensorAffine& tensor);
MoritaTag morita_tag(const InertialClassDescriptor& desc, bool allow_nonintegral_f = false);

// Combined single-descriptor report.
struct BernsteinReport {
    std::optional<Gl2Class> trichotomy;  // set for N = 2 and for cuspidal descriptors
    SSDecomposition ss;
    AlgebraPresentation presentation;
    MoritaTag tag;
};

BernsteinReport analyze(const InertialClassDescriptor& desc, bool allow_nonintegral_f = false);

// Abstract class shape: Levi partition, label-equality pattern, and the
// numerical invariants per factor, with the algebra left free.
struct CensusShape {
    std::string name;
    std::vector<int> levi;
    std::vector<int> label_class;                   // equal entries share a label
    std::vector<std::pair<int, Rat>> invariants;    // (torsion, reducibility) per factor
};

InertialClassDescriptor realize_shape(const CensusShape& shape, const DivisionAlgebra& alg);

// {Cusp, Neqv, Eqv} x (torsion, reducibility) in {1,2,3}^2
std::vector<CensusShape> gl2_shape_grid();

struct CensusEntry {
    std::string shape;
    bool unsupported = false;  // non-cuspidal N >= 3: reported, not compared
    std::vector<std::string> tag_a;
    std::vector<std::string> tag_b;
    bool equal = false;
};

struct CensusReport {
    DivisionAlgebra alg_a, alg_b;
    std::vector<CensusEntry> entries;
    bool pass = true;  // over the supported shapes
};

// Shape-by-shape comparison of the Morita fingerprints computed under two
// ambient algebras.
CensusReport census_compare(const std::vector<CensusShape>& shapes, const DivisionAlgebra& alg_a,
                            const DivisionAlgebra& alg_b, bool allow_nonintegral_f = false);

}  // namespace hecke::bernstein
