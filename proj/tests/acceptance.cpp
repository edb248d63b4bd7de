// Acceptance suite: one criterion per entry, one PASS/FAIL line each.
// Everything is exact; there are no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hecke/iso.hpp"
#include "hecke/parser.hpp"
#include "hecke/relations.hpp"
#include "hecke/tadic.hpp"

using namespace hecke;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::mt19937_64 rng;  // reseeded per criterion

// ---- criterion 1: defining relations at ranks 1..5, symbolic ----
void criterion_relations() {
    for (int r = 1; r <= 5; ++r) {
        RelationReport rep = relation_check(symbolic_config(r));
        require(rep.all_pass, "relation failure at rank " + std::to_string(r));
    }
}

// ---- criterion 2: closed length formula vs BFS, ranks 2..4, radius 6 ----
void criterion_length_oracle() {
    long long total = 0;
    for (int r : {2, 3, 4}) {
        auto ball = bfs_ball(r, 6);
        for (const auto& [w, bfs_len] : ball) {
            require(w.length() == bfs_len,
                    "length mismatch at rank " + std::to_string(r) + ", " + w.str());
            ++total;
        }
    }
    require(total > 1000, "oracle enumerated too few elements");
}

// ---- criterion 3: reduced words multiply to single basis terms ----
void criterion_reduced_words() {
    for (int r : {1, 2, 3, 4}) {
        auto cfg = symbolic_config(r);
        auto ball = bfs_ball(r, 6);
        for (const auto& [w, len] : ball) {
            for (TieBreak tie : {TieBreak::SmallestIndex, TieBreak::LargestIndex}) {
                auto rd = reduced_decomposition(w, tie);
                require(static_cast<std::int64_t>(rd.word.size()) == w.length(),
                        "word length differs from the closed formula at " + w.str());
                auto prod = basis_element(cfg, t_power(r, rd.omega_power));
                for (int i : rd.word) prod = mul(prod, gen(cfg, GenName::s(i)));
                require(prod == basis_element(cfg, w),
                        "reduced-word product is not the basis element at " + w.str());
            }
        }
    }
}

// ---- criterion 4: associativity fuzz, 200 triples per (rank, mode) ----
template <class K>
void associativity_run(const HeckeConfigT<K>& cfg, const std::vector<AffinePerm>& pool,
                       const std::function<K()>& coeff) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> nterms(0, 4);
    auto rand_elem = [&] {
        HeckeElementT<K> e(cfg);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j) e.add_term(pool[pick(rng)], coeff());
        return e;
    };
    for (int i = 0; i < 200; ++i) {
        auto a = rand_elem(), b = rand_elem(), c = rand_elem();
        require(mul(mul(a, b), c) == mul(a, mul(b, c)), "associativity failed");
    }
}

void criterion_associativity() {
    rng.seed(41);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> deg(0, 2);
    auto rand_rat = [&] { return Rat(num(rng), den(rng)); };
    auto rand_rf = [&]() -> RatFunc {
        std::vector<Rat> cs(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : cs) c = rand_rat();
        return RatFunc(Poly::from_coeffs(cs));
    };
    for (int r : {1, 2, 3}) {
        std::vector<AffinePerm> pool;
        for (const auto& [w, l] : bfs_ball(r, 4)) pool.push_back(w);
        associativity_run<RatFunc>(symbolic_config(r), pool, rand_rf);
        associativity_run<Rat>(numeric_config(r, Rat(4)), pool, rand_rat);
    }
}

// ---- criterion 5: rank-1 algebra vs Laurent polynomials on [-6,6] ----
void criterion_laurent() {
    rng.seed(52);
    auto cfg = symbolic_config(1);
    // bijectivity on the exponent window: distinct basis elements hit
    // distinct single exponents, and both directions invert each other
    std::map<std::int64_t, int> seen;
    for (std::int64_t e = -6; e <= 6; ++e) {
        std::map<std::int64_t, RatFunc> m{{e, RatFunc(1)}};
        auto elem = from_laurent(cfg, m);
        require(elem.term_count() == 1, "single exponent must map to a single term");
        require(laurent_form(elem) == m, "laurent round trip failed at exponent " + std::to_string(e));
        seen[e] += 1;
    }
    require(seen.size() == 13, "exponent window not covered");

    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> nterms(0, 4);
    auto rand_elem = [&] {
        HeckeElementT<RatFunc> e(cfg);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j) e.add_term(t_power(1, expo(rng)), RatFunc(Rat(num(rng))));
        return e;
    };
    for (int i = 0; i < 200; ++i) {
        auto a = rand_elem(), b = rand_elem();
        auto la = laurent_form(a), lb = laurent_form(b);
        std::map<std::int64_t, RatFunc> conv, add;
        for (const auto& [i1, c1] : la)
            for (const auto& [i2, c2] : lb) {
                auto [it, fresh] = conv.try_emplace(i1 + i2, c1 * c2);
                if (!fresh) it->second += c1 * c2;
            }
        std::erase_if(conv, [](const auto& kv) { return kv.second.is_zero(); });
        add = la;
        for (const auto& [k, c] : lb) {
            auto [it, fresh] = add.try_emplace(k, c);
            if (!fresh) it->second += c;
        }
        std::erase_if(add, [](const auto& kv) { return kv.second.is_zero(); });
        require(laurent_form(mul(a, b)) == conv, "laurent multiplicativity failed");
        require(laurent_form(a + b) == add, "laurent additivity failed");
        require(from_laurent(cfg, la) == a, "laurent bijectivity failed");
    }
}

// ---- criterion 6: the rank-2 isomorphism at radius 6 ----
void criterion_isomorphism() {
    auto sym = verify_isomorphism(RatFunc::variable(), 6);
    require(sym.passed, "symbolic verification failed: " +
                            (sym.failures.empty() ? std::string("?") : sym.failures[0].detail));
    for (Rat z : {Rat(2), Rat(4), Rat(9), Rat(1)}) {
        auto rep = verify_isomorphism(z, 6);
        require(rep.passed, "numeric verification failed at z = " + rat_str(z));
    }
    bool rejected = false;
    try {
        verify_isomorphism(Rat(-1), 6);
    } catch (const Error& e) {
        rejected = e.code() == Errc::InvalidParameter;
    }
    require(rejected, "z = -1 must be rejected with InvalidParameter");
}

// ---- criterion 7: the three rank-2 shapes and the cuspidal shape ----
void criterion_presentations() {
    using namespace hecke::bernstein;
    InertialClassDescriptor cusp{{Int(3), 1}, 2, {2}, {{"A", 2, 1, Rat(1)}}};
    InertialClassDescriptor neqv{{Int(2), 1}, 2, {1, 1}, {{"A", 1, 1, Rat(1)}, {"B", 1, 2, Rat(1)}}};
    InertialClassDescriptor eqv{{Int(2), 1}, 2, {1, 1}, {{"A", 1, 2, Rat(1)}, {"A", 1, 2, Rat(1)}}};

    auto pc = presentation_of(cusp);
    require(pc.kind == AlgebraPresentation::Kind::LaurentPoly && pc.laurent_vars == 1 &&
                pc.display() == "C[x,x^-1]",
            "cuspidal shape must present as C[x,x^-1]");
    require(ss_decompose(cusp) == TensorAffine{{1, Rat(3)}}, "cuspidal tensor shape wrong");

    auto pn = presentation_of(neqv);
    require(pn.kind == AlgebraPresentation::Kind::LaurentPoly && pn.laurent_vars == 2 &&
                pn.display() == "C[y,z,y^-1,z^-1]",
            "split shape must present as C[y,z,y^-1,z^-1]");
    require(ss_decompose(neqv) == TensorAffine{{1, Rat(2)}, {1, Rat(4)}}, "split tensor shape wrong");

    auto pe = presentation_of(eqv);
    require(pe.kind == AlgebraPresentation::Kind::DihedralQuotient &&
                pe.display() == "C~[s,t,t^-1]/<s^2-1, t^2*s-s*t^2>",
            "equal-label shape must present as the dihedral quotient");
    require(ss_decompose(eqv) == TensorAffine{{2, Rat(4)}}, "equal-label tensor shape wrong");

    // cuspidal support at any N
    InertialClassDescriptor gl7{{Int(5), 3}, 7, {7}, {{"A", 7, 2, Rat(2)}}};
    auto pg = presentation_of(gl7);
    require(pg.kind == AlgebraPresentation::Kind::LaurentPoly && pg.laurent_vars == 1,
            "cuspidal support at N=7 must present as C[x,x^-1]");
    require(ss_decompose(gl7) == TensorAffine{{1, Rat(625)}}, "cuspidal tensor parameter wrong");
}

// ---- criterion 8: fingerprints are independent of the ambient algebra ----
void criterion_census() {
    using namespace hecke::bernstein;
    std::vector<DivisionAlgebra> algs{
        {Int(2), 1}, {Int(2), 2}, {Int(3), 1}, {Int(3), 2}, {Int(5), 3}};
    auto grid = gl2_shape_grid();
    require(grid.size() == 27, "grid must cover {cusp,neqv,eqv} x {1,2,3}^2");
    for (std::size_t i = 0; i < algs.size(); ++i) {
        for (std::size_t j = i + 1; j < algs.size(); ++j) {
            auto rep = census_compare(grid, algs[i], algs[j]);
            require(rep.pass, "census mismatch between algebras " + std::to_string(i) + " and " +
                                  std::to_string(j));
            for (const auto& e : rep.entries) require(!e.unsupported && e.equal, "entry " + e.shape);
        }
    }
    // cuspidal shapes for several N
    std::vector<CensusShape> cusps;
    for (int n : {1, 2, 3, 5, 8})
        cusps.push_back({"gl" + std::to_string(n), {n}, {1}, {{2, Rat(3, 2)}}});
    for (std::size_t i = 0; i + 1 < algs.size(); ++i) {
        auto rep = census_compare(cusps, algs[i], algs[i + 1]);
        require(rep.pass, "cuspidal census mismatch");
        for (const auto& e : rep.entries)
            require(e.tag_a == std::vector<std::string>{"A1"}, "cuspidal tag must be A1");
    }
}

// ---- criterion 9: the rank-3 obstruction ----
void criterion_rank3_obstruction() {
    using namespace hecke::bernstein;
    auto shape = [&](long long q) {
        return InertialClassDescriptor{
            {Int(q), 1}, 3, {1, 1, 1},
            {{"A", 1, 1, Rat(1)}, {"A", 1, 1, Rat(1)}, {"A", 1, 1, Rat(1)}}};
    };
    auto t2 = morita_tag(shape(2));
    auto t3 = morita_tag(shape(3));
    require(!(t2 == t3), "q=2 and q=3 must give distinct rank-3 tags at f=1");
    require(morita_tag_of({{3, Rat(2)}}) == morita_tag_of({{3, Rat(1, 2)}}),
            "z and 1/z must give the same tag");
    require(morita_tag_of({{3, Rat(5)}}) == morita_tag_of({{3, Rat(1, 5)}}),
            "z and 1/z must give the same tag");
    require(!(morita_tag_of({{3, Rat(2)}}) == morita_tag_of({{3, Rat(4)}})),
            "distinct normalized parameters must stay distinct");
}

// ---- criterion 10: reducibility truth table against a brute-force oracle ----
namespace oracle {

Rat frac(const Rat& x) {
    Int fl = rat_num(x) / rat_den(x);
    if (x < 0 && fl * rat_den(x) != rat_num(x)) fl -= 1;
    return x - Rat(fl);
}

// angular congruence checked by enumerating the whole twist orbit
bool equiv(const tadic::TwistedCuspidal& s1, const tadic::TwistedCuspidal& s2) {
    if (s1.label != s2.label || s1.twist_r != s2.twist_r) return false;
    for (int k = 0; k < s1.torsion; ++k)
        if (frac(s1.twist_theta + Rat(k, s1.torsion)) == s2.twist_theta) return true;
    return false;
}

bool reducible(const tadic::TwistedCuspidal& s1, const tadic::TwistedCuspidal& s2) {
    for (int eps : {1, -1}) {
        tadic::TwistedCuspidal shifted = s1;
        shifted.twist_r = s1.twist_r + Rat(eps * s1.a);
        if (equiv(s2, shifted)) return true;
    }
    return false;
}

}  // namespace oracle

void criterion_tadic_table() {
    rng.seed(107);
    std::uniform_int_distribution<int> a_dist(1, 3);
    std::uniform_int_distribution<int> n_dist(1, 4);
    std::uniform_int_distribution<int> rnum(-6, 6);
    std::uniform_int_distribution<int> rden(1, 3);
    std::uniform_int_distribution<int> mode(0, 3);
    int reducible_seen = 0;
    for (int i = 0; i < 200; ++i) {
        int a = a_dist(rng), n = n_dist(rng);
        std::uniform_int_distribution<int> th(0, 2 * n - 1);
        tadic::TwistedCuspidal s1{"p", a, n, Rat(rnum(rng), rden(rng)), Rat(th(rng), 2 * n)};
        tadic::TwistedCuspidal s2 = s1;
        switch (mode(rng)) {
            case 0:  // constructed reducible, possibly rotated inside the orbit
                s2.twist_r += Rat((i % 2) ? a : -a);
                s2.twist_theta = oracle::frac(s2.twist_theta + Rat(i % n, n));
                break;
            case 1:  // near miss in the exponent
                s2.twist_r += Rat(a) + Rat(1, 7);
                break;
            case 2:  // random exponent
                s2.twist_r = Rat(rnum(rng), rden(rng));
                break;
            default:  // random angular part
                s2.twist_theta = Rat(th(rng), 2 * n);
                break;
        }
        bool got = tadic::reducible(s1, s2);
        bool expect = oracle::reducible(s1, s2);
        require(got == expect, "reducibility disagrees with the oracle at case " + std::to_string(i));
        if (got) {
            ++reducible_seen;
            auto pair = tadic::constituents(s1, s2);
            Rat half(s1.a, 2);
            auto lo = tadic::twist(pair.core, -half);
            auto hi = tadic::twist(pair.core, half);
            bool direct = tadic::equivalent(lo, s1) && tadic::equivalent(hi, s2);
            bool swapped = tadic::equivalent(lo, s2) && tadic::equivalent(hi, s1);
            require(direct || swapped, "midpoint reassembly failed at case " + std::to_string(i));
        }
    }
    require(reducible_seen >= 30, "grid produced too few reducible cases");
}

// ---- criterion 11: parser round trips, 500 elements per mode ----
void criterion_parser_roundtrip() {
    rng.seed(119);
    std::vector<AffinePerm> pool;
    for (const auto& [w, l] : bfs_ball(2, 4)) pool.push_back(w);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> denom_kind(0, 3);

    auto scfg = symbolic_config(2);
    for (int i = 0; i < 500; ++i) {
        HeckeElementT<RatFunc> e(scfg);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j) {
            std::vector<Rat> cs(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& c : cs) c = Rat(num(rng), den(rng));
            RatFunc coeff(Poly::from_coeffs(cs));
            if (denom_kind(rng) == 0)
                coeff = coeff * coeff_inv(RatFunc::variable() + RatFunc(Rat(den(rng))));
            e.add_term(pool[pick(rng)], coeff);
        }
        require(eval_expr(parse_expr_text(pretty(e), 2), scfg) == e,
                "symbolic round trip failed: " + pretty(e));
    }

    auto ncfg = numeric_config(2, Rat(9));
    for (int i = 0; i < 500; ++i) {
        HeckeElementT<Rat> e(ncfg);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j) e.add_term(pool[pick(rng)], Rat(num(rng), den(rng)));
        require(eval_expr(parse_expr_text(pretty(e), 2), ncfg) == e,
                "numeric round trip failed: " + pretty(e));
    }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<void()> run;
    };
    const std::vector<Entry> criteria{
        {1, "defining relations hold for ranks 1..5 (symbolic)", criterion_relations},
        {2, "closed length formula matches BFS (ranks 2..4, radius 6)", criterion_length_oracle},
        {3, "reduced words multiply to single basis terms (ranks 1..4, radius 6)",
         criterion_reduced_words},
        {4, "associativity on 200 random triples per rank and mode", criterion_associativity},
        {5, "rank-1 algebra matches Laurent polynomials on [-6,6]", criterion_laurent},
        {6, "rank-2 isomorphism verified (symbolic and z in {2,4,9,1}, radius 6)",
         criterion_isomorphism},
        {7, "rank-2 presentations match the three-way table; cuspidal any N",
         criterion_presentations},
        {8, "fingerprint census agrees across five ambient algebras", criterion_census},
        {9, "rank-3 tags separate q=2 from q=3 and identify z with 1/z",
         criterion_rank3_obstruction},
        {10, "reducibility table matches the brute-force oracle (200 cases)",
         criterion_tadic_table},
        {11, "parser round trip on 500 random elements per mode", criterion_parser_roundtrip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const Failure& f) {
            verdict = "FAIL";
            detail = f.detail;
            ++failures;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << verdict << " criterion " << c.id << ": " << c.label << " [" << ms << " ms]";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << std::endl;
    }
    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
