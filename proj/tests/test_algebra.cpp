#include <doctest.h>

#include <random>

#include "hecke/relations.hpp"
#include "hecke/tensor.hpp"

using namespace hecke;

namespace {

std::mt19937_64 rng(987654321);

AffinePerm win(std::initializer_list<std::int64_t> w) {
    return AffinePerm(static_cast<int>(w.size()), Window(w));
}

template <class K>
K random_coeff();

template <>
Rat random_coeff<Rat>() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

template <>
RatFunc random_coeff<RatFunc>() {
    std::uniform_int_distribution<int> deg(0, 2);
    std::vector<Rat> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = random_coeff<Rat>();
    return RatFunc(Poly::from_coeffs(cs));
}

template <class K>
HeckeElementT<K> random_element(const HeckeConfigT<K>& cfg, const std::vector<AffinePerm>& pool,
                                int max_terms = 4) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    HeckeElementT<K> e(cfg);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) e.add_term(pool[pick(rng)], random_coeff<K>());
    return e;
}

std::vector<AffinePerm> ball_keys(int rank, int len) {
    std::vector<AffinePerm> keys;
    for (const auto& [w, l] : bfs_ball(rank, len)) keys.push_back(w);
    return keys;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("unit") {
    auto cfg1 = symbolic_config(1);
    auto u1 = unit(cfg1);
    CHECK(u1.term_count() == 1);
    CHECK(u1.terms().begin()->first == AffinePerm::identity(1));

    auto cfg = symbolic_config(2);
    auto pool = ball_keys(2, 3);
    for (int i = 0; i < 20; ++i) {
        auto x = random_element(cfg, pool);
        CHECK(mul(unit(cfg), x) == x);
        CHECK(mul(x, unit(cfg)) == x);
    }
}

TEST_CASE("generators as basis elements") {
    auto cfg = symbolic_config(2);
    CHECK(gen(cfg, GenName::s(1)) == basis_element(cfg, win({2, 1})));
    CHECK(gen(cfg, GenName::t()) == basis_element(cfg, win({0, 1})));
    // the conjugated product collapses to a single term with coefficient exactly 1
    auto s0 = gen(cfg, GenName::s(0));
    CHECK(s0 == basis_element(cfg, win({0, 3})));
    CHECK(s0.terms().begin()->second.is_one());
    CHECK_THROWS_AS(gen(cfg, GenName::s(5)), Error);
}

TEST_CASE("quadratic relation expansion") {
    auto cfg = symbolic_config(2);
    const RatFunc z = RatFunc::variable();
    auto s = gen(cfg, GenName::s(1));
    HeckeElementT<RatFunc> expect(cfg);
    expect.add_term(win({2, 1}), z - RatFunc(1));
    expect.add_term(win({1, 2}), z);
    CHECK(mul(s, s) == expect);
}

TEST_CASE("rotation relations") {
    auto cfg = symbolic_config(2);
    auto t = gen(cfg, GenName::t());
    auto tinv = gen(cfg, GenName::t_inv());
    CHECK(mul(t, tinv) == unit(cfg));
    CHECK(mul(tinv, t) == unit(cfg));
    auto t2 = mul(t, t);
    auto s = gen(cfg, GenName::s(1));
    CHECK((mul(t2, s) - mul(s, t2)).is_zero());
}

TEST_CASE("config mismatch is rejected") {
    auto a = unit(numeric_config(2, Rat(4)));
    auto b = unit(numeric_config(2, Rat(5)));
    CHECK_THROWS_AS(mul(a, b), Error);
    CHECK_THROWS_AS(a + b, Error);
    auto c = unit(numeric_config(3, Rat(4)));
    CHECK_THROWS_AS(mul(a, c), Error);
}

TEST_CASE("relation check per rank") {
    auto r1 = relation_check(symbolic_config(1));
    CHECK(r1.all_pass);
    CHECK(r1.instances.size() == 2);  // only the rotation relation
    CHECK(r1.notes.size() == 1);

    auto r2 = relation_check(symbolic_config(2));
    CHECK(r2.all_pass);
    bool has_r2 = false;
    for (const auto& inst : r2.instances) has_r2 = has_r2 || inst.relation == "R2";
    CHECK(has_r2);

    auto r4 = relation_check(symbolic_config(4));
    CHECK(r4.all_pass);
    int braid = 0, comm = 0;
    for (const auto& inst : r4.instances) {
        if (inst.relation == "R4") ++braid;
        if (inst.relation == "R5") ++comm;
    }
    CHECK(braid == 2);
    CHECK(comm == 1);

    auto rnum = relation_check(numeric_config(3, Rat(7, 2)));
    CHECK(rnum.all_pass);

    CHECK_THROWS_AS(relation_check(symbolic_config(7)), Error);
}

TEST_CASE("reduced-word products are single terms") {
    for (int rank : {2, 3}) {
        auto cfg = symbolic_config(rank);
        for (const auto& [w, l] : bfs_ball(rank, 4)) {
            auto rd = reduced_decomposition(w);
            auto prod = basis_element(cfg, t_power(rank, rd.omega_power));
            for (int i : rd.word) prod = mul(prod, gen(cfg, GenName::s(i)));
            CHECK(prod == basis_element(cfg, w));
        }
    }
}

TEST_CASE("associativity fuzz") {
    for (int rank : {1, 2, 3}) {
        auto pool = ball_keys(rank, 3);
        auto scfg = symbolic_config(rank);
        auto ncfg = numeric_config(rank, Rat(4));
        for (int i = 0; i < 40; ++i) {
            auto a = random_element(scfg, pool);
            auto b = random_element(scfg, pool);
            auto c = random_element(scfg, pool);
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            auto an = random_element(ncfg, pool);
            auto bn = random_element(ncfg, pool);
            auto cn = random_element(ncfg, pool);
            CHECK(mul(mul(an, bn), cn) == mul(an, mul(bn, cn)));
        }
    }
}

TEST_CASE("distributivity and linearity") {
    auto cfg = symbolic_config(2);
    auto pool = ball_keys(2, 3);
    for (int i = 0; i < 30; ++i) {
        auto a = random_element(cfg, pool);
        auto b = random_element(cfg, pool);
        auto c = random_element(cfg, pool);
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
    }
}

TEST_CASE("rotation conjugation shifts basis generators") {
    for (int rank : {2, 3, 4, 5}) {
        auto cfg = symbolic_config(rank);
        auto t = gen(cfg, GenName::t());
        auto tinv = gen(cfg, GenName::t_inv());
        for (int i = 0; i < rank; ++i) {
            auto conj = mul(mul(t, gen(cfg, GenName::s(i))), tinv);
            CHECK(conj == gen(cfg, GenName::s((i - 1 + rank) % rank)));
        }
    }
}

TEST_CASE("word independence along random reduced words") {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rank : {2, 3}) {
        auto cfg = symbolic_config(rank);
        for (const auto& [w, len] : bfs_ball(rank, 5)) {
            // strip a uniformly chosen descent at each step
            AffinePerm u = w.omega_shifted(-w.omega_power());
            std::vector<int> word;
            while (!u.is_identity()) {
                std::vector<int> descents;
                for (int i = 0; i < rank; ++i)
                    if (u.right_descent(i)) descents.push_back(i);
                int pick = descents[static_cast<std::size_t>(rng() % descents.size())];
                word.push_back(pick);
                u = u.times_s(pick);
            }
            std::reverse(word.begin(), word.end());
            auto prod = basis_element(cfg, t_power(rank, w.omega_power()));
            for (int i : word) prod = mul(prod, gen(cfg, GenName::s(i)));
            CHECK(prod == basis_element(cfg, w));
        }
    }
}

TEST_CASE("product support stays inside the combined length ball") {
    auto cfg = symbolic_config(3);
    auto pool = ball_keys(3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_element(cfg, pool);
        auto b = random_element(cfg, pool);
        std::int64_t la = 0, lb = 0;
        for (const auto& [w, c] : a.terms()) la = std::max(la, w.length());
        for (const auto& [w, c] : b.terms()) lb = std::max(lb, w.length());
        auto prod = mul(a, b);
        for (const auto& [w, c] : prod.terms()) CHECK(w.length() <= la + lb);
    }
}

TEST_CASE("config and generator validation") {
    CHECK_THROWS_AS(numeric_config(2, Rat(0)), Error);
    CHECK_THROWS_AS(numeric_config(0, Rat(2)), Error);
    CHECK_THROWS_AS(gen(symbolic_config(1), GenName::s(1)), Error);
    CHECK_THROWS_AS(gen(symbolic_config(1), GenName::s(0)), Error);
    CHECK_NOTHROW(gen(symbolic_config(1), GenName::t()));
    CHECK_THROWS_AS(from_laurent(symbolic_config(2), {}), Error);
}

TEST_CASE("single-term inverses") {
    auto cfg = symbolic_config(2);
    auto s = gen(cfg, GenName::s(1));
    CHECK(mul(invert(s), s) == unit(cfg));
    CHECK(mul(s, invert(s)) == unit(cfg));
    auto t5 = power(gen(cfg, GenName::t()), 5);
    CHECK(mul(invert(t5), t5) == unit(cfg));
    auto mixed = basis_element(cfg, win({3, 0}));
    auto mixed_scaled = (RatFunc::variable() + RatFunc(2)) * mixed;
    CHECK(mul(invert(mixed_scaled), mixed_scaled) == unit(cfg));
    CHECK_THROWS_AS(invert(s + unit(cfg)), Error);
    CHECK_THROWS_AS(invert(HeckeElementT<RatFunc>(cfg)), Error);
}

TEST_CASE("laurent form at rank 1") {
    auto cfg = symbolic_config(1);
    auto t = gen(cfg, GenName::t());
    auto lf = laurent_form(t);
    CHECK(lf.size() == 1);
    CHECK(lf.begin()->first == -1);
    CHECK(lf.begin()->second.is_one());
    auto lu = laurent_form(unit(cfg));
    CHECK(lu.size() == 1);
    CHECK(lu.begin()->first == 0);

    CHECK_THROWS_AS(laurent_form(unit(symbolic_config(2))), Error);
}

TEST_CASE("laurent form is a ring isomorphism") {
    auto cfg = numeric_config(1, Rat(3));
    auto pool = ball_keys(1, 5);
    for (int i = 0; i < 60; ++i) {
        auto a = random_element<Rat>(cfg, pool, 4);
        auto b = random_element<Rat>(cfg, pool, 4);
        CHECK(from_laurent(cfg, laurent_form(a)) == a);
        auto la = laurent_form(a);
        auto lb = laurent_form(b);
        // convolution computed independently of mul
        std::map<std::int64_t, Rat> conv;
        for (const auto& [i1, c1] : la)
            for (const auto& [i2, c2] : lb) {
                conv[i1 + i2] += c1 * c2;
            }
        std::erase_if(conv, [](const auto& kv) { return kv.second == 0; });
        CHECK(laurent_form(mul(a, b)) == conv);
        auto sum = laurent_form(a + b);
        std::map<std::int64_t, Rat> addmap = la;
        for (const auto& [k, c] : lb) {
            addmap[k] += c;
        }
        std::erase_if(addmap, [](const auto& kv) { return kv.second == 0; });
        CHECK(sum == addmap);
    }
}

TEST_CASE("specialization") {
    auto cfg = symbolic_config(2);
    const RatFunc z = RatFunc::variable();
    auto s = gen(cfg, GenName::s(1));
    auto e = mul(s, s);  // (z-1) s + z
    auto sp = specialize(e, Rat(4));
    HeckeElementT<Rat> expect(numeric_config(2, Rat(4)));
    expect.add_term(win({2, 1}), Rat(3));
    expect.add_term(win({1, 2}), Rat(4));
    CHECK(sp == expect);
    CHECK(specialize(unit(cfg), Rat(9)) == unit(numeric_config(2, Rat(9))));
    CHECK_THROWS_AS(specialize(unit(cfg), Rat(0)), Error);

    // a coefficient with a pole at the specialization point
    HeckeElementT<RatFunc> poley(cfg);
    poley.add_term(AffinePerm::identity(2), coeff_inv(RatFunc::variable() - RatFunc(4)));
    CHECK_THROWS_AS(specialize(poley, Rat(4)), Error);
    try {
        specialize(poley, Rat(4));
    } catch (const Error& err) {
        CHECK(err.code() == Errc::PoleAtPoint);
    }
    CHECK(specialize(poley, Rat(5)).terms().begin()->second == Rat(1));

    auto pool = ball_keys(2, 3);
    for (Rat zv : {Rat(2), Rat(3), Rat(9)}) {
        for (int i = 0; i < 35; ++i) {
            auto a = random_element(cfg, pool);
            auto b = random_element(cfg, pool);
            CHECK(specialize(mul(a, b), zv) == mul(specialize(a, zv), specialize(b, zv)));
        }
    }
}

TEST_CASE("tensor products") {
    std::vector<HeckeConfigT<Rat>> factors{numeric_config(1, Rat(2)), numeric_config(2, Rat(4))};
    auto u = tensor_unit(factors);
    CHECK(u.terms().size() == 1);
    CHECK(u.terms().begin()->first ==
          std::vector<AffinePerm>{AffinePerm::identity(1), AffinePerm::identity(2)});
    CHECK(tensor_mul(u, u) == u);

    // componentwise product of single terms
    auto a = tensor_of<Rat>({gen(factors[0], GenName::t()), gen(factors[1], GenName::s(1))});
    auto b = tensor_of<Rat>({gen(factors[0], GenName::t()), gen(factors[1], GenName::s(1))});
    auto prod = tensor_mul(a, b);
    auto expect = tensor_of<Rat>(
        {mul(gen(factors[0], GenName::t()), gen(factors[0], GenName::t())),
         mul(gen(factors[1], GenName::s(1)), gen(factors[1], GenName::s(1)))});
    CHECK(prod == expect);

    // cross-factor commutation
    auto pool1 = ball_keys(1, 3);
    auto pool2 = ball_keys(2, 3);
    for (int i = 0; i < 25; ++i) {
        auto x = random_element<Rat>(factors[0], pool1);
        auto y = random_element<Rat>(factors[1], pool2);
        auto left = tensor_mul(tensor_embed(factors, 0, x), tensor_embed(factors, 1, y));
        auto right = tensor_mul(tensor_embed(factors, 1, y), tensor_embed(factors, 0, x));
        CHECK(left == right);
    }

    CHECK_THROWS_AS(tensor_mul(u, tensor_unit(std::vector<HeckeConfigT<Rat>>{factors[0]})), Error);
}

TEST_CASE("serialization order is the map order") {
    auto cfg = symbolic_config(2);
    auto e = mul(gen(cfg, GenName::s(1)), gen(cfg, GenName::s(1)));
    std::vector<AffinePerm> keys;
    for (const auto& [w, c] : e.terms()) keys.push_back(w);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

}  // TEST_SUITE
