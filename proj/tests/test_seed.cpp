#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qca/error.hpp"
#include "qca/seed.hpp"
#include "util.hpp"

using namespace qca;
using qca::testing::a2_seed;
using qca::testing::grid;
using qca::testing::random_seed;
using qca::testing::sl3_seed;

namespace {

TorusElement mono(const CtxPtr& c, ExpVec m, QCoeff q = QCoeff(1)) {
    return TorusElement::monomial(c, std::move(m), std::move(q));
}

}  // namespace

TEST_CASE("fixture seeds validate") {
    Seed t = sl3_seed();
    CHECK(validate(t) == std::vector<long long>{1});
    CHECK(t.nvert() == 3);
    CHECK(t.nuf() == 1);
    CHECK(t.is_unfrozen(0));
    CHECK(!t.is_unfrozen(1));
    CHECK(t.uf_col(0) == 0);
    CHECK(t.uf_col(2) == -1);
    CHECK(t.vertex_by_name("3") == 2);
    CHECK(t.vertex_by_name("x") == -1);
    for (int i = 0; i < 3; ++i)
        CHECK(t.vars[i] == mono(t.home, {i == 0, i == 1, i == 2}));

    Seed a = a2_seed();
    CHECK(validate(a) == std::vector<long long>{1, 1});
}

TEST_CASE("validate rejects incompatible pairs") {
    IntMat b = grid({{0}, {1}, {-1}});
    IntMat zero = grid({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(compatibility_diag(b, zero, {0}), SeedError);
    // Wrong sign on the diagonal.
    IntMat neg = grid({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(compatibility_diag(b, neg, {0}), SeedError);
}

TEST_CASE("quantize finds a compatible form") {
    IntMat b = grid({{0}, {1}, {-1}});
    IntMat lam = quantize(b, {0});
    auto d = compatibility_diag(b, lam, {0});
    CHECK(d.size() == 1);
    CHECK(d[0] > 0);
    IntMat b2 = grid({{0, 1}, {-1, 0}});
    auto d2 = compatibility_diag(b2, quantize(b2, {0, 1}), {0, 1});
    CHECK(d2 == std::vector<long long>{1, 1});
    // Rank-deficient columns admit no compatible form.
    CHECK_THROWS_AS(quantize(grid({{0, 0}, {0, 0}}), {0, 1}), SeedError);
}

TEST_CASE("mutate_b follows the exchange rule") {
    CHECK(mutate_b(grid({{0}, {1}, {-1}}), {0}, 0) == grid({{0}, {-1}, {1}}));
    CHECK(mutate_b(grid({{0, 1}, {-1, 0}}), {0, 1}, 0) == grid({{0, -1}, {1, 0}}));
    // Entries through vertex k pick up the product correction.
    IntMat b3 = grid({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
    IntMat m1 = mutate_b(b3, {0, 1, 2}, 1);
    CHECK(m1 == grid({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
    CHECK_THROWS_AS(mutate_b(grid({{0}, {1}, {-1}}), {0}, 1), InputError);
}

TEST_CASE("mutation replaces the variable by the exchange relation") {
    Seed t = sl3_seed();
    Seed s = mutate(t, 0);
    CHECK(s.b == grid({{0}, {-1}, {1}}));
    CHECK(validate(s) == std::vector<long long>{1});
    CHECK(s.word == std::vector<int>{0});
    CHECK(s.vars[0] == mono(t.home, {-1, 0, 1}) + mono(t.home, {-1, 1, 0}));
    CHECK(s.vars[1] == t.vars[1]);
    CHECK(s.vars[2] == t.vars[2]);
    CHECK(s.vars[0].bar_invariant());
    // X1 * X1' = v X^f3 + X^f2.
    CHECK(t.vars[0] * s.vars[0] ==
          mono(t.home, {0, 0, 1}, QCoeff::v_pow(1)) + mono(t.home, {0, 1, 0}));
    CHECK_THROWS_AS(mutate(t, 1), InputError);
    CHECK_THROWS_AS(mutate(t, 3), InputError);
}

TEST_CASE("mutation is an involution") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Seed t = random_seed(rng);
        int k = t.unfrozen[rng() % t.unfrozen.size()];
        Seed back = mutate(mutate(t, k), k);
        CHECK(same_seed_content(back, t));
        CHECK(back.word == std::vector<int>{k, k});
    }
}

TEST_CASE("mutation preserves the compatibility diagonal") {
    std::mt19937 rng(17);
    int steps = 0;
    while (steps < 500) {
        Seed t = random_seed(rng);
        auto d0 = validate(t);
        Seed cur = t;
        for (int j = 0; j < 3 && steps < 500; ++j, ++steps) {
            int k = cur.unfrozen[rng() % cur.unfrozen.size()];
            cur = mutate(cur, k);
            CHECK(validate(cur) == d0);
            for (const auto& x : cur.vars) CHECK(x.bar_invariant());
        }
    }
}

TEST_CASE("apply_sequence applies letters first to last") {
    Seed a = a2_seed();
    Seed s1 = apply_sequence(a, {0, 1});
    Seed s2 = mutate(mutate(a, 0), 1);
    CHECK(same_seed_content(s1, s2));
    CHECK(s1.word == std::vector<int>{0, 1});
    CHECK(same_seed_content(apply_sequence(a, {}), a));
}

TEST_CASE("pentagon periodicity in rank two") {
    Seed a = a2_seed();
    Seed p = apply_sequence(a, {0, 1, 0, 1, 0});
    // Five alternating mutations swap the two variables.
    CHECK(p.vars[0] == a.vars[1]);
    CHECK(p.vars[1] == a.vars[0]);
    Seed full = apply_sequence(p, {0, 1, 0, 1, 0});
    CHECK(same_seed_content(full, a));
}

TEST_CASE("cluster monomials") {
    Seed t = sl3_seed();
    // On the root seed the normalized monomials are the basis elements.
    CHECK(cluster_monomial(t, {2, 1, 0}) == mono(t.home, {2, 1, 0}));
    CHECK(cluster_monomial(t, {1, -2, 3}) == mono(t.home, {1, -2, 3}));
    CHECK_THROWS_AS(cluster_monomial(t, {-1, 0, 0}), InputError);

    Seed s = mutate(t, 0);
    CHECK(cluster_monomial(s, {1, 0, 0}) == s.vars[0]);
    CHECK(cluster_monomial(s, {0, 1, 0}) == mono(t.home, {0, 1, 0}));
    auto m = cluster_monomial(s, {2, 0, -1});
    CHECK(m.bar_invariant());
    CHECK_THROWS_AS(cluster_monomial(s, {-1, 0, 0}), InputError);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Seed r = random_seed(rng);
        ExpVec e(r.nvert());
        for (auto& x : e) x = rng() % 3;
        CHECK(cluster_monomial(r, e).bar_invariant());
    }
}

TEST_CASE("seed keys and content equality") {
    Seed t = sl3_seed();
    Seed s = mutate(t, 0);
    CHECK(seed_key(t) != seed_key(s));
    CHECK(!same_seed_content(t, s));
    Seed relabeled = t;
    relabeled.word = {9, 9};
    CHECK(same_seed_content(relabeled, t));
    CHECK(seed_key(relabeled) == seed_key(t));
}

TEST_CASE("as_root restarts the engine in the current chart") {
    Seed t = sl3_seed();
    Seed s = mutate(t, 0);
    Seed r = as_root(s);
    CHECK(r.b == s.b);
    CHECK(r.lambda == s.lambda);
    CHECK(r.word.empty());
    for (int i = 0; i < 3; ++i)
        CHECK(r.vars[i] == mono(r.home, {i == 0, i == 1, i == 2}));
    CHECK(validate(r) == validate(s));
}
