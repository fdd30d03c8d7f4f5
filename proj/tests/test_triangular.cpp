#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qca/error.hpp"
#include "qca/triangular.hpp"
#include "util.hpp"

using namespace qca;
using qca::testing::a2_seed;
using qca::testing::grid;
using qca::testing::sl3_seed;

namespace {

TorusElement mono(const CtxPtr& c, ExpVec m, QCoeff q = QCoeff(1)) {
    return TorusElement::monomial(c, std::move(m), std::move(q));
}

}  // namespace

TEST_CASE("companion chart of the rank-one fixture") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    CHECK(r->word == std::vector<int>{0});
    CHECK(r->sigma == std::vector<int>{0});
    CHECK(r->inj[0].elem == mono(t.home, {-1, 0, 1}) + mono(t.home, {-1, 1, 0}));
    CHECK(r->inj[0].degree == ExpVec{-1, 0, 1});
    CHECK(r->t1.word == r->word);
}

TEST_CASE("companion chart of the rank-two fixture") {
    Seed a = a2_seed();
    auto r = find_t1(a);
    REQUIRE(r.has_value());
    CHECK(r->word == std::vector<int>{1, 0});
    CHECK(r->sigma == std::vector<int>{0, 1});
    CHECK(r->inj[0].elem == mono(a.home, {-1, -1}) + mono(a.home, {-1, 0}) +
                                mono(a.home, {0, -1}));
    CHECK(r->inj[1].elem == mono(a.home, {0, -1}) + mono(a.home, {1, -1}));
    CHECK(r->inj[0].degree == ExpVec{-1, 0});
    CHECK(r->inj[1].degree == ExpVec{0, -1});
    // The root itself never qualifies, and depth one is too shallow here.
    CHECK(!find_t1(a, 0).has_value());
    CHECK(!find_t1(a, 1).has_value());
}

TEST_CASE("distinguished elements hit their degree") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    // Nonnegative unfrozen part: plain cluster monomials.
    CHECK(distinguished(t, *r, {2, 1, -1}).elem == mono(t.home, {2, 1, -1}));
    CHECK(distinguished(t, *r, {0, 0, 0}).elem == mono(t.home, {0, 0, 0}));
    // Negative part brings in the companion variable, shifted by frozens.
    auto d = distinguished(t, *r, {-1, 0, 0});
    CHECK(d.degree == ExpVec{-1, 0, 0});
    CHECK(d.elem.coeff({-1, 0, 0}) == QCoeff(1));
    CHECK(d.elem.bar_invariant());
    CHECK_THROWS_AS(distinguished(t, *r, {0, 0}), InputError);

    Seed a = a2_seed();
    auto ra = find_t1(a);
    REQUIRE(ra.has_value());
    auto da = distinguished(a, *ra, {-1, 1});
    CHECK(da.degree == ExpVec{-1, 1});
    CHECK(da.elem == mono(a.home, {-1, 1}) + mono(a.home, {-1, 0}) +
                         mono(a.home, {0, 0}, QCoeff::v_pow(-1)));
}

TEST_CASE("pointed decomposition over a family") {
    Seed a = a2_seed();
    auto r = find_t1(a);
    REQUIRE(r.has_value());
    std::map<ExpVec, PointedElement> cache;
    auto fam = [&](const ExpVec& h) -> const PointedElement* {
        auto it = cache.find(h);
        if (it == cache.end())
            it = cache.emplace(h, distinguished(a, *r, h)).first;
        return &it->second;
    };

    auto base = distinguished(a, *r, {-1, 1});
    auto one = pointed_decompose(base, fam, 10);
    CHECK(one.exact);
    CHECK(one.coeff == std::map<ExpVec, QCoeff>{{{-1, 1}, QCoeff(1)}});

    // A combination is peeled back to its coefficients.
    QCoeff c = QCoeff::v_pow(-2, 3);
    auto z = as_pointed(base.elem + mono(a.home, {0, 0}).scaled(c));
    auto dec = pointed_decompose(z, fam, 10);
    CHECK(dec.exact);
    CHECK(dec.coeff ==
          std::map<ExpVec, QCoeff>{{{-1, 1}, QCoeff(1)}, {{0, 0}, c}});

    // A tight order bound drops the inner degree instead of failing.
    auto cut = pointed_decompose(z, fam, 2);
    CHECK(!cut.exact);
    CHECK(cut.coeff == std::map<ExpVec, QCoeff>{{{-1, 1}, QCoeff(1)}});
}

TEST_CASE("pointed decomposition failure modes") {
    Seed t = sl3_seed();
    auto z = as_pointed(mono(t.home, {-1, 0, 1}) + mono(t.home, {-1, 1, 0}));

    PointedElement lead = as_pointed(mono(t.home, {-1, 0, 1}));
    auto only_lead = [&](const ExpVec& h) -> const PointedElement* {
        return h == ExpVec{-1, 0, 1} ? &lead : nullptr;
    };
    CHECK_THROWS_AS(pointed_decompose(z, only_lead, 10), DecompositionError);

    // A family member with support outside the cone poisons the remainder.
    ExpVec g{0, 0, 0};
    PointedElement bad{mono(t.home, g) - mono(t.home, {5, 0, 0}), g, {}};
    auto poisoned = [&](const ExpVec& h) -> const PointedElement* {
        return h == g ? &bad : nullptr;
    };
    CHECK_THROWS_AS(pointed_decompose(as_pointed(mono(t.home, g)), poisoned, 10),
                    DecompositionError);
}

TEST_CASE("truncated family members taint exactness") {
    Seed t = sl3_seed();
    ExpVec g{0, 0, 0};
    PointedElement m2 = as_pointed(mono(t.home, g));
    m2.elem = truncate(m2.elem, g, 2);
    auto fam2 = [&](const ExpVec& h) -> const PointedElement* {
        return h == g ? &m2 : nullptr;
    };
    auto dec = pointed_decompose(as_pointed(mono(t.home, g)), fam2, 10);
    CHECK(!dec.exact);

    PointedElement m12 = as_pointed(mono(t.home, g));
    m12.elem = truncate(m12.elem, g, 12);
    auto fam12 = [&](const ExpVec& h) -> const PointedElement* {
        return h == g ? &m12 : nullptr;
    };
    CHECK(pointed_decompose(as_pointed(mono(t.home, g)), fam12, 10).exact);
}

TEST_CASE("triangular functions on the rank-one fixture") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    // Everything in this window is a localized cluster monomial.
    auto f1 = kl_triangular(t, *r, {1, 1, 0}, 4);
    CHECK(f1.exact);
    CHECK(f1.corrections.empty());
    CHECK(f1.f.elem == mono(t.home, {1, 1, 0}));

    auto f2 = kl_triangular(t, *r, {-1, 0, 0}, 4);
    CHECK(f2.exact);
    CHECK(f2.corrections.empty());
    CHECK(f2.f.elem == cluster_monomial(mutate(t, 0), {1, 0, -1}));
    CHECK_THROWS_AS(kl_triangular(t, *r, {0, 0, 0}, 0), InputError);
}

TEST_CASE("triangular functions on the rank-two fixture") {
    Seed a = a2_seed();
    auto r = find_t1(a);
    REQUIRE(r.has_value());

    // The bar-recursion produces a genuine correction here.
    auto f = kl_triangular(a, *r, {-1, 1}, 4);
    CHECK(f.exact);
    CHECK(f.f.elem == mono(a.home, {-1, 0}) + mono(a.home, {-1, 1}));
    REQUIRE(f.corrections.size() == 1);
    CHECK(f.corrections.at({1, 1}) == -QCoeff::v_pow(-1));

    // Quantum binomial coefficients appear in the square of an injective.
    auto f2 = kl_triangular(a, *r, {2, -2}, 4);
    CHECK(f2.exact);
    CHECK(f2.f.elem ==
          mono(a.home, {2, -2}) + mono(a.home, {4, -2}) +
              mono(a.home, {3, -2}, QCoeff::v_pow(-1) + QCoeff::v_pow(1)));

    // Processing order within a level must not matter.
    for (ExpVec g : {ExpVec{-1, 1}, ExpVec{2, -2}, ExpVec{-2, -1}}) {
        auto p = kl_triangular(a, *r, g, 4, false);
        auto q = kl_triangular(a, *r, g, 4, true);
        CHECK(p.f.elem == q.f.elem);
        CHECK(p.corrections == q.corrections);
        CHECK(p.exact == q.exact);
    }

    // Doubling the order changes nothing on certified functions.
    auto lo = kl_triangular(a, *r, {-1, 1}, 2);
    CHECK(lo.exact);
    CHECK(lo.f.elem == f.f.elem);
    CHECK(lo.corrections == f.corrections);
}

TEST_CASE("window enumeration") {
    auto w = box_window(1, 2);
    CHECK(w.size() == 5);
    CHECK(w.front() == ExpVec{-2});
    CHECK(w.back() == ExpVec{2});
    auto w2 = box_window(2, 1);
    CHECK(w2.size() == 9);
    CHECK(std::is_sorted(w2.begin(), w2.end()));
}

TEST_CASE("axioms hold on the rank-one family") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(t, *r, box_window(3, 1), 4);
    for (const auto& [g, tf] : fam.fns) CHECK(tf.exact);
    auto rep = verify_triangular_basis(t, fam);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);

    // The verifier notices a tail term breaking bar-invariance...
    TriFamily broken = fam;
    broken.fns.at({0, 0, 1}).f.elem +=
        TorusElement::monomial(t.home, {0, 1, 0}, QCoeff::v_pow(1));
    CHECK(!verify_triangular_basis(t, broken).ok);

    // ...and a correction escaping the ideal m.
    TriFamily tainted = fam;
    tainted.fns.at({0, 0, 1}).corrections[{1}] = QCoeff(1);
    CHECK(!verify_triangular_basis(t, tainted).ok);
}

TEST_CASE("axioms hold on the rank-two family") {
    Seed a = a2_seed();
    auto r = find_t1(a);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(a, *r, box_window(2, 2), 4);
    auto rep = verify_triangular_basis(a, fam);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
}

TEST_CASE("adjacent-chart admissibility") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(t, *r, box_window(3, 2), 4);
    auto rep = verify_admissible(t, fam, 0, 2);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
    CHECK_THROWS_AS(cluster_monomial(t, {-1, 0, 0}), InputError);
}

TEST_CASE("adjacent-chart compatibility") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(t, *r, box_window(3, 1), 4);
    auto rep = verify_compatibility(t, fam, 0, 4);
    CHECK(rep.ok);
    CHECK(rep.checked > 0);
}

TEST_CASE("copointed rigidity pins the exchange segment") {
    Seed t = sl3_seed();
    for (int d = 1; d <= 2; ++d) {
        ExpVec me{d, 0, 0};
        auto z = cluster_monomial(mutate(t, 0), me);
        auto rep = verify_copointed_rigidity(z, t, 0, d);
        CHECK(rep.ok);
        CHECK(rep.checked == d + 1);
    }
    // A plain root variable has the wrong degree.
    auto bad = verify_copointed_rigidity(t.vars[0], t, 0, 1);
    CHECK(!bad.ok);
    CHECK(!bad.detail.empty());
    CHECK_THROWS_AS(verify_copointed_rigidity(t.vars[0], t, 1, 1), InputError);
}

TEST_CASE("coefficient transfer between similar charts") {
    Seed t = sl3_seed();
    auto r = find_t1(t);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(t, *r, box_window(3, 1), 4);
    Seed target = as_root(mutate(t, 0));
    auto moved = transfer_similar(fam, t, target, {0});
    CHECK(moved.size() == fam.fns.size());
    for (const auto& [g, el] : moved) {
        CHECK(el.bar_invariant());
        auto p = try_pointed(el);
        REQUIRE(p.has_value());
        CHECK(p->degree == g);
    }
    CHECK_THROWS_AS(transfer_similar(fam, t, target, {0, 1}), InputError);
    CHECK_THROWS_AS(transfer_similar(fam, t, target, {1}), InputError);
}

TEST_CASE("coefficient transfer onto the rank-two companion") {
    Seed a = a2_seed();
    auto r = find_t1(a);
    REQUIRE(r.has_value());
    TriFamily fam = build_family(a, *r, box_window(2, 1), 4);
    Seed target = as_root(r->t1);
    auto moved = transfer_similar(fam, a, target, r->sigma);
    CHECK(moved.size() == fam.fns.size());
    CHECK(moved.at({-1, 1}) ==
          mono(target.home, {-1, 1}) + mono(target.home, {-1, 0}));
    // Swapping the columns breaks the block match in this chart.
    CHECK_THROWS_AS(transfer_similar(fam, a, target, {1, 0}), InputError);
}
