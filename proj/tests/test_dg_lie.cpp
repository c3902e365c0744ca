#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace mgce;

TEST_CASE("validate_lie on the standard fixtures")
{
    CHECK(!helpers::abelian(4).validate());
    CHECK(!helpers::aff1().validate());
    CHECK(!helpers::sl2().validate());
    CHECK(!helpers::heis3().validate());

    DgLieAlgebra bad = helpers::sl2();
    bad.set_bracket(0, 1, {{1, -2}}); // flip [h,e]
    auto v = bad.validate();
    REQUIRE(v);
    CHECK(v->identity == "jacobi");
    CHECK(v->witnesses.size() == 3);
}

TEST_CASE("graded axioms catch degree errors")
{
    DgLieAlgebra g;
    g.add_generator("u", 1);
    g.add_generator("v", 0);
    g.set_differential(0, {{1, 1}});
    CHECK(!g.validate());

    DgLieAlgebra wrong = g;
    wrong.set_differential(1, {{0, 1}}); // degree +1, not -1
    auto v = wrong.validate();
    REQUIRE(v);
    CHECK(v->identity == "degree");
}

TEST_CASE("odd generator with a nonzero self-bracket")
{
    DgLieAlgebra g;
    g.add_generator("x", 1);
    g.add_generator("y", 2);
    g.set_bracket(0, 0, {{1, 1}}); // [x,x] = y
    CHECK(!g.validate());
}

TEST_CASE("validate_rep")
{
    const DgLieAlgebra g = helpers::sl2();
    CHECK(!validate_rep(g, Representation::trivial()));
    CHECK(!validate_rep(g, Representation::adjoint(g)));

    Representation corrupt = Representation::adjoint(g);
    corrupt.set_action(0, 1, {{1, 3}}); // h.E = 3E
    CHECK(validate_rep(g, corrupt));
}

TEST_CASE("product_lie")
{
    const DgLieAlgebra g = helpers::aff1();
    DgLieAlgebra zero;
    DgLieAlgebra gz = product_lie(g, zero);
    CHECK(gz.dim() == 2);
    CHECK(!gz.validate());
    CHECK(gz.bracket_of(0, 1) == g.bracket_of(0, 1));

    DgLieAlgebra ab2 = product_lie(helpers::abelian(1), helpers::abelian(1));
    CHECK(ab2.dim() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(ab2.bracket_of(i, j).empty());

    DgLieAlgebra prod = product_lie(helpers::aff1(), helpers::sl2());
    CHECK(prod.dim() == 5);
    CHECK(!prod.validate());
}

TEST_CASE("trivial_lie")
{
    CHECK(trivial_lie(ChainComplex::point(0)).dim() == 1);
    std::mt19937 rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        ChainComplex c = helpers::random_complex(rng);
        DgLieAlgebra g = trivial_lie(c);
        CHECK(!g.validate());
        CHECK(g.underlying_complex().dims() == c.dims());
        CHECK(g.underlying_complex().homology() == c.homology());
    }
}

TEST_CASE("morphisms")
{
    const DgLieAlgebra g = helpers::aff1();
    const DgLieAlgebra a = helpers::abelian(1);
    LieMorphism ab{&g, &a, {{}, {{0, 1}}}}; // e1 -> 0, e2 -> x
    CHECK(!validate_morphism(ab));
    LieMorphism notmap{&g, &a, {{{0, 1}}, {}}}; // e1 -> x, e2 -> 0
    auto v = validate_morphism(notmap);
    REQUIRE(v);
    CHECK(v->identity == "bracket");
}

TEST_CASE("cone of aff1 matches the pinned bracket table")
{
    const DgLieAlgebra cn = cone_lie(helpers::aff1());
    REQUIRE(cn.dim() == 4);
    CHECK(cn.degree(2) == -1);
    CHECK(cn.degree(3) == -1);
    // [e1, b(e2)] = b(e1), [e2, b(e1)] = -b(e1), [b(e1), b(e2)] = 0
    CHECK(cn.bracket_of(0, 3) == LieElement{{2, 1}});
    CHECK(cn.bracket_of(1, 2) == LieElement{{2, -1}});
    CHECK(cn.bracket_of(2, 3).empty());
    CHECK(!cn.validate());
}

TEST_CASE("cone_mixed validates and matches the right adjoint")
{
    std::vector<DgLieAlgebra> gs{helpers::abelian(3), helpers::aff1(), helpers::sl2(),
                                 helpers::heis3()};
    std::mt19937 rng(29);
    for (int trial = 0; trial < 5; ++trial)
        gs.push_back(helpers::random_nilpotent(rng));
    for (const auto& g : gs) {
        MixedGradedLie cn = cone_mixed(g);
        CHECK(!cn.module.validate());
        GradedModule base;
        base.set_weight(0, g.underlying_complex());
        CHECK(cn.module == adjoint_eps(base, AdjointSide::right));
    }
}

TEST_CASE("cone of a graded algebra")
{
    // nontrivial degrees: d(u) = v with u in degree 1
    DgLieAlgebra g;
    g.add_generator("u", 1);
    g.add_generator("v", 0);
    g.set_differential(0, {{1, 1}});
    REQUIRE(!g.validate());
    MixedGradedLie cn = cone_mixed(g);
    CHECK(!cn.cone.validate());
    CHECK(!cn.module.validate());
}

TEST_CASE("cone of an abelian algebra is an acyclic identity cone")
{
    MixedGradedLie cn = cone_mixed(helpers::abelian(3));
    for (int i = 0; i < cn.cone.dim(); ++i)
        for (int j = 0; j < cn.cone.dim(); ++j)
            CHECK(cn.cone.bracket_of(i, j).empty());
    CHECK(tate_total(cn.module, -1).homology().empty());
}

TEST_CASE("product commutes with the cone")
{
    const DgLieAlgebra g = helpers::aff1();
    const DgLieAlgebra h = helpers::sl2();
    const DgLieAlgebra cone_of_product = cone_lie(product_lie(g, h));
    const DgLieAlgebra product_of_cones = product_lie(cone_lie(g), cone_lie(h));
    const int gd = g.dim(), hd = h.dim(), kd = gd + hd;
    // cone of product: g, h, bg, bh; product of cones: g, bg, h, bh
    auto to_pc = [&](int i) {
        if (i < gd)
            return i;
        if (i < kd)
            return i - gd + 2 * gd;
        if (i < kd + gd)
            return i - kd + gd;
        return i - kd - gd + 2 * gd + hd;
    };
    REQUIRE(cone_of_product.dim() == product_of_cones.dim());
    for (int i = 0; i < cone_of_product.dim(); ++i) {
        CHECK(cone_of_product.degree(i) == product_of_cones.degree(to_pc(i)));
        LieElement d1 = cone_of_product.differential_of(i);
        LieElement d2;
        for (const auto& [k, c] : product_of_cones.differential_of(to_pc(i)))
            d2[k] = c;
        LieElement d1m;
        for (const auto& [k, c] : d1)
            d1m[to_pc(k)] = c;
        CHECK(d1m == d2);
        for (int j = 0; j < cone_of_product.dim(); ++j) {
            LieElement b1;
            for (const auto& [k, c] : cone_of_product.bracket_of(i, j))
                b1[to_pc(k)] = c;
            CHECK(b1 == product_of_cones.bracket_of(to_pc(i), to_pc(j)));
        }
    }
}

TEST_CASE("random nilpotent algebras validate")
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(!helpers::random_nilpotent(rng).validate());
}

TEST_CASE("random vector spot check of multilinearity")
{
    const DgLieAlgebra g = helpers::sl2();
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        LieElement x, y, z;
        for (int i = 0; i < 3; ++i) {
            x[i] = coeff(rng);
            y[i] = coeff(rng);
            z[i] = coeff(rng);
        }
        // Jacobi for degree-0 elements
        LieElement sum = g.bracket(x, g.bracket(y, z));
        sum = lie_add(sum, g.bracket(y, g.bracket(z, x)));
        sum = lie_add(sum, g.bracket(z, g.bracket(x, y)));
        CHECK(sum.empty());
        // antisymmetry
        CHECK(lie_add(g.bracket(x, y), g.bracket(y, x)).empty());
    }
}
