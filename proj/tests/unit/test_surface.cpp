#include "spingeo/surface.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace spingeo;

TEST_CASE("surface basis layout")
{
    const SurfaceModel s(3);
    CHECK(s.genus() == 3);
    CHECK(s.h1_dim() == 6);
    CHECK(s.x(1) == BitVector::unit(6, 0));
    CHECK(s.y(1) == BitVector::unit(6, 1));
    CHECK(s.x(2) == BitVector::unit(6, 2));
    CHECK(s.y(3) == BitVector::unit(6, 5));
    CHECK(s.basis_label(0) == "x1");
    CHECK(s.basis_label(1) == "y1");
    CHECK(s.basis_label(4) == "x3");
    CHECK_THROWS_AS((void)s.x(0), std::out_of_range);
    CHECK_THROWS_AS((void)s.y(4), std::out_of_range);
    CHECK_THROWS_AS(SurfaceModel(-1), std::invalid_argument);
}

TEST_CASE("symplectic pairing and gram matrix")
{
    const SurfaceModel s(2);
    CHECK(pairing(s.x(1), s.y(1)) == 1);
    CHECK(pairing(s.y(1), s.x(1)) == 1);  // mod 2: symmetric
    CHECK(pairing(s.x(1), s.x(2)) == 0);
    CHECK(pairing(s.x(1), s.y(2)) == 0);

    const BitMatrix gram = intersection_gram(s);
    CHECK(gram.is_symmetric());
    std::mt19937 gen(3);
    for (int t = 0; t < 200; ++t) {
        BitVector u(4);
        BitVector v(4);
        for (std::size_t i = 0; i < 4; ++i) {
            u.set(i, (gen() & 1u) != 0);
            v.set(i, (gen() & 1u) != 0);
        }
        CHECK(pairing(u, v) == u.dot(gram.apply(v)));
    }
}

TEST_CASE("chain classes form a chain")
{
    for (int g = 1; g <= 6; ++g) {
        const auto chain = chain_classes(g);
        REQUIRE(chain.size() == static_cast<std::size_t>(2 * g + 1));
        CHECK(chain.front().name == "c1");
        CHECK(chain.back().name == "c" + std::to_string(2 * g + 1));
        for (std::size_t i = 0; i < chain.size(); ++i)
            for (std::size_t j = 0; j < chain.size(); ++j) {
                const int expected = (i + 1 == j || j + 1 == i) ? 1 : 0;
                CHECK(pairing(chain[i], chain[j]) == expected);
            }
        for (const auto& c : chain)
            CHECK_FALSE(c.separating());
    }

    const auto g2 = chain_classes(2);
    const SurfaceModel s(2);
    CHECK(g2[0].vec == s.x(1));
    CHECK(g2[1].vec == s.y(1));
    CHECK(g2[2].vec == s.x(1) + s.x(2));
    CHECK(g2[3].vec == s.y(2));
    CHECK(g2[4].vec == s.x(2));
}

TEST_CASE("transvection formula and twist matrices")
{
    const SurfaceModel s(2);
    const CurveClass c = make_curve(s, s.x(1), "x1");

    CHECK(transvect(c, s.y(1)) == s.y(1) + s.x(1));  // <y1, x1> = 1
    CHECK(transvect(c, s.x(2)) == s.x(2));           // disjoint

    std::mt19937 gen(17);
    for (int t = 0; t < 300; ++t) {
        BitVector v(4);
        BitVector w(4);
        for (std::size_t i = 0; i < 4; ++i) {
            v.set(i, (gen() & 1u) != 0);
            w.set(i, (gen() & 1u) != 0);
        }
        const CurveClass d = make_curve(s, w.is_zero() ? s.x(1) : w);
        CHECK(twist_matrix(d).apply(v) == transvect(d, v));
    }

    const BitMatrix tw = twist_matrix(c);
    CHECK(tw * tw == BitMatrix::identity(4));  // mod-2 twists are involutions

    // separating (zero) classes act trivially
    const CurveClass zero = make_curve(s, BitVector(4), "separating");
    CHECK(zero.separating());
    CHECK(twist_matrix(zero).is_identity());
}

TEST_CASE("curve parsing")
{
    const SurfaceModel s(2);
    CHECK(parse_curve(s, "x1").vec == s.x(1));
    CHECK(parse_curve(s, "x1+y2").vec == s.x(1) + s.y(2));
    CHECK(parse_curve(s, " y1 + x2 ").vec == s.y(1) + s.x(2));
    CHECK(parse_curve(s, "x1+x1").vec.is_zero());  // mod 2
    CHECK(parse_curve(s, "0").vec.is_zero());

    CHECK_THROWS_AS(parse_curve(s, "x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve(s, "x3"), std::invalid_argument);  // beyond genus 2
    CHECK_THROWS_AS(parse_curve(s, "z1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve(s, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve(s, "x1++y1"), std::invalid_argument);

    const CurveClass c = parse_curve(s, "x1+y2");
    CHECK(describe(c) == "x1+y2");
}
