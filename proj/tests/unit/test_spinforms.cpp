#include "spingeo/calculus.hpp"
#include "spingeo/spinforms.hpp"

#include <doctest.h>

#include <random>

using namespace spingeo;

TEST_CASE("quadratic form evaluation")
{
    const SurfaceModel s(1);
    const QuadraticForm q(s, BitVector::from_bits({1, 1}));  // q(x1) = q(y1) = 1
    CHECK(q.evaluate(s.x(1)) == 1);
    CHECK(q.evaluate(s.y(1)) == 1);
    CHECK(q.evaluate(s.x(1) + s.y(1)) == 1);  // 1 + 1 + <x1,y1>
    CHECK(q.evaluate(BitVector(2)) == 0);
    CHECK(q.describe() == "q(x1)=1, q(y1)=1");

    const QuadraticForm zero(s, BitVector(2));
    CHECK(zero.evaluate(s.x(1) + s.y(1)) == 1);  // the cross term alone

    CHECK_THROWS_AS(q.evaluate(BitVector(4)), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticForm(s, BitVector(4)), std::invalid_argument);
}

TEST_CASE("chain cycle systems pin down the named forms")
{
    // genus 2: unique solution q(x1)=q(y1)=q(y2)=1, q(x2)=0
    {
        const auto chain = chain_classes(2);
        const std::vector<CurveClass> cycles(chain.begin(), chain.begin() + 4);
        const auto solutions = find_spin_form(SurfaceModel(2), cycles);
        REQUIRE(solutions.has_value());
        CHECK(solutions->dimension() == 0);
        CHECK(solutions->count() == 1);
        CHECK(solutions->particular.basis_values() == BitVector::from_bits({1, 1, 0, 1}));
    }
    // genus 3: q = (1,1,0,1,1,1) on (x1,y1,x2,y2,x3,y3)
    {
        const auto chain = chain_classes(3);
        const std::vector<CurveClass> cycles(chain.begin(), chain.end());
        const auto solutions = find_spin_form(SurfaceModel(3), cycles);
        REQUIRE(solutions.has_value());
        CHECK(solutions->count() == 1);
        CHECK(solutions->particular.basis_values() ==
              BitVector::from_bits({1, 1, 0, 1, 1, 1}));
    }
    // genus 4: q(x.) = (1,0,1,0), q(y.) = 1
    {
        const auto chain = chain_classes(4);
        const std::vector<CurveClass> cycles(chain.begin(), chain.begin() + 8);
        const auto solutions = find_spin_form(SurfaceModel(4), cycles);
        REQUIRE(solutions.has_value());
        CHECK(solutions->count() == 1);
        CHECK(solutions->particular.basis_values() ==
              BitVector::from_bits({1, 1, 0, 1, 1, 1, 0, 1}));
    }
}

TEST_CASE("small cycle systems")
{
    const SurfaceModel s(2);
    // {x1, y1}: rank 2, so 2^(4-2) = 4 solutions
    const std::vector<CurveClass> pair{make_curve(s, s.x(1)), make_curve(s, s.y(1))};
    const auto solutions = find_spin_form(s, pair);
    REQUIRE(solutions.has_value());
    CHECK(solutions->dimension() == 2);
    CHECK(solutions->count() == 4);
    for (const auto& c : pair)
        CHECK(solutions->particular.evaluate(c) == 1);

    // a separating (zero) class makes the system unsolvable: q(0) = 0 != 1
    const std::vector<CurveClass> with_zero{make_curve(s, s.x(1)),
                                            make_curve(s, BitVector(4))};
    CHECK_FALSE(find_spin_form(s, with_zero).has_value());

    // the cycle-only overload needs at least one cycle to infer the surface
    CHECK_THROWS_AS(find_spin_form(std::vector<CurveClass>{}), std::invalid_argument);
    CHECK(find_spin_form(pair).has_value());

    // no cycles at all: every form qualifies
    const auto everything = find_spin_form(s, {});
    REQUIRE(everything.has_value());
    CHECK(everything->dimension() == 4);
}

TEST_CASE("solution membership")
{
    const SurfaceModel s(2);
    const std::vector<CurveClass> pair{make_curve(s, s.x(1)), make_curve(s, s.y(1))};
    const auto solutions = find_spin_form(s, pair);
    REQUIRE(solutions.has_value());
    // q(x1)=q(y1)=1 with q(x2), q(y2) free
    for (const int a : {0, 1})
        for (const int b : {0, 1}) {
            const QuadraticForm q(
                s, BitVector::from_bits({1, 1, a, b}));
            CHECK(solutions->contains(q));
        }
    const QuadraticForm outside(s, BitVector::from_bits({0, 1, 0, 0}));
    CHECK_FALSE(solutions->contains(outside));
}

TEST_CASE("mod-2 form types")
{
    CHECK(mod2_even_type(l2_mod2_form()));
    CHECK_FALSE(mod2_even_type(l2_prime_mod2_form()));

    BitMatrix asymmetric(2, 2);
    asymmetric.set(0, 1, true);
    CHECK_THROWS_AS(mod2_even_type(asymmetric), std::invalid_argument);
}

TEST_CASE("even type is invariant under base change")
{
    std::mt19937 gen(29);
    auto random_invertible = [&gen](std::size_t n) {
        for (;;) {
            BitMatrix p(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    p.set(i, j, (gen() & 1u) != 0);
            if (rank(p) == n)
                return p;
        }
    };
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + gen() % 4;
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const bool bit = (gen() & 1u) != 0;
                m.set(i, j, bit);
                m.set(j, i, bit);
            }
        const BitMatrix p = random_invertible(n);
        const BitMatrix conjugated = p.transposed() * m * p;
        CHECK(mod2_even_type(conjugated) == mod2_even_type(m));
    }
}

TEST_CASE("rokhlin gate predicate")
{
    CHECK(rokhlin_gate(0));
    CHECK(rokhlin_gate(16));
    CHECK(rokhlin_gate(-16));
    CHECK(rokhlin_gate(-80));
    CHECK_FALSE(rokhlin_gate(8));
    CHECK_FALSE(rokhlin_gate(-8));
    CHECK_FALSE(rokhlin_gate(-24));
    CHECK_FALSE(rokhlin_gate(1));
}

TEST_CASE("w2 type classification")
{
    const SpinTriState spin{SpinState::Spin, ""};
    const SpinTriState nonspin{SpinState::NonSpin, ""};
    const SpinTriState unknown{SpinState::Unknown, ""};

    CHECK(classify_w2(spin, spin) == W2Type::TypeII);
    CHECK(classify_w2(nonspin, spin) == W2Type::TypeIII);
    CHECK(classify_w2(nonspin, nonspin) == W2Type::TypeI);
    CHECK(classify_w2(unknown, spin) == W2Type::Unknown);
    CHECK(classify_w2(nonspin, unknown) == W2Type::Unknown);
    CHECK_THROWS_AS(classify_w2(spin, nonspin), std::invalid_argument);

    CHECK(std::string(to_string(W2Type::TypeII)) == "(ii)");
    CHECK(std::string(to_string(SpinState::NonSpin)) == "non-spin");
}
