#include <doctest.h>

#include "test_util.hpp"

using namespace leibniz;
using namespace testutil;

namespace {

// Independent unit test: x is a unit iff some residue multiplies it to 1.
bool unit_by_search(const QuotElement& x) {
    for (const auto& y : enumerate_residues(x.ring())) {
        if ((x * y).is_one()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("polynomial division with remainder") {
    FieldDescriptor q = Q();
    auto [quot, rem] = poly_divmod(poly(q, {0, 0, 1}), poly(q, {0, 1}));  // X^2 / X
    CHECK(quot == poly(q, {0, 1}));
    CHECK(rem.is_zero());

    FieldDescriptor f2 = GF(2);
    // long division by hand: (X+1)^2 = X^2+1 over GF(2)
    auto d = poly_divmod(poly(f2, {1, 0, 1}), poly(f2, {1, 1}));
    CHECK(d.quot == poly(f2, {1, 1}));
    CHECK(d.rem.is_zero());

    auto low = poly_divmod(poly(q, {3, 1}), poly(q, {0, 0, 1}));
    CHECK(low.quot.is_zero());
    CHECK(low.rem == poly(q, {3, 1}));

    CHECK_THROWS_AS(poly_divmod(poly(q, {1}), Poly::zero(q)), DivisionByZeroPoly);
}

TEST_CASE("extended gcd produces a monic divisor and an exact identity") {
    FieldDescriptor q = Q();
    auto g1 = ext_gcd(poly(q, {0, 1}), poly(q, {0, 0, 1}));  // gcd(X, X^2) = X
    CHECK(g1.g == poly(q, {0, 1}));

    // Bezout by expansion: -1/2 (X-1) + 1/2 (X+1) = 1
    auto g2 = ext_gcd(poly(q, {-1, 1}), poly(q, {1, 1}));
    CHECK(g2.g == Poly::one(q));
    CHECK(g2.s == Poly::constant(Scalar::parse(q, "-1/2")));
    CHECK(g2.t == Poly::constant(Scalar::parse(q, "1/2")));

    auto g3 = ext_gcd(poly(q, {2, 4}), Poly::zero(q));
    CHECK(g3.g == poly(q, {1, 2}).scaled(Scalar::parse(q, "1/2")));
    CHECK(g3.g.is_monic());
    CHECK(g3.t.is_zero());

    CHECK_THROWS_AS(ext_gcd(Poly::zero(q), Poly::zero(q)), BothZero);
}

TEST_CASE("bezout identity holds on random pairs") {
    std::mt19937_64 rng(4242);
    for (const FieldDescriptor& f : {Q(), GF(2), GF(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> deg(0, 4);
            Poly a = Poly::from_coeffs(f, random_vector(f, deg(rng) + 1, rng));
            Poly b = Poly::from_coeffs(f, random_vector(f, deg(rng) + 1, rng));
            if (a.is_zero() && b.is_zero()) continue;
            auto g = ext_gcd(a, b);
            CHECK(g.s * a + g.t * b == g.g);
            CHECK(g.g.is_monic());
            CHECK(poly_divmod(a, g.g).rem.is_zero());
            CHECK(poly_divmod(b, g.g).rem.is_zero());
        }
    }
}

TEST_CASE("quotient ring inversion") {
    FieldDescriptor q = Q();
    SUBCASE("telescoping inverse of 1-z modulo X^n") {
        for (std::size_t n : {1u, 2u, 5u}) {
            QuotientRing ring = QuotientRing::x_power_modulus(q, n);
            QuotElement x(ring, poly(q, {1, -1}));
            std::vector<Scalar> ones(n, Scalar::one(q));
            CHECK(x.inverse() == QuotElement(ring, Poly::from_coeffs(q, ones)));
            CHECK(x * x.inverse() == QuotElement(ring, Poly::one(q)));
        }
    }
    SUBCASE("z is self-inverse modulo X^2 - 1 over GF(3)") {
        FieldDescriptor f3 = GF(3);
        QuotientRing ring(f3, poly(f3, {2, 0, 1}));  // X^2 - 1 = X^2 + 2
        QuotElement z(ring, Poly::x(f3));
        CHECK(z.inverse() == z);
    }
    SUBCASE("nilpotents are rejected with the gcd witness") {
        FieldDescriptor f2 = GF(2);
        QuotientRing ring = QuotientRing::x_power_modulus(f2, 3);
        QuotElement z(ring, Poly::x(f2));
        CHECK_THROWS_WITH_AS(z.inverse(), "residue shares the factor X with the modulus", NotAUnit);
        try {
            z.inverse();
        } catch (const NotAUnit& e) {
            CHECK(e.gcd_witness == Poly::x(f2));
        }
    }
}

TEST_CASE("unit enumeration") {
    FieldDescriptor f2 = GF(2);
    auto u1 = enumerate_units(QuotientRing::x_power_modulus(f2, 3));
    CHECK(u1.size() == 4);  // constant term 1
    for (const auto& u : u1) CHECK(u.residue().coeff(0).is_one());

    FieldDescriptor f3 = GF(3);
    auto u2 = enumerate_units(QuotientRing::x_power_modulus(f3, 2));
    CHECK(u2.size() == 6);  // (q-1) q

    auto u3 = enumerate_units(QuotientRing(f2, poly(f2, {1, 1, 1})));  // irreducible
    CHECK(u3.size() == 3);

    CHECK_THROWS_AS(enumerate_units(QuotientRing::x_power_modulus(Q(), 2)), InfiniteField);
    CHECK_THROWS_AS(enumerate_units(QuotientRing::x_power_modulus(GF(5), 11)), GuardExceeded);
}

TEST_CASE("unit counts match the closed formula on the grid") {
    const std::pair<std::int64_t, std::size_t> grid[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    for (auto [p, n] : grid) {
        QuotientRing ring = QuotientRing::x_power_modulus(GF(p), n);
        std::uint64_t expected = static_cast<std::uint64_t>(p - 1);
        for (std::size_t k = 1; k < n; ++k) expected *= p;
        CHECK(enumerate_units(ring).size() == expected);
        CHECK(subgroup_I_elements(ring).size() == expected / (p - 1));
    }
}

TEST_CASE("gcd unit test agrees with the multiplicative search") {
    for (std::int64_t p : {2, 3}) {
        FieldDescriptor f = GF(p);
        QuotientRing power = QuotientRing::x_power_modulus(f, 3);
        QuotientRing mixed(f, poly(f, {1, 1, 0, 1}));
        for (const auto& ring : {power, mixed}) {
            for (const auto& x : enumerate_residues(ring)) {
                CHECK(x.is_unit() == unit_by_search(x));
                if (x.is_unit()) {
                    CHECK((x * x.inverse()).is_one());
                } else {
                    CHECK_THROWS_AS(x.inverse(), NotAUnit);
                }
            }
        }
    }
}

TEST_CASE("constant-term-1 subgroup") {
    FieldDescriptor f2 = GF(2);
    auto s = subgroup_I_elements(QuotientRing::x_power_modulus(f2, 3));
    REQUIRE(s.size() == 4);
    // the four elements, in lexicographic coefficient order
    CHECK(s[0].to_string() == "1");
    CHECK(s[1].to_string() == "1 + z^2");
    CHECK(s[2].to_string() == "1 + z");
    CHECK(s[3].to_string() == "1 + z + z^2");

    FieldDescriptor f3 = GF(3);
    auto s3 = subgroup_I_elements(QuotientRing::x_power_modulus(f3, 2));
    CHECK(s3.size() == 3);

    auto s1 = subgroup_I_elements(QuotientRing::x_power_modulus(f3, 1));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].is_one());

    CHECK_THROWS_AS(subgroup_I_elements(QuotientRing(f2, poly(f2, {1, 1, 1}))), WrongModulus);
}

TEST_CASE("constant-term-1 subgroup is closed under product and inverse") {
    for (std::int64_t p : {2, 3}) {
        for (std::size_t n : {2u, 3u}) {
            auto ring = QuotientRing::x_power_modulus(GF(p), n);
            auto members = subgroup_I_elements(ring);
            auto is_member = [&](const QuotElement& x) {
                return std::find(members.begin(), members.end(), x) != members.end();
            };
            for (const auto& a : members) {
                CHECK(is_member(a.inverse()));
                for (const auto& b : members) CHECK(is_member(a * b));
            }
        }
    }
}

TEST_CASE("a modulus and its monic associate cut out the same ring") {
    FieldDescriptor f3 = GF(3);
    QuotientRing scaled(f3, poly(f3, {1, 1, 0, 2}));  // 2 X^3 + X + 1
    QuotientRing monic(f3, poly(f3, {1, 1, 0, 2}).monic());
    CHECK(scaled.modulus() == monic.modulus());
    CHECK(enumerate_units(scaled).size() == enumerate_units(monic).size());

    // a modulus supplied with leading coefficient -1 keeps its display form
    QuotientRing display(f3, poly(f3, {1, 0, -1}));
    CHECK(display.original_modulus() == poly(f3, {1, 0, 2}));
    CHECK(display.modulus() == poly(f3, {2, 0, 1}));
}

TEST_CASE("polynomial parsing and printing") {
    FieldDescriptor q = Q();
    Poly p = Poly::parse(q, "1,1,-1");
    CHECK(p == poly(q, {1, 1, -1}));
    CHECK(p.to_string() == "1 + X - X^2");
    CHECK(Poly::zero(q).to_string() == "0");
    CHECK(poly(q, {0, -2}).to_string() == "-2*X");
    CHECK(Poly::parse(GF(3), "1,2").to_string() == "1 + 2*X");
    CHECK_THROWS_AS(Poly::parse(GF(3), "1,,2"), ParseError);
}
