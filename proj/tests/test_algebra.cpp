#include <doctest.h>

#include "test_util.hpp"

using namespace leibniz;
using namespace testutil;

namespace {

LeibnizAlgebra abelian(const FieldDescriptor& f, std::size_t dim) {
    return LeibnizAlgebra::from_table(f, dim, {});
}

LeibnizAlgebra bad_dim1(const FieldDescriptor& f) {
    // [b1,b1] = b1 breaks the identity: [[b1,b1],b1] = b1 but the right side
    // telescopes to zero
    LeibnizAlgebra::Tensor t;
    t[{1, 1}] = scalars(f, {1});
    return LeibnizAlgebra::unchecked_from_table(f, 1, std::move(t));
}

}  // namespace

TEST_CASE("bracket evaluation") {
    CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
    const LeibnizAlgebra& A = L.algebra();
    CHECK(A.bracket_coords(unit_vector(Q(), 3, 0), unit_vector(Q(), 3, 0)) == unit_vector(Q(), 3, 1));
    CHECK(is_zero_vector(A.bracket_coords(unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 0))));
    std::mt19937_64 rng(1);
    CHECK(is_zero_vector(A.bracket_coords(zero_vector(Q(), 3), random_vector(Q(), 3, rng))));

    Element x{&A, scalars(Q(), {1, 2, 0})};
    Element y{&A, scalars(Q(), {1, 0, 0})};
    CHECK(bracket(x, y).coords == scalars(Q(), {0, 1, 0}));

    CyclicAlgebra other = cyclic(Q(), 3, {0, 1});
    Element z{&other.algebra(), scalars(Q(), {1, 0, 0})};
    CHECK_THROWS_AS(bracket(x, z), AlgebraMismatch);
}

TEST_CASE("left Leibniz identity check") {
    CHECK(check_left_leibniz(cyclic(GF(3), 4, {1, 2, 0}).algebra()).ok);
    CHECK(check_left_leibniz(abelian(Q(), 3)).ok);

    LeibnizAlgebra bad = bad_dim1(Q());
    auto result = check_left_leibniz(bad);
    CHECK(!result.ok);
    CHECK(*result.violation == BasisTriple{1, 1, 1});

    LeibnizAlgebra::Tensor t;
    t[{1, 1}] = scalars(Q(), {1});
    CHECK_THROWS_AS(LeibnizAlgebra::from_table(Q(), 1, std::move(t)), BadSpec);
}

TEST_CASE("basis-triple check matches the identity on random triples") {
    std::mt19937_64 rng(2024);
    CyclicAlgebra good = cyclic(GF(5), 4, {0, 3, 2});
    const LeibnizAlgebra& A = good.algebra();
    for (int trial = 0; trial < 1000; ++trial) {
        CoordVec a = random_vector(GF(5), 4, rng);
        CoordVec b = random_vector(GF(5), 4, rng);
        CoordVec c = random_vector(GF(5), 4, rng);
        CoordVec lhs = A.bracket_coords(A.bracket_coords(a, b), c);
        CoordVec rhs = subtract(A.bracket_coords(a, A.bracket_coords(b, c)),
                                A.bracket_coords(b, A.bracket_coords(a, c)));
        CHECK(lhs == rhs);
    }

    // on the broken table a violation must be findable by random search too
    LeibnizAlgebra bad = bad_dim1(GF(2));
    bool found = false;
    for (int trial = 0; trial < 1000 && !found; ++trial) {
        CoordVec a = random_vector(GF(2), 1, rng);
        CoordVec b = random_vector(GF(2), 1, rng);
        CoordVec c = random_vector(GF(2), 1, rng);
        CoordVec lhs = bad.bracket_coords(bad.bracket_coords(a, b), c);
        CoordVec rhs = subtract(bad.bracket_coords(a, bad.bracket_coords(b, c)),
                                bad.bracket_coords(b, bad.bracket_coords(a, c)));
        if (lhs != rhs) found = true;
    }
    CHECK(found);
}

TEST_CASE("centers") {
    SUBCASE("nilpotent cyclic of dimension 3") {
        CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
        Centers z = centers(L.algebra());
        CHECK(z.two_sided == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 2)}));
        CHECK(z.left == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 2)}));
    }
    SUBCASE("invertible-action cyclic has right center spanned by c") {
        CyclicAlgebra L = cyclic(GF(3), 2, {1});
        Centers z = centers(L.algebra());
        CanonicalC c = canonical_c(L);
        CHECK(z.right == Subspace::span(GF(3), 2, {c.c}));
    }
    SUBCASE("abelian centers are everything") {
        LeibnizAlgebra A = abelian(GF(2), 3);
        Centers z = centers(A);
        CHECK(z.left == Subspace::full(GF(2), 3));
        CHECK(z.right == Subspace::full(GF(2), 3));
        CHECK(z.two_sided == Subspace::full(GF(2), 3));
    }
}

TEST_CASE("products of subspaces") {
    CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
    const LeibnizAlgebra& A = L.algebra();
    Subspace full = Subspace::full(Q(), 3);
    Subspace derived = product_subspace(A, full, full);
    CHECK(derived == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 2)}));

    CHECK(product_subspace(A, full, Subspace::zero(Q(), 3)).dim() == 0);

    Subspace span_a1 = Subspace::span(Q(), 3, {unit_vector(Q(), 3, 0)});
    Subspace span_a3 = Subspace::span(Q(), 3, {unit_vector(Q(), 3, 2)});
    CHECK(product_subspace(A, span_a1, span_a3).dim() == 0);  // [a1,a3] = 0 for the nilpotent table
}

TEST_CASE("the span of squares") {
    CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
    CHECK(leib_kernel(L.algebra()) ==
          Subspace::span(Q(), 3, {unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 2)}));

    // any anticommutative table has zero square span: use the cross product
    LeibnizAlgebra::Tensor t;
    t[{1, 2}] = scalars(Q(), {0, 0, 1});
    t[{2, 1}] = scalars(Q(), {0, 0, -1});
    t[{2, 3}] = scalars(Q(), {1, 0, 0});
    t[{3, 2}] = scalars(Q(), {-1, 0, 0});
    t[{3, 1}] = scalars(Q(), {0, 1, 0});
    t[{1, 3}] = scalars(Q(), {0, -1, 0});
    LeibnizAlgebra lie = LeibnizAlgebra::from_table(Q(), 3, std::move(t));
    CHECK(leib_kernel(lie).dim() == 0);

    CyclicAlgebra L2 = cyclic(Q(), 2, {1});
    CHECK(leib_kernel(L2.algebra()) == Subspace::span(Q(), 2, {unit_vector(Q(), 2, 1)}));
}

TEST_CASE("lower central series") {
    SUBCASE("nilpotent cyclic descends one step at a time") {
        CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
        CentralSeries s = lower_central_series(L.algebra());
        REQUIRE(s.terms.size() == 4);
        CHECK(s.terms[0].dim() == 3);
        CHECK(s.terms[1] == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 2)}));
        CHECK(s.terms[2] == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 2)}));
        CHECK(s.terms[3].dim() == 0);
        CHECK(s.stabilized);
    }
    SUBCASE("abelian drops to zero immediately") {
        CentralSeries s = lower_central_series(abelian(Q(), 2));
        REQUIRE(s.terms.size() == 2);
        CHECK(s.terms[1].dim() == 0);
    }
    SUBCASE("invertible action stabilizes at a nonzero term") {
        CyclicAlgebra L = cyclic(Q(), 2, {1});
        CentralSeries s = lower_central_series(L.algebra());
        REQUIRE(s.terms.size() == 3);
        CHECK(s.terms[1] == Subspace::span(Q(), 2, {unit_vector(Q(), 2, 1)}));
        CHECK(s.terms[2] == s.terms[1]);
        CHECK(s.stabilized);
    }
}

TEST_CASE("upper central series") {
    SUBCASE("nilpotent cyclic ascends through the tail spans") {
        CyclicAlgebra L = cyclic(Q(), 3, {0, 0});
        CentralSeries s = upper_central_series(L.algebra());
        REQUIRE(s.terms.size() == 4);
        CHECK(s.terms[0].dim() == 0);
        CHECK(s.terms[1] == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 2)}));
        CHECK(s.terms[2] == Subspace::span(Q(), 3, {unit_vector(Q(), 3, 1), unit_vector(Q(), 3, 2)}));
        CHECK(s.terms[3] == Subspace::full(Q(), 3));
    }
    SUBCASE("abelian jumps to the full space") {
        CentralSeries s = upper_central_series(abelian(GF(2), 2));
        REQUIRE(s.terms.size() == 2);
        CHECK(s.terms[1] == Subspace::full(GF(2), 2));
    }
    SUBCASE("trivial center stabilizes at zero") {
        CyclicAlgebra L = cyclic(Q(), 2, {1});
        CentralSeries s = upper_central_series(L.algebra());
        REQUIRE(s.terms.size() == 2);
        CHECK(s.terms[0].dim() == 0);
        CHECK(s.terms[1].dim() == 0);
    }
}

TEST_CASE("nilpotency") {
    auto n1 = is_nilpotent(cyclic(Q(), 3, {0, 0}).algebra());
    CHECK(n1.nilpotent);
    CHECK(*n1.nil_class == 3);

    auto n2 = is_nilpotent(cyclic(GF(5), 3, {2, 1}).algebra());
    CHECK(!n2.nilpotent);

    auto n3 = is_nilpotent(abelian(Q(), 4));
    CHECK(n3.nilpotent);
    CHECK(*n3.nil_class == 1);
}

TEST_CASE("structural containments hold for assorted tables") {
    std::vector<LeibnizAlgebra> algebras;
    algebras.push_back(cyclic(Q(), 4, {0, 0, 0}).algebra());
    algebras.push_back(cyclic(GF(3), 3, {1, 2}).algebra());
    algebras.push_back(cyclic(GF(2), 4, {0, 1, 1}).algebra());
    algebras.push_back(abelian(GF(5), 3));

    for (const auto& A : algebras) {
        Centers z = centers(A);
        Subspace full = Subspace::full(A.field(), A.dim());

        // the square span sits inside the left annihilator
        CHECK(z.left.contains(leib_kernel(A)));

        // the left center absorbs brackets from the left and dies on the right
        CHECK(z.left.contains(product_subspace(A, full, z.left)));
        CHECK(product_subspace(A, z.left, full).dim() == 0);

        CentralSeries lower = lower_central_series(A);
        for (std::size_t k = 0; k + 1 < lower.terms.size(); ++k) {
            CHECK(lower.terms[k].contains(lower.terms[k + 1]));
            CHECK(is_ideal(A, lower.terms[k + 1]));
        }
        CentralSeries upper = upper_central_series(A);
        for (std::size_t k = 0; k + 1 < upper.terms.size(); ++k) {
            CHECK(upper.terms[k + 1].contains(upper.terms[k]));
        }
        CHECK(upper.terms[1] == z.two_sided);
    }
}

TEST_CASE("the two-sided center is the meet of the one-sided centers") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng);
        for (const FieldDescriptor& f : {Q(), GF(3)}) {
            CyclicAlgebra L = build_cyclic({f, n, random_vector(f, n - 1, rng)});
            Centers z = centers(L.algebra());
            CHECK(z.two_sided == z.left.intersect(z.right));
        }
    }
}

TEST_CASE("change of basis preserves the bracket") {
    std::mt19937_64 rng(5);
    CyclicAlgebra L = cyclic(GF(5), 3, {0, 2});
    Matrix T = random_matrix(GF(5), 3, 3, rng);
    while (T.rref().rank != 3) T = random_matrix(GF(5), 3, 3, rng);
    LeibnizAlgebra moved = change_basis(L.algebra(), T);
    CHECK(check_left_leibniz(moved).ok);

    // brackets computed in the new coordinates agree with the old ones
    Matrix tt = T.transposed();
    for (int trial = 0; trial < 20; ++trial) {
        CoordVec x = random_vector(GF(5), 3, rng);
        CoordVec y = random_vector(GF(5), 3, rng);
        CoordVec via_moved = tt.apply(moved.bracket_coords(x, y));
        CoordVec direct = L.algebra().bracket_coords(tt.apply(x), tt.apply(y));
        CHECK(via_moved == direct);
    }
}
