#include <doctest.h>

#include "test_util.hpp"

using namespace leibniz;
using namespace testutil;

namespace {

// Exhaustive membership oracle over GF(p): v lies in the row space iff some
// linear combination of the basis rows reproduces it.
bool contains_by_enumeration(const Subspace& s, const CoordVec& v) {
    const FieldDescriptor& f = s.field();
    std::int64_t q = f.order();
    std::size_t k = s.dim();
    std::vector<std::int64_t> digits(k, 0);
    while (true) {
        CoordVec combo = zero_vector(f, s.ambient_dim());
        for (std::size_t i = 0; i < k; ++i) {
            combo = add(combo, scale(Scalar::from_residue(f, digits[i]), s.basis().row(i)));
        }
        if (combo == v) return true;
        std::size_t i = k;
        bool carried = false;
        while (i-- > 0) {
            if (++digits[i] < q) {
                carried = true;
                break;
            }
            digits[i] = 0;
        }
        if (!carried) return false;
    }
}

}  // namespace

TEST_CASE("rref leaves canonical forms alone") {
    Matrix id = Matrix::identity(GF(2), 3);
    auto r = id.rref();
    CHECK(r.matrix == id);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    Matrix zero(Q(), 2, 2);
    auto rz = zero.rref();
    CHECK(rz.matrix == zero);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref of a rank-1 rational matrix") {
    // hand row-reduction: subtracting twice the first row clears the second
    Matrix m = matrix(Q(), {{1, 2}, {2, 4}});
    auto r = m.rref();
    CHECK(r.matrix == matrix(Q(), {{1, 2}, {0, 0}}));
    CHECK(r.rank == 1);
}

TEST_CASE("matrix inverse") {
    FieldDescriptor f3 = GF(3);
    Matrix id = Matrix::identity(f3, 4);
    CHECK(id.inverse() == id);

    Matrix d = matrix(f3, {{2, 0}, {0, 1}});
    CHECK(d.inverse() == d);  // 2 * 2 = 1 in GF(3)

    Matrix singular = matrix(Q(), {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(singular.inverse(), Singular);

    // the dimension-3 transition matrix of the first nonzero-at-3 rebase;
    // the inverse is hand-computed and double-checked by both products
    Matrix t = matrix(Q(), {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
    Matrix expected = matrix(Q(), {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    CHECK(t.inverse() == expected);
    CHECK(t * expected == Matrix::identity(Q(), 3));
    CHECK(expected * t == Matrix::identity(Q(), 3));
}

TEST_CASE("kernel computations") {
    CHECK(kernel(Matrix::identity(Q(), 3)).dim() == 0);
    CHECK(kernel(Matrix(Q(), 2, 2)) == Subspace::full(Q(), 2));

    // all four vectors of GF(2)^2 checked by hand: (0,0) and (1,1) vanish
    Matrix row = matrix(GF(2), {{1, 1}});
    Subspace k = kernel(row);
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(GF(2), 2, {scalars(GF(2), {1, 1})}));
}

TEST_CASE("subspace operations") {
    FieldDescriptor f = Q();
    Subspace e1 = Subspace::span(f, 2, {scalars(f, {1, 0})});
    Subspace e2 = Subspace::span(f, 2, {scalars(f, {0, 1})});
    CHECK(e1.intersect(e2).dim() == 0);
    CHECK(e1.sum(e2) == Subspace::full(f, 2));

    FieldDescriptor f2 = GF(2);
    Subspace w = Subspace::span(f2, 3, {scalars(f2, {1, 1, 0}), scalars(f2, {0, 0, 1})});
    CHECK(w.contains(scalars(f2, {1, 1, 1})));
    CHECK(!w.contains(scalars(f2, {1, 0, 0})));
    CHECK(contains_by_enumeration(w, scalars(f2, {1, 1, 1})));
    CHECK(!contains_by_enumeration(w, scalars(f2, {1, 0, 0})));

    CHECK_THROWS_AS(e1.sum(Subspace::zero(f, 3)), AmbientMismatch);
}

TEST_CASE("membership agrees with the exhaustive oracle over GF(3)") {
    std::mt19937_64 rng(12345);
    FieldDescriptor f = GF(3);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(f, 2, 4, rng);
        Subspace s = Subspace::row_space(m);
        CoordVec probe = random_vector(f, 4, rng);
        CHECK(s.contains(probe) == contains_by_enumeration(s, probe));
    }
}

TEST_CASE("rref is idempotent and respects rank-nullity") {
    std::mt19937_64 rng(99);
    for (const FieldDescriptor& f : {Q(), GF(2), GF(5)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> dims(1, 5);
            Matrix m = random_matrix(f, dims(rng), dims(rng), rng);
            auto r = m.rref();
            CHECK(r.matrix.rref().matrix == r.matrix);
            CHECK(r.rank + kernel(m).dim() == m.cols());
        }
    }
}

TEST_CASE("subspace canonical form is representation independent") {
    std::mt19937_64 rng(7);
    FieldDescriptor f = GF(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(f, 3, 4, rng);
        Subspace s = Subspace::row_space(m);

        // random invertible row operations do not change the row space
        Matrix ops = random_matrix(f, 3, 3, rng);
        while (ops.rref().rank != 3) ops = random_matrix(f, 3, 3, rng);
        Subspace s2 = Subspace::row_space(ops * m);
        CHECK(s == s2);
    }
}

TEST_CASE("inverse times original is the identity whenever inverse succeeds") {
    std::mt19937_64 rng(41);
    for (const FieldDescriptor& f : {Q(), GF(3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = random_matrix(f, 3, 3, rng);
            if (m.rref().rank != 3) continue;
            CHECK(m.inverse() * m == Matrix::identity(f, 3));
            CHECK(m * m.inverse() == Matrix::identity(f, 3));
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    Matrix m = matrix(Q(), {{1, 2}, {3, 4}});
    auto x = solve(m, scalars(Q(), {5, 6}));
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == scalars(Q(), {5, 6}));

    Matrix deficient = matrix(Q(), {{1, 1}, {1, 1}});
    CHECK(!solve(deficient, scalars(Q(), {0, 1})).has_value());
}
