#include "leibniz/autos.hpp"

#include <algorithm>
#include <cmath>

namespace leibniz {

namespace {

Subspace derived_subalgebra(const LeibnizAlgebra& L) {
    Subspace full = Subspace::full(L.field(), L.dim());
    return product_subspace(L, full, full);
}

void require_cyclic_type(const CyclicAlgebra& L, TypeTag::Variant v, const char* what) {
    if (L.tag().variant != v) {
        throw WrongType(std::string(what) + " requires a type " +
                        (v == TypeTag::Variant::I ? "I" : v == TypeTag::Variant::II ? "II" : "III") +
                        " algebra, got type " + L.tag().to_string());
    }
}

void require_shape(const LeibnizAlgebra& L, const Matrix& f) {
    if (f.rows() != L.dim() || f.cols() != L.dim()) throw AmbientMismatch("map matrix is not n x n");
    if (f.field() != L.field()) throw FieldMismatch("map over a different field");
}

}  // namespace

EndoCheck is_endomorphism(const LeibnizAlgebra& L, const Matrix& f) {
    require_shape(L, f);
    std::size_t n = L.dim();
    std::vector<CoordVec> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(f.column(j));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            CoordVec lhs = f.apply(L.tensor_entry(i, j));
            CoordVec rhs = L.bracket_coords(images[i - 1], images[j - 1]);
            if (lhs != rhs) return EndoCheck{false, std::make_pair(i, j)};
        }
    }
    return EndoCheck{true, std::nullopt};
}

bool is_automorphism(const LeibnizAlgebra& L, const Matrix& f) {
    return is_endomorphism(L, f).ok && f.rref().rank == L.dim();
}

Matrix endo_type1_from_gammas(const CyclicAlgebra& L, const std::vector<Scalar>& gamma) {
    require_cyclic_type(L, TypeTag::Variant::I, "the closed form");
    std::size_t n = L.n();
    if (gamma.size() != n) throw BadSpec("gamma list must have length n");
    const FieldDescriptor& f = L.field();
    Matrix m(f, n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        Scalar power = Scalar::one(f);
        for (std::size_t e = 1; e < j; ++e) power *= gamma[0];
        for (std::size_t i = j; i <= n; ++i) {
            m.set(i - 1, j - 1, power * gamma[i - j]);  // gamma_{i-j+1}
        }
    }
    return m;
}

Matrix endo_type1_by_recurrence(const CyclicAlgebra& L, const std::vector<Scalar>& gamma) {
    require_cyclic_type(L, TypeTag::Variant::I, "the recurrence form");
    std::size_t n = L.n();
    if (gamma.size() != n) throw BadSpec("gamma list must have length n");
    Matrix m(L.field(), n, n);
    CoordVec image = gamma;
    for (std::size_t i = 0; i < n; ++i) m.set(i, 0, gamma[i]);
    for (std::size_t j = 2; j <= n; ++j) {
        image = L.algebra().bracket_coords(gamma, image);  // f(a_j) = [f(a_1), f(a_{j-1})]
        for (std::size_t i = 0; i < n; ++i) m.set(i, j - 1, image[i]);
    }
    return m;
}

bool is_in_S(const CyclicAlgebra& L, const Matrix& f) {
    if (!is_endomorphism(L.algebra(), f).ok) {
        throw NotAnEndomorphism("square-zero membership is defined on endomorphisms");
    }
    bool square_zero = (f * f).is_zero();
    Subspace derived = derived_subalgebra(L.algebra());
    bool image_inside = derived.contains(Subspace::row_space(f.transposed()));
    if (square_zero != image_inside) {
        throw Error("internal: the two square-zero characterizations disagree");
    }
    return square_zero;
}

Scalar theta_scalar(const CyclicAlgebra& L, const Matrix& f) {
    if (!is_automorphism(L.algebra(), f)) {
        throw NotAnAutomorphism("the scalar of the a_1-action is defined on automorphisms");
    }
    // [L,L] is the span of a_2..a_n, so the coefficient in question is the
    // top entry of the first column. It cannot vanish: a map sending a_1
    // into [L,L] kills a_2 and is singular.
    Scalar lambda = f.at(0, 0);
    if (lambda.is_zero()) throw Error("internal: automorphism with vanishing a_1-coefficient");
    return lambda;
}

bool in_subgroup_U(const CyclicAlgebra& L, const Matrix& f) { return theta_scalar(L, f).is_one(); }

Matrix uc_matrix(const FieldDescriptor& f, const std::vector<Scalar>& u) {
    std::size_t n = u.size() + 1;
    Matrix m = Matrix::identity(f, n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = j + 1; i <= n; ++i) {
            m.set(i - 1, j - 1, u[i - j - 1]);  // u_{i-j+1}, stored from index 2
        }
    }
    return m;
}

Matrix dm_matrix(const FieldDescriptor& f, const Scalar& gamma, std::size_t n) {
    Matrix m(f, n, n);
    Scalar power = Scalar::one(f);
    for (std::size_t k = 1; k <= n; ++k) {
        power *= gamma;
        m.set(k - 1, k - 1, power);
    }
    return m;
}

UDDecomposition decompose_UD(const CyclicAlgebra& L, const Matrix& f) {
    require_cyclic_type(L, TypeTag::Variant::I, "the UD decomposition");
    if (!is_automorphism(L.algebra(), f)) {
        throw NotAnAutomorphism("the UD decomposition is defined on automorphisms");
    }
    std::size_t n = L.n();
    Scalar gamma1 = f.at(0, 0);
    Scalar inv = gamma1.inverse();
    std::vector<Scalar> u;
    u.reserve(n - 1);
    for (std::size_t k = 2; k <= n; ++k) u.push_back(f.at(k - 1, 0) * inv);

    if (uc_matrix(L.field(), u) * dm_matrix(L.field(), gamma1, n) != f) {
        throw Error("internal: UD reassembly mismatch");
    }
    return UDDecomposition{std::move(u), gamma1};
}

QuotElement phi_to_unit(const FieldDescriptor& f, const std::vector<Scalar>& u_params) {
    std::size_t n = u_params.size() + 1;
    QuotientRing ring = QuotientRing::x_power_modulus(f, n);
    std::vector<Scalar> coeffs;
    coeffs.reserve(n);
    coeffs.push_back(Scalar::one(f));
    for (const auto& u : u_params) coeffs.push_back(u);
    return QuotElement(ring, Poly::from_coeffs(f, std::move(coeffs)));
}

bool centralizer_D_membership(const CyclicAlgebra& L, const Matrix& f) {
    require_cyclic_type(L, TypeTag::Variant::II, "centralizer membership");
    if (!is_endomorphism(L.algebra(), f).ok) {
        throw NotAnEndomorphism("centralizer membership is defined on endomorphisms");
    }
    CanonicalC c = canonical_c(L);
    return f.apply(c.c) == c.c;
}

QuotientRing action_ring(const CyclicAlgebra& L) {
    return QuotientRing(L.field(), annihilator_polynomial(L));
}

QuotElement d_f_polynomial(const CyclicAlgebra& L, const Matrix& f) {
    require_cyclic_type(L, TypeTag::Variant::II, "the action polynomial");
    if (!is_endomorphism(L.algebra(), f).ok || !centralizer_D_membership(L, f)) {
        throw NotInD("the action polynomial is defined on endomorphisms fixing c");
    }
    std::size_t n = L.n();
    const FieldDescriptor& field = L.field();

    // f(a_2) = beta_0 a_2 + ... + beta_{n-2} a_n; the a_1 component vanishes
    // because endomorphisms keep [L,L] inside itself.
    std::vector<Scalar> beta;
    beta.reserve(n - 1);
    for (std::size_t i = 2; i <= n; ++i) beta.push_back(f.at(i - 1, 1));
    QuotientRing ring = action_ring(L);
    QuotElement d_f(ring, Poly::from_coeffs(field, beta));

    // The same polynomial must act on every basis vector of [L,L].
    CanonicalC c = canonical_c(L);
    Matrix action = d_f.residue().eval_at(c.companion);
    for (std::size_t j = 2; j <= n; ++j) {
        CoordVec expected = action.apply(unit_vector(field, n - 1, j - 2));
        for (std::size_t i = 2; i <= n; ++i) {
            if (f.at(i - 1, j - 1) != expected[i - 2]) {
                throw Error("internal: the action polynomial fails on a basis vector");
            }
        }
        if (!f.at(0, j - 1).is_zero()) {
            throw Error("internal: image of [L,L] leaves [L,L]");
        }
    }
    return d_f;
}

Matrix endo_from_polynomial(const CyclicAlgebra& L, const Poly& g) {
    require_cyclic_type(L, TypeTag::Variant::II, "polynomial-action construction");
    if (g.field() != L.field()) throw FieldMismatch("polynomial over a different field");
    std::size_t n = L.n();
    const FieldDescriptor& field = L.field();

    CanonicalC c = canonical_c(L);
    Matrix action = g.eval_at(c.companion);  // g acting on [L,L] in basis a_2..a_n

    // Assemble in the basis (c, a_2..a_n), then convert to the a-basis.
    Matrix in_c_basis(field, n, n);
    in_c_basis.set(0, 0, Scalar::one(field));
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) in_c_basis.set(i + 1, j + 1, action.at(i, j));

    std::vector<CoordVec> basis_cols;
    basis_cols.push_back(c.c);
    for (std::size_t j = 2; j <= n; ++j) basis_cols.push_back(unit_vector(field, n, j - 1));
    Matrix basis_change = Matrix::from_columns(field, basis_cols);
    return basis_change * in_c_basis * basis_change.inverse();
}

namespace {

void require_oracle_guard(const LeibnizAlgebra& L, bool raise_guard) {
    if (!L.field().is_finite()) throw InfiniteField("the brute-force oracle requires a finite field");
    double bits = static_cast<double>(L.dim() * L.dim()) * std::log2(static_cast<double>(L.field().order()));
    double limit = raise_guard ? 28.0 : 24.0;
    if (bits > limit) {
        throw GuardExceeded("candidate space exceeds the enumeration guard (2^" +
                            std::to_string(static_cast<int>(limit)) + ")");
    }
}

bool next_matrix(std::vector<std::int64_t>& digits, std::int64_t q) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < q) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

EndoEnumeration enumerate_endomorphisms(const LeibnizAlgebra& L, MapKind kind, bool raise_guard) {
    require_oracle_guard(L, raise_guard);
    std::size_t n = L.dim();
    const FieldDescriptor& f = L.field();
    std::int64_t q = f.order();

    std::vector<Scalar> elements;
    elements.reserve(q);
    for (std::int64_t r = 0; r < q; ++r) elements.push_back(Scalar::from_residue(f, r));

    EndoEnumeration out{kind, {}};
    std::vector<std::int64_t> digits(n * n, 0);
    Matrix candidate(f, n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) candidate.set(i, j, elements[digits[i * n + j]]);
        if (!is_endomorphism(L, candidate).ok) continue;
        if (kind == MapKind::automorphisms && candidate.rref().rank != n) continue;
        out.maps.push_back(candidate);
    } while (next_matrix(digits, q));
    return out;
}

std::vector<Matrix> enumerate_uc_matrices(const FieldDescriptor& f, std::size_t n) {
    if (!f.is_finite()) throw InfiniteField("enumeration requires a finite field");
    std::int64_t q = f.order();
    double bits = static_cast<double>(n - 1) * std::log2(static_cast<double>(q));
    if (bits > 24.0) throw GuardExceeded("parameter space exceeds the 2^24 enumeration guard");

    std::vector<Matrix> out;
    std::vector<std::int64_t> digits(n - 1, 0);
    do {
        std::vector<Scalar> u;
        u.reserve(n - 1);
        for (std::int64_t r : digits) u.push_back(Scalar::from_residue(f, r));
        out.push_back(uc_matrix(f, u));
    } while (!digits.empty() && next_matrix(digits, q));
    return out;
}

InducedMap induced_quotient_map(const CyclicAlgebra& L, const Matrix& f, QuotientBlock block) {
    require_cyclic_type(L, TypeTag::Variant::III, "quotient projection");
    if (!is_automorphism(L.algebra(), f)) {
        throw NotAnAutomorphism("quotient projection is defined on automorphisms");
    }
    RebaseResult rebase = rebase_type3(L);
    std::size_t n = L.n();
    std::size_t t = rebase.t;

    // Matrix of f in the d-basis: coordinates transform through T^t.
    Matrix t_transpose = rebase.T.transposed();
    Matrix f_d = t_transpose.inverse() * f * t_transpose;
    LeibnizAlgebra algebra_d = change_basis(L.algebra(), rebase.T);

    std::vector<std::size_t> kept;
    if (block == QuotientBlock::mod_V) {
        for (std::size_t j = 1; j <= t - 1; ++j) kept.push_back(j);
    } else {
        kept.push_back(1);
        for (std::size_t j = t; j <= n; ++j) kept.push_back(j);
    }
    std::vector<bool> keep(n + 1, false);
    for (std::size_t k : kept) keep[k] = true;

    // The factored-out ideal must be stable: columns of dropped coordinates
    // may not reach kept coordinates.
    for (std::size_t j = 1; j <= n; ++j) {
        if (keep[j]) continue;
        for (std::size_t i = 1; i <= n; ++i) {
            if (keep[i] && !f_d.at(i - 1, j - 1).is_zero()) {
                throw IdealNotPreserved("automorphism moves the factored ideal off itself");
            }
        }
    }

    LeibnizAlgebra quotient = quotient_by_coords(algebra_d, kept);
    std::size_t m = kept.size();
    Matrix induced(L.field(), m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) induced.set(a, b, f_d.at(kept[a] - 1, kept[b] - 1));
    return InducedMap{std::move(quotient), std::move(induced)};
}

SubdirectReport subdirect_check(const CyclicAlgebra& L, bool raise_guard) {
    require_cyclic_type(L, TypeTag::Variant::III, "the subdirect check");
    EndoEnumeration autos = enumerate_endomorphisms(L.algebra(), MapKind::automorphisms, raise_guard);
    std::size_t count = autos.maps.size();

    std::vector<Matrix> proj_v, proj_uu;
    proj_v.reserve(count);
    proj_uu.reserve(count);
    LeibnizAlgebra quot_v = induced_quotient_map(L, Matrix::identity(L.field(), L.n()), QuotientBlock::mod_V).quotient;
    LeibnizAlgebra quot_uu =
        induced_quotient_map(L, Matrix::identity(L.field(), L.n()), QuotientBlock::mod_UU).quotient;
    for (const auto& f : autos.maps) {
        proj_v.push_back(induced_quotient_map(L, f, QuotientBlock::mod_V).matrix);
        proj_uu.push_back(induced_quotient_map(L, f, QuotientBlock::mod_UU).matrix);
    }

    SubdirectReport report{};
    report.aut_count = count;

    report.pair_map_injective = true;
    for (std::size_t a = 0; a < count && report.pair_map_injective; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (proj_v[a] == proj_v[b] && proj_uu[a] == proj_uu[b]) {
                report.pair_map_injective = false;
                break;
            }
        }
    }

    report.components_are_automorphisms = true;
    for (std::size_t a = 0; a < count; ++a) {
        if (!is_automorphism(quot_v, proj_v[a]) || !is_automorphism(quot_uu, proj_uu[a])) {
            report.components_are_automorphisms = false;
            break;
        }
    }

    // Composition must project to composition in both coordinates. The
    // composite g∘f acts as the matrix product, and its projection is found
    // by locating the product inside the enumerated group.
    report.projections_homomorphic = true;
    auto find_index = [&](const Matrix& m) -> std::size_t {
        for (std::size_t k = 0; k < count; ++k) {
            if (autos.maps[k] == m) return k;
        }
        return count;
    };
    for (std::size_t a = 0; a < count && report.projections_homomorphic; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            Matrix composite = autos.maps[a] * autos.maps[b];
            std::size_t k = find_index(composite);
            if (k == count || proj_v[k] != proj_v[a] * proj_v[b] || proj_uu[k] != proj_uu[a] * proj_uu[b]) {
                report.projections_homomorphic = false;
                break;
            }
        }
    }

    Matrix id_v = Matrix::identity(L.field(), quot_v.dim());
    Matrix id_uu = Matrix::identity(L.field(), quot_uu.dim());
    report.kernel_mod_V = 0;
    report.kernel_mod_UU = 0;
    report.kernel_intersection = 0;
    for (std::size_t a = 0; a < count; ++a) {
        bool triv_v = proj_v[a] == id_v;
        bool triv_uu = proj_uu[a] == id_uu;
        if (triv_v) ++report.kernel_mod_V;
        if (triv_uu) ++report.kernel_mod_UU;
        if (triv_v && triv_uu) ++report.kernel_intersection;
    }

    auto distinct = [](std::vector<Matrix> list) {
        std::sort(list.begin(), list.end(), [](const Matrix& x, const Matrix& y) { return x.lex_cmp(y) < 0; });
        list.erase(std::unique(list.begin(), list.end()), list.end());
        return list.size();
    };
    report.image_size_mod_V = distinct(proj_v);
    report.image_size_mod_UU = distinct(proj_uu);
    return report;
}

}  // namespace leibniz
