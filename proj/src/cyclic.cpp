#include "leibniz/cyclic.hpp"

#include <sstream>

namespace leibniz {

std::string TypeTag::to_string() const {
    switch (variant) {
        case Variant::I:
            return "I";
        case Variant::II:
            return "II";
        case Variant::III:
            return "III(t=" + std::to_string(t) + ")";
    }
    return "?";
}

TypeTag classify(const CyclicSpec& spec) {
    if (spec.n == 0) throw BadSpec("cyclic dimension must be positive");
    if (spec.alpha.size() + 1 != spec.n) throw BadSpec("alpha list must have length n-1");
    std::size_t first_nonzero = 0;
    for (std::size_t i = 2; i <= spec.n; ++i) {
        if (!spec.alpha[i - 2].is_zero()) {
            first_nonzero = i;
            break;
        }
    }
    if (first_nonzero == 0) return TypeTag{TypeTag::Variant::I, 0};
    if (first_nonzero == 2) return TypeTag{TypeTag::Variant::II, 0};
    return TypeTag{TypeTag::Variant::III, first_nonzero};
}

CyclicAlgebra build_cyclic(const CyclicSpec& spec) {
    TypeTag tag = classify(spec);  // also validates n and the alpha length
    const FieldDescriptor& f = spec.field;
    for (const auto& a : spec.alpha) {
        if (a.field() != f) throw BadSpec("alpha coefficient from a different field");
    }
    std::size_t n = spec.n;

    LeibnizAlgebra::Tensor tensor;
    for (std::size_t j = 1; j < n; ++j) {
        tensor[{1, j}] = unit_vector(f, n, j);  // [a_1, a_j] = a_{j+1}
    }
    CoordVec last = zero_vector(f, n);
    for (std::size_t i = 2; i <= n; ++i) last[i - 1] = spec.alpha[i - 2];
    if (!is_zero_vector(last)) tensor[{1, n}] = std::move(last);

    LeibnizAlgebra algebra = LeibnizAlgebra::from_table(f, n, std::move(tensor));
    return CyclicAlgebra(spec, std::move(algebra), tag);
}

CanonicalC canonical_c(const CyclicAlgebra& L) {
    if (L.tag().variant != TypeTag::Variant::II) {
        throw WrongType("canonical c requires a type II algebra, got type " + L.tag().to_string());
    }
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();
    Scalar inv_a2 = L.alpha(2).inverse();

    CoordVec c = zero_vector(f, n);
    c[0] = Scalar::one(f);
    for (std::size_t i = 3; i <= n; ++i) c[i - 2] = inv_a2 * L.alpha(i);
    c[n - 1] = -inv_a2;

    Matrix companion(f, n - 1, n - 1);
    for (std::size_t i = 1; i < n - 1; ++i) companion.set(i, i - 1, Scalar::one(f));
    for (std::size_t i = 2; i <= n; ++i) companion.set(i - 2, n - 2, L.alpha(i));

    // c generates the right center and squares to zero; both follow from
    // the defining relations, so a failure here flags construction bugs.
    if (!is_zero_vector(L.algebra().bracket_coords(c, c))) {
        throw Error("internal: [c,c] != 0 for a type II algebra");
    }
    return CanonicalC{std::move(c), std::move(companion)};
}

Poly annihilator_polynomial(const CyclicAlgebra& L) {
    if (L.tag().variant != TypeTag::Variant::II) {
        throw WrongType("annihilator polynomial requires a type II algebra");
    }
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();
    std::vector<Scalar> coeffs(n, Scalar::zero(f));
    for (std::size_t i = 2; i <= n; ++i) coeffs[i - 2] = L.alpha(i);
    coeffs[n - 1] = -Scalar::one(f);
    return Poly::from_coeffs(f, std::move(coeffs));
}

RebaseResult rebase_type3(const CyclicAlgebra& L) {
    if (L.tag().variant != TypeTag::Variant::III) {
        throw WrongType("rebase requires a type III algebra, got type " + L.tag().to_string());
    }
    const FieldDescriptor& f = L.field();
    std::size_t n = L.n();
    std::size_t t = L.tag().t;
    Scalar inv_at = L.alpha(t).inverse();

    // beta_k = alpha_t^{-1} alpha_{k+1} for t <= k < n, beta_n = -alpha_t^{-1},
    // read off d_{t-1} = alpha_t^{-1}(alpha_t a_{t-1} + ... + alpha_n a_{n-1} - a_n).
    std::vector<Scalar> beta;
    beta.reserve(n - t + 1);
    for (std::size_t k = t; k < n; ++k) beta.push_back(inv_at * L.alpha(k + 1));
    beta.push_back(-inv_at);

    Matrix T(f, n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        T.set(j - 1, j - 1, Scalar::one(f));
        if (j < t) {
            // d_j = a_j + beta_t a_{j+1} + ... + beta_n a_{j + n - t + 1}
            for (std::size_t k = t; k <= n; ++k) {
                T.set(j - 1, j + k - t, beta[k - t]);
            }
        }
    }

    if (T.rref().rank != n) throw Singular("transition matrix is singular");

    // Bracket relations of the new basis: [d_1, d_j] = d_{j+1} for j < t-1,
    // [d_1, d_{t-1}] = 0, and [a_1, d_j] = [d_1, d_j] for j >= t.
    CoordVec d1 = T.row(0);
    CoordVec a1 = unit_vector(f, n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        CoordVec dj = T.row(j - 1);
        CoordVec br = L.algebra().bracket_coords(d1, dj);
        if (j < t - 1) {
            if (br != T.row(j)) throw Error("internal: [d_1, d_j] != d_{j+1} in the rebase");
        } else if (j == t - 1) {
            if (!is_zero_vector(br)) throw Error("internal: [d_1, d_{t-1}] != 0 in the rebase");
        } else {
            if (br != L.algebra().bracket_coords(a1, dj)) {
                throw Error("internal: [d_1, d_j] != [a_1, d_j] for j >= t");
            }
        }
    }

    std::vector<CoordVec> u_rows, uu_rows, v_rows;
    for (std::size_t j = 1; j <= t - 1; ++j) u_rows.push_back(T.row(j - 1));
    for (std::size_t j = 2; j <= t - 1; ++j) uu_rows.push_back(T.row(j - 1));
    for (std::size_t j = t; j <= n; ++j) v_rows.push_back(T.row(j - 1));

    Subspace u_sub = Subspace::span(f, n, u_rows);
    Subspace uu_sub = Subspace::span(f, n, uu_rows);
    Subspace v_sub = Subspace::span(f, n, v_rows);

    if (!is_ideal(L.algebra(), v_sub) || !is_ideal(L.algebra(), uu_sub)) {
        throw Error("internal: rebase blocks are not ideals");
    }
    return RebaseResult{std::move(T), std::move(u_sub), std::move(uu_sub), std::move(v_sub), t, std::move(beta)};
}

OperatorAction::OperatorAction(std::size_t ambient_dim, std::vector<Matrix> operators)
    : ambient_(ambient_dim), operators_(std::move(operators)) {
    if (operators_.empty()) throw BadSpec("operator list must be nonempty");
    const FieldDescriptor& f = operators_.front().field();
    std::vector<CoordVec> flattened;
    for (const auto& op : operators_) {
        if (op.rows() != ambient_ || op.cols() != ambient_) {
            throw BadSpec("operator is not ambient_dim x ambient_dim");
        }
        if (op.field() != f) throw FieldMismatch("operators over different fields");
        CoordVec flat;
        flat.reserve(ambient_ * ambient_);
        for (std::size_t i = 0; i < ambient_; ++i)
            for (std::size_t j = 0; j < ambient_; ++j) flat.push_back(op.at(i, j));
        flattened.push_back(std::move(flat));
    }
    bool all_zero = true;
    for (const auto& op : operators_) {
        if (!op.is_zero()) {
            all_zero = false;
            break;
        }
    }
    // An all-zero list builds an abelian algebra whose structure constants
    // are canonical anyway; any other dependence would make the commutator
    // expansion ambiguous.
    if (all_zero) return;
    Subspace spanned = Subspace::span(f, ambient_ * ambient_, flattened);
    if (spanned.dim() != operators_.size()) {
        throw DependentOperators("operator list is linearly dependent");
    }
}

LeibnizAlgebra from_operator_action(std::size_t a_dim, const Matrix& c_matrix) {
    if (c_matrix.rows() != a_dim || c_matrix.cols() != a_dim) {
        throw BadSpec("operator is not a_dim x a_dim");
    }
    if (c_matrix.rref().rank != a_dim) {
        throw SingularOperator("the acting operator must be invertible");
    }
    const FieldDescriptor& f = c_matrix.field();
    std::size_t n = a_dim + 1;  // basis a_1..a_m, c

    LeibnizAlgebra::Tensor tensor;
    for (std::size_t j = 1; j <= a_dim; ++j) {
        CoordVec image = zero_vector(f, n);
        for (std::size_t i = 0; i < a_dim; ++i) image[i] = c_matrix.at(i, j - 1);
        if (!is_zero_vector(image)) tensor[{n, j}] = std::move(image);
    }
    return LeibnizAlgebra::from_table(f, n, std::move(tensor));
}

LeibnizAlgebra from_lie_action(const OperatorAction& action) {
    const FieldDescriptor& f = action.field();
    std::size_t m = action.ambient_dim();
    std::size_t s = action.operators().size();
    std::size_t n = m + s;  // basis a_1..a_m, f_1..f_s

    // Commutators must expand over the operator basis; solve the flattened
    // linear system for each pair and fail loudly with the first witness.
    std::vector<CoordVec> op_columns;
    for (const auto& op : action.operators()) {
        CoordVec flat;
        flat.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) flat.push_back(op.at(i, j));
        op_columns.push_back(std::move(flat));
    }
    Matrix op_basis = Matrix::from_columns(f, op_columns);

    LeibnizAlgebra::Tensor tensor;
    for (std::size_t i = 1; i <= s; ++i) {
        const Matrix& fi = action.operators()[i - 1];
        for (std::size_t j = 1; j <= s; ++j) {
            const Matrix& fj = action.operators()[j - 1];
            Matrix comm = fi * fj - fj * fi;
            CoordVec flat;
            flat.reserve(m * m);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) flat.push_back(comm.at(r, c));
            auto coeffs = solve(op_basis, flat);
            if (!coeffs) {
                std::ostringstream os;
                os << "commutator of operators " << i << " and " << j << " lies outside their span";
                throw NotClosedUnderCommutator(os.str(), {i, j});
            }
            CoordVec value = zero_vector(f, n);
            for (std::size_t k = 0; k < s; ++k) value[m + k] = (*coeffs)[k];
            if (!is_zero_vector(value)) tensor[{m + i, m + j}] = std::move(value);
        }
    }
    for (std::size_t i = 1; i <= s; ++i) {
        const Matrix& fi = action.operators()[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            CoordVec image = zero_vector(f, n);
            for (std::size_t r = 0; r < m; ++r) image[r] = fi.at(r, j - 1);
            if (!is_zero_vector(image)) tensor[{m + i, j}] = std::move(image);
        }
    }
    return LeibnizAlgebra::from_table(f, n, std::move(tensor));
}

}  // namespace leibniz
