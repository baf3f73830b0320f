#include "leibniz/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(FieldDescriptor f, std::size_t dim, Tensor tensor)
    : field_(f), dim_(dim), tensor_(std::move(tensor)) {}

LeibnizAlgebra LeibnizAlgebra::unchecked_from_table(const FieldDescriptor& f, std::size_t dim, Tensor tensor) {
    if (dim == 0) throw BadSpec("algebra dimension must be positive");
    for (auto it = tensor.begin(); it != tensor.end();) {
        const auto& [key, value] = *it;
        if (key.first < 1 || key.first > dim || key.second < 1 || key.second > dim) {
            throw BadSpec("tensor index out of range");
        }
        if (value.size() != dim) throw BadSpec("tensor value of wrong length");
        for (const auto& c : value) {
            if (c.field() != f) throw FieldMismatch("tensor value from a different field");
        }
        if (is_zero_vector(value)) {
            it = tensor.erase(it);  // keep the sparse form canonical
        } else {
            ++it;
        }
    }
    return LeibnizAlgebra(f, dim, std::move(tensor));
}

LeibnizAlgebra LeibnizAlgebra::from_table(const FieldDescriptor& f, std::size_t dim, Tensor tensor) {
    LeibnizAlgebra L = unchecked_from_table(f, dim, std::move(tensor));
    LeibnizCheck check = check_left_leibniz(L);
    if (!check.ok) {
        std::ostringstream os;
        os << "table violates the left Leibniz identity at basis triple (" << check.violation->i << ", "
           << check.violation->j << ", " << check.violation->k << ")";
        throw BadSpec(os.str());
    }
    return L;
}

CoordVec LeibnizAlgebra::tensor_entry(std::size_t i, std::size_t j) const {
    auto it = tensor_.find({i, j});
    if (it == tensor_.end()) return zero_vector(field_, dim_);
    return it->second;
}

CoordVec LeibnizAlgebra::bracket_coords(const CoordVec& x, const CoordVec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw AmbientMismatch("coordinate length != algebra dimension");
    CoordVec out = zero_vector(field_, dim_);
    for (const auto& [key, value] : tensor_) {
        const Scalar& xi = x[key.first - 1];
        if (xi.is_zero()) continue;
        const Scalar& yj = y[key.second - 1];
        if (yj.is_zero()) continue;
        Scalar factor = xi * yj;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (!value[k].is_zero()) out[k] += factor * value[k];
        }
    }
    return out;
}

Matrix LeibnizAlgebra::left_bracket_by_basis(std::size_t j) const {
    std::vector<CoordVec> cols;
    cols.reserve(dim_);
    for (std::size_t i = 1; i <= dim_; ++i) cols.push_back(tensor_entry(i, j));
    return Matrix::from_columns(field_, cols);
}

Matrix LeibnizAlgebra::right_bracket_by_basis(std::size_t j) const {
    std::vector<CoordVec> cols;
    cols.reserve(dim_);
    for (std::size_t i = 1; i <= dim_; ++i) cols.push_back(tensor_entry(j, i));
    return Matrix::from_columns(field_, cols);
}

bool LeibnizAlgebra::operator==(const LeibnizAlgebra& rhs) const {
    return field_ == rhs.field_ && dim_ == rhs.dim_ && tensor_ == rhs.tensor_;
}

Element bracket(const Element& x, const Element& y) {
    if (x.algebra != y.algebra && !(*x.algebra == *y.algebra)) {
        throw AlgebraMismatch("bracket of elements from different algebras");
    }
    return Element{x.algebra, x.algebra->bracket_coords(x.coords, y.coords)};
}

LeibnizCheck check_left_leibniz(const LeibnizAlgebra& L) {
    std::size_t n = L.dim();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            CoordVec bij = L.tensor_entry(i, j);
            for (std::size_t k = 1; k <= n; ++k) {
                CoordVec lhs = L.bracket_coords(bij, unit_vector(L.field(), n, k - 1));
                CoordVec rhs = subtract(
                    L.bracket_coords(unit_vector(L.field(), n, i - 1), L.tensor_entry(j, k)),
                    L.bracket_coords(unit_vector(L.field(), n, j - 1), L.tensor_entry(i, k)));
                if (lhs != rhs) return LeibnizCheck{false, BasisTriple{i, j, k}};
            }
        }
    }
    return LeibnizCheck{true, std::nullopt};
}

namespace {

Matrix stack(const std::vector<Matrix>& blocks, const FieldDescriptor& f, std::size_t cols) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.rows();
    Matrix out(f, total, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out.set(at + i, j, b.at(i, j));
        at += b.rows();
    }
    return out;
}

}  // namespace

Centers centers(const LeibnizAlgebra& L) {
    std::size_t n = L.dim();
    std::vector<Matrix> left_blocks, right_blocks, both;
    for (std::size_t j = 1; j <= n; ++j) {
        left_blocks.push_back(L.left_bracket_by_basis(j));
        right_blocks.push_back(L.right_bracket_by_basis(j));
    }
    both = left_blocks;
    both.insert(both.end(), right_blocks.begin(), right_blocks.end());

    Subspace left = kernel(stack(left_blocks, L.field(), n));
    Subspace right = kernel(stack(right_blocks, L.field(), n));
    Subspace two_sided = kernel(stack(both, L.field(), n));
    return Centers{std::move(left), std::move(right), std::move(two_sided)};
}

Subspace product_subspace(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B) {
    if (A.ambient_dim() != L.dim() || B.ambient_dim() != L.dim()) {
        throw AmbientMismatch("subspace ambient dimension != algebra dimension");
    }
    std::vector<CoordVec> gens;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < B.dim(); ++j) {
            gens.push_back(L.bracket_coords(A.basis().row(i), B.basis().row(j)));
        }
    }
    return Subspace::span(L.field(), L.dim(), gens);
}

Subspace leib_kernel(const LeibnizAlgebra& L) {
    std::size_t n = L.dim();
    std::vector<CoordVec> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(L.tensor_entry(i, i));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            gens.push_back(add(L.tensor_entry(i, j), L.tensor_entry(j, i)));
        }
    }
    return Subspace::span(L.field(), n, gens);
}

bool is_ideal(const LeibnizAlgebra& L, const Subspace& W) {
    Subspace full = Subspace::full(L.field(), L.dim());
    return W.contains(product_subspace(L, full, W)) && W.contains(product_subspace(L, W, full));
}

CentralSeries lower_central_series(const LeibnizAlgebra& L) {
    Subspace full = Subspace::full(L.field(), L.dim());
    std::vector<Subspace> terms{full};
    while (true) {
        if (terms.back().dim() == 0) break;  // zero is absorbing
        Subspace next = product_subspace(L, full, terms.back());
        bool repeat = next == terms.back();
        terms.push_back(std::move(next));
        if (repeat) break;
    }
    return CentralSeries{CentralSeries::Kind::lower, std::move(terms), true};
}

CentralSeries upper_central_series(const LeibnizAlgebra& L) {
    std::size_t n = L.dim();
    std::vector<Subspace> terms{Subspace::zero(L.field(), n)};
    while (true) {
        if (terms.back().dim() == n) break;  // full space is absorbing
        // x lies in the next term iff C * [x, b_j] = 0 and C * [b_j, x] = 0
        // for all j, where C is the constraint matrix of the current term.
        Matrix constraints = terms.back().constraint_matrix();
        std::vector<Matrix> blocks;
        for (std::size_t j = 1; j <= n; ++j) {
            blocks.push_back(constraints * L.left_bracket_by_basis(j));
            blocks.push_back(constraints * L.right_bracket_by_basis(j));
        }
        Subspace next = kernel(stack(blocks, L.field(), n));
        bool repeat = next == terms.back();
        terms.push_back(std::move(next));
        if (repeat) break;
    }
    return CentralSeries{CentralSeries::Kind::upper, std::move(terms), true};
}

Nilpotency is_nilpotent(const LeibnizAlgebra& L) {
    CentralSeries series = lower_central_series(L);
    if (series.terms.back().dim() != 0) return Nilpotency{false, std::nullopt};
    // terms = gamma_1 .. gamma_m with gamma_m = 0; the class c satisfies
    // gamma_{c+1} = 0, gamma_c != 0.
    return Nilpotency{true, series.terms.size() - 1};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const Matrix& T) {
    std::size_t n = L.dim();
    if (T.rows() != n || T.cols() != n) throw AmbientMismatch("basis matrix must be n x n");
    // Row i of T holds the old coordinates of the new basis vector h_i, so
    // old coordinates = T^t * new coordinates.
    Matrix t_transpose = T.transposed();
    Matrix to_new = t_transpose.inverse();

    LeibnizAlgebra::Tensor tensor;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            CoordVec value = to_new.apply(L.bracket_coords(T.row(i - 1), T.row(j - 1)));
            if (!is_zero_vector(value)) tensor[{i, j}] = std::move(value);
        }
    }
    return LeibnizAlgebra::unchecked_from_table(L.field(), n, std::move(tensor));
}

LeibnizAlgebra quotient_by_coords(const LeibnizAlgebra& L, const std::vector<std::size_t>& kept) {
    std::size_t n = L.dim();
    std::vector<bool> keep(n + 1, false);
    for (std::size_t k : kept) {
        if (k < 1 || k > n) throw BadSpec("kept index out of range");
        keep[k] = true;
    }
    std::vector<CoordVec> dropped_gens;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!keep[k]) dropped_gens.push_back(unit_vector(L.field(), n, k - 1));
    }
    Subspace dropped = Subspace::span(L.field(), n, dropped_gens);
    if (!is_ideal(L, dropped)) {
        throw BadSpec("dropped coordinate span is not an ideal; quotient undefined");
    }

    std::size_t m = kept.size();
    std::map<std::size_t, std::size_t> position;  // old index -> quotient index
    for (std::size_t q = 0; q < m; ++q) position[kept[q]] = q;

    LeibnizAlgebra::Tensor tensor;
    for (std::size_t qi = 0; qi < m; ++qi) {
        for (std::size_t qj = 0; qj < m; ++qj) {
            CoordVec full = L.tensor_entry(kept[qi], kept[qj]);
            CoordVec value = zero_vector(L.field(), m);
            for (std::size_t k = 1; k <= n; ++k) {
                if (keep[k]) value[position[k]] = full[k - 1];
            }
            if (!is_zero_vector(value)) tensor[{qi + 1, qj + 1}] = std::move(value);
        }
    }
    return LeibnizAlgebra::from_table(L.field(), m, std::move(tensor));
}

}  // namespace leibniz
