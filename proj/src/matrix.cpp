#include "leibniz/matrix.hpp"

#include <sstream>

namespace leibniz {

Matrix::Matrix(const FieldDescriptor& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldDescriptor& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& f, const std::vector<CoordVec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw AmbientMismatch("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& f, const std::vector<CoordVec>& cols) {
    std::size_t rows = cols.empty() ? 0 : cols.front().size();
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw AmbientMismatch("ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (value.field() != field_) throw FieldMismatch("matrix entry from a different field");
    entries_[i * cols_ + j] = std::move(value);
}

CoordVec Matrix::row(std::size_t i) const {
    CoordVec r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

CoordVec Matrix::column(std::size_t j) const {
    CoordVec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("matrix product across fields");
    if (cols_ != rhs.rows_) throw AmbientMismatch("inner dimensions differ");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.entries_[i * out.cols_ + j] += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("matrix sum across fields");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw AmbientMismatch("shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("matrix difference across fields");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw AmbientMismatch("shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

CoordVec Matrix::apply(const CoordVec& v) const {
    if (v.size() != cols_) throw AmbientMismatch("vector length != column count");
    CoordVec out(rows_, Scalar::zero(field_));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

int Matrix::lex_cmp(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw AmbientMismatch("lex_cmp shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int c = entries_[i].cmp(rhs.entries_[i]);
        if (c != 0) return c;
    }
    return 0;
}

RrefResult Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t found = rows_;
        for (std::size_t r = pivot_row; r < rows_; ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows_) continue;
        if (found != pivot_row) {
            for (std::size_t j = 0; j < cols_; ++j) {
                Scalar tmp = m.at(pivot_row, j);
                m.set(pivot_row, j, m.at(found, j));
                m.set(found, j, tmp);
            }
        }
        Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.set(pivot_row, j, m.at(pivot_row, j) * inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            Scalar factor = m.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                m.set(r, j, m.at(r, j) - factor * m.at(pivot_row, j));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw AmbientMismatch("inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, Scalar::one(field_));
    }
    RrefResult r = aug.rref();
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= r.pivots.size() || r.pivots[i] != i) {
            throw Singular("matrix has rank below its dimension");
        }
    }
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.matrix.at(i, n + j));
    return inv;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

Subspace::Subspace(FieldDescriptor f, std::size_t ambient, Matrix basis)
    : field_(f), ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::zero(const FieldDescriptor& f, std::size_t ambient) {
    return Subspace(f, ambient, Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldDescriptor& f, std::size_t ambient) {
    return Subspace(f, ambient, Matrix::identity(f, ambient));
}

Subspace Subspace::span(const FieldDescriptor& f, std::size_t ambient, const std::vector<CoordVec>& vectors) {
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw AmbientMismatch("spanning vector of wrong length");
    }
    return row_space(Matrix::from_rows(f, vectors.empty() ? std::vector<CoordVec>{CoordVec(ambient, Scalar::zero(f))}
                                                          : vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult r = m.rref();
    Matrix basis(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis.set(i, j, r.matrix.at(i, j));
    return Subspace(m.field(), m.cols(), std::move(basis));
}

Subspace Subspace::sum(const Subspace& other) const {
    if (field_ != other.field_) throw FieldMismatch("subspace sum across fields");
    if (ambient_ != other.ambient_) throw AmbientMismatch("subspace sum across ambient dimensions");
    Matrix stacked(field_, dim() + other.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.set(i, j, basis_.at(i, j));
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.set(dim() + i, j, other.basis_.at(i, j));
    return row_space(stacked);
}

Matrix Subspace::constraint_matrix() const {
    // Rows of basis_ span W; kernel(basis_) = W-perp, and W = (W-perp)-perp
    // since the standard bilinear form is non-degenerate in every dimension.
    return kernel(basis_).basis();
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (field_ != other.field_) throw FieldMismatch("subspace intersection across fields");
    if (ambient_ != other.ambient_) throw AmbientMismatch("subspace intersection across ambient dimensions");
    Matrix c1 = constraint_matrix();
    Matrix c2 = other.constraint_matrix();
    Matrix stacked(field_, c1.rows() + c2.rows(), ambient_);
    for (std::size_t i = 0; i < c1.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.set(i, j, c1.at(i, j));
    for (std::size_t i = 0; i < c2.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.set(c1.rows() + i, j, c2.at(i, j));
    return kernel(stacked);
}

bool Subspace::contains(const CoordVec& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("membership test across ambient dimensions");
    if (is_zero_vector(v)) return true;
    Matrix stacked(field_, dim() + 1, ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.set(i, j, basis_.at(i, j));
    for (std::size_t j = 0; j < ambient_; ++j) stacked.set(dim(), j, v[j]);
    return stacked.rref().rank == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw AmbientMismatch("membership test across ambient dimensions");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

Subspace Subspace::image_under(const Matrix& m) const {
    if (m.cols() != ambient_) throw AmbientMismatch("map domain != ambient dimension");
    std::vector<CoordVec> images;
    images.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) images.push_back(m.apply(basis_.row(i)));
    return span(field_, m.rows(), images);
}

bool Subspace::operator==(const Subspace& rhs) const {
    return field_ == rhs.field_ && ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::string Subspace::to_string() const {
    if (dim() == 0) return "<0>";
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << vector_to_string(basis_.row(i));
    }
    os << "}";
    return os.str();
}

Subspace kernel(const Matrix& m) {
    RrefResult r = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<CoordVec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        CoordVec v(m.cols(), Scalar::zero(m.field()));
        v[free_col] = Scalar::one(m.field());
        for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
            v[r.pivots[pi]] = -r.matrix.at(pi, free_col);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), basis);
}

std::optional<CoordVec> solve(const Matrix& m, const CoordVec& rhs) {
    if (rhs.size() != m.rows()) throw AmbientMismatch("rhs length != row count");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), rhs[i]);
    }
    RrefResult r = aug.rref();
    for (std::size_t p : r.pivots) {
        if (p == m.cols()) return std::nullopt;  // pivot in the rhs column
    }
    CoordVec x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
        x[r.pivots[pi]] = r.matrix.at(pi, m.cols());
    }
    return x;
}

CoordVec zero_vector(const FieldDescriptor& f, std::size_t n) { return CoordVec(n, Scalar::zero(f)); }

CoordVec unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t index) {
    CoordVec v(n, Scalar::zero(f));
    v.at(index) = Scalar::one(f);
    return v;
}

CoordVec add(const CoordVec& a, const CoordVec& b) {
    if (a.size() != b.size()) throw AmbientMismatch("vector sum length mismatch");
    CoordVec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

CoordVec subtract(const CoordVec& a, const CoordVec& b) {
    if (a.size() != b.size()) throw AmbientMismatch("vector difference length mismatch");
    CoordVec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

CoordVec scale(const Scalar& s, const CoordVec& v) {
    CoordVec out = v;
    for (auto& e : out) e *= s;
    return out;
}

bool is_zero_vector(const CoordVec& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

std::string vector_to_string(const CoordVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    out += ")";
    return out;
}

}  // namespace leibniz
