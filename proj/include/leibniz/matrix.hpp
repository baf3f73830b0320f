#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using CoordVec = std::vector<Scalar>;

struct RrefResult;

/// Dense row-major matrix over one field. Indices are 0-based; the 1-based
/// conventions of the file formats are translated at the boundary.
class Matrix {
   public:
    Matrix(const FieldDescriptor& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldDescriptor& f, std::size_t n);
    static Matrix from_rows(const FieldDescriptor& f, const std::vector<CoordVec>& rows);
    static Matrix from_columns(const FieldDescriptor& f, const std::vector<CoordVec>& cols);

    const FieldDescriptor& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar value);

    CoordVec row(std::size_t i) const;
    CoordVec column(std::size_t j) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transposed() const;
    CoordVec apply(const CoordVec& v) const;  // matrix * column vector

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    /// -1 / 0 / 1 lexicographic comparison of the flattened entry sequence.
    int lex_cmp(const Matrix& rhs) const;

    /// Unique reduced row-echelon form. Pivoting is deterministic: leftmost
    /// nonzero column, first nonzero row.
    RrefResult rref() const;

    std::size_t rank() const;
    Matrix inverse() const;  // throws Singular

    std::string to_string() const;

   private:
    FieldDescriptor field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// A subspace of F^n held in its unique canonical form: the RREF basis of
/// the row space with zero rows dropped. Equality is a grid comparison.
class Subspace {
   public:
    static Subspace zero(const FieldDescriptor& f, std::size_t ambient);
    static Subspace full(const FieldDescriptor& f, std::size_t ambient);
    static Subspace span(const FieldDescriptor& f, std::size_t ambient, const std::vector<CoordVec>& vectors);
    static Subspace row_space(const Matrix& m);

    const FieldDescriptor& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }

    /// RREF basis, one row per basis vector; zero subspace has 0 rows.
    const Matrix& basis() const { return basis_; }

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool contains(const CoordVec& v) const;
    bool contains(const Subspace& other) const;

    /// Image of this subspace under the linear map given by `m` acting on
    /// column vectors.
    Subspace image_under(const Matrix& m) const;

    /// Rows form a basis of {x : <r, x> = 0 for all rows r of basis()};
    /// used to express membership as linear constraints.
    Matrix constraint_matrix() const;

    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

   private:
    Subspace(FieldDescriptor f, std::size_t ambient, Matrix basis);

    FieldDescriptor field_;
    std::size_t ambient_;
    Matrix basis_;
};

/// Solution space of m x = 0 (x a column vector), canonicalized.
Subspace kernel(const Matrix& m);

/// Solves m x = rhs; empty optional when inconsistent.
std::optional<CoordVec> solve(const Matrix& m, const CoordVec& rhs);

CoordVec zero_vector(const FieldDescriptor& f, std::size_t n);
CoordVec unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t index);
CoordVec add(const CoordVec& a, const CoordVec& b);
CoordVec subtract(const CoordVec& a, const CoordVec& b);
CoordVec scale(const Scalar& s, const CoordVec& v);
bool is_zero_vector(const CoordVec& v);

std::string vector_to_string(const CoordVec& v);

}  // namespace leibniz

#endif
