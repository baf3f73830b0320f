#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

struct BasisTriple {
    std::size_t i, j, k;  // 1-based basis indices
    bool operator==(const BasisTriple&) const = default;
};

struct LeibnizCheck {
    bool ok;
    std::optional<BasisTriple> violation;  // lexicographically first
};

/// Finite-dimensional algebra over an exact field, presented by structure
/// constants: tensor(i,j) = coordinates of [b_i, b_j]. The tensor is stored
/// sparsely; absent entries are zero brackets. Public construction verifies
/// the left Leibniz identity [[a,b],c] = [a,[b,c]] - [b,[a,c]] on all basis
/// triples, which suffices by trilinearity.
class LeibnizAlgebra {
   public:
    using Tensor = std::map<std::pair<std::size_t, std::size_t>, CoordVec>;  // 1-based keys

    /// Validated construction; throws BadSpec naming the first violating
    /// triple when the table is not a left Leibniz algebra.
    static LeibnizAlgebra from_table(const FieldDescriptor& f, std::size_t dim, Tensor tensor);

    /// Skips the identity check. Intended for negative tests and for
    /// internal construction from already-proved tables.
    static LeibnizAlgebra unchecked_from_table(const FieldDescriptor& f, std::size_t dim, Tensor tensor);

    const FieldDescriptor& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Tensor& tensor() const { return tensor_; }

    /// Coordinates of [b_i, b_j]; 1-based.
    CoordVec tensor_entry(std::size_t i, std::size_t j) const;

    /// Bilinear extension of the structure constants to coordinate vectors.
    CoordVec bracket_coords(const CoordVec& x, const CoordVec& y) const;

    /// Matrix of x -> [x, b_j] (columns indexed by the basis).
    Matrix left_bracket_by_basis(std::size_t j) const;

    /// Matrix of x -> [b_j, x].
    Matrix right_bracket_by_basis(std::size_t j) const;

    bool operator==(const LeibnizAlgebra& rhs) const;

   private:
    LeibnizAlgebra(FieldDescriptor f, std::size_t dim, Tensor tensor);

    FieldDescriptor field_;
    std::size_t dim_;
    Tensor tensor_;
};

/// An element tied to its algebra; bracket checks that both sides belong to
/// the same algebra.
struct Element {
    const LeibnizAlgebra* algebra;
    CoordVec coords;
};

Element bracket(const Element& x, const Element& y);

LeibnizCheck check_left_leibniz(const LeibnizAlgebra& L);

struct Centers {
    Subspace left;
    Subspace right;
    Subspace two_sided;
};

/// Left, right and two-sided centers, each as the kernel of the stacked
/// bracket-by-basis maps.
Centers centers(const LeibnizAlgebra& L);

/// Span of [u, v] over basis representatives of A and B.
Subspace product_subspace(const LeibnizAlgebra& L, const Subspace& A, const Subspace& B);

/// Span of all squares [x, x]: generated by the diagonal brackets together
/// with the polarized sums [b_i,b_j] + [b_j,b_i].
Subspace leib_kernel(const LeibnizAlgebra& L);

bool is_ideal(const LeibnizAlgebra& L, const Subspace& W);

struct CentralSeries {
    enum class Kind { lower, upper };
    Kind kind;
    std::vector<Subspace> terms;
    bool stabilized;
};

/// gamma_1 = L, gamma_{k+1} = [L, gamma_k]; stops at the zero term or at the
/// first repetition (which is recorded once).
CentralSeries lower_central_series(const LeibnizAlgebra& L);

/// zeta_0 = 0, zeta_{k+1} = {x : [x,b_j] and [b_j,x] lie in zeta_k for all j},
/// each step one kernel computation; stops at the full space or at the first
/// repetition (recorded once).
CentralSeries upper_central_series(const LeibnizAlgebra& L);

struct Nilpotency {
    bool nilpotent;
    std::optional<std::size_t> nil_class;
};

Nilpotency is_nilpotent(const LeibnizAlgebra& L);

/// Rewrites the structure constants in the basis whose vectors are the rows
/// of T (expressed in the old basis). T must be invertible.
LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const Matrix& T);

/// Quotient of L by the ideal spanned by the coordinate axes NOT in `kept`
/// (1-based, strictly increasing). The dropped span must be an ideal.
LeibnizAlgebra quotient_by_coords(const LeibnizAlgebra& L, const std::vector<std::size_t>& kept);

}  // namespace leibniz

#endif
