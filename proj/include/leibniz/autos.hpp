#ifndef LEIBNIZ_AUTOS_HPP
#define LEIBNIZ_AUTOS_HPP

#include <optional>
#include <vector>

#include "leibniz/cyclic.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

// A linear map on an algebra is an n x n matrix whose column j holds the
// coordinates of the image of the j-th basis vector.

struct EndoCheck {
    bool ok;
    std::optional<std::pair<std::size_t, std::size_t>> violation;  // first basis pair, 1-based
};

/// f([b_i, b_j]) = [f(b_i), f(b_j)] on all basis pairs, which suffices by
/// bilinearity.
EndoCheck is_endomorphism(const LeibnizAlgebra& L, const Matrix& f);

/// Endomorphism with an invertible matrix.
bool is_automorphism(const LeibnizAlgebra& L, const Matrix& f);

/// Type I closed form: entry (i,j) = gamma_1^{j-1} gamma_{i-j+1} below and on
/// the diagonal, zero above (1-based; gamma has length n). Every type-I
/// endomorphism arises this way.
Matrix endo_type1_from_gammas(const CyclicAlgebra& L, const std::vector<Scalar>& gamma);

/// Builds the same matrix through the defining recurrence instead: the first
/// column is gamma and column j+1 holds [f(a_1), f(a_j)]. Exists as an
/// independent cross-check of the closed form.
Matrix endo_type1_by_recurrence(const CyclicAlgebra& L, const std::vector<Scalar>& gamma);

/// Membership in the square-zero ideal S: f composed with itself vanishes,
/// equivalently the image lies inside [L,L]. Both characterizations are
/// evaluated and must agree.
bool is_in_S(const CyclicAlgebra& L, const Matrix& f);

/// The unique scalar with f(a_1) - lambda a_1 in [L,L]; nonzero for every
/// automorphism of a cyclic algebra (any type).
Scalar theta_scalar(const CyclicAlgebra& L, const Matrix& f);

/// theta_scalar(f) == 1.
bool in_subgroup_U(const CyclicAlgebra& L, const Matrix& f);

struct UDDecomposition {
    std::vector<Scalar> u_params;  // gamma_k / gamma_1 for k = 2..n
    Scalar d_scalar;               // gamma_1
};

/// Factors a type-I automorphism as the unitriangular part times the
/// diagonal part, M = M(u) D(gamma_1); the reassembled product is verified
/// to equal the input exactly.
UDDecomposition decompose_UD(const CyclicAlgebra& L, const Matrix& f);

/// The unitriangular Toeplitz matrix M(u): ones on the diagonal, u_{i-j+1}
/// at entry (i,j) below it. u lists u_2..u_n.
Matrix uc_matrix(const FieldDescriptor& f, const std::vector<Scalar>& u);

/// The diagonal matrix D(gamma) = diag(gamma, gamma^2, ..., gamma^n).
Matrix dm_matrix(const FieldDescriptor& f, const Scalar& gamma, std::size_t n);

/// The unit 1 + u_2 z + u_3 z^2 + ... + u_n z^{n-1} of F[X]/X^n F[X]
/// attached to a unitriangular matrix; multiplicative in the matrix product.
QuotElement phi_to_unit(const FieldDescriptor& f, const std::vector<Scalar>& u_params);

/// Type II: does the endomorphism fix the canonical element c?
bool centralizer_D_membership(const CyclicAlgebra& L, const Matrix& f);

/// Type II: the residue class d_f of F[X]/a(X)F[X] with f acting as d_f(X)
/// on [L,L]; read off the image of a_2 and verified on the whole basis.
QuotElement d_f_polynomial(const CyclicAlgebra& L, const Matrix& f);

/// The quotient ring F[X]/a(X)F[X] that carries the type-II module action.
QuotientRing action_ring(const CyclicAlgebra& L);

/// Type II: the endomorphism acting as g evaluated at the companion matrix
/// on [L,L] and fixing c. Lands in the centralizer of c by construction.
Matrix endo_from_polynomial(const CyclicAlgebra& L, const Poly& g);

inline constexpr std::uint64_t kOracleGuard = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kOracleGuardRaised = std::uint64_t{1} << 28;

enum class MapKind { endomorphisms, automorphisms };

struct EndoEnumeration {
    MapKind kind;
    std::vector<Matrix> maps;  // lexicographic in the flattened entry sequence
};

/// Brute-force oracle: filters every n x n matrix over a finite field.
/// Guard: q^(n^2) <= 2^24, or 2^28 with raise_guard.
EndoEnumeration enumerate_endomorphisms(const LeibnizAlgebra& L, MapKind kind, bool raise_guard = false);

/// All unitriangular Toeplitz matrices M(u) over a finite field, in
/// lexicographic order of u.
std::vector<Matrix> enumerate_uc_matrices(const FieldDescriptor& f, std::size_t n);

enum class QuotientBlock { mod_V, mod_UU };

struct InducedMap {
    LeibnizAlgebra quotient;  // structure constants in the projected d-basis
    Matrix matrix;
};

/// Type III: the action an automorphism induces on L/V (a type-I cyclic
/// algebra) or on L/[U,U] (a type-II cyclic algebra), written in the
/// projected d-basis. Throws IdealNotPreserved if the map fails to stabilize
/// the ideal being factored out.
InducedMap induced_quotient_map(const CyclicAlgebra& L, const Matrix& f, QuotientBlock block);

struct SubdirectReport {
    std::size_t aut_count;
    bool pair_map_injective;
    bool projections_homomorphic;
    bool components_are_automorphisms;
    std::size_t kernel_mod_V;        // automorphisms inducing the identity on L/V
    std::size_t kernel_mod_UU;
    std::size_t kernel_intersection; // 1 exactly when the pair map is injective
    std::size_t image_size_mod_V;
    std::size_t image_size_mod_UU;

    bool ok() const {
        return pair_map_injective && projections_homomorphic && components_are_automorphisms &&
               kernel_intersection == 1;
    }
};

/// Type III: enumerates the automorphism group, projects every member onto
/// the two quotient blocks, and checks that the pair map embeds the group
/// into the product of the two quotient automorphism groups.
SubdirectReport subdirect_check(const CyclicAlgebra& L, bool raise_guard = false);

}  // namespace leibniz

#endif
