#ifndef LEIBNIZ_CYCLIC_HPP
#define LEIBNIZ_CYCLIC_HPP

#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

/// Defining data of a cyclic algebra: dimension n and the coefficients of
/// [a_1, a_n] = alpha_2 a_2 + ... + alpha_n a_n. The alpha list is dense of
/// length n-1 and 2-based: alpha(i) is the coefficient of a_i.
struct CyclicSpec {
    FieldDescriptor field;
    std::size_t n;
    std::vector<Scalar> alpha;  // alpha[k] = alpha_{k+2}
};

/// The three-way split: I when every alpha_i vanishes, II when alpha_2 is
/// nonzero, III otherwise, with t the first index carrying a nonzero
/// coefficient (then t >= 3).
struct TypeTag {
    enum class Variant { I, II, III };
    Variant variant;
    std::size_t t = 0;  // set for III only

    bool operator==(const TypeTag&) const = default;
    std::string to_string() const;
};

TypeTag classify(const CyclicSpec& spec);

class CyclicAlgebra {
   public:
    const CyclicSpec& spec() const { return spec_; }
    const LeibnizAlgebra& algebra() const { return algebra_; }
    const TypeTag& tag() const { return tag_; }

    const FieldDescriptor& field() const { return spec_.field; }
    std::size_t n() const { return spec_.n; }

    /// alpha_i for 2 <= i <= n.
    const Scalar& alpha(std::size_t i) const { return spec_.alpha.at(i - 2); }

    friend CyclicAlgebra build_cyclic(const CyclicSpec& spec);

   private:
    CyclicAlgebra(CyclicSpec spec, LeibnizAlgebra algebra, TypeTag tag)
        : spec_(std::move(spec)), algebra_(std::move(algebra)), tag_(tag) {}

    CyclicSpec spec_;
    LeibnizAlgebra algebra_;
    TypeTag tag_;
};

/// Builds the structure constants a_{j+1} = [a_1, a_j] (j < n) and
/// [a_1, a_n] = sum alpha_i a_i, verifies the Leibniz identity, and tags the
/// type.
CyclicAlgebra build_cyclic(const CyclicSpec& spec);

struct CanonicalC {
    CoordVec c;        // coordinates in the a-basis
    Matrix companion;  // matrix of b -> [c, b] on [L,L] in the basis a_2..a_n
};

/// Type II only: c = alpha_2^{-1}(alpha_2 a_1 + ... + alpha_n a_{n-1} - a_n),
/// the canonical generator of the right center, plus the companion matrix of
/// left multiplication by c on [L,L] (subdiagonal ones, last column the
/// alpha coefficients). The companion matrix is always invertible here.
CanonicalC canonical_c(const CyclicAlgebra& L);

/// The annihilator polynomial of the type-II module action:
/// alpha_2 + alpha_3 X + ... + alpha_n X^{n-2} - X^{n-1}.
Poly annihilator_polynomial(const CyclicAlgebra& L);

struct RebaseResult {
    Matrix T;                   // row i = coordinates of d_i in the a-basis
    Subspace U_sub;             // span{d_1..d_{t-1}}
    Subspace UU_sub;            // span{d_2..d_{t-1}}, an ideal
    Subspace V_sub;             // span{d_t..d_n}, an ideal
    std::size_t t;
    std::vector<Scalar> beta;   // beta_t..beta_n
};

/// Type III only: the d-basis cascade starting from
/// d_{t-1} = alpha_t^{-1}(alpha_t a_{t-1} + ... + alpha_n a_{n-1} - a_n),
/// shifting the same beta pattern down to d_1 and keeping d_j = a_j for
/// j >= t. Verifies the bracket relations and the ideal properties before
/// returning.
RebaseResult rebase_type3(const CyclicAlgebra& L);

/// A tuple of linearly independent m x m matrices whose span is closed under
/// the commutator. Construction rejects dependent operator lists; closure is
/// checked later, by from_lie_action.
class OperatorAction {
   public:
    OperatorAction(std::size_t ambient_dim, std::vector<Matrix> operators);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Matrix>& operators() const { return operators_; }
    const FieldDescriptor& field() const { return operators_.front().field(); }

   private:
    std::size_t ambient_;
    std::vector<Matrix> operators_;
};

struct NotClosedUnderCommutator : Error {
    NotClosedUnderCommutator(std::string msg, std::pair<std::size_t, std::size_t> witness)
        : Error(std::move(msg)), pair(witness) {}
    std::pair<std::size_t, std::size_t> pair;  // 1-based operator indices
};

/// The algebra A + Fc on basis (a_1..a_m, c) with [c, a] = c_matrix * a and
/// every other bracket zero. Requires c_matrix invertible.
LeibnizAlgebra from_operator_action(std::size_t a_dim, const Matrix& c_matrix);

/// The algebra A + S on basis (a_1..a_m, f_1..f_s) with [f, a] = f(a) and
/// [f, g] the commutator expanded over the operator basis.
LeibnizAlgebra from_lie_action(const OperatorAction& action);

}  // namespace leibniz

#endif
