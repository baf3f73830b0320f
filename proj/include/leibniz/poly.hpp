#ifndef LEIBNIZ_POLY_HPP
#define LEIBNIZ_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Univariate polynomial with coefficients stored in ascending degree and
/// normalized (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
   public:
    static Poly zero(const FieldDescriptor& f);
    static Poly one(const FieldDescriptor& f);
    static Poly x(const FieldDescriptor& f);
    static Poly constant(Scalar c);
    static Poly from_coeffs(const FieldDescriptor& f, std::vector<Scalar> coeffs);

    /// X^n with n >= 0.
    static Poly x_power(const FieldDescriptor& f, std::size_t n);

    /// Parses a comma-separated ascending coefficient list in the scalar
    /// text syntax, e.g. "1,1,-1" for 1 + X - X^2.
    static Poly parse(const FieldDescriptor& f, std::string_view text);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of X^k; zero beyond the degree.
    Scalar coeff(std::size_t k) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading() const;  // requires nonzero

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly scaled(const Scalar& s) const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    bool is_monic() const;
    Poly monic() const;  // requires nonzero

    /// Evaluates at a square matrix (the polynomial in a linear operator).
    Matrix eval_at(const Matrix& m) const;

    std::string to_string(const std::string& var = "X") const;

   private:
    Poly(FieldDescriptor f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {}
    void normalize();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

/// Division with remainder: num = quot * den + rem, deg rem < deg den.
PolyDivMod poly_divmod(const Poly& num, const Poly& den);

struct ExtGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s*a + t*b = g
};

ExtGcd ext_gcd(const Poly& a, const Poly& b);

struct NotAUnit : Error {
    NotAUnit(std::string msg, Poly gcd) : Error(std::move(msg)), gcd_witness(std::move(gcd)) {}
    Poly gcd_witness;
};

/// F[X]/a(X)F[X]. The modulus is stored monic; the associate as originally
/// supplied is kept for display since it generates the same ideal.
class QuotientRing {
   public:
    QuotientRing(const FieldDescriptor& f, Poly modulus);

    /// F[X]/X^n F[X].
    static QuotientRing x_power_modulus(const FieldDescriptor& f, std::size_t n);

    const FieldDescriptor& field() const { return field_; }
    const Poly& modulus() const { return modulus_; }
    const Poly& original_modulus() const { return original_; }
    std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }

    bool is_x_power_modulus() const;

    bool operator==(const QuotientRing& rhs) const;

   private:
    FieldDescriptor field_;
    Poly modulus_;   // monic
    Poly original_;  // as supplied
};

/// Residue class of degree < deg(modulus), the unique remainder.
class QuotElement {
   public:
    QuotElement(QuotientRing ring, const Poly& representative);

    const QuotientRing& ring() const { return ring_; }
    const Poly& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }
    bool is_one() const;

    QuotElement operator+(const QuotElement& rhs) const;
    QuotElement operator*(const QuotElement& rhs) const;
    QuotElement operator-() const;
    bool operator==(const QuotElement& rhs) const;
    bool operator!=(const QuotElement& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; throws NotAUnit carrying the offending gcd
    /// when the residue is not coprime to the modulus.
    QuotElement inverse() const;

    bool is_unit() const;

    std::string to_string() const;  // in the variable z

   private:
    QuotientRing ring_;
    Poly residue_;
};

inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 24;

/// All units of a quotient ring over a finite field, in lexicographic order
/// of the ascending-degree coefficient vectors (constant coefficient most
/// significant). Guard: q^deg <= 2^24.
std::vector<QuotElement> enumerate_units(const QuotientRing& ring);

/// The units of F[X]/X^n F[X] with constant term 1; requires that modulus.
std::vector<QuotElement> subgroup_I_elements(const QuotientRing& ring);

/// All residues of a quotient ring over a finite field, same order and guard
/// as enumerate_units.
std::vector<QuotElement> enumerate_residues(const QuotientRing& ring);

}  // namespace leibniz

#endif
