#ifndef LEIBNIZ_FIELD_HPP
#define LEIBNIZ_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Identifies the coefficient field: the rationals or a prime field GF(p).
/// The modulus is kept below 2^31 so residue products fit in 64-bit
/// intermediates.
class FieldDescriptor {
   public:
    enum class Kind { rationals, prime };

    static FieldDescriptor rationals() { return FieldDescriptor(Kind::rationals, 0); }

    /// Requires 2 <= p < 2^31 and p prime; primality is verified here.
    static FieldDescriptor prime(std::int64_t p);

    /// Parses "Q" or "GF:p".
    static FieldDescriptor parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime() const { return kind_ == Kind::prime; }
    bool is_finite() const { return kind_ == Kind::prime; }
    std::int64_t p() const { return p_; }

    /// Number of elements; only meaningful for finite fields.
    std::int64_t order() const;

    bool operator==(const FieldDescriptor& other) const = default;

    std::string to_string() const;  // "Q" or "GF:p"

   private:
    FieldDescriptor(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;
};

/// An exact field element in canonical form: a reduced fraction with
/// positive denominator over Q, or the least nonnegative residue over GF(p).
/// All arithmetic stays inside the field; division by zero throws.
class Scalar {
   public:
    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);

    /// Embeds an integer (reduced mod p over prime fields).
    static Scalar from_int(const FieldDescriptor& f, long long value);

    /// Rational from an exact fraction; canonicalizes.
    static Scalar from_fraction(const FieldDescriptor& f, const mpz_class& num, const mpz_class& den);

    /// Residue must already satisfy 0 <= r < p.
    static Scalar from_residue(const FieldDescriptor& f, std::int64_t r);

    /// Parses the scalar text syntax: "a" or "a/b" (b > 0) over Q,
    /// a decimal residue in [0,p) over GF(p).
    static Scalar parse(const FieldDescriptor& f, std::string_view text);

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // DivisionByZero on rhs == 0
    Scalar operator-() const;
    Scalar inverse() const;  // DivisionByZero on 0

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Total order used for canonical sorting of enumeration output:
    /// residue order over GF(p), numeric order over Q. Field must match.
    int cmp(const Scalar& rhs) const;

    /// The residue; prime fields only.
    std::int64_t residue() const;

    /// The fraction; rationals only.
    const mpq_class& fraction() const;

    std::string to_string() const;

   private:
    Scalar(FieldDescriptor f, std::int64_t r) : field_(f), v_(r) {}
    Scalar(FieldDescriptor f, mpq_class q) : field_(f), v_(std::move(q)) {}

    void require_same_field(const Scalar& rhs) const;

    FieldDescriptor field_;
    std::variant<std::int64_t, mpq_class> v_;
};

}  // namespace leibniz

#endif
