#include "leibniz/field.hpp"

#include <charconv>
#include <cstdlib>

namespace leibniz {

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; modulus is prime so any nonzero residue is invertible.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_pos(old_s, p);
}

std::int64_t parse_decimal_i64(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    }
    return value;
}

bool is_decimal(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
    if (p < 2 || p > kMaxPrime) {
        throw BadSpec("prime modulus out of range [2, 2^31): " + std::to_string(p));
    }
    if (!is_prime_i64(p)) {
        throw BadSpec("modulus is not prime: " + std::to_string(p));
    }
    return FieldDescriptor(Kind::prime, p);
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) == 0) {
        std::string_view num = text.substr(3);
        if (!is_decimal(num)) throw ParseError("bad field syntax: '" + std::string(text) + "'");
        return prime(parse_decimal_i64(num));
    }
    throw ParseError("bad field syntax: '" + std::string(text) + "' (expected Q or GF:p)");
}

std::int64_t FieldDescriptor::order() const {
    if (!is_finite()) throw InfiniteField("the rationals are infinite");
    return p_;
}

std::string FieldDescriptor::to_string() const {
    return is_rationals() ? "Q" : "GF:" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldDescriptor& f) {
    return f.is_prime() ? Scalar(f, std::int64_t{0}) : Scalar(f, mpq_class(0));
}

Scalar Scalar::one(const FieldDescriptor& f) {
    return f.is_prime() ? Scalar(f, std::int64_t{1}) : Scalar(f, mpq_class(1));
}

Scalar Scalar::from_int(const FieldDescriptor& f, long long value) {
    if (f.is_prime()) return Scalar(f, mod_pos(value, f.p()));
    return Scalar(f, mpq_class(static_cast<long>(value)));
}

Scalar Scalar::from_fraction(const FieldDescriptor& f, const mpz_class& num, const mpz_class& den) {
    if (!f.is_rationals()) throw FieldMismatch("fraction constructor requires Q");
    if (den == 0) throw DivisionByZero("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q));
}

Scalar Scalar::from_residue(const FieldDescriptor& f, std::int64_t r) {
    if (!f.is_prime()) throw FieldMismatch("residue constructor requires GF(p)");
    if (r < 0 || r >= f.p()) {
        throw ParseError("residue out of range [0, p): " + std::to_string(r));
    }
    return Scalar(f, r);
}

Scalar Scalar::parse(const FieldDescriptor& f, std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.is_prime()) {
        if (!is_decimal(text)) {
            throw ParseError("prime-field scalar must be a residue in [0,p): '" + std::string(text) + "'");
        }
        return from_residue(f, parse_decimal_i64(text));
    }
    bool negative = text.front() == '-';
    std::string_view body = negative ? text.substr(1) : text;
    auto slash = body.find('/');
    std::string_view num_part = body.substr(0, slash);
    if (!is_decimal(num_part)) throw ParseError("bad rational: '" + std::string(text) + "'");
    mpz_class num(std::string(num_part), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_part = body.substr(slash + 1);
        if (!is_decimal(den_part)) throw ParseError("bad rational: '" + std::string(text) + "'");
        den = mpz_class(std::string(den_part), 10);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return from_fraction(f, num, den);
}

bool Scalar::is_zero() const {
    if (field_.is_prime()) return std::get<std::int64_t>(v_) == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime()) return std::get<std::int64_t>(v_) == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw FieldMismatch("scalars from different fields: " + field_.to_string() + " vs " +
                            rhs.field_.to_string());
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime()) {
        return Scalar(field_, mod_pos(std::get<std::int64_t>(v_) + std::get<std::int64_t>(rhs.v_), field_.p()));
    }
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime()) {
        return Scalar(field_, mod_pos(std::get<std::int64_t>(v_) - std::get<std::int64_t>(rhs.v_), field_.p()));
    }
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime()) {
        return Scalar(field_, mod_pos(std::get<std::int64_t>(v_) * std::get<std::int64_t>(rhs.v_), field_.p()));
    }
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(rhs.v_)));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_prime()) {
        return Scalar(field_, mod_pos(-std::get<std::int64_t>(v_), field_.p()));
    }
    return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.to_string());
    if (field_.is_prime()) {
        return Scalar(field_, mod_inverse(std::get<std::int64_t>(v_), field_.p()));
    }
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    if (field_.is_prime()) return std::get<std::int64_t>(v_) == std::get<std::int64_t>(rhs.v_);
    return std::get<mpq_class>(v_) == std::get<mpq_class>(rhs.v_);
}

int Scalar::cmp(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_prime()) {
        std::int64_t a = std::get<std::int64_t>(v_), b = std::get<std::int64_t>(rhs.v_);
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    return ::cmp(std::get<mpq_class>(v_), std::get<mpq_class>(rhs.v_));
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatch("residue() on a rational scalar");
    return std::get<std::int64_t>(v_);
}

const mpq_class& Scalar::fraction() const {
    if (!field_.is_rationals()) throw FieldMismatch("fraction() on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(std::get<std::int64_t>(v_));
    const mpq_class& q = std::get<mpq_class>(v_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace leibniz
