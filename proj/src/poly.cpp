#include "leibniz/poly.hpp"

#include <cmath>
#include <sstream>

namespace leibniz {

Poly Poly::zero(const FieldDescriptor& f) { return Poly(f, {}); }

Poly Poly::one(const FieldDescriptor& f) { return Poly(f, {Scalar::one(f)}); }

Poly Poly::x(const FieldDescriptor& f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::constant(Scalar c) {
    FieldDescriptor f = c.field();
    if (c.is_zero()) return zero(f);
    return Poly(f, {std::move(c)});
}

Poly Poly::from_coeffs(const FieldDescriptor& f, std::vector<Scalar> coeffs) {
    for (const auto& c : coeffs) {
        if (c.field() != f) throw FieldMismatch("polynomial coefficient from a different field");
    }
    Poly p(f, std::move(coeffs));
    p.normalize();
    return p;
}

Poly Poly::x_power(const FieldDescriptor& f, std::size_t n) {
    std::vector<Scalar> coeffs(n + 1, Scalar::zero(f));
    coeffs[n] = Scalar::one(f);
    return Poly(f, std::move(coeffs));
}

Poly Poly::parse(const FieldDescriptor& f, std::string_view text) {
    std::vector<Scalar> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        coeffs.push_back(Scalar::parse(f, item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_coeffs(f, std::move(coeffs));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return Scalar::zero(field_);
}

Scalar Poly::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("polynomial sum across fields");
    std::vector<Scalar> out;
    std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + rhs.coeff(i));
    Poly p(field_, std::move(out));
    p.normalize();
    return p;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    if (field_ != rhs.field_) throw FieldMismatch("polynomial product across fields");
    if (is_zero() || rhs.is_zero()) return zero(field_);
    std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    Poly p(field_, std::move(out));
    p.normalize();
    return p;
}

Poly Poly::operator-() const {
    std::vector<Scalar> out = coeffs_;
    for (auto& c : out) c = -c;
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(const Scalar& s) const {
    std::vector<Scalar> out = coeffs_;
    for (auto& c : out) c *= s;
    Poly p(field_, std::move(out));
    p.normalize();
    return p;
}

bool Poly::operator==(const Poly& rhs) const { return field_ == rhs.field_ && coeffs_ == rhs.coeffs_; }

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::monic() const { return scaled(leading().inverse()); }

Matrix Poly::eval_at(const Matrix& m) const {
    if (m.rows() != m.cols()) throw AmbientMismatch("polynomial of a non-square matrix");
    Matrix acc(m.field(), m.rows(), m.rows());
    Matrix power = Matrix::identity(m.field(), m.rows());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) acc = acc + power.scaled(coeffs_[k]);
        if (k + 1 < coeffs_.size()) power = power * m;
    }
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        Scalar c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs.front() == '-';
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        if (k == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

PolyDivMod poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const FieldDescriptor& f = num.field();
    if (f != den.field()) throw FieldMismatch("polynomial division across fields");
    Poly rem = num;
    std::vector<Scalar> quot_coeffs;
    int dd = den.degree();
    if (rem.degree() >= dd) {
        quot_coeffs.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Scalar::zero(f));
    }
    Scalar lead_inv = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
        Scalar factor = rem.leading() * lead_inv;
        quot_coeffs[shift] = factor;
        rem = rem - (den * Poly::x_power(f, shift)).scaled(factor);
    }
    return PolyDivMod{Poly::from_coeffs(f, std::move(quot_coeffs)), std::move(rem)};
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    const FieldDescriptor& f = a.field();
    if (f != b.field()) throw FieldMismatch("gcd across fields");
    Poly old_r = a, r = b;
    Poly old_s = Poly::one(f), s = Poly::zero(f);
    Poly old_t = Poly::zero(f), t = Poly::one(f);
    while (!r.is_zero()) {
        PolyDivMod qr = poly_divmod(old_r, r);
        Poly tmp = old_r - qr.quot * r;
        old_r = r;
        r = std::move(tmp);
        tmp = old_s - qr.quot * s;
        old_s = s;
        s = std::move(tmp);
        tmp = old_t - qr.quot * t;
        old_t = t;
        t = std::move(tmp);
    }
    Scalar lead_inv = old_r.leading().inverse();
    return ExtGcd{old_r.scaled(lead_inv), old_s.scaled(lead_inv), old_t.scaled(lead_inv)};
}

QuotientRing::QuotientRing(const FieldDescriptor& f, Poly modulus)
    : field_(f), modulus_(Poly::zero(f)), original_(std::move(modulus)) {
    if (original_.field() != f) throw FieldMismatch("modulus from a different field");
    if (original_.degree() < 1) throw BadSpec("quotient modulus must have degree >= 1");
    modulus_ = original_.monic();
}

QuotientRing QuotientRing::x_power_modulus(const FieldDescriptor& f, std::size_t n) {
    if (n == 0) throw BadSpec("quotient modulus must have degree >= 1");
    return QuotientRing(f, Poly::x_power(f, n));
}

bool QuotientRing::is_x_power_modulus() const {
    for (std::size_t k = 0; k < degree(); ++k) {
        if (!modulus_.coeff(k).is_zero()) return false;
    }
    return true;
}

bool QuotientRing::operator==(const QuotientRing& rhs) const {
    return field_ == rhs.field_ && modulus_ == rhs.modulus_;
}

QuotElement::QuotElement(QuotientRing ring, const Poly& representative)
    : ring_(std::move(ring)), residue_(Poly::zero(ring_.field())) {
    if (representative.field() != ring_.field()) throw FieldMismatch("representative from a different field");
    residue_ = poly_divmod(representative, ring_.modulus()).rem;
}

bool QuotElement::is_one() const { return residue_ == Poly::one(ring_.field()); }

QuotElement QuotElement::operator+(const QuotElement& rhs) const {
    if (!(ring_ == rhs.ring_)) throw FieldMismatch("quotient elements from different rings");
    return QuotElement(ring_, residue_ + rhs.residue_);
}

QuotElement QuotElement::operator*(const QuotElement& rhs) const {
    if (!(ring_ == rhs.ring_)) throw FieldMismatch("quotient elements from different rings");
    return QuotElement(ring_, residue_ * rhs.residue_);
}

QuotElement QuotElement::operator-() const { return QuotElement(ring_, -residue_); }

bool QuotElement::operator==(const QuotElement& rhs) const {
    return ring_ == rhs.ring_ && residue_ == rhs.residue_;
}

QuotElement QuotElement::inverse() const {
    if (residue_.is_zero()) {
        throw NotAUnit("zero is not a unit", ring_.modulus());
    }
    ExtGcd g = ext_gcd(residue_, ring_.modulus());
    if (g.g.degree() != 0) {
        throw NotAUnit("residue shares the factor " + g.g.to_string() + " with the modulus", g.g);
    }
    // g.g is the monic constant 1, so s * residue == 1 modulo the modulus.
    return QuotElement(ring_, g.s);
}

bool QuotElement::is_unit() const {
    if (residue_.is_zero()) return false;
    return ext_gcd(residue_, ring_.modulus()).g.degree() == 0;
}

std::string QuotElement::to_string() const { return residue_.to_string("z"); }

namespace {

void require_enumerable(const QuotientRing& ring) {
    if (!ring.field().is_finite()) {
        throw InfiniteField("enumeration requires a finite field");
    }
    double bits = static_cast<double>(ring.degree()) * std::log2(static_cast<double>(ring.field().order()));
    if (bits > 24.0) {
        throw GuardExceeded("residue space exceeds the 2^24 enumeration guard");
    }
}

// Advances the coefficient vector in lexicographic order: the constant
// coefficient is the most significant position, so the highest-degree
// coefficient steps fastest.
bool next_vector(std::vector<std::int64_t>& digits, std::int64_t q) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < q) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<QuotElement> enumerate_residues(const QuotientRing& ring) {
    require_enumerable(ring);
    const FieldDescriptor& f = ring.field();
    std::int64_t q = f.order();
    std::size_t d = ring.degree();

    std::vector<QuotElement> out;
    std::vector<std::int64_t> digits(d, 0);
    do {
        std::vector<Scalar> coeffs;
        coeffs.reserve(d);
        for (std::int64_t r : digits) coeffs.push_back(Scalar::from_residue(f, r));
        out.emplace_back(ring, Poly::from_coeffs(f, std::move(coeffs)));
    } while (next_vector(digits, q));
    return out;
}

std::vector<QuotElement> enumerate_units(const QuotientRing& ring) {
    std::vector<QuotElement> out;
    for (auto& e : enumerate_residues(ring)) {
        if (e.is_unit()) out.push_back(std::move(e));
    }
    return out;
}

std::vector<QuotElement> subgroup_I_elements(const QuotientRing& ring) {
    if (!ring.is_x_power_modulus()) {
        throw WrongModulus("constant-term-1 subgroup requires modulus X^n, got " + ring.modulus().to_string());
    }
    require_enumerable(ring);
    const FieldDescriptor& f = ring.field();
    std::int64_t q = f.order();
    std::size_t d = ring.degree();

    std::vector<QuotElement> out;
    std::vector<std::int64_t> digits(d - 1, 0);
    do {
        std::vector<Scalar> coeffs;
        coeffs.reserve(d);
        coeffs.push_back(Scalar::one(f));
        for (std::int64_t r : digits) coeffs.push_back(Scalar::from_residue(f, r));
        out.emplace_back(ring, Poly::from_coeffs(f, std::move(coeffs)));
    } while (!digits.empty() && next_vector(digits, q));
    return out;
}

}  // namespace leibniz
