#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace polyss {

enum class FieldKind { prime, rational };

/// The ground field: GF(p) for a prime p < 2^32, or the rationals.
class FieldSpec {
public:
    /// Throws Error(parse) unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rational, 0); }

    FieldKind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An element of a FieldSpec. Residues are kept in [0, p); rationals in lowest terms.
class Scalar {
public:
    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, std::int64_t value);
    static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
    /// Decimal integer, or "num/den" over the rationals.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); prime fields only.
    std::uint64_t residue() const;
    /// Exact value; rationals only.
    const mpq_class& rational() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::uint64_t exponent) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Scalar(const FieldSpec& field, std::uint64_t residue) : field_(field), value_(residue) {}
    Scalar(const FieldSpec& field, mpq_class q) : field_(field), value_(std::move(q)) {}

    FieldSpec field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

/// Throws Error(field_mismatch) if the fields differ.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

} // namespace polyss
