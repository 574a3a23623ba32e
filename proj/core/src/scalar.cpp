#include "polyss/scalar.hpp"

#include <charconv>
#include <limits>

#include "polyss/error.hpp"

namespace polyss {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::containment: return "containment";
    case ErrorKind::induced_map: return "induced-map";
    case ErrorKind::shape: return "shape";
    case ErrorKind::axiom: return "axiom-violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_subset: return "invalid-subset";
    case ErrorKind::snake_input: return "snake-input";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::internal: return "internal-consistency";
    }
    return "unknown";
}

bool is_prime_number(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p > std::numeric_limits<std::uint32_t>::max())
        fail(ErrorKind::parse, "characteristic " + std::to_string(p) + " exceeds 2^32");
    if (!is_prime_number(p))
        fail(ErrorKind::parse, "characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const
{
    return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

void require_same_field(const FieldSpec& a, const FieldSpec& b)
{
    if (!(a == b))
        fail(ErrorKind::field_mismatch, "field mismatch: " + a.to_string() + " vs " + b.to_string());
}

namespace {

std::uint64_t reduce(std::int64_t value, std::uint64_t p)
{
    auto m = value % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

// Extended Euclid; a is a nonzero residue mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return reduce(s0, p);
}

} // namespace

Scalar Scalar::zero(const FieldSpec& field)
{
    return field.is_prime() ? Scalar(field, std::uint64_t{0}) : Scalar(field, mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& field)
{
    return field.is_prime() ? Scalar(field, std::uint64_t{1}) : Scalar(field, mpq_class(1));
}

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value)
{
    if (field.is_prime())
        return Scalar(field, reduce(value, field.characteristic()));
    return Scalar(field, mpq_class(mpz_class(std::to_string(value))));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value)
{
    if (!field.is_prime()) {
        mpq_class q(value);
        q.canonicalize();
        return Scalar(field, std::move(q));
    }
    mpz_class p(static_cast<unsigned long>(field.characteristic()));
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (den == 0)
        fail(ErrorKind::division_by_zero, "denominator vanishes in " + field.to_string());
    if (num < 0)
        num += p;
    Scalar n(field, static_cast<std::uint64_t>(num.get_ui()));
    Scalar d(field, static_cast<std::uint64_t>(den.get_ui()));
    return n / d;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text)
{
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ')
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && trimmed.back() == ' ')
        trimmed.remove_suffix(1);
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = trimmed.find('/');
    std::string_view num_text = trimmed.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
    if (!valid_integer(num_text) || !valid_integer(den_text))
        fail(ErrorKind::parse, "malformed scalar '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s); };
    mpz_class num(strip_plus(num_text));
    mpz_class den(strip_plus(den_text));
    if (den == 0)
        fail(ErrorKind::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    return from_rational(field, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept
{
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept
{
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const
{
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return *r;
    fail(ErrorKind::field_mismatch, "residue() called on a rational scalar");
}

const mpq_class& Scalar::rational() const
{
    if (auto q = std::get_if<mpq_class>(&value_))
        return *q;
    fail(ErrorKind::field_mismatch, "rational() called on a prime-field scalar");
}

Scalar Scalar::operator-() const
{
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return Scalar(field_, *r == 0 ? 0 : field_.characteristic() - *r);
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        fail(ErrorKind::division_by_zero, "zero has no inverse in " + field_.to_string());
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return Scalar(field_, inverse_mod(*r, field_.characteristic()));
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(std::uint64_t exponent) const
{
    Scalar result = one(field_);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    require_same_field(a.field_, b.field_);
    if (a.field_.is_prime()) {
        std::uint64_t s = std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_);
        std::uint64_t p = a.field_.characteristic();
        return Scalar(a.field_, s >= p ? s - p : s);
    }
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    require_same_field(a.field_, b.field_);
    if (a.field_.is_prime())
        return Scalar(a.field_, std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % a.field_.characteristic());
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    require_same_field(a.field_, b.field_);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    require_same_field(a.field_, b.field_);
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

} // namespace polyss
