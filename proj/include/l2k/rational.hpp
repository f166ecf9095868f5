#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace l2k {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills to a heap-allocated `mpq_class`. Results are always
/// in lowest terms with a positive denominator, and a big value is demoted back
/// to the inline form as soon as it fits again, so equality is representation
/// independent.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept;
    ~Rational();

    /// Parses "p", "-p" or "p/q" (decimal, optional sign on p). Throws
    /// std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !is_big() && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !is_big() && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_big() const noexcept { return den_ == 0; }

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] double to_double() const;
    /// Lowest-terms "p/q", or "p" for integers.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    static Rational from_i128(__int128 num, __int128 den);
    static Rational from_mpq(mpq_class&& value);
    void reset_small(std::int64_t num, std::int64_t den) noexcept;
    void release() noexcept;

    union {
        std::int64_t num_;
        mpq_class* big_;
    };
    std::int64_t den_;  // 0 marks the heap representation
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace l2k
