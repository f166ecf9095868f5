#include "l2k/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace l2k {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t magnitude(std::int64_t v)
{
    return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
                 : static_cast<std::uint64_t>(v);
}

void set_mpz(mpz_class& out, u128 magnitude_value, bool negative)
{
    const auto hi = static_cast<std::uint64_t>(magnitude_value >> 64);
    const auto lo = static_cast<std::uint64_t>(magnitude_value);
    out = static_cast<unsigned long>(hi);
    out <<= 64;
    out += static_cast<unsigned long>(lo);
    if (negative) out = -out;
}

bool fits_small(const mpz_class& z)
{
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
           z != mpz_class(std::numeric_limits<long>::min());
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1)
{
    if (value == std::numeric_limits<std::int64_t>::min()) {
        big_ = new mpq_class(static_cast<long>(value));
        den_ = 0;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(0), den_(1)
{
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) : num_(0), den_(1)
{
    mpq_class copy(value);
    copy.canonicalize();
    *this = from_mpq(std::move(copy));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_)
{
    if (other.is_big()) big_ = new mpq_class(*other.big_);
}

Rational::Rational(Rational&& other) noexcept : num_(other.num_), den_(other.den_)
{
    other.num_ = 0;
    other.den_ = 1;
}

Rational& Rational::operator=(const Rational& other)
{
    if (this == &other) return *this;
    if (other.is_big()) {
        if (is_big()) {
            *big_ = *other.big_;
        } else {
            big_ = new mpq_class(*other.big_);
            den_ = 0;
        }
    } else {
        reset_small(other.num_, other.den_);
    }
    return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept
{
    if (this == &other) return *this;
    release();
    num_ = other.num_;
    den_ = other.den_;
    other.num_ = 0;
    other.den_ = 1;
    return *this;
}

Rational::~Rational() { release(); }

void Rational::release() noexcept
{
    if (is_big()) {
        delete big_;
        num_ = 0;
        den_ = 1;
    }
}

void Rational::reset_small(std::int64_t num, std::int64_t den) noexcept
{
    release();
    num_ = num;
    den_ = den;
}

Rational Rational::from_i128(i128 num, i128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const bool negative = num < 0;
    u128 n = negative ? static_cast<u128>(-num) : static_cast<u128>(num);
    u128 d = static_cast<u128>(den);
    if (n == 0) return Rational();
    const u128 g = gcd_u128(n, d);
    n /= g;
    d /= g;
    Rational out;
    if (n <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax)) {
        const auto sn = static_cast<std::int64_t>(n);
        out.num_ = negative ? -sn : sn;
        out.den_ = static_cast<std::int64_t>(d);
        return out;
    }
    mpz_class zn, zd;
    set_mpz(zn, n, negative);
    set_mpz(zd, d, false);
    out.big_ = new mpq_class(zn, zd);
    out.den_ = 0;
    return out;
}

Rational Rational::from_mpq(mpq_class&& value)
{
    Rational out;
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        out.num_ = value.get_num().get_si();
        out.den_ = value.get_den().get_si();
        return out;
    }
    out.big_ = new mpq_class(std::move(value));
    out.den_ = 0;
    return out;
}

Rational Rational::parse(std::string_view text)
{
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = text;
    std::string_view sign;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        sign = body.substr(0, 1);
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class zn(std::string(num), 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (sign == "-") zn = -zn;
    mpq_class q(zn, zd);
    q.canonicalize();
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const
{
    return is_big() ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const
{
    if (is_big()) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (is_big()) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const
{
    return is_big() ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const
{
    return is_big() ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

double Rational::to_double() const
{
    if (is_big()) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const
{
    if (is_big()) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    if (is_big()) return from_mpq(mpq_class(-*big_));
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (!a.is_big() && !b.is_big()) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) &&
                s != std::numeric_limits<std::int64_t>::min()) {
                Rational out;
                out.num_ = s;
                return out;
            }
        }
        const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        const i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b)
{
    if (!a.is_big() && !b.is_big()) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(a.num_, b.num_, &s) &&
                s != std::numeric_limits<std::int64_t>::min()) {
                Rational out;
                out.num_ = s;
                return out;
            }
        }
        const i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
        const i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational::from_mpq(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b)
{
    if (!a.is_big() && !b.is_big()) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        const std::uint64_t g1 = std::gcd(magnitude(a.num_), static_cast<std::uint64_t>(b.den_));
        const std::uint64_t g2 = std::gcd(magnitude(b.num_), static_cast<std::uint64_t>(a.den_));
        const i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) *
                       (b.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) *
                       (b.den_ / static_cast<std::int64_t>(g1));
        if (n >= -kMax && n <= kMax && d <= kMax) {
            Rational out;
            out.num_ = static_cast<std::int64_t>(n);
            out.den_ = static_cast<std::int64_t>(d);
            return out;
        }
        return Rational::from_i128(n, d);
    }
    return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b)
{
    return a * b.inverse();
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (is_big()) {
        mpq_class q = 1 / *big_;
        q.canonicalize();
        return from_mpq(std::move(q));
    }
    Rational out;
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b)
{
    if (a.is_big() != b.is_big()) return false;  // representations are canonical
    if (a.is_big()) return *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.is_big() && !b.is_big()) {
        const i128 lhs = static_cast<i128>(a.num_) * b.den_;
        const i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace l2k
