#include "qmb/rational.hpp"

#include <limits>
#include <stdexcept>

namespace qmb {

namespace {

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    auto lo = static_cast<std::uint64_t>(u);
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
    r <<= 64;
    mpz_class l;
    mpz_import(l.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
    r += l;
    return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

} // namespace

Rational::Rational(long long n, long long d)
{
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    assign_i128(n, d);
}

Rational::Rational(const mpq_class& v) { assign_mpq(v); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_i128(__int128 n, __int128 d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    if (d != 1) {
        __int128 g = gcd128(n, d);
        if (g != 1) {
            n /= g;
            d /= g;
        }
    }
    if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class v(to_mpz(n), to_mpz(d));
    v.canonicalize();
    assign_mpq(std::move(v));
}

void Rational::assign_mpq(mpq_class v)
{
    v.canonicalize();
    if (fits64(v.get_num()) && fits64(v.get_den())) {
        num_ = v.get_num().get_si();
        den_ = v.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(v));
}

bool Rational::is_integer() const
{
    if (big_) {
        return big_->get_den() == 1;
    }
    return den_ == 1;
}

int Rational::sign() const
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_) {
        return *big_;
    }
    mpq_class r(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return r;
}

std::string Rational::to_string() const
{
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("Rational::parse: empty input");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    }
    if (v.get_den() == 0) {
        throw std::domain_error("Rational::parse: zero denominator");
    }
    return Rational(v);
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_) {
        r.assign_mpq(-*big_);
    } else {
        r.assign_i128(-static_cast<__int128>(num_), den_);
    }
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    Rational r;
    if (big_) {
        r.assign_mpq(1 / *big_);
    } else {
        r.assign_i128(den_, num_);
    }
    return r;
}

Rational Rational::pow(int e) const
{
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-static_cast<long>(e)) : static_cast<unsigned long>(e);
    Rational r(1);
    while (k != 0) {
        if (k & 1U) {
            r *= base;
        }
        base *= base;
        k >>= 1U;
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    Rational r;
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            r.assign_i128(static_cast<__int128>(a.num_) + b.num_, 1);
        } else {
            r.assign_i128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
        }
        return r;
    }
    r.assign_mpq(a.to_mpq() + b.to_mpq());
    return r;
}

Rational operator-(const Rational& a, const Rational& b)
{
    Rational r;
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            r.assign_i128(static_cast<__int128>(a.num_) - b.num_, 1);
        } else {
            r.assign_i128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
        }
        return r;
    }
    r.assign_mpq(a.to_mpq() - b.to_mpq());
    return r;
}

Rational operator*(const Rational& a, const Rational& b)
{
    Rational r;
    if (!a.big_ && !b.big_) {
        r.assign_i128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
        return r;
    }
    r.assign_mpq(a.to_mpq() * b.to_mpq());
    return r;
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    Rational r;
    if (!a.big_ && !b.big_) {
        r.assign_i128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
        return r;
    }
    r.assign_mpq(a.to_mpq() / b.to_mpq());
    return r;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (a.big_ && b.big_) {
        return *a.big_ == *b.big_;
    }
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::size_t Rational::hash() const
{
    if (big_) {
        return std::hash<std::string>{}(big_->get_str());
    }
    return std::hash<std::int64_t>{}(num_) * 31U + std::hash<std::int64_t>{}(den_);
}

} // namespace qmb
