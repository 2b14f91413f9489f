#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmb {

// Exact rational number. Values whose reduced numerator and denominator fit
// in 64 bits are stored inline; everything else lives in a GMP mpq.
// The representation is canonical: a value is "big" iff it does not fit.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& v);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;
    // Accepts "a" or "a/b" with optional leading '-'.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational inverse() const;
    Rational pow(int e) const;

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    void assign_i128(__int128 n, __int128 d);
    void assign_mpq(mpq_class v);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace qmb
