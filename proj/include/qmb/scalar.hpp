#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmb/rational.hpp"

namespace qmb {

// Raised when an exact quotient in Q[q, q^-1] does not exist.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact Laurent polynomial in q with rational coefficients.
//
// Terms are kept sorted by exponent with no zero coefficients, so two equal
// values are structurally identical.
class Scalar {
public:
    using Term = std::pair<int, Rational>;

    Scalar() = default;
    Scalar(Rational c); // NOLINT(google-explicit-constructor)
    Scalar(long long c) : Scalar(Rational(c)) {} // NOLINT(google-explicit-constructor)
    Scalar(int c) : Scalar(Rational(c)) {}       // NOLINT(google-explicit-constructor)

    static Scalar monomial(Rational c, int exponent);
    static Scalar q(int exponent = 1) { return monomial(Rational(1), exponent); }
    // Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    static Scalar from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<Term>& terms() const { return terms_; }
    int min_exponent() const;
    int max_exponent() const;
    Rational coefficient(int exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    Scalar pow(unsigned e) const;

    // Canonical text, terms in increasing exponent order: "3*q^-2 + 1 - q^4".
    std::string to_string(std::string_view var = "q") const;
    static Scalar parse(std::string_view text, std::string_view var = "q");

    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

// q -> q^-1.
Scalar bar(const Scalar& a);
// q -> q^factor (factor may be negative or zero).
Scalar substitute_power(const Scalar& a, int factor);
// Returns c with a = b * c; throws NotDivisible if no such c exists.
Scalar divide_exact(const Scalar& a, const Scalar& b);
Rational eval_at(const Scalar& a, const Rational& q0);

} // namespace qmb
