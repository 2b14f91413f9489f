#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmb/fock.hpp"
#include "qmb/scalar.hpp"

namespace qmb {

// Polynomial in commuting x_1..x_n with Laurent coefficients in q.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Scalar& c);
    static MultiPoly variable(int nvars, int i); // 1-based

    int nvars() const { return nvars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& b);
    MultiPoly& operator-=(const MultiPoly& b);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Exact quotient by (x_i - x_j); throws NotDivisible.
    MultiPoly divide_by_difference(int i, int j) const;
    MultiPoly swap_variables(int i, int j) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Graded-lex descending, variables x1..xn, coefficients in `coeff_var`.
    std::string to_string(const std::string& coeff_var = "q") const;

private:
    int nvars_ = 0;
    std::map<Exponents, Scalar> terms_;
};

// Gaussian binomial (a over b)_q.
Scalar q_binomial(int a, int b);
Scalar q_pochhammer(int a); // (q;q)_a

Scalar elementary_symmetric(int k, const std::vector<Scalar>& values);
MultiPoly elementary_symmetric_poly(int k, int nvars);

// Shifts m -> p^m (q-parameter p, a unit monomial) or m -> m (classical).
struct SchurVariant {
    bool classical = false;
    Scalar parameter = Scalar::q();

    static SchurVariant q_param(Scalar p) { return {false, std::move(p)}; }
    static SchurVariant classic() { return {true, Scalar(1)}; }
    Scalar shift(int m) const;
};

// det(prod_{m < nu_j + n - j} (x_i - shift(m))) / prod_{i<j} (x_i - x_j),
// by cofactor expansion and exact division.
MultiPoly factorial_schur(const std::vector<int>& nu, int n, const SchurVariant& variant);
// The same ratio evaluated directly at distinct Scalar points.
Scalar factorial_schur_at(const std::vector<int>& nu, const std::vector<Scalar>& points, const SchurVariant& variant);

// (1,..,1,0,..,0) with k ones and n parts.
std::vector<int> one_k(int k, int n);

enum class SpectralKind { Thm1, Y1, Xk, Classical };

struct SpectralFormula {
    SpectralKind kind;
    int k = 1;

    static SpectralFormula thm1(int k) { return {SpectralKind::Thm1, k}; }
    static SpectralFormula y1() { return {SpectralKind::Y1, 1}; }
    static SpectralFormula xk(int k) { return {SpectralKind::Xk, k}; }
    static SpectralFormula classical_formula(int k) { return {SpectralKind::Classical, k}; }
};

// Thm1(0) is 1 by convention (y_0 = 1).
Scalar spectral_rhs(const SpectralFormula& formula, int n, const Partition& lambda);

bool prop8_identity_check(int n, int k);

struct Prop7Result {
    bool exact = false;
    // rhs / lhs when it is a single monomial other than 1.
    std::optional<Scalar> correction_factor;
    Scalar lhs;
    Scalar rhs;
};
Prop7Result prop7_spectral_check(int n, int k, const Partition& lambda);

// divide_exact(Thm1 value, (1-q^2)^k) evaluated at q = 1.
Rational classical_limit(int n, int k, const Partition& lambda);

} // namespace qmb
