#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmb/ncalg.hpp"
#include "qmb/qmatrices.hpp"

namespace qmb {

class NotProportional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Weakly decreasing, nonnegative.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition zero(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }
    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// All partitions with n parts and largest part <= max_part, lexicographically increasing.
std::vector<Partition> partitions(int n, int max_part);

// Element w . v0 of the Fock module, stored as its holomorphic words.
class FockVector {
public:
    explicit FockVector(std::shared_ptr<const Algebra> algebra) : alg_(std::move(algebra)) {}
    FockVector(std::shared_ptr<const Algebra> algebra, TermMap terms);

    static FockVector vacuum(int n);

    const Algebra& algebra() const { return *alg_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;

    FockVector& operator+=(const FockVector& b);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a += Scalar(-1) * b; }
    friend FockVector operator*(const Scalar& c, const FockVector& v);
    friend bool operator==(const FockVector& a, const FockVector& b);

    // The holomorphic polynomial g with v = g v0.
    NcPoly as_poly() const;
    std::string to_string() const;

private:
    std::shared_ptr<const Algebra> alg_;
    TermMap terms_;
};

// f . v for f in Pol(Mat_n)_q.
FockVector fock_apply(const NcPoly& f, const FockVector& v);
// Literal reference: normal-form f * (word of v) and drop every word that
// still contains an annihilation letter.
FockVector fock_apply_reference(const NcPoly& f, const FockVector& v);

// (v, w) = v0-coefficient of g* v where w = g v0. Coefficients are real, so
// the form is bilinear over Q(q).
Scalar inner_product(const FockVector& v, const FockVector& w);

// Canonical holomorphic words of length d, in deglex order.
std::vector<Word> holomorphic_basis(int n, int degree);
// (w_i v0, w_j v0) over holomorphic_basis(n, degree).
std::vector<std::vector<Scalar>> gram_matrix(int n, int degree);
// Exact determinant by elimination with row swaps.
Rational determinant(std::vector<std::vector<Rational>> a);
// Leading principal minors of an exact rational matrix.
std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& m);

FockVector u_lambda(int n, const Partition& lambda);

// c with f u_lambda = c u_lambda; throws NotProportional otherwise.
Scalar eigenvalue_on(const NcPoly& f, const Partition& lambda);

} // namespace qmb
