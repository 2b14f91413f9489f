#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmb/ncalg.hpp"

namespace qmb {

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Strictly increasing set of 1-based indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    int sum() const;
    bool contains(int i) const;
    // {lo..hi} minus this set.
    IndexSet complement(int lo, int hi) const;
    std::string to_string() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> elems_;
};

// All k-element subsets of {lo..hi} in lexicographic order.
std::vector<IndexSet> subsets(int lo, int hi, int k);
// card{(i, j) : i in a, j in b, i > j}.
int cross_inversions(const IndexSet& a, const IndexSet& b);

enum class MatrixFamily { HolMat, PolMat, QMat2n };

// C[Mat_n]_q, Pol(Mat_n)_q or C[M_2n]_q, written in the parameter q^sign.
struct AlgebraKind {
    MatrixFamily family = MatrixFamily::PolMat;
    int n = 1;
    int param_sign = 1;

    static AlgebraKind hol(int n) { return {MatrixFamily::HolMat, n, 1}; }
    static AlgebraKind pol(int n) { return {MatrixFamily::PolMat, n, 1}; }
    static AlgebraKind mat2n(int n, int param_sign = 1) { return {MatrixFamily::QMat2n, n, param_sign}; }

    std::string name() const;
    friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

// Generator indices (1-based matrix indices).
Letter z_letter(int n, int a, int alpha);
Letter zs_letter(int n, int a, int alpha);
Letter t_letter(int n, int i, int j);

// The R table of the cross relations, in the parameter p.
Scalar r_coefficient(int j, int i, int jp, int ip, const Scalar& p = Scalar::q());

Presentation build_presentation(AlgebraKind kind);
// Process-wide shared algebra per kind, so memo tables are reused and
// elements of the same kind compare equal.
std::shared_ptr<const Algebra> algebra(AlgebraKind kind);

// q-minor with row indices `rows` and column indices `cols`; for z variables
// rows are the lower index a and columns the upper index alpha.
NcPoly qminor(AlgebraKind kind, const IndexSet& rows, const IndexSet& cols);
NcPoly det_z(AlgebraKind kind);
NcPoly det_t(int n, int param_sign = 1);

NcPoly build_y(int n, int k);

// x_k from the explicit sum of complementary minors, prefactors as displayed.
NcPoly build_x_display(int n, int k, int param_sign = 1);

enum class Involution { StarSl, Star2Sl, StarPol };

// x_k written as sum of t_IJ (t_IJ)^inv; homogeneous of degree 2nk.
NcPoly build_x_star_form(int n, int k, Involution inv, int param_sign = 1);

// Measured single-monomial c with star form = c * display * det^(k-1).
// Throws std::runtime_error when the two forms are not monomially related.
Scalar x_convention_factor(int n, int k, int param_sign = 1);

// x_k in the convention of the star form, reduced to degree 2n:
// x_convention_factor * display. This is the element the sigma checks use.
NcPoly build_x(int n, int k, int param_sign = 1);

NcPoly apply_involution(Involution variant, const NcPoly& f);
// Image of a single generator under StarSl / Star2Sl.
NcPoly involution_image(Involution variant, int n, int i, int j, int param_sign = 1);

// Antilinear antiautomorphism C[M_2n]_q -> C[M_2n]_{q^-1}, t_ij -> t_ij.
NcPoly sigma(const NcPoly& f);

// The *-homomorphism Pol(Mat_n)_q -> Pol(Mat_{n-1})_q.
NcPoly jn_map(const NcPoly& f);
// J_n on a formal (not necessarily canonical) combination of Pol(Mat_n)_q words.
NcPoly jn_map_formal(int n, const Combination& expr);

// true iff a == b * det^m in C[M_2n]_q (after ordering so deg a >= deg b).
bool equal_mod_det(const NcPoly& a, const NcPoly& b, int n);
// Scalar c with a == c * b * det^m, if one exists.
std::optional<Scalar> ratio_mod_det(const NcPoly& a, const NcPoly& b, int n);

// Recovers the kind from an algebra created by algebra(kind).
AlgebraKind kind_of(const Algebra& alg);

} // namespace qmb
