#include "qmb/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmb {

namespace {

template <typename T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& zero)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return zero;
    }
    if (n == 1) {
        return m[0][0];
    }
    T det = zero;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == zero) {
            continue;
        }
        std::vector<std::vector<T>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) {
                    minor[r - 1].push_back(m[r][j]);
                }
            }
        }
        T term = m[0][c] * laplace_determinant(minor, zero);
        if (c % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

void check_nu(const std::vector<int>& nu, int n)
{
    if (static_cast<int>(nu.size()) > n) {
        throw std::invalid_argument("factorial_schur: partition has more than n parts");
    }
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] < 0 || (i > 0 && nu[i] > nu[i - 1])) {
            throw std::invalid_argument("factorial_schur: not a partition");
        }
    }
}

int part(const std::vector<int>& nu, int j) { return j < static_cast<int>(nu.size()) ? nu[static_cast<std::size_t>(j)] : 0; }

std::vector<Scalar> shifted_points(int n, const Partition& lambda, int step)
{
    std::vector<Scalar> pts;
    for (int i = 0; i < n; ++i) {
        pts.push_back(Scalar::q(step * (lambda[static_cast<std::size_t>(i)] + n - 1 - i)));
    }
    return pts;
}

} // namespace

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, const Scalar& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i)
{
    if (i < 1 || i > nvars) {
        throw std::out_of_range("MultiPoly::variable: index out of range");
    }
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

Scalar MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c)
{
    if (static_cast<int>(e.size()) != nvars_) {
        throw std::invalid_argument("MultiPoly: exponent vector has the wrong length");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b)
{
    if (nvars_ != b.nvars_) {
        throw std::invalid_argument("MultiPoly: variable counts differ");
    }
    for (const auto& [e, c] : b.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) { return *this += Scalar(-1) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_) {
        throw std::invalid_argument("MultiPoly: variable counts differ");
    }
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a)
{
    MultiPoly r(a.nvars_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [e, ce] : a.terms_) {
        r.terms_.emplace(e, c * ce);
    }
    return r;
}

MultiPoly MultiPoly::divide_by_difference(int i, int j) const
{
    if (i == j || i < 1 || j < 1 || i > nvars_ || j > nvars_) {
        throw std::invalid_argument("divide_by_difference: bad variable pair");
    }
    const auto ii = static_cast<std::size_t>(i - 1);
    const auto jj = static_cast<std::size_t>(j - 1);
    MultiPoly work = *this;
    MultiPoly quotient(nvars_);
    while (true) {
        // Leading term in x_i.
        const Exponents* lead = nullptr;
        for (const auto& [e, c] : work.terms_) {
            if (e[ii] > 0 && (lead == nullptr || e[ii] > (*lead)[ii])) {
                lead = &e;
            }
        }
        if (lead == nullptr) {
            break;
        }
        Exponents e = *lead;
        const Scalar c = work.terms_.at(e);
        Exponents down = e;
        --down[ii];
        quotient.add_term(down, c);
        Exponents swapped = down;
        ++swapped[jj];
        work.add_term(e, -c);
        work.add_term(swapped, c);
    }
    if (!work.is_zero()) {
        throw NotDivisible("divide_by_difference: polynomial is not divisible by x" + std::to_string(i) + " - x" +
                           std::to_string(j));
    }
    return quotient;
}

MultiPoly MultiPoly::swap_variables(int i, int j) const
{
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(j - 1)]);
        r.add_term(f, c);
    }
    return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const
{
    if (static_cast<int>(point.size()) != nvars_) {
        throw std::invalid_argument("MultiPoly::evaluate: point has the wrong dimension");
    }
    Scalar sum;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                t *= point[i].pow(static_cast<unsigned>(e[i]));
            }
        }
        sum += t;
    }
    return sum;
}

std::string MultiPoly::to_string(const std::string& coeff_var) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Scalar>> sorted(terms_.begin(), terms_.end());
    auto total = [](const Exponents& e) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        return s;
    };
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        const int ta = total(a.first);
        const int tb = total(b.first);
        return ta != tb ? ta > tb : a.first > b.first;
    });
    std::string out;
    auto emit = [&](bool negative, const std::string& body) {
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    };
    for (const auto& [e, c] : sorted) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
            if (e[i] != 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            for (const auto& [ex, cx] : c.terms()) {
                const Scalar mag = Scalar::monomial(cx.sign() < 0 ? -cx : cx, ex);
                emit(cx.sign() < 0, mag.to_string(coeff_var));
            }
        } else if (c.is_monomial()) {
            const auto& [ex, cx] = c.terms().front();
            const Scalar mag = Scalar::monomial(cx.sign() < 0 ? -cx : cx, ex);
            emit(cx.sign() < 0, mag.is_one() ? mono : mag.to_string(coeff_var) + "*" + mono);
        } else {
            emit(false, "(" + c.to_string(coeff_var) + ")*" + mono);
        }
    }
    return out;
}

// ---------------------------------------------------------------- q-combinatorics

Scalar q_pochhammer(int a)
{
    if (a < 0) {
        throw std::domain_error("q_pochhammer: negative index");
    }
    Scalar r(1);
    for (int i = 1; i <= a; ++i) {
        r *= Scalar(1) - Scalar::q(i);
    }
    return r;
}

Scalar q_binomial(int a, int b)
{
    if (b < 0 || b > a) {
        throw std::domain_error("q_binomial: need 0 <= b <= a");
    }
    return divide_exact(q_pochhammer(a), q_pochhammer(b) * q_pochhammer(a - b));
}

Scalar elementary_symmetric(int k, const std::vector<Scalar>& values)
{
    if (k < 0 || k > static_cast<int>(values.size())) {
        throw std::domain_error("elementary_symmetric: need 0 <= k <= number of values");
    }
    // e[j] after processing a prefix of the values.
    std::vector<Scalar> e(static_cast<std::size_t>(k) + 1);
    e[0] = Scalar(1);
    for (const auto& v : values) {
        for (std::size_t j = static_cast<std::size_t>(k); j >= 1; --j) {
            e[j] += e[j - 1] * v;
        }
    }
    return e[static_cast<std::size_t>(k)];
}

MultiPoly elementary_symmetric_poly(int k, int nvars)
{
    MultiPoly r(nvars);
    for (const auto& s : subsets(1, nvars, k)) {
        MultiPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
        for (int i : s.elements()) {
            e[static_cast<std::size_t>(i - 1)] = 1;
        }
        r.add_term(e, Scalar(1));
    }
    return r;
}

Scalar SchurVariant::shift(int m) const
{
    if (classical) {
        return Scalar(m);
    }
    return parameter.pow(static_cast<unsigned>(m));
}

MultiPoly factorial_schur(const std::vector<int>& nu, int n, const SchurVariant& variant)
{
    check_nu(nu, n);
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            MultiPoly entry = MultiPoly::constant(n, Scalar(1));
            const int top = part(nu, j - 1) + n - j;
            for (int s = 0; s < top; ++s) {
                entry = entry * (MultiPoly::variable(n, i) - MultiPoly::constant(n, variant.shift(s)));
            }
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(entry);
        }
    }
    MultiPoly det = laplace_determinant(m, MultiPoly(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            det = det.divide_by_difference(i, j);
        }
    }
    return det;
}

Scalar factorial_schur_at(const std::vector<int>& nu, const std::vector<Scalar>& points, const SchurVariant& variant)
{
    const int n = static_cast<int>(points.size());
    check_nu(nu, n);
    std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Scalar entry(1);
            const int top = part(nu, j) + n - j - 1;
            for (int s = 0; s < top; ++s) {
                entry *= points[static_cast<std::size_t>(i)] - variant.shift(s);
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(entry);
        }
    }
    Scalar vandermonde(1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            vandermonde *= points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(j)];
        }
    }
    if (vandermonde.is_zero()) {
        throw std::domain_error("factorial_schur_at: points must be distinct");
    }
    return divide_exact(laplace_determinant(m, Scalar()), vandermonde);
}

std::vector<int> one_k(int k, int n)
{
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
        nu[static_cast<std::size_t>(i)] = 1;
    }
    return nu;
}

// ---------------------------------------------------------------- spectral formulas

Scalar spectral_rhs(const SpectralFormula& formula, int n, const Partition& lambda)
{
    if (lambda.size() != n) {
        throw std::invalid_argument("spectral_rhs: partition must have n parts");
    }
    const int k = formula.k;
    if (formula.kind != SpectralKind::Y1 && (k < 0 || k > n || (k == 0 && formula.kind != SpectralKind::Thm1))) {
        throw std::invalid_argument("spectral_rhs: k out of range");
    }
    switch (formula.kind) {
    case SpectralKind::Thm1: {
        if (k == 0) {
            return Scalar(1);
        }
        const Scalar c = Scalar::monomial(Rational(k % 2 == 0 ? 1 : -1), -k * (k - 1) - 2 * k * (n - k));
        return c * factorial_schur_at(one_k(k, n), shifted_points(n, lambda, 2), SchurVariant::q_param(Scalar::q(2)));
    }
    case SpectralKind::Y1: {
        Scalar s;
        for (int j = 1; j <= n; ++j) {
            s += Scalar::q(-2 * (j - 1));
            s -= Scalar::q(2 * (lambda[static_cast<std::size_t>(j - 1)] - (j - 1)));
        }
        return s;
    }
    case SpectralKind::Xk:
        return Scalar::q(k * (k - 1)) * elementary_symmetric(k, shifted_points(n, lambda, -2));
    case SpectralKind::Classical: {
        std::vector<Scalar> pts;
        for (int i = 0; i < n; ++i) {
            pts.emplace_back(static_cast<long long>(lambda[static_cast<std::size_t>(i)] + n - 1 - i));
        }
        return factorial_schur_at(one_k(k, n), pts, SchurVariant::classic());
    }
    }
    throw std::logic_error("spectral_rhs: unknown formula");
}

bool prop8_identity_check(int n, int k)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("prop8_identity_check: need 1 <= k <= n");
    }
    const MultiPoly lhs = Scalar::q(k * (k - 1) - n * (n - 1)) * elementary_symmetric_poly(n - k, n);
    MultiPoly rhs(n);
    for (int m = 0; m <= n - k; ++m) {
        const Scalar c = Scalar::q(-m * (2 * n - m - 1)) * substitute_power(q_binomial(n - m, k), -2);
        rhs += c * factorial_schur(one_k(m, n), n, SchurVariant::q_param(Scalar::q(2)));
    }
    return lhs == rhs;
}

Prop7Result prop7_spectral_check(int n, int k, const Partition& lambda)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("prop7_spectral_check: need 1 <= k <= n");
    }
    std::vector<Scalar> y;
    for (int m = 0; m <= n; ++m) {
        y.push_back(spectral_rhs(SpectralFormula::thm1(m), n, lambda));
    }
    Scalar denominator;
    for (int m = 0; m <= n; ++m) {
        denominator += m % 2 == 0 ? y[static_cast<std::size_t>(m)] : -y[static_cast<std::size_t>(m)];
    }
    Scalar numerator;
    for (int m = 0; m <= n - k; ++m) {
        const Scalar t = substitute_power(q_binomial(n - m, k), -2) * y[static_cast<std::size_t>(m)];
        numerator += m % 2 == 0 ? t : -t;
    }
    Prop7Result r;
    r.lhs = spectral_rhs(SpectralFormula::xk(k), n, lambda) * denominator;
    r.rhs = numerator;
    r.exact = r.lhs == r.rhs;
    if (!r.exact && !r.lhs.is_zero()) {
        try {
            Scalar ratio = divide_exact(r.rhs, r.lhs);
            if (ratio.is_monomial()) {
                r.correction_factor = ratio;
            }
        } catch (const NotDivisible&) {
        }
    }
    return r;
}

Rational classical_limit(int n, int k, const Partition& lambda)
{
    const Scalar v = spectral_rhs(SpectralFormula::thm1(k), n, lambda);
    const Scalar reduced = divide_exact(v, (Scalar(1) - Scalar::q(2)).pow(static_cast<unsigned>(k)));
    return eval_at(reduced, Rational(1));
}

} // namespace qmb
