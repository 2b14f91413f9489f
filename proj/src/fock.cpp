#include "qmb/fock.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include <omp.h>

namespace qmb {

namespace {

bool is_star(const Algebra& alg, Letter g) { return alg.presentation().letter_class(g) == LetterClass::Antiholomorphic; }

void require_pol(const Algebra& alg, const char* what)
{
    if (kind_of(alg).family != MatrixFamily::PolMat) {
        throw std::invalid_argument(std::string(what) + ": expected an element of Pol(Mat_n)_q");
    }
}

// Memo of s . (w v0) for a single annihilation letter s and canonical
// holomorphic word w, keyed by s followed by w.
class StarActionCache {
public:
    explicit StarActionCache(const Algebra& alg) : alg_(alg) {}

    void act_into(Letter s, const Word& w, const Scalar& c, TermMap& out)
    {
        if (w.empty() || c.is_zero()) {
            return;
        }
        const Word key = Word{s} + w;
        const TermList* hit = nullptr;
        {
            std::shared_lock lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                hit = &it->second;
            }
        }
        if (hit == nullptr) {
            TermList value = compute(s, w);
            std::unique_lock lock(mu_);
            hit = &memo_.emplace(key, std::move(value)).first->second;
        }
        for (const auto& [u, cu] : *hit) {
            accumulate(out, u, c.is_one() ? cu : c * cu);
        }
    }

private:
    // s h rest = sum coef h' (s' rest) + delta rest, with s' rest recursive.
    TermList compute(Letter s, const Word& w)
    {
        const Letter h = w.front();
        const Word rest = w.suffix(1);
        const Combination* rule = alg_.presentation().rule(s, h);
        if (rule == nullptr) {
            throw std::logic_error("fock: no cross rule for an annihilation/creation pair");
        }
        TermMap acc;
        for (const auto& [coef, u] : *rule) {
            if (u.empty()) {
                accumulate(acc, rest, coef);
            } else if (u.size() == 2 && !is_star(alg_, u[0]) && is_star(alg_, u[1])) {
                TermMap inner;
                act_into(u[1], rest, Scalar(1), inner);
                for (const auto& [x, cx] : inner) {
                    alg_.prepend_into(u[0], x, coef * cx, acc);
                }
            } else {
                throw std::logic_error("fock: unexpected shape of a cross rule");
            }
        }
        return {acc.begin(), acc.end()};
    }

    const Algebra& alg_;
    std::shared_mutex mu_;
    std::unordered_map<Word, TermList, WordHash> memo_;
};

StarActionCache& star_cache(const Algebra& alg)
{
    static std::mutex mu;
    static std::map<const Algebra*, std::unique_ptr<StarActionCache>> caches;
    std::lock_guard lock(mu);
    auto& slot = caches[&alg];
    if (!slot) {
        slot = std::make_unique<StarActionCache>(alg);
    }
    return *slot;
}

// Applies one word of Pol(Mat_n)_q to a vector, right to left.
void apply_word_into(const Algebra& alg, const Word& w, const Scalar& c, const TermMap& v, TermMap& out)
{
    StarActionCache& cache = star_cache(alg);
    TermMap cur;
    for (const auto& [u, cu] : v) {
        cur.emplace(u, cu * c);
    }
    for (std::size_t i = w.size(); i-- > 0 && !cur.empty();) {
        TermMap next;
        const Letter g = w[i];
        if (is_star(alg, g)) {
            for (const auto& [u, cu] : cur) {
                cache.act_into(g, u, cu, next);
            }
        } else {
            for (const auto& [u, cu] : cur) {
                alg.prepend_into(g, u, cu, next);
            }
        }
        cur = std::move(next);
    }
    for (const auto& [u, cu] : cur) {
        accumulate(out, u, cu);
    }
}

} // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
        }
    }
}

bool Partition::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions(int n, int max_part)
{
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Enumerate weakly decreasing sequences lexicographically.
    auto rec = [&](auto&& self, int pos, int bound) -> void {
        if (pos == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- FockVector

FockVector::FockVector(std::shared_ptr<const Algebra> algebra, TermMap terms) : alg_(std::move(algebra))
{
    for (auto& [w, c] : terms) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (is_star(*alg_, w[i])) {
                throw std::invalid_argument("FockVector: words must be holomorphic");
            }
        }
        if (!c.is_zero()) {
            terms_.emplace(w, std::move(c));
        }
    }
}

FockVector FockVector::vacuum(int n)
{
    TermMap t;
    t.emplace(Word(), Scalar(1));
    return FockVector(qmb::algebra(AlgebraKind::pol(n)), std::move(t));
}

Scalar FockVector::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

FockVector& FockVector::operator+=(const FockVector& b)
{
    if (alg_ != b.alg_) {
        throw std::invalid_argument("FockVector: operands belong to different modules");
    }
    for (const auto& [w, c] : b.terms_) {
        accumulate(terms_, w, c);
    }
    return *this;
}

FockVector operator*(const Scalar& c, const FockVector& v)
{
    FockVector r(v.alg_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [w, cw] : v.terms_) {
        r.terms_.emplace(w, c * cw);
    }
    return r;
}

bool operator==(const FockVector& a, const FockVector& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

NcPoly FockVector::as_poly() const { return NcPoly(alg_, terms_); }

std::string FockVector::to_string() const
{
    const std::string s = as_poly().to_string();
    return s == "0" ? s : "(" + s + ")*v0";
}

// ---------------------------------------------------------------- action

FockVector fock_apply(const NcPoly& f, const FockVector& v)
{
    if (f.algebra_ptr() != v.algebra_ptr()) {
        throw std::invalid_argument("fock_apply: operator and vector live over different algebras");
    }
    const Algebra& alg = f.algebra();
    const TermList ops(f.terms().begin(), f.terms().end());
    TermMap result;
#pragma omp parallel if (ops.size() > 8 && omp_get_level() == 0)
    {
        TermMap local;
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < ops.size(); ++i) {
            apply_word_into(alg, ops[i].first, ops[i].second, v.terms(), local);
        }
#pragma omp critical(qmb_fock_merge)
        for (const auto& [w, c] : local) {
            accumulate(result, w, c);
        }
    }
    return FockVector(f.algebra_ptr(), std::move(result));
}

FockVector fock_apply_reference(const NcPoly& f, const FockVector& v)
{
    if (f.algebra_ptr() != v.algebra_ptr()) {
        throw std::invalid_argument("fock_apply_reference: operator and vector live over different algebras");
    }
    const Algebra& alg = f.algebra();
    Combination expr;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            expr.push_back({ca * cb, a + b});
        }
    }
    const NcPoly full = alg.normal_form_reference(expr, Strategy::LeftmostInnermost);
    TermMap kept;
    for (const auto& [w, c] : full.terms()) {
        bool annihilated = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            annihilated = annihilated || is_star(alg, w[i]);
        }
        if (!annihilated) {
            kept.emplace(w, c);
        }
    }
    return FockVector(f.algebra_ptr(), std::move(kept));
}

Scalar inner_product(const FockVector& v, const FockVector& w)
{
    const NcPoly g_star = apply_involution(Involution::StarPol, w.as_poly());
    return fock_apply(g_star, v).coefficient(Word());
}

std::vector<Word> holomorphic_basis(int n, int degree)
{
    // Canonical holomorphic words are the non-decreasing ones.
    std::vector<Word> out;
    const int gens = n * n;
    Word cur;
    auto rec = [&](auto&& self, int left, int lo) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = lo; g < gens; ++g) {
            Word saved = cur;
            cur.push_back(static_cast<Letter>(g));
            self(self, left - 1, g);
            cur = saved;
        }
    };
    rec(rec, degree, 0);
    return out;
}

std::vector<std::vector<Scalar>> gram_matrix(int n, int degree)
{
    auto alg = algebra(AlgebraKind::pol(n));
    const auto basis = holomorphic_basis(n, degree);
    std::vector<FockVector> vecs;
    for (const auto& w : basis) {
        TermMap t;
        t.emplace(w, Scalar(1));
        vecs.emplace_back(alg, std::move(t));
    }
    std::vector<std::vector<Scalar>> g(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            g[i][j] = inner_product(vecs[i], vecs[j]);
        }
    }
    return g;
}

Rational determinant(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) {
            ++p;
        }
        if (p == n) {
            return Rational(0);
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) {
                a[r][j] -= f * a[c][j];
            }
        }
    }
    return d;
}

std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& m)
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= m.size(); ++k) {
        std::vector<std::vector<Rational>> block(k);
        for (std::size_t i = 0; i < k; ++i) {
            block[i].assign(m[i].begin(), m[i].begin() + static_cast<std::ptrdiff_t>(k));
        }
        out.push_back(determinant(std::move(block)));
    }
    return out;
}

FockVector u_lambda(int n, const Partition& lambda)
{
    if (lambda.size() != n) {
        throw std::invalid_argument("u_lambda: partition must have n parts");
    }
    const AlgebraKind kind = AlgebraKind::pol(n);
    auto alg = algebra(kind);
    NcPoly p = det_z(kind).pow(static_cast<unsigned>(lambda[static_cast<std::size_t>(n - 1)]));
    for (int j = 1; j < n; ++j) {
        const int e = lambda[static_cast<std::size_t>(j - 1)] - lambda[static_cast<std::size_t>(j)];
        if (e == 0) {
            continue;
        }
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) {
            idx[static_cast<std::size_t>(i)] = i + 1;
        }
        p = p * qminor(kind, IndexSet(idx), IndexSet(idx)).pow(static_cast<unsigned>(e));
    }
    return FockVector(alg, p.terms());
}

Scalar eigenvalue_on(const NcPoly& f, const Partition& lambda)
{
    require_pol(f.algebra(), "eigenvalue_on");
    const int n = kind_of(f.algebra()).n;
    const FockVector u = u_lambda(n, lambda);
    const FockVector w = fock_apply(f, u);
    if (w.is_zero()) {
        return Scalar();
    }
    const Word* pivot = nullptr;
    for (const auto& [word, c] : u.terms()) {
        if (pivot == nullptr || deglex_less(word, *pivot)) {
            pivot = &word;
        }
    }
    Scalar c;
    try {
        c = divide_exact(w.coefficient(*pivot), u.coefficient(*pivot));
    } catch (const NotDivisible&) {
        throw NotProportional("eigenvalue_on: coefficient ratio at " + f.algebra().presentation().render(*pivot) +
                              " is not a Laurent polynomial");
    }
    if (!(w == c * u)) {
        auto diff = first_difference(w.as_poly(), (c * u).as_poly());
        throw NotProportional("eigenvalue_on: f u_lambda is not proportional to u_lambda for lambda = " +
                              lambda.to_string() + (diff ? "; first difference " + *diff : std::string()));
    }
    return c;
}

} // namespace qmb
