#include "qmb/qmatrices.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qmb {

namespace {

Scalar param_of(const AlgebraKind& kind) { return Scalar::q(kind.param_sign); }

// (-p)^e for integer e.
Scalar minus_p_pow(const Scalar& p, int e)
{
    const auto& [pe, pc] = p.terms().at(0);
    Rational c = pc.pow(e);
    if (e % 2 != 0) {
        c = -c;
    }
    return Scalar::monomial(c, pe * e);
}

Scalar p_pow(const Scalar& p, int e)
{
    const auto& [pe, pc] = p.terms().at(0);
    return Scalar::monomial(pc.pow(e), pe * e);
}

int permutation_inversions(const std::vector<int>& s)
{
    int l = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] > s[j]) {
                ++l;
            }
        }
    }
    return l;
}

// Relations (zaa1)-(zaa3) on an N x N matrix of letters m(row, col).
template <typename LetterOf>
void add_quantum_matrix_relations(Presentation& p, int N, const Scalar& param, LetterOf m)
{
    const Scalar pinv = p_pow(param, -1);
    for (int a = 1; a <= N; ++a) {
        for (int al = 1; al <= N; ++al) {
            for (int b = 1; b <= N; ++b) {
                for (int be = 1; be <= N; ++be) {
                    const Word ab{m(a, al), m(b, be)};
                    const Word ba{m(b, be), m(a, al)};
                    if ((a == b && al < be) || (a < b && al == be)) {
                        p.add_relation({{Scalar(1), ab}, {-param, ba}});
                    } else if (al < be && a > b) {
                        p.add_relation({{Scalar(1), ab}, {Scalar(-1), ba}});
                    } else if (al < be && a < b) {
                        p.add_relation({{Scalar(1), ab}, {Scalar(-1), ba}, {-(param - pinv), Word{m(a, be), m(b, al)}}});
                    }
                }
            }
        }
    }
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, std::shared_ptr<const Algebra>> by_kind;
    std::map<const Algebra*, AlgebraKind> kinds;
};

Registry& registry()
{
    static Registry r;
    return r;
}

void require_mat2n(const Algebra& alg, const char* what)
{
    if (kind_of(alg).family != MatrixFamily::QMat2n) {
        throw std::invalid_argument(std::string(what) + ": element must live in C[M_2n]_q");
    }
}

} // namespace

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<int> elements) : elems_(std::move(elements))
{
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i - 1] >= elems_[i]) {
            throw std::invalid_argument("IndexSet: elements must be strictly increasing");
        }
    }
}

int IndexSet::sum() const { return std::accumulate(elems_.begin(), elems_.end(), 0); }

bool IndexSet::contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

IndexSet IndexSet::complement(int lo, int hi) const
{
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) {
        if (!contains(i)) {
            out.push_back(i);
        }
    }
    return IndexSet(std::move(out));
}

std::string IndexSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(elems_[i]);
    }
    return s + "}";
}

std::vector<IndexSet> subsets(int lo, int hi, int k)
{
    std::vector<IndexSet> out;
    const int n = hi - lo + 1;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), lo);
    while (true) {
        out.emplace_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi - (k - 1 - i)) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

int cross_inversions(const IndexSet& a, const IndexSet& b)
{
    int l = 0;
    for (int i : a.elements()) {
        for (int j : b.elements()) {
            if (i > j) {
                ++l;
            }
        }
    }
    return l;
}

// ---------------------------------------------------------------- kinds and letters

std::string AlgebraKind::name() const
{
    std::string base;
    switch (family) {
    case MatrixFamily::HolMat:
        base = "HolMat";
        break;
    case MatrixFamily::PolMat:
        base = "PolMat";
        break;
    case MatrixFamily::QMat2n:
        base = "QMat2n";
        break;
    }
    base += "(" + std::to_string(n) + ")";
    if (param_sign != 1) {
        base += "[q^-1]";
    }
    return base;
}

Letter z_letter(int n, int a, int alpha) { return static_cast<Letter>(n * (a - 1) + alpha - 1); }

Letter zs_letter(int n, int a, int alpha) { return static_cast<Letter>(2 * n * n - (n * (a - 1) + alpha)); }

Letter t_letter(int n, int i, int j) { return static_cast<Letter>(2 * n * (i - 1) + j - 1); }

Scalar r_coefficient(int j, int i, int jp, int ip, const Scalar& p)
{
    if (i != j && j == jp && i == ip) {
        return p_pow(p, -1);
    }
    if (i == j && i == ip && i == jp) {
        return Scalar(1);
    }
    if (i == j && ip == jp && ip > i) {
        return -(p_pow(p, -2) - Scalar(1));
    }
    return Scalar();
}

Presentation build_presentation(AlgebraKind kind)
{
    const int n = kind.n;
    if (n < 1) {
        throw std::invalid_argument("build_presentation: n must be positive");
    }
    if (kind.param_sign != 1 && kind.param_sign != -1) {
        throw std::invalid_argument("build_presentation: parameter sign must be +1 or -1");
    }
    const Scalar p = param_of(kind);
    std::vector<std::string> labels;
    std::vector<LetterClass> classes;

    if (kind.family == MatrixFamily::QMat2n) {
        const int N = 2 * n;
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                labels.push_back("t[" + std::to_string(i) + "," + std::to_string(j) + "]");
                classes.push_back(LetterClass::Holomorphic);
            }
        }
        Presentation pres(kind.name(), std::move(labels), std::move(classes), p);
        add_quantum_matrix_relations(pres, N, p, [n](int i, int j) { return t_letter(n, i, j); });
        return pres;
    }

    for (int a = 1; a <= n; ++a) {
        for (int al = 1; al <= n; ++al) {
            labels.push_back("z[" + std::to_string(a) + "," + std::to_string(al) + "]");
            classes.push_back(LetterClass::Holomorphic);
        }
    }
    if (kind.family == MatrixFamily::PolMat) {
        labels.resize(static_cast<std::size_t>(2 * n * n));
        classes.resize(labels.size(), LetterClass::Antiholomorphic);
        for (int a = 1; a <= n; ++a) {
            for (int al = 1; al <= n; ++al) {
                labels[zs_letter(n, a, al)] = "zs[" + std::to_string(a) + "," + std::to_string(al) + "]";
            }
        }
    }
    Presentation pres(kind.name(), std::move(labels), std::move(classes), p);
    add_quantum_matrix_relations(pres, n, p, [n](int a, int al) { return z_letter(n, a, al); });
    if (kind.family == MatrixFamily::HolMat) {
        return pres;
    }

    // (zaa1*)-(zaa3*): the image of (zaa1)-(zaa3) under the antilinear
    // antiautomorphism z -> z*, with real coefficients.
    {
        std::vector<Combination> star_relations;
        for (int a = 1; a <= n; ++a) {
            for (int al = 1; al <= n; ++al) {
                for (int b = 1; b <= n; ++b) {
                    for (int be = 1; be <= n; ++be) {
                        auto zs = [n](int r, int c) { return zs_letter(n, r, c); };
                        const Word ab{zs(b, be), zs(a, al)};
                        const Word ba{zs(a, al), zs(b, be)};
                        if ((a == b && al < be) || (a < b && al == be)) {
                            star_relations.push_back({{Scalar(1), ab}, {-p, ba}});
                        } else if (al < be && a > b) {
                            star_relations.push_back({{Scalar(1), ab}, {Scalar(-1), ba}});
                        } else if (al < be && a < b) {
                            star_relations.push_back(
                                {{Scalar(1), ab}, {Scalar(-1), ba}, {-(p - p_pow(p, -1)), Word{zs(b, al), zs(a, be)}}});
                        }
                    }
                }
            }
        }
        for (const auto& r : star_relations) {
            pres.add_relation(r);
        }
    }

    // (z*z): (z_b^beta)* z_a^alpha = p^2 sum R R z_{a'}^{alpha'} (z_{b'}^{beta'})* + (1 - p^2) delta delta.
    const Scalar p2 = p_pow(p, 2);
    for (int b = 1; b <= n; ++b) {
        for (int be = 1; be <= n; ++be) {
            for (int a = 1; a <= n; ++a) {
                for (int al = 1; al <= n; ++al) {
                    Combination rel;
                    rel.push_back({Scalar(1), Word{zs_letter(n, b, be), z_letter(n, a, al)}});
                    for (int ap = 1; ap <= n; ++ap) {
                        for (int bp = 1; bp <= n; ++bp) {
                            const Scalar r1 = r_coefficient(b, a, bp, ap, p);
                            if (r1.is_zero()) {
                                continue;
                            }
                            for (int alp = 1; alp <= n; ++alp) {
                                for (int bep = 1; bep <= n; ++bep) {
                                    const Scalar r2 = r_coefficient(be, al, bep, alp, p);
                                    if (r2.is_zero()) {
                                        continue;
                                    }
                                    rel.push_back(
                                        {-(p2 * r1 * r2), Word{z_letter(n, ap, alp), zs_letter(n, bp, bep)}});
                                }
                            }
                        }
                    }
                    if (a == b && al == be) {
                        rel.push_back({-(Scalar(1) - p2), Word()});
                    }
                    pres.add_relation(rel);
                }
            }
        }
    }
    return pres;
}

std::shared_ptr<const Algebra> algebra(AlgebraKind kind)
{
    auto& reg = registry();
    const auto key = std::make_tuple(static_cast<int>(kind.family), kind.n, kind.param_sign);
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.by_kind.find(key);
        if (it != reg.by_kind.end()) {
            return it->second;
        }
    }
    auto alg = Algebra::make(build_presentation(kind));
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.by_kind.emplace(key, alg);
    if (inserted) {
        reg.kinds.emplace(alg.get(), kind);
    }
    return it->second;
}

AlgebraKind kind_of(const Algebra& alg)
{
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto it = reg.kinds.find(&alg);
    if (it == reg.kinds.end()) {
        throw std::invalid_argument("kind_of: algebra was not created by qmb::algebra()");
    }
    return it->second;
}

// ---------------------------------------------------------------- minors, y_k, x_k

NcPoly qminor(AlgebraKind kind, const IndexSet& rows, const IndexSet& cols)
{
    const int k = static_cast<int>(rows.size());
    if (k == 0 || cols.size() != rows.size()) {
        throw std::invalid_argument("qminor: index sets must be nonempty and of equal size");
    }
    const int range = kind.family == MatrixFamily::QMat2n ? 2 * kind.n : kind.n;
    for (const IndexSet* s : {&rows, &cols}) {
        if (s->elements().front() < 1 || s->elements().back() > range) {
            throw IndexOutOfRange("qminor: index outside [1, " + std::to_string(range) + "]");
        }
    }
    auto alg = algebra(kind);
    const Scalar p = param_of(kind);
    std::vector<int> s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    Combination expr;
    do {
        Word w;
        for (int m = 0; m < k; ++m) {
            const int r = rows[static_cast<std::size_t>(m)];
            const int c = cols[static_cast<std::size_t>(s[static_cast<std::size_t>(m)])];
            w.push_back(kind.family == MatrixFamily::QMat2n ? t_letter(kind.n, r, c) : z_letter(kind.n, r, c));
        }
        expr.push_back({minus_p_pow(p, permutation_inversions(s)), std::move(w)});
    } while (std::next_permutation(s.begin(), s.end()));
    return alg->normal_form(expr);
}

NcPoly det_z(AlgebraKind kind)
{
    std::vector<int> all(static_cast<std::size_t>(kind.n));
    std::iota(all.begin(), all.end(), 1);
    return qminor(kind, IndexSet(all), IndexSet(all));
}

NcPoly det_t(int n, int param_sign)
{
    std::vector<int> all(static_cast<std::size_t>(2 * n));
    std::iota(all.begin(), all.end(), 1);
    return qminor(AlgebraKind::mat2n(n, param_sign), IndexSet(all), IndexSet(all));
}

NcPoly build_y(int n, int k)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("build_y: need 1 <= k <= n");
    }
    const AlgebraKind kind = AlgebraKind::pol(n);
    auto alg = algebra(kind);
    const auto sets = subsets(1, n, k);
    NcPoly y = alg->zero();
    for (const auto& upper : sets) {
        for (const auto& lower : sets) {
            NcPoly m = qminor(kind, lower, upper);
            y += m * apply_involution(Involution::StarPol, m);
        }
    }
    return y;
}

NcPoly build_x_display(int n, int k, int param_sign)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("build_x_display: need 1 <= k <= n");
    }
    const AlgebraKind kind = AlgebraKind::mat2n(n, param_sign);
    auto alg = algebra(kind);
    const Scalar p = param_of(kind);
    NcPoly x = alg->zero();
    for (const auto& I : subsets(1, n, k)) {
        for (const auto& J : subsets(n + 1, 2 * n, k)) {
            int e2 = 0;
            int e3 = 0;
            for (std::size_t m = 0; m < I.size(); ++m) {
                e2 += n - I[m];
                e3 += J[m] - I[m] - n;
            }
            const Scalar pref = p_pow(p, -2 * e2) * minus_p_pow(p, e3);
            x += pref * (qminor(kind, I, J) * qminor(kind, I.complement(1, 2 * n), J.complement(1, 2 * n)));
        }
    }
    return p_pow(p, k * (k - 1)) * x;
}

NcPoly build_x_star_form(int n, int k, Involution inv, int param_sign)
{
    if (k < 1 || k > n) {
        throw std::invalid_argument("build_x_star_form: need 1 <= k <= n");
    }
    if (inv == Involution::StarPol) {
        throw std::invalid_argument("build_x_star_form: involution must act on C[M_2n]_q");
    }
    const AlgebraKind kind = AlgebraKind::mat2n(n, param_sign);
    auto alg = algebra(kind);
    const Scalar p = param_of(kind);
    NcPoly x = alg->zero();
    for (const auto& I : subsets(1, n, k)) {
        for (const auto& J : subsets(n + 1, 2 * n, k)) {
            int e2 = 0;
            for (std::size_t m = 0; m < I.size(); ++m) {
                e2 += n - I[m];
            }
            NcPoly minor = qminor(kind, I, J);
            x += p_pow(p, -2 * e2) * (minor * apply_involution(inv, minor));
        }
    }
    return p_pow(p, k * (k - 1)) * x;
}

Scalar x_convention_factor(int n, int k, int param_sign)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Scalar> memo;
    const auto key = std::make_tuple(n, k, param_sign);
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
    }
    auto c = ratio_mod_det(build_x_star_form(n, k, Involution::StarSl, param_sign), build_x_display(n, k, param_sign), n);
    if (!c || !c->is_monomial()) {
        throw std::runtime_error("x_convention_factor: star form and display form of x_" + std::to_string(k) +
                                 " are not monomially proportional for n=" + std::to_string(n));
    }
    std::lock_guard lock(mu);
    memo.emplace(key, *c);
    return *c;
}

NcPoly build_x(int n, int k, int param_sign)
{
    return x_convention_factor(n, k, param_sign) * build_x_display(n, k, param_sign);
}

// ---------------------------------------------------------------- involutions, sigma, J_n

NcPoly involution_image(Involution variant, int n, int i, int j, int param_sign)
{
    const AlgebraKind kind = AlgebraKind::mat2n(n, param_sign);
    const Scalar p = param_of(kind);
    const int N = 2 * n;
    Scalar c = minus_p_pow(p, j - i);
    if (variant == Involution::StarSl) {
        // sign of (i - n - 1/2)(n - j + 1/2), computed on doubled values.
        const int s = (2 * i - 2 * n - 1) * (2 * n - 2 * j + 1);
        if (s < 0) {
            c = -c;
        }
    } else if (variant != Involution::Star2Sl) {
        throw std::invalid_argument("involution_image: StarPol has no minor images");
    }
    if (N == 1) {
        return algebra(kind)->scalar(c);
    }
    const IndexSet rows = IndexSet({i}).complement(1, N);
    const IndexSet cols = IndexSet({j}).complement(1, N);
    return c * qminor(kind, rows, cols);
}

NcPoly apply_involution(Involution variant, const NcPoly& f)
{
    const auto& alg_ptr = f.algebra_ptr();
    const AlgebraKind kind = kind_of(*alg_ptr);
    std::vector<NcPoly> images;
    const auto size = alg_ptr->presentation().size();
    images.reserve(size);
    if (variant == Involution::StarPol) {
        if (kind.family != MatrixFamily::PolMat) {
            throw std::invalid_argument("apply_involution: StarPol acts on Pol(Mat_n)_q");
        }
        const int n = kind.n;
        for (std::size_t g = 0; g < size; ++g) {
            const int key = static_cast<int>(g < static_cast<std::size_t>(n * n) ? g : 2 * n * n - 1 - g);
            const int a = key / n + 1;
            const int al = key % n + 1;
            images.push_back(alg_ptr->letter(g < static_cast<std::size_t>(n * n) ? zs_letter(n, a, al) : z_letter(n, a, al)));
        }
        // Canonical words map to canonical words; no rewriting needed.
        TermMap out;
        for (const auto& [w, c] : f.terms()) {
            Word img;
            for (std::size_t i = w.size(); i-- > 0;) {
                img.push_back(images[w[i]].terms().begin()->first[0]);
            }
            accumulate(out, img, c);
        }
        return NcPoly(alg_ptr, std::move(out));
    }
    if (kind.family != MatrixFamily::QMat2n) {
        throw std::invalid_argument("apply_involution: StarSl/Star2Sl act on C[M_2n]_q");
    }
    const int N = 2 * kind.n;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            images.push_back(involution_image(variant, kind.n, i, j, kind.param_sign));
        }
    }
    NcPoly out = alg_ptr->zero();
    for (const auto& [w, c] : f.terms()) {
        NcPoly term = alg_ptr->scalar(c);
        for (std::size_t i = w.size(); i-- > 0;) {
            term = term * images[w[i]];
        }
        out += term;
    }
    return out;
}

NcPoly sigma(const NcPoly& f)
{
    require_mat2n(f.algebra(), "sigma");
    const AlgebraKind kind = kind_of(f.algebra());
    auto target = algebra(AlgebraKind::mat2n(kind.n, -kind.param_sign));
    Combination expr;
    expr.reserve(f.size());
    for (const auto& [w, c] : f.terms()) {
        expr.push_back({c, w.reversed()});
    }
    return target->normal_form(expr);
}

NcPoly jn_map(const NcPoly& f)
{
    const AlgebraKind kind = kind_of(f.algebra());
    if (kind.family != MatrixFamily::PolMat) {
        throw std::invalid_argument("jn_map: source must be Pol(Mat_n)_q");
    }
    Combination expr;
    expr.reserve(f.size());
    for (const auto& [w, c] : f.terms()) {
        expr.push_back({c, w});
    }
    return jn_map_formal(kind.n, expr);
}

NcPoly jn_map_formal(int n, const Combination& expr)
{
    if (n < 2) {
        throw std::invalid_argument("jn_map: requires n > 1");
    }
    auto target = algebra(AlgebraKind::pol(n - 1));
    // Image of a generator: a letter of the target (or the unit when letter
    // is -1) scaled by q^exponent; nullopt for 0.
    struct Image {
        int letter;
        int q_exponent;
    };
    std::vector<std::optional<Image>> images(static_cast<std::size_t>(2 * n * n));
    for (int a = 1; a <= n; ++a) {
        for (int al = 1; al <= n; ++al) {
            std::optional<Image> hol;
            std::optional<Image> star;
            if (a < n && al < n) {
                hol = Image{z_letter(n - 1, a, al), -1};
                star = Image{zs_letter(n - 1, a, al), -1};
            } else if (a == n && al == n) {
                hol = Image{-1, 0};
                star = Image{-1, 0};
            }
            images[z_letter(n, a, al)] = hol;
            images[zs_letter(n, a, al)] = star;
        }
    }
    Combination out;
    for (const auto& [c, w] : expr) {
        Word img;
        int e = 0;
        bool vanishes = false;
        for (std::size_t i = 0; i < w.size() && !vanishes; ++i) {
            if (w[i] >= images.size()) {
                throw std::out_of_range("jn_map: letter outside Pol(Mat_n)_q");
            }
            const auto& im = images[w[i]];
            if (!im) {
                vanishes = true;
                continue;
            }
            e += im->q_exponent;
            if (im->letter >= 0) {
                img.push_back(static_cast<Letter>(im->letter));
            }
        }
        if (!vanishes) {
            out.push_back({c * Scalar::q(e), std::move(img)});
        }
    }
    return target->normal_form(out);
}

std::optional<Scalar> ratio_mod_det(const NcPoly& a, const NcPoly& b, int n)
{
    require_mat2n(a.algebra(), "equal_mod_det");
    if (a.algebra_ptr() != b.algebra_ptr()) {
        throw std::invalid_argument("equal_mod_det: operands belong to different algebras");
    }
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) {
            return Scalar(1);
        }
        return std::nullopt;
    }
    if (!a.is_homogeneous() || !b.is_homogeneous()) {
        throw DegreeMismatch("equal_mod_det: operands must be homogeneous");
    }
    const int da = a.degree();
    const int db = b.degree();
    const int diff = da >= db ? da - db : db - da;
    if (diff % (2 * n) != 0) {
        throw DegreeMismatch("equal_mod_det: degrees " + std::to_string(da) + " and " + std::to_string(db) +
                             " are incongruent mod " + std::to_string(2 * n));
    }
    const auto m = static_cast<unsigned>(diff / (2 * n));
    const int sign = kind_of(a.algebra()).param_sign;
    const NcPoly detm = det_t(n, sign).pow(m);
    if (da >= db) {
        return proportionality_factor(a, b * detm);
    }
    auto c = proportionality_factor(a * detm, b);
    return c;
}

bool equal_mod_det(const NcPoly& a, const NcPoly& b, int n)
{
    auto c = ratio_mod_det(a, b, n);
    return c && c->is_one();
}

} // namespace qmb
