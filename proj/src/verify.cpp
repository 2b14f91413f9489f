#include "qmb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>

#include "qmb/fock.hpp"
#include "qmb/qmatrices.hpp"
#include "qmb/symfun.hpp"

namespace qmb {

namespace {

struct Outcome {
    CheckStatus status = CheckStatus::Pass;
    std::optional<std::string> witness;
    std::optional<std::string> correction_factor;
    std::optional<std::string> value;

    static Outcome pass(std::optional<std::string> value = std::nullopt)
    {
        Outcome o;
        o.value = std::move(value);
        return o;
    }
    static Outcome fail(std::string witness)
    {
        Outcome o;
        o.status = CheckStatus::Fail;
        o.witness = std::move(witness);
        return o;
    }
};

Outcome compare(const NcPoly& a, const NcPoly& b)
{
    if (auto d = first_difference(a, b)) {
        return Outcome::fail(*d);
    }
    return Outcome::pass();
}

Outcome compare(const Scalar& a, const Scalar& b)
{
    if (a == b) {
        return Outcome::pass(a.to_string());
    }
    return Outcome::fail(a.to_string() + " vs " + b.to_string());
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

// ------------------------------------------------------------- params

AlgebraKind kind_from(const Json& p)
{
    const std::string fam = p.at("algebra").get<std::string>();
    const int n = p.at("n").get<int>();
    if (fam == "HolMat") {
        return AlgebraKind::hol(n);
    }
    if (fam == "PolMat") {
        return AlgebraKind::pol(n);
    }
    if (fam == "QMat2n") {
        return AlgebraKind::mat2n(n, p.value("param_sign", 1));
    }
    throw std::invalid_argument("unknown algebra family " + fam);
}

Json kind_params(const AlgebraKind& k)
{
    Json p = Json::object();
    switch (k.family) {
    case MatrixFamily::HolMat:
        p["algebra"] = "HolMat";
        break;
    case MatrixFamily::PolMat:
        p["algebra"] = "PolMat";
        break;
    case MatrixFamily::QMat2n:
        p["algebra"] = "QMat2n";
        break;
    }
    p["n"] = k.n;
    if (k.family == MatrixFamily::QMat2n) {
        p["param_sign"] = k.param_sign;
    }
    return p;
}

Partition lambda_from(const Json& p) { return Partition(p.at("lambda").get<std::vector<int>>()); }

std::uint64_t seed_from(const CheckId& id)
{
    return std::hash<std::string>{}(id.name + id.params.dump());
}

// Elements reused across grid points.
NcPoly cached_y(int n, int k)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, NcPoly> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) {
            return it->second;
        }
    }
    NcPoly y = build_y(n, k);
    std::lock_guard lock(mu);
    return memo.emplace(std::make_pair(n, k), y).first->second;
}

// ------------------------------------------------------------- engine checks

Outcome check_pbw(const Json& p, const Algebra& alg)
{
    const int max_degree = p.at("max_degree").get<int>();
    const auto g = alg.presentation().size();
    std::string dims;
    for (int d = 0; d <= max_degree; ++d) {
        const auto got = alg.graded_dimension(d);
        const auto want = binomial(g + static_cast<std::uint64_t>(d) - 1, static_cast<std::uint64_t>(d));
        if (d == 0 ? got != 1 : got != want) {
            return Outcome::fail("degree " + std::to_string(d) + ": " + std::to_string(got) + " vs " +
                                 std::to_string(d == 0 ? 1 : want));
        }
        dims += (d ? ", " : "") + std::to_string(got);
    }
    if (p.at("algebra") == "PolMat") {
        const std::uint64_t h = g / 2;
        for (int a = 0; a <= max_degree; ++a) {
            for (int b = 0; a + b <= max_degree; ++b) {
                const auto got = alg.bigraded_dimension(a, b);
                const auto want = (a == 0 ? 1 : binomial(h + static_cast<std::uint64_t>(a) - 1, static_cast<std::uint64_t>(a))) *
                                  (b == 0 ? 1 : binomial(h + static_cast<std::uint64_t>(b) - 1, static_cast<std::uint64_t>(b)));
                if (got != want) {
                    return Outcome::fail("bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                                         "): " + std::to_string(got) + " vs " + std::to_string(want));
                }
            }
        }
    }
    return Outcome::pass("(" + dims + ")");
}

NcPoly random_element(const Algebra& alg, int max_degree, int terms, std::mt19937_64& rng)
{
    return alg.normal_form(random_combination(alg, max_degree, terms, rng));
}

Outcome check_associativity(const CheckId& id, const Algebra& alg)
{
    std::mt19937_64 rng(seed_from(id));
    const int triples = id.params.at("triples").get<int>();
    const int max_degree = id.params.at("max_degree").get<int>();
    for (int i = 0; i < triples; ++i) {
        const NcPoly a = random_element(alg, max_degree, 2, rng);
        const NcPoly b = random_element(alg, max_degree, 2, rng);
        const NcPoly c = random_element(alg, max_degree, 2, rng);
        Outcome o = compare((a * b) * c, a * (b * c));
        if (o.status == CheckStatus::Fail) {
            o.witness = "triple " + std::to_string(i) + ", " + *o.witness;
            return o;
        }
    }
    return Outcome::pass();
}

Outcome check_confluence(const CheckId& id, const Algebra& alg)
{
    const OverlapReport overlaps = check_overlaps(alg);
    if (overlaps.unresolved) {
        return Outcome::fail("overlap " + *overlaps.unresolved);
    }
    std::mt19937_64 rng(seed_from(id));
    const int samples = id.params.at("samples").get<int>();
    const int max_degree = id.params.at("max_degree").get<int>();
    for (int i = 0; i < samples; ++i) {
        const Combination expr = random_combination(alg, max_degree, 3, rng);
        const NcPoly left = alg.normal_form_reference(expr, Strategy::LeftmostInnermost);
        const NcPoly right = alg.normal_form_reference(expr, Strategy::RightmostInnermost);
        const NcPoly memo = alg.normal_form(expr);
        for (const auto* other : {&right, &memo}) {
            Outcome o = compare(left, *other);
            if (o.status == CheckStatus::Fail) {
                o.witness = "sample " + std::to_string(i) + (other == &right ? " (rightmost)" : " (memoized)") +
                            ", " + *o.witness;
                return o;
            }
        }
    }
    return Outcome::pass(std::to_string(overlaps.overlaps) + " overlaps resolved");
}

// ------------------------------------------------------------- structural checks

Outcome check_det_central(const Json& p)
{
    const AlgebraKind kind = AlgebraKind::hol(p.at("n").get<int>());
    auto alg = algebra(kind);
    const NcPoly det = det_z(kind);
    for (std::size_t g = 0; g < alg->presentation().size(); ++g) {
        const NcPoly z = alg->letter(static_cast<Letter>(g));
        Outcome o = compare(det * z, z * det);
        if (o.status == CheckStatus::Fail) {
            o.witness = alg->presentation().label(static_cast<Letter>(g)) + ": " + *o.witness;
            return o;
        }
    }
    return Outcome::pass(det.to_string());
}

Outcome check_star_involution(const CheckId& id)
{
    auto alg = algebra(AlgebraKind::pol(id.params.at("n").get<int>()));
    std::mt19937_64 rng(seed_from(id));
    const int pairs = id.params.at("pairs").get<int>();
    for (int i = 0; i < pairs; ++i) {
        const NcPoly f = random_element(*alg, 4, 2, rng);
        const NcPoly g = random_element(*alg, 4, 2, rng);
        const NcPoly fs = apply_involution(Involution::StarPol, f);
        if (Outcome o = compare(apply_involution(Involution::StarPol, fs), f); o.status == CheckStatus::Fail) {
            o.witness = "f** != f: " + *o.witness;
            return o;
        }
        const NcPoly lhs = apply_involution(Involution::StarPol, f * g);
        const NcPoly rhs = apply_involution(Involution::StarPol, g) * fs;
        if (Outcome o = compare(lhs, rhs); o.status == CheckStatus::Fail) {
            o.witness = "(fg)* != g*f*: " + *o.witness;
            return o;
        }
    }
    return Outcome::pass();
}

Outcome check_commutativity(const Json& p)
{
    const int n = p.at("n").get<int>();
    if (!p.contains("i")) {
        return Outcome::pass("single generator y_1");
    }
    const NcPoly yi = cached_y(n, p.at("i").get<int>());
    const NcPoly yj = cached_y(n, p.at("j").get<int>());
    return compare(yi * yj, yj * yi);
}

Outcome check_coroll1(const Json& p)
{
    const int n = p.at("n").get<int>();
    const AlgebraKind kind = AlgebraKind::pol(n);
    auto alg = algebra(kind);
    const NcPoly y1 = cached_y(n, 1);
    const NcPoly det = det_z(kind);
    const NcPoly lhs = y1 * det;
    const NcPoly rhs = Scalar::q(2) * (det * (y1 + alg->scalar(Scalar::q(-2 * n) - Scalar(1))));
    return compare(lhs, rhs);
}

Outcome check_jn(const CheckId& id)
{
    const int n = id.params.at("n").get<int>();
    auto alg = algebra(AlgebraKind::pol(n));
    const auto& pres = alg->presentation();
    int relations = 0;
    for (std::size_t g = 0; g < pres.size(); ++g) {
        for (std::size_t h = 0; h < pres.size(); ++h) {
            const Combination* rhs = pres.rule(static_cast<Letter>(g), static_cast<Letter>(h));
            if (rhs == nullptr) {
                continue;
            }
            ++relations;
            Combination rel{{Scalar(1), Word{static_cast<Letter>(g), static_cast<Letter>(h)}}};
            for (const auto& [c, w] : *rhs) {
                rel.push_back({-c, w});
            }
            const NcPoly image = jn_map_formal(n, rel);
            if (!image.is_zero()) {
                return Outcome::fail("relation " + pres.render(Word{static_cast<Letter>(g), static_cast<Letter>(h)}) +
                                     " maps to " + image.to_string());
            }
        }
    }
    std::mt19937_64 rng(seed_from(id));
    const int pairs = id.params.at("pairs").get<int>();
    for (int i = 0; i < pairs; ++i) {
        const NcPoly f = random_element(*alg, 3, 2, rng);
        const NcPoly g = random_element(*alg, 3, 2, rng);
        if (Outcome o = compare(jn_map(f * g), jn_map(f) * jn_map(g)); o.status == CheckStatus::Fail) {
            o.witness = "J(fg) != J(f)J(g) at pair " + std::to_string(i) + ": " + *o.witness;
            return o;
        }
        const NcPoly lhs = jn_map(apply_involution(Involution::StarPol, f));
        const NcPoly rhs = apply_involution(Involution::StarPol, jn_map(f));
        if (Outcome o = compare(lhs, rhs); o.status == CheckStatus::Fail) {
            o.witness = "J(f*) != J(f)* at pair " + std::to_string(i) + ": " + *o.witness;
            return o;
        }
    }
    return Outcome::pass(std::to_string(relations) + " relations, " + std::to_string(pairs) + " pairs");
}

Outcome check_gram(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int degree = p.at("degree").get<int>();
    const Rational q0 = Rational::parse(p.at("q").get<std::string>());
    const auto gram = gram_matrix(n, degree);
    std::vector<std::vector<Rational>> at(gram.size());
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (const auto& s : gram[i]) {
            at[i].push_back(eval_at(s, q0));
        }
    }
    const auto minors = leading_principal_minors(at);
    for (std::size_t i = 0; i < minors.size(); ++i) {
        if (minors[i].sign() <= 0) {
            return Outcome::fail("leading minor " + std::to_string(i + 1) + " = " + minors[i].to_string());
        }
    }
    return Outcome::pass(std::to_string(gram.size()) + " basis words");
}

// ------------------------------------------------------------- spectral checks

Outcome check_theorem1(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    const Partition lambda = lambda_from(p);
    return compare(eigenvalue_on(cached_y(n, k), lambda), spectral_rhs(SpectralFormula::thm1(k), n, lambda));
}

Outcome check_lemma_sigma(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    const NcPoly x = build_x(n, k, 1);
    const NcPoly lhs = sigma(x);
    const NcPoly rhs = Scalar::q(2 * k * k) * build_x(n, k, -1);
    Outcome o = compare(lhs, rhs);
    if (o.status == CheckStatus::Pass) {
        o.value = "x_k normalized as " + x_convention_factor(n, k, 1).to_string() + " times the minor-sum display";
    }
    return o;
}

Outcome check_xk_two_forms(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    const std::string variant = p.at("involution").get<std::string>();
    const Involution inv = variant == "star" ? Involution::StarSl : Involution::Star2Sl;
    const AlgebraKind kind = AlgebraKind::mat2n(n, 1);

    auto total = ratio_mod_det(build_x_star_form(n, k, inv), build_x_display(n, k), n);
    if (!total) {
        return Outcome::fail("star form is not a scalar multiple of the display times a power of det");
    }
    if (!total->is_monomial()) {
        return Outcome::fail("ratio " + total->to_string() + " is not a single monomial");
    }
    // Summand by summand, and agreement of the two involutions on the minors.
    for (const auto& I : subsets(1, n, k)) {
        for (const auto& J : subsets(n + 1, 2 * n, k)) {
            const NcPoly minor = qminor(kind, I, J);
            const NcPoly star = apply_involution(Involution::StarSl, minor);
            const NcPoly star2 = apply_involution(Involution::Star2Sl, minor);
            if (auto d = first_difference(star, star2)) {
                return Outcome::fail("(t_IJ)^* != (t_IJ)^star for I=" + I.to_string() + ", J=" + J.to_string() + ": " +
                                     *d);
            }
            int e3 = 0;
            for (std::size_t m = 0; m < I.size(); ++m) {
                e3 += J[m] - I[m] - n;
            }
            Scalar sign_power = Scalar::q(e3);
            if (e3 % 2 != 0) {
                sign_power = -sign_power;
            }
            const NcPoly display = sign_power * (minor * qminor(kind, I.complement(1, 2 * n), J.complement(1, 2 * n)));
            const NcPoly form = minor * (inv == Involution::StarSl ? star : star2);
            auto c = ratio_mod_det(form, display, n);
            if (!c || *c != *total) {
                return Outcome::fail("summand I=" + I.to_string() + ", J=" + J.to_string() + " has ratio " +
                                     (c ? c->to_string() : std::string("none")) + ", total ratio " +
                                     total->to_string());
            }
        }
    }
    Outcome o;
    if (total->is_one()) {
        o.status = CheckStatus::Pass;
    } else {
        o.status = CheckStatus::PassWithConventionFactor;
        o.correction_factor = total->to_string();
    }
    o.value = "star form = factor * display * det^" + std::to_string(k - 1);
    return o;
}

Outcome check_prop8(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    return prop8_identity_check(n, k) ? Outcome::pass() : Outcome::fail("expanded sides differ");
}

Outcome check_prop7(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    const Prop7Result r = prop7_spectral_check(n, k, lambda_from(p));
    if (r.exact) {
        return Outcome::pass(r.lhs.to_string());
    }
    if (r.correction_factor) {
        Outcome o;
        o.status = CheckStatus::PassWithConventionFactor;
        o.correction_factor = r.correction_factor->to_string();
        return o;
    }
    return Outcome::fail(r.lhs.to_string() + " vs " + r.rhs.to_string());
}

Outcome check_thm1_vs_y1(const Json& p)
{
    const int n = p.at("n").get<int>();
    const Partition lambda = lambda_from(p);
    const Scalar y1 = spectral_rhs(SpectralFormula::y1(), n, lambda);
    if (p.at("route") == "fock") {
        return compare(eigenvalue_on(cached_y(n, 1), lambda), y1);
    }
    return compare(spectral_rhs(SpectralFormula::thm1(1), n, lambda), y1);
}

Outcome check_classical_limit(const Json& p)
{
    const int n = p.at("n").get<int>();
    const int k = p.at("k").get<int>();
    const Partition lambda = lambda_from(p);
    Rational limit;
    try {
        limit = classical_limit(n, k, lambda);
    } catch (const NotDivisible& e) {
        return Outcome::fail(std::string("not divisible by (1-q^2)^k: ") + e.what());
    }
    const Scalar classical = spectral_rhs(SpectralFormula::classical_formula(k), n, lambda);
    return compare(Scalar(limit), classical);
}

Outcome dispatch(const CheckId& id)
{
    const auto& p = id.params;
    const auto& name = id.name;
    if (name == "pbw_dims" || name == "associativity" || name == "confluence_strategy") {
        throw std::logic_error("engine checks are dispatched with an algebra");
    }
    if (name == "det_central") {
        return check_det_central(p);
    }
    if (name == "star_involution") {
        return check_star_involution(id);
    }
    if (name == "commutativity_y") {
        return check_commutativity(p);
    }
    if (name == "coroll1") {
        return check_coroll1(p);
    }
    if (name == "jn_homomorphism") {
        return check_jn(id);
    }
    if (name == "gram_positivity") {
        return check_gram(p);
    }
    if (name == "theorem1") {
        return check_theorem1(p);
    }
    if (name == "lemma_sigma") {
        return check_lemma_sigma(p);
    }
    if (name == "xk_two_forms") {
        return check_xk_two_forms(p);
    }
    if (name == "prop8") {
        return check_prop8(p);
    }
    if (name == "prop7_spectral") {
        return check_prop7(p);
    }
    if (name == "thm1_vs_y1") {
        return check_thm1_vs_y1(p);
    }
    if (name == "classical_limit") {
        return check_classical_limit(p);
    }
    throw std::invalid_argument("unknown check " + name);
}

ReportEntry timed(const CheckId& id, const std::function<Outcome()>& body)
{
    ReportEntry e;
    e.id = id;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& ex) {
        o = Outcome::fail(std::string("error: ") + ex.what());
    }
    e.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    e.status = o.status;
    e.witness = std::move(o.witness);
    e.correction_factor = std::move(o.correction_factor);
    e.value = std::move(o.value);
    return e;
}

// ------------------------------------------------------------- grids

std::vector<int> n_range(const GridOptions& g, int lo, int hi)
{
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) {
        if (!g.n || *g.n == n) {
            out.push_back(n);
        }
    }
    if (g.n && out.empty() && *g.n >= lo) {
        // An explicit n beyond the default grid is honored.
        out.push_back(*g.n);
    }
    return out;
}

std::vector<int> k_range(const GridOptions& g, int n)
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        if (!g.k || *g.k == k) {
            out.push_back(k);
        }
    }
    return out;
}

Json with_lambda(Json p, const Partition& l)
{
    p["lambda"] = l.parts();
    return p;
}

std::vector<AlgebraKind> engine_algebras(const GridOptions& g)
{
    std::vector<AlgebraKind> out;
    for (int n : n_range(g, 1, 3)) {
        out.push_back(AlgebraKind::hol(n));
        out.push_back(AlgebraKind::pol(n));
    }
    for (int n : n_range(g, 1, 2)) {
        out.push_back(AlgebraKind::mat2n(n, 1));
        out.push_back(AlgebraKind::mat2n(n, -1));
    }
    return out;
}

} // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::PassWithConventionFactor:
        return "pass-with-convention-factor";
    }
    return "fail";
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "pbw_dims",      "associativity",   "confluence_strategy", "det_central",  "star_involution",
        "commutativity_y", "coroll1",       "jn_homomorphism",     "gram_positivity", "theorem1",
        "lemma_sigma",   "xk_two_forms",    "prop8",               "prop7_spectral", "thm1_vs_y1",
        "classical_limit"};
    return names;
}

bool is_check_name(const std::string& name)
{
    const auto& names = check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckId> expand_check(const std::string& name, const GridOptions& g)
{
    if (!is_check_name(name)) {
        throw std::invalid_argument("unknown check " + name);
    }
    std::vector<CheckId> out;
    auto add = [&](Json p) { out.push_back({name, std::move(p)}); };

    if (name == "pbw_dims") {
        for (const auto& kind : engine_algebras(g)) {
            Json p = kind_params(kind);
            p["max_degree"] = g.max_degree.value_or(4);
            add(p);
        }
    } else if (name == "associativity") {
        for (const auto& kind : engine_algebras(g)) {
            Json p = kind_params(kind);
            p["triples"] = 100;
            p["max_degree"] = g.max_degree.value_or(kind.n >= 3 ? 2 : 3);
            add(p);
        }
    } else if (name == "confluence_strategy") {
        for (const auto& kind : engine_algebras(g)) {
            Json p = kind_params(kind);
            p["samples"] = 30;
            p["max_degree"] = g.max_degree.value_or(kind.n >= 3 ? 4 : 5);
            add(p);
        }
    } else if (name == "det_central" || name == "coroll1") {
        for (int n : n_range(g, 1, 3)) {
            add(Json{{"n", n}});
        }
    } else if (name == "star_involution") {
        for (int n : n_range(g, 1, 3)) {
            add(Json{{"n", n}, {"pairs", 20}});
        }
    } else if (name == "commutativity_y") {
        for (int n : n_range(g, 1, 3)) {
            if (n == 1) {
                add(Json{{"n", 1}});
            }
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    add(Json{{"n", n}, {"i", i}, {"j", j}});
                }
            }
        }
    } else if (name == "jn_homomorphism") {
        for (int n : n_range(g, 2, 3)) {
            add(Json{{"n", n}, {"pairs", 50}});
        }
    } else if (name == "gram_positivity") {
        for (int n : n_range(g, 1, 2)) {
            for (int d = 0; d <= g.max_degree.value_or(3); ++d) {
                add(Json{{"n", n}, {"degree", d}, {"q", g.q_point}});
            }
        }
    } else if (name == "theorem1") {
        for (int n : n_range(g, 1, 3)) {
            const int bound = g.lambda_max.value_or(n <= 2 ? 3 : 2);
            for (int k : k_range(g, n)) {
                for (const auto& l : partitions(n, bound)) {
                    add(with_lambda(Json{{"n", n}, {"k", k}}, l));
                }
            }
        }
    } else if (name == "lemma_sigma") {
        for (int n : n_range(g, 1, 2)) {
            for (int k : k_range(g, n)) {
                add(Json{{"n", n}, {"k", k}});
            }
        }
    } else if (name == "xk_two_forms") {
        for (int n : n_range(g, 1, 2)) {
            for (int k : k_range(g, n)) {
                for (const char* inv : {"star", "star2"}) {
                    add(Json{{"n", n}, {"k", k}, {"involution", inv}});
                }
            }
        }
    } else if (name == "prop8") {
        for (int n : n_range(g, 1, 4)) {
            for (int k : k_range(g, n)) {
                add(Json{{"n", n}, {"k", k}});
            }
        }
    } else if (name == "prop7_spectral" || name == "classical_limit") {
        for (int n : n_range(g, 1, 3)) {
            for (int k : k_range(g, n)) {
                for (const auto& l : partitions(n, g.lambda_max.value_or(3))) {
                    add(with_lambda(Json{{"n", n}, {"k", k}}, l));
                }
            }
        }
    } else if (name == "thm1_vs_y1") {
        for (int n : n_range(g, 1, 3)) {
            for (const auto& l : partitions(n, g.lambda_max.value_or(n <= 2 ? 3 : 2))) {
                add(with_lambda(Json{{"route", "fock"}, {"n", n}}, l));
            }
        }
        for (int n : n_range(g, 1, 4)) {
            for (const auto& l : partitions(n, g.lambda_max.value_or(4))) {
                add(with_lambda(Json{{"route", "formula"}, {"n", n}}, l));
            }
        }
    }
    return out;
}

std::vector<CheckId> default_suite(const GridOptions& grid)
{
    std::vector<CheckId> out;
    for (const auto& name : check_names()) {
        auto part = expand_check(name, grid);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

ReportEntry run_engine_check(const CheckId& id, const std::shared_ptr<const Algebra>& alg)
{
    return timed(id, [&]() -> Outcome {
        if (id.name == "pbw_dims") {
            return check_pbw(id.params, *alg);
        }
        if (id.name == "associativity") {
            return check_associativity(id, *alg);
        }
        if (id.name == "confluence_strategy") {
            return check_confluence(id, *alg);
        }
        throw std::invalid_argument("not an engine check: " + id.name);
    });
}

ReportEntry run_check(const CheckId& id)
{
    if (id.name == "pbw_dims" || id.name == "associativity" || id.name == "confluence_strategy") {
        std::shared_ptr<const Algebra> alg;
        try {
            alg = algebra(kind_from(id.params));
        } catch (const std::exception& ex) {
            return timed(id, [&]() -> Outcome { return Outcome::fail(std::string("error: ") + ex.what()); });
        }
        return run_engine_check(id, alg);
    }
    return timed(id, [&] { return dispatch(id); });
}

VerificationReport run_suite(const std::vector<CheckId>& selection, int parallelism)
{
    VerificationReport report;
    report.entries.resize(selection.size());
    const int threads = std::max(1, parallelism);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < selection.size(); ++i) {
        report.entries[i] = run_check(selection[i]);
    }
    const auto& names = check_names();
    auto rank = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) - names.begin(); };
    std::stable_sort(report.entries.begin(), report.entries.end(),
                     [&](const ReportEntry& a, const ReportEntry& b) { return rank(a.id.name) < rank(b.id.name); });
    return report;
}

bool VerificationReport::ok() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

Json VerificationReport::to_json(bool with_timing) const
{
    Json list = Json::array();
    for (const auto& e : entries) {
        Json j = Json::object();
        j["check"] = e.id.name;
        j["params"] = e.id.params;
        j["status"] = qmb::to_string(e.status);
        if (e.witness) {
            j["witness"] = *e.witness;
        }
        if (e.correction_factor) {
            j["correction_factor"] = *e.correction_factor;
        }
        if (e.value) {
            j["value"] = *e.value;
        }
        if (with_timing) {
            j["millis"] = e.millis;
        }
        list.push_back(std::move(j));
    }
    Json out = Json::object();
    out["entries"] = std::move(list);
    out["summary"] = Json{{"pass", count(CheckStatus::Pass)},
                          {"pass-with-convention-factor", count(CheckStatus::PassWithConventionFactor)},
                          {"fail", count(CheckStatus::Fail)}};
    return out;
}

} // namespace qmb
