#include "qmb/ncalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include <omp.h>

namespace qmb {

namespace {

// Rewrite steps taken by the current top-level call on this thread.
struct StepCounter {
    std::uint64_t steps = 0;
    int depth = 0;
};
thread_local StepCounter t_steps;

class StepScope {
public:
    StepScope()
    {
        if (t_steps.depth++ == 0) {
            t_steps.steps = 0;
        }
    }
    ~StepScope() { --t_steps.depth; }
    StepScope(const StepScope&) = delete;
    StepScope& operator=(const StepScope&) = delete;
};

std::uint64_t budget_from_env()
{
    const char* env = std::getenv("QMB_STEP_BUDGET");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    return std::strtoull(env, nullptr, 10);
}

struct DeglexGreater {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

} // namespace

Word::Word(std::initializer_list<Letter> letters)
{
    bytes_.reserve(letters.size());
    for (Letter g : letters) {
        bytes_.push_back(static_cast<char>(g));
    }
}

bool deglex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.bytes() < b.bytes();
}

void accumulate(TermMap& out, const Word& w, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = out.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            out.erase(it);
        }
    }
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(std::string name, std::vector<std::string> labels, std::vector<LetterClass> classes,
                           Scalar parameter)
    : name_(std::move(name)), labels_(std::move(labels)), classes_(std::move(classes)),
      parameter_(std::move(parameter)), rules_(labels_.size() * labels_.size())
{
    if (labels_.size() > 255) {
        throw PresentationError("Presentation: at most 255 generators");
    }
    if (classes_.size() != labels_.size()) {
        throw PresentationError("Presentation: one class per generator required");
    }
}

std::optional<Letter> Presentation::find(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return static_cast<Letter>(i);
        }
    }
    return std::nullopt;
}

void Presentation::add_relation(const Combination& relation)
{
    // Merge duplicate words first.
    std::map<Word, Scalar, DeglexGreater> merged;
    for (const auto& t : relation) {
        merged[t.word] += t.coeff;
    }
    std::erase_if(merged, [](const auto& kv) { return kv.second.is_zero(); });
    if (merged.empty()) {
        return;
    }
    const auto& [lead, lead_coeff] = *merged.begin();
    if (lead.size() != 2) {
        throw PresentationError("add_relation: leading word must have length 2 in " + name_);
    }
    if (!lead_coeff.is_monomial()) {
        throw PresentationError("add_relation: leading coefficient is not a unit in " + name_);
    }
    const auto& [e, c] = lead_coeff.terms()[0];
    const Scalar inv = Scalar::monomial(c.inverse(), -e);
    Combination rhs;
    for (auto it = std::next(merged.begin()); it != merged.end(); ++it) {
        rhs.push_back({-(inv * it->second), it->first});
    }
    set_rule(lead[0], lead[1], std::move(rhs));
}

void Presentation::set_rule(Letter g, Letter h, Combination rhs)
{
    if (g >= size() || h >= size()) {
        throw PresentationError("set_rule: generator out of range in " + name_);
    }
    auto& slot = rules_[static_cast<std::size_t>(g) * size() + h];
    if (slot) {
        throw PresentationError("set_rule: duplicate rule for " + labels_[g] + "*" + labels_[h] + " in " + name_);
    }
    std::erase_if(rhs, [](const WordTerm& t) { return t.coeff.is_zero(); });
    slot = std::move(rhs);
}

void Presentation::replace_rule(Letter g, Letter h, Combination rhs)
{
    if (g >= size() || h >= size()) {
        throw PresentationError("replace_rule: generator out of range in " + name_);
    }
    std::erase_if(rhs, [](const WordTerm& t) { return t.coeff.is_zero(); });
    rules_[static_cast<std::size_t>(g) * size() + h] = std::move(rhs);
}

void Presentation::validate() const
{
    for (std::size_t g = 0; g < size(); ++g) {
        for (std::size_t h = 0; h < size(); ++h) {
            const Combination* r = rule(static_cast<Letter>(g), static_cast<Letter>(h));
            if (r == nullptr) {
                continue;
            }
            const Word lhs{static_cast<Letter>(g), static_cast<Letter>(h)};
            for (const auto& t : *r) {
                if (t.word.size() > 2 || !deglex_less(t.word, lhs)) {
                    throw PresentationError("rule " + render(lhs) + " -> " + render(t.word) +
                                            " does not decrease the deglex measure");
                }
                if (!is_canonical(t.word)) {
                    throw PresentationError("rule " + render(lhs) + " has non-canonical target " + render(t.word));
                }
            }
        }
    }
}

std::size_t Presentation::rule_count() const
{
    return static_cast<std::size_t>(std::count_if(rules_.begin(), rules_.end(), [](const auto& r) { return r.has_value(); }));
}

bool Presentation::is_canonical(const Word& w) const
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (rule(w[i], w[i + 1]) != nullptr) {
            return false;
        }
    }
    return true;
}

std::string Presentation::render(const Word& w) const
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out += "*";
        }
        out += labels_.at(w[i]);
    }
    return out;
}

// ---------------------------------------------------------------- Algebra::Cache

const TermList* Algebra::Cache::find(const Word& key) const
{
    const Shard& s = shards_[WordHash{}(key) % kShards];
    std::shared_lock lock(s.mu);
    auto it = s.map.find(key);
    return it == s.map.end() ? nullptr : &it->second;
}

const TermList& Algebra::Cache::insert(const Word& key, TermList value)
{
    Shard& s = shards_[WordHash{}(key) % kShards];
    std::unique_lock lock(s.mu);
    return s.map.try_emplace(key, std::move(value)).first->second;
}

std::size_t Algebra::Cache::size() const
{
    std::size_t n = 0;
    for (const auto& s : shards_) {
        std::shared_lock lock(s.mu);
        n += s.map.size();
    }
    return n;
}

void Algebra::Cache::clear()
{
    for (auto& s : shards_) {
        std::unique_lock lock(s.mu);
        s.map.clear();
    }
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Presentation p) : pres_(std::move(p)), step_budget_(budget_from_env()) {}

std::shared_ptr<const Algebra> Algebra::make(Presentation p)
{
    p.validate();
    return std::shared_ptr<const Algebra>(new Algebra(std::move(p)));
}

NcPoly Algebra::zero() const { return NcPoly(shared_from_this()); }

NcPoly Algebra::one() const { return scalar(Scalar(1)); }

NcPoly Algebra::scalar(const Scalar& c) const
{
    TermMap t;
    accumulate(t, Word(), c);
    return NcPoly(shared_from_this(), std::move(t));
}

NcPoly Algebra::letter(Letter g) const
{
    if (g >= pres_.size()) {
        throw std::out_of_range("Algebra::letter: generator index out of range");
    }
    TermMap t;
    t.emplace(Word{g}, Scalar(1));
    return NcPoly(shared_from_this(), std::move(t));
}

NcPoly Algebra::letter(std::string_view label) const
{
    auto g = pres_.find(label);
    if (!g) {
        throw std::out_of_range("Algebra::letter: unknown generator " + std::string(label));
    }
    return letter(*g);
}

void Algebra::count_step() const
{
    ++t_steps.steps;
    if (step_budget_ != 0 && t_steps.steps > step_budget_) {
        throw StepBudgetExceeded("rewrite step budget of " + std::to_string(step_budget_) + " exceeded in " +
                                 pres_.name());
    }
}

void Algebra::append_into(const Word& t, Letter g, const Scalar& c, TermMap& out) const
{
    if (c.is_zero()) {
        return;
    }
    if (t.empty() || pres_.rule(t.back(), g) == nullptr) {
        Word w = t;
        w.push_back(g);
        accumulate(out, w, c);
        return;
    }
    Word key = t;
    key.push_back(g);
    const TermList* hit = append_cache_.find(key);
    if (hit == nullptr) {
        hit = &append_cache_.insert(key, compute_append(t, g));
    }
    for (const auto& [w, cw] : *hit) {
        accumulate(out, w, c.is_one() ? cw : c * cw);
    }
}

TermList Algebra::compute_append(const Word& t, Letter g) const
{
    count_step();
    const Letter h = t.back();
    const Word head = t.prefix(t.size() - 1);
    TermMap acc;
    for (const auto& [coef, u] : *pres_.rule(h, g)) {
        switch (u.size()) {
        case 0:
            accumulate(acc, head, coef);
            break;
        case 1:
            append_into(head, u[0], coef, acc);
            break;
        default: {
            TermMap mid;
            append_into(head, u[0], Scalar(1), mid);
            for (const auto& [w, cw] : mid) {
                append_into(w, u[1], coef * cw, acc);
            }
            break;
        }
        }
    }
    return {acc.begin(), acc.end()};
}

void Algebra::prepend_into(Letter g, const Word& t, const Scalar& c, TermMap& out) const
{
    if (c.is_zero()) {
        return;
    }
    if (t.empty() || pres_.rule(g, t.front()) == nullptr) {
        accumulate(out, Word{g} + t, c);
        return;
    }
    Word key = Word{g} + t;
    const TermList* hit = prepend_cache_.find(key);
    if (hit == nullptr) {
        hit = &prepend_cache_.insert(key, compute_prepend(g, t));
    }
    for (const auto& [w, cw] : *hit) {
        accumulate(out, w, c.is_one() ? cw : c * cw);
    }
}

TermList Algebra::compute_prepend(Letter g, const Word& t) const
{
    count_step();
    const Letter h = t.front();
    const Word tail = t.suffix(1);
    TermMap acc;
    for (const auto& [coef, u] : *pres_.rule(g, h)) {
        switch (u.size()) {
        case 0:
            accumulate(acc, tail, coef);
            break;
        case 1:
            prepend_into(u[0], tail, coef, acc);
            break;
        default: {
            TermMap mid;
            prepend_into(u[1], tail, Scalar(1), mid);
            for (const auto& [w, cw] : mid) {
                prepend_into(u[0], w, coef * cw, acc);
            }
            break;
        }
        }
    }
    return {acc.begin(), acc.end()};
}

NcPoly Algebra::normal_form(const Combination& expr) const
{
    StepScope scope;
    TermMap result;
    for (const auto& [coeff, word] : expr) {
        if (coeff.is_zero()) {
            continue;
        }
        for (Letter g : word.bytes()) {
            if (g >= pres_.size()) {
                throw std::out_of_range("normal_form: letter outside the algebra " + pres_.name());
            }
        }
        TermMap cur;
        cur.emplace(Word(), coeff);
        for (std::size_t i = 0; i < word.size(); ++i) {
            TermMap next;
            for (const auto& [t, c] : cur) {
                append_into(t, word[i], c, next);
            }
            cur = std::move(next);
        }
        for (const auto& [t, c] : cur) {
            accumulate(result, t, c);
        }
    }
    return NcPoly(shared_from_this(), std::move(result));
}

NcPoly Algebra::normal_form(const Word& w) const { return normal_form(Combination{{Scalar(1), w}}); }

NcPoly Algebra::multiply(const NcPoly& a, const NcPoly& b) const
{
    if (a.algebra_ptr().get() != this || b.algebra_ptr().get() != this) {
        throw std::invalid_argument("multiply: operands belong to a different algebra");
    }
    if (a.is_zero() || b.is_zero()) {
        return zero();
    }
    const TermList right(b.terms().begin(), b.terms().end());
    TermMap result;
    // Each right-hand term is folded letter by letter onto the whole left
    // operand; partial sums are merged at the end, so the result does not
    // depend on scheduling.
#pragma omp parallel if (right.size() > 8 && omp_get_level() == 0)
    {
        StepScope scope;
        TermMap local;
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < right.size(); ++i) {
            const auto& [v, cv] = right[i];
            TermMap cur;
            for (const auto& [t, ct] : a.terms()) {
                cur.emplace(t, ct * cv);
            }
            for (std::size_t j = 0; j < v.size(); ++j) {
                TermMap next;
                for (const auto& [t, ct] : cur) {
                    append_into(t, v[j], ct, next);
                }
                cur = std::move(next);
            }
            for (const auto& [t, ct] : cur) {
                accumulate(local, t, ct);
            }
        }
#pragma omp critical(qmb_multiply_merge)
        for (const auto& [t, ct] : local) {
            accumulate(result, t, ct);
        }
    }
    return NcPoly(shared_from_this(), std::move(result));
}

NcPoly Algebra::normal_form_reference(const Combination& expr, Strategy strategy) const
{
    StepScope scope;
    // Pending words, largest first, so that equal words produced by different
    // rewrites merge before they are expanded further.
    std::map<Word, Scalar, DeglexGreater> pending;
    for (const auto& [coeff, word] : expr) {
        pending[word] += coeff;
    }
    TermMap result;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const Scalar& c = node.mapped();
        if (c.is_zero()) {
            continue;
        }
        std::optional<std::size_t> pos;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (pres_.rule(w[i], w[i + 1]) != nullptr) {
                pos = i;
                if (strategy == Strategy::LeftmostInnermost) {
                    break;
                }
            }
        }
        if (!pos) {
            accumulate(result, w, c);
            continue;
        }
        count_step();
        const Word left = w.prefix(*pos);
        const Word right = w.suffix(*pos + 2);
        for (const auto& [coef, u] : *pres_.rule(w[*pos], w[*pos + 1])) {
            Scalar& slot = pending[left + u + right];
            slot += coef * c;
        }
    }
    return NcPoly(shared_from_this(), std::move(result));
}

std::uint64_t Algebra::graded_dimension(int degree) const
{
    if (degree < 0) {
        throw std::invalid_argument("graded_dimension: degree must be nonnegative");
    }
    if (degree == 0) {
        return 1;
    }
    const std::size_t n = pres_.size();
    std::vector<std::uint64_t> count(n, 1);
    for (int d = 1; d < degree; ++d) {
        std::vector<std::uint64_t> next(n, 0);
        for (std::size_t last = 0; last < n; ++last) {
            for (std::size_t g = 0; g < n; ++g) {
                if (pres_.rule(static_cast<Letter>(last), static_cast<Letter>(g)) == nullptr) {
                    next[g] += count[last];
                }
            }
        }
        count = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : count) {
        total += c;
    }
    return total;
}

std::uint64_t Algebra::bigraded_dimension(int holomorphic, int antiholomorphic) const
{
    if (holomorphic < 0 || antiholomorphic < 0) {
        throw std::invalid_argument("bigraded_dimension: degrees must be nonnegative");
    }
    const std::size_t n = pres_.size();
    const auto H = static_cast<std::size_t>(holomorphic);
    const auto A = static_cast<std::size_t>(antiholomorphic);
    if (H + A == 0) {
        return 1;
    }
    // count[h][a][last]
    auto idx = [&](std::size_t h, std::size_t a, std::size_t last) { return (h * (A + 1) + a) * n + last; };
    std::vector<std::uint64_t> count((H + 1) * (A + 1) * n, 0);
    for (std::size_t g = 0; g < n; ++g) {
        bool anti = pres_.letter_class(static_cast<Letter>(g)) == LetterClass::Antiholomorphic;
        if ((anti ? A : H) >= 1) {
            count[idx(anti ? 0 : 1, anti ? 1 : 0, g)] = 1;
        }
    }
    for (std::size_t total = 1; total < H + A; ++total) {
        for (std::size_t h = 0; h <= std::min(total, H); ++h) {
            std::size_t a = total - h;
            if (a > A) {
                continue;
            }
            for (std::size_t last = 0; last < n; ++last) {
                std::uint64_t c = count[idx(h, a, last)];
                if (c == 0) {
                    continue;
                }
                for (std::size_t g = 0; g < n; ++g) {
                    if (pres_.rule(static_cast<Letter>(last), static_cast<Letter>(g)) != nullptr) {
                        continue;
                    }
                    bool anti = pres_.letter_class(static_cast<Letter>(g)) == LetterClass::Antiholomorphic;
                    std::size_t h2 = h + (anti ? 0 : 1);
                    std::size_t a2 = a + (anti ? 1 : 0);
                    if (h2 <= H && a2 <= A) {
                        count[idx(h2, a2, g)] += c;
                    }
                }
            }
        }
    }
    std::uint64_t total = 0;
    for (std::size_t g = 0; g < n; ++g) {
        total += count[idx(H, A, g)];
    }
    return total;
}

std::size_t Algebra::cache_size() const { return append_cache_.size() + prepend_cache_.size(); }

void Algebra::clear_caches() const
{
    append_cache_.clear();
    prepend_cache_.clear();
}

// ---------------------------------------------------------------- NcPoly

NcPoly::NcPoly(std::shared_ptr<const Algebra> algebra, TermMap terms) : alg_(std::move(algebra))
{
    for (auto& [w, c] : terms) {
        if (!c.is_zero()) {
            terms_.emplace(w, std::move(c));
        }
    }
}

Scalar NcPoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

TermList NcPoly::sorted_terms() const
{
    TermList out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) {
            return x.first.size() > y.first.size();
        }
        return x.first.bytes() < y.first.bytes();
    });
    return out;
}

int NcPoly::degree() const
{
    int d = -1;
    for (const auto& [w, c] : terms_) {
        d = std::max(d, static_cast<int>(w.size()));
    }
    return d;
}

bool NcPoly::is_homogeneous() const
{
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return static_cast<int>(kv.first.size()) == d; });
}

NcPoly NcPoly::bigraded_component(int holomorphic, int antiholomorphic) const
{
    TermMap out;
    for (const auto& [w, c] : terms_) {
        int h = 0;
        int a = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            (alg_->presentation().letter_class(w[i]) == LetterClass::Antiholomorphic ? a : h) += 1;
        }
        if (h == holomorphic && a == antiholomorphic) {
            out.emplace(w, c);
        }
    }
    return NcPoly(alg_, std::move(out));
}

void NcPoly::check_same(const NcPoly& b) const
{
    if (alg_.get() != b.alg_.get()) {
        throw std::invalid_argument("NcPoly: operands belong to different algebras");
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& b)
{
    check_same(b);
    for (const auto& [w, c] : b.terms_) {
        accumulate(terms_, w, c);
    }
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b)
{
    check_same(b);
    for (const auto& [w, c] : b.terms_) {
        accumulate(terms_, w, -c);
    }
    return *this;
}

NcPoly operator*(const Scalar& c, const NcPoly& p)
{
    TermMap out;
    if (!c.is_zero()) {
        for (const auto& [w, cw] : p.terms_) {
            out.emplace(w, c * cw);
        }
    }
    return NcPoly(p.alg_, std::move(out));
}

NcPoly NcPoly::pow(unsigned e) const
{
    NcPoly r = alg_->one();
    for (unsigned i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

bool operator==(const NcPoly& a, const NcPoly& b)
{
    return a.alg_.get() == b.alg_.get() && a.terms_ == b.terms_;
}

std::string NcPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        if (w.empty()) {
            std::string s = c.to_string();
            if (first) {
                out += s;
            } else if (s[0] == '-') {
                out += " - " + s.substr(1);
            } else {
                out += " + " + s;
            }
            first = false;
            continue;
        }
        const std::string word = alg_->presentation().render(w);
        std::string piece;
        bool negative = false;
        if (c.is_monomial()) {
            const auto& [e, r] = c.terms()[0];
            negative = r.sign() < 0;
            Scalar mag = negative ? -c : c;
            piece = mag.is_one() ? word : mag.to_string() + "*" + word;
        } else {
            piece = "(" + c.to_string() + ")*" + word;
        }
        if (first) {
            out += negative ? "-" + piece : piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
        first = false;
    }
    return out;
}

std::optional<std::string> first_difference(const NcPoly& a, const NcPoly& b)
{
    std::optional<Word> best;
    auto consider = [&](const Word& w) {
        if (a.coefficient(w) != b.coefficient(w) && (!best || deglex_less(w, *best))) {
            best = w;
        }
    };
    for (const auto& [w, c] : a.terms()) {
        consider(w);
    }
    for (const auto& [w, c] : b.terms()) {
        consider(w);
    }
    if (!best) {
        return std::nullopt;
    }
    const auto& pres = a.algebra().presentation();
    return pres.render(*best) + ": " + a.coefficient(*best).to_string() + " vs " + b.coefficient(*best).to_string();
}

std::optional<Scalar> proportionality_factor(const NcPoly& a, const NcPoly& b)
{
    if (b.is_zero()) {
        return a.is_zero() ? std::optional<Scalar>(Scalar(1)) : std::nullopt;
    }
    if (a.size() != b.size()) {
        return std::nullopt;
    }
    const auto& [w, cb] = *b.terms().begin();
    auto it = a.terms().find(w);
    if (it == a.terms().end()) {
        return std::nullopt;
    }
    Scalar factor;
    try {
        factor = divide_exact(it->second, cb);
    } catch (const NotDivisible&) {
        return std::nullopt;
    }
    for (const auto& [v, c] : b.terms()) {
        if (a.coefficient(v) != factor * c) {
            return std::nullopt;
        }
    }
    return factor;
}

OverlapReport check_overlaps(const Algebra& alg)
{
    const auto& pres = alg.presentation();
    const auto n = pres.size();
    OverlapReport report;
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            const Combination* gh = pres.rule(static_cast<Letter>(g), static_cast<Letter>(h));
            if (gh == nullptr) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const Combination* hk = pres.rule(static_cast<Letter>(h), static_cast<Letter>(k));
                if (hk == nullptr) {
                    continue;
                }
                ++report.overlaps;
                Combination left;
                for (const auto& [c, u] : *gh) {
                    left.push_back({c, u + Word{static_cast<Letter>(k)}});
                }
                Combination right;
                for (const auto& [c, u] : *hk) {
                    right.push_back({c, Word{static_cast<Letter>(g)} + u});
                }
                const NcPoly a = alg.normal_form_reference(left, Strategy::LeftmostInnermost);
                const NcPoly b = alg.normal_form_reference(right, Strategy::LeftmostInnermost);
                if (auto diff = first_difference(a, b); diff && !report.unresolved) {
                    const Word w{static_cast<Letter>(g), static_cast<Letter>(h), static_cast<Letter>(k)};
                    report.unresolved = pres.render(w) + ": " + *diff;
                }
            }
        }
    }
    return report;
}

Combination random_combination(const Algebra& alg, int max_degree, int terms, std::mt19937_64& rng)
{
    const auto n = static_cast<int>(alg.presentation().size());
    std::uniform_int_distribution<int> len(0, max_degree);
    std::uniform_int_distribution<int> letter(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(-2, 2);
    Combination out;
    for (int i = 0; i < terms; ++i) {
        Word w;
        const int l = len(rng);
        for (int j = 0; j < l; ++j) {
            w.push_back(static_cast<Letter>(letter(rng)));
        }
        int c = coef(rng);
        if (c == 0) {
            c = 1;
        }
        out.push_back({Scalar::monomial(Rational(c), expo(rng)) + Scalar(coef(rng)), std::move(w)});
    }
    return out;
}

} // namespace qmb
