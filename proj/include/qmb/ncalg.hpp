#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmb/scalar.hpp"

namespace qmb {

using Letter = std::uint8_t;

// Finite sequence of generator indices. Ordered by degree-lexicographic order,
// which is the termination order of every presentation in this library.
class Word {
public:
    Word() = default;
    explicit Word(std::string bytes) : bytes_(std::move(bytes)) {}
    Word(std::initializer_list<Letter> letters);

    std::size_t size() const { return bytes_.size(); }
    bool empty() const { return bytes_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(bytes_[i]); }
    Letter front() const { return static_cast<Letter>(bytes_.front()); }
    Letter back() const { return static_cast<Letter>(bytes_.back()); }
    const std::string& bytes() const { return bytes_; }

    void push_back(Letter g) { bytes_.push_back(static_cast<char>(g)); }
    Word prefix(std::size_t n) const { return Word(bytes_.substr(0, n)); }
    Word suffix(std::size_t from) const { return Word(bytes_.substr(from)); }
    Word reversed() const { return Word(std::string(bytes_.rbegin(), bytes_.rend())); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.bytes_ + b.bytes_); }
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::string bytes_;
};

// Degree-lexicographic order: shorter words first, then lexicographic by index.
bool deglex_less(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.bytes()); }
};

using TermMap = std::unordered_map<Word, Scalar, WordHash>;
using TermList = std::vector<std::pair<Word, Scalar>>;

// One summand of a rewrite target or a formal expression.
struct WordTerm {
    Scalar coeff;
    Word word;
};
using Combination = std::vector<WordTerm>;

// Two-slot grading used by Pol(Mat_n)_q; single-graded algebras put every
// letter in the first slot.
enum class LetterClass : std::uint8_t { Holomorphic = 0, Antiholomorphic = 1 };

class StepBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PresentationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Generators in their total order plus oriented quadratic rewrite rules,
// stored densely by ordered generator pair.
class Presentation {
public:
    Presentation(std::string name, std::vector<std::string> labels, std::vector<LetterClass> classes,
                 Scalar parameter);

    // Adds the relation sum(coeff * word) = 0. The deglex-largest word becomes
    // the left-hand side; its coefficient must be a unit (c * q^e).
    void add_relation(const Combination& relation);
    // Installs g h -> rhs directly (used for fixtures and overrides).
    void set_rule(Letter g, Letter h, Combination rhs);
    // Overwrites an existing rule; for deliberately broken fixtures.
    void replace_rule(Letter g, Letter h, Combination rhs);

    // Throws PresentationError unless every rule rewrites to deglex-smaller,
    // canonical words.
    void validate() const;

    const std::string& name() const { return name_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(Letter g) const { return labels_.at(g); }
    std::optional<Letter> find(std::string_view label) const;
    LetterClass letter_class(Letter g) const { return classes_.at(g); }
    // The deformation parameter the relations were written in (q or q^-1).
    const Scalar& parameter() const { return parameter_; }

    const Combination* rule(Letter g, Letter h) const
    {
        const auto& r = rules_[static_cast<std::size_t>(g) * labels_.size() + h];
        return r ? &*r : nullptr;
    }
    std::size_t rule_count() const;
    bool is_canonical(const Word& w) const;

    std::string render(const Word& w) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<LetterClass> classes_;
    Scalar parameter_;
    std::vector<std::optional<Combination>> rules_;
};

class NcPoly;

enum class Strategy { LeftmostInnermost, RightmostInnermost };

// A presentation plus the memo tables of the normal-form kernel. Shared,
// logically immutable; the caches are internally synchronized.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static std::shared_ptr<const Algebra> make(Presentation p);

    const Presentation& presentation() const { return pres_; }

    NcPoly zero() const;
    NcPoly one() const;
    NcPoly scalar(const Scalar& c) const;
    NcPoly letter(Letter g) const;
    NcPoly letter(std::string_view label) const;

    // Memoized kernel.
    NcPoly normal_form(const Combination& expr) const;
    NcPoly normal_form(const Word& w) const;
    NcPoly multiply(const NcPoly& a, const NcPoly& b) const;

    // Serial reference: literal rewriting of one redex at a time.
    NcPoly normal_form_reference(const Combination& expr, Strategy strategy) const;

    // out += c * NF(t g) / NF(g t) for canonical t.
    void append_into(const Word& t, Letter g, const Scalar& c, TermMap& out) const;
    void prepend_into(Letter g, const Word& t, const Scalar& c, TermMap& out) const;

    std::uint64_t graded_dimension(int degree) const;
    std::uint64_t bigraded_dimension(int holomorphic, int antiholomorphic) const;

    std::size_t cache_size() const;
    void clear_caches() const;

    // 0 means unlimited. Initialized from QMB_STEP_BUDGET.
    std::uint64_t step_budget() const { return step_budget_; }
    void set_step_budget(std::uint64_t budget) { step_budget_ = budget; }

private:
    explicit Algebra(Presentation p);

    class Cache {
    public:
        const TermList* find(const Word& key) const;
        const TermList& insert(const Word& key, TermList value);
        std::size_t size() const;
        void clear();

    private:
        static constexpr std::size_t kShards = 16;
        struct Shard {
            mutable std::shared_mutex mu;
            std::unordered_map<Word, TermList, WordHash> map;
        };
        std::array<Shard, kShards> shards_;
    };

    TermList compute_append(const Word& t, Letter g) const;
    TermList compute_prepend(Letter g, const Word& t) const;
    void count_step() const;

    Presentation pres_;
    std::uint64_t step_budget_ = 0;
    mutable Cache append_cache_;
    mutable Cache prepend_cache_;
};

// Finite linear combination of canonical words of one algebra.
class NcPoly {
public:
    explicit NcPoly(std::shared_ptr<const Algebra> algebra) : alg_(std::move(algebra)) {}
    // Terms must already be canonical; zero coefficients are dropped.
    NcPoly(std::shared_ptr<const Algebra> algebra, TermMap terms);

    const Algebra& algebra() const { return *alg_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;

    // Longest words first, then lexicographic; the rendering order.
    TermList sorted_terms() const;
    // Largest word length present; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    // Keeps only terms with the given number of (holomorphic, antiholomorphic) letters.
    NcPoly bigraded_component(int holomorphic, int antiholomorphic) const;

    NcPoly& operator+=(const NcPoly& b);
    NcPoly& operator-=(const NcPoly& b);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const Scalar& c, const NcPoly& p);
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) { return a.algebra().multiply(a, b); }
    NcPoly operator-() const { return Scalar(-1) * *this; }
    NcPoly pow(unsigned e) const;

    friend bool operator==(const NcPoly& a, const NcPoly& b);

    std::string to_string() const;

private:
    void check_same(const NcPoly& b) const;

    std::shared_ptr<const Algebra> alg_;
    TermMap terms_;
};

// Adds c to out[w], erasing the entry when it cancels.
void accumulate(TermMap& out, const Word& w, const Scalar& c);

// Witness for a failed identity: the deglex-smallest word whose coefficients
// differ, rendered as "word: lhs vs rhs". nullopt when equal.
std::optional<std::string> first_difference(const NcPoly& a, const NcPoly& b);

// Returns c (a unit c*q^e or any Scalar) with a == c * b, if one exists.
std::optional<Scalar> proportionality_factor(const NcPoly& a, const NcPoly& b);

// Resolves every overlap g h k with rules for g h and h k by reducing
// (g h) k and g (h k) literally. Returns the number of overlaps checked and
// the first unresolved one, rendered as "g*h*k: <difference>".
struct OverlapReport {
    std::size_t overlaps = 0;
    std::optional<std::string> unresolved;
};
OverlapReport check_overlaps(const Algebra& alg);

// Random formal combination of words of length <= max_degree (not normalized).
Combination random_combination(const Algebra& alg, int max_degree, int terms, std::mt19937_64& rng);

} // namespace qmb
