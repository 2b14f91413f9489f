#include "qmb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qmb {

namespace {

int checked_add(int a, int b)
{
    int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("Scalar: exponent overflow");
    }
    return r;
}

int checked_mul(int a, int b)
{
    int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("Scalar: exponent overflow");
    }
    return r;
}

} // namespace

Scalar::Scalar(Rational c)
{
    if (!c.is_zero()) {
        terms_.emplace_back(0, std::move(c));
    }
}

Scalar Scalar::monomial(Rational c, int exponent)
{
    Scalar s;
    if (!c.is_zero()) {
        s.terms_.emplace_back(exponent, std::move(c));
    }
    return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    Scalar s;
    for (auto& [e, c] : terms) {
        if (!s.terms_.empty() && s.terms_.back().first == e) {
            s.terms_.back().second += c;
            if (s.terms_.back().second.is_zero()) {
                s.terms_.pop_back();
            }
        } else if (!c.is_zero()) {
            s.terms_.emplace_back(e, std::move(c));
        }
    }
    return s;
}

bool Scalar::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }

int Scalar::min_exponent() const
{
    if (terms_.empty()) {
        throw std::logic_error("Scalar: min_exponent of zero");
    }
    return terms_.front().first;
}

int Scalar::max_exponent() const
{
    if (terms_.empty()) {
        throw std::logic_error("Scalar: max_exponent of zero");
    }
    return terms_.back().first;
}

Rational Scalar::coefficient(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        return it->second;
    }
    return Rational(0);
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    for (auto& t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& b)
{
    if (b.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = b.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    auto i = terms_.begin();
    auto j = b.terms_.begin();
    while (i != terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) {
                out.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    if (a.terms_.empty() || b.terms_.empty()) {
        return r;
    }
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Scalar& mono = a.terms_.size() == 1 ? a : b;
        const Scalar& other = a.terms_.size() == 1 ? b : a;
        const auto& [me, mc] = mono.terms_[0];
        r.terms_.reserve(other.terms_.size());
        for (const auto& [e, c] : other.terms_) {
            r.terms_.emplace_back(checked_add(e, me), c * mc);
        }
        return r;
    }
    int lo = checked_add(a.min_exponent(), b.min_exponent());
    int hi = checked_add(a.max_exponent(), b.max_exponent());
    std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        }
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (!dense[i].is_zero()) {
            r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
        }
    }
    return r;
}

Scalar Scalar::pow(unsigned e) const
{
    Scalar r(1);
    Scalar base = *this;
    while (e != 0) {
        if (e & 1U) {
            r *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return r;
}

std::string Scalar::to_string(std::string_view var) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (first) {
            if (neg) {
                out += "-";
            }
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (e != 0) {
            mono = std::string(var);
            if (e != 1) {
                mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

Scalar Scalar::parse(std::string_view text, std::string_view var)
{
    std::string s;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) == 0) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("Scalar::parse: empty input");
    }
    std::vector<Term> terms;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("Scalar::parse: " + why + " at position " + std::to_string(pos) + " in '" +
                                    s + "'");
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            ++pos;
        }
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) {
            ++pos;
        }
        if (pos == start || (pos == start + 1 && (s[start] == '-' || s[start] == '+'))) {
            fail("expected integer");
        }
        return std::stoll(s.substr(start, pos - start));
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        Rational coef(1);
        bool have_coef = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) {
            long long n = read_int();
            long long d = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                d = read_int();
                if (d == 0) {
                    fail("zero denominator");
                }
            }
            coef = Rational(n, d);
            have_coef = true;
        }
        int exponent = 0;
        bool need_var = false;
        if (have_coef && pos < s.size() && s[pos] == '*') {
            ++pos;
            need_var = true;
        }
        if (s.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exponent = static_cast<int>(read_int());
            }
        } else if (need_var || !have_coef) {
            fail("expected '" + std::string(var) + "'");
        }
        terms.emplace_back(exponent, sign < 0 ? -coef : coef);
    }
    return from_terms(std::move(terms));
}

std::size_t Scalar::hash() const
{
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
        h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return h;
}

Scalar bar(const Scalar& a) { return substitute_power(a, -1); }

Scalar substitute_power(const Scalar& a, int factor)
{
    std::vector<Scalar::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [e, c] : a.terms()) {
        terms.emplace_back(checked_mul(e, factor), c);
    }
    return Scalar::from_terms(std::move(terms));
}

Scalar divide_exact(const Scalar& a, const Scalar& b)
{
    if (b.is_zero()) {
        throw std::domain_error("divide_exact: division by zero");
    }
    if (a.is_zero()) {
        return Scalar();
    }
    // a = q^ea * A(q), b = q^eb * B(q) with A(0), B(0) != 0; units of Q[q,q^-1]
    // are monomials, so a/b is Laurent iff B divides A in Q[q].
    const int ea = a.min_exponent();
    const int eb = b.min_exponent();
    std::vector<Rational> rem(static_cast<std::size_t>(a.max_exponent() - ea + 1));
    for (const auto& [e, c] : a.terms()) {
        rem[static_cast<std::size_t>(e - ea)] = c;
    }
    std::vector<Rational> divisor(static_cast<std::size_t>(b.max_exponent() - eb + 1));
    for (const auto& [e, c] : b.terms()) {
        divisor[static_cast<std::size_t>(e - eb)] = c;
    }
    const std::size_t db = divisor.size() - 1;
    if (rem.size() - 1 < db) {
        throw NotDivisible("divide_exact: " + a.to_string() + " is not divisible by " + b.to_string());
    }
    const Rational lead_inv = divisor.back().inverse();
    std::vector<Scalar::Term> quotient;
    for (std::size_t top = rem.size() - 1;; --top) {
        if (!rem[top].is_zero()) {
            Rational c = rem[top] * lead_inv;
            std::size_t shift = top - db;
            for (std::size_t i = 0; i <= db; ++i) {
                if (!divisor[i].is_zero()) {
                    rem[shift + i] -= c * divisor[i];
                }
            }
            quotient.emplace_back(static_cast<int>(shift) + ea - eb, std::move(c));
        }
        if (top == db) {
            break;
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (!rem[i].is_zero()) {
            throw NotDivisible("divide_exact: " + a.to_string() + " is not divisible by " + b.to_string());
        }
    }
    return Scalar::from_terms(std::move(quotient));
}

Rational eval_at(const Scalar& a, const Rational& q0)
{
    if (q0.is_zero()) {
        throw std::domain_error("eval_at: q0 must be nonzero");
    }
    Rational sum(0);
    for (const auto& [e, c] : a.terms()) {
        sum += c * q0.pow(e);
    }
    return sum;
}

} // namespace qmb
