#include "qmb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qmb/fock.hpp"

namespace qmb {

namespace {

class Parser {
public:
    Parser(std::string_view text, const AlgebraKind& kind) : s_(text), kind_(kind), alg_(algebra(kind)) {}

    NcPoly parse()
    {
        NcPoly v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool accept_word(std::string_view w)
    {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    long long integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        if (pos_ - start > 18) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    std::vector<int> int_list(char close_or_sep)
    {
        std::vector<int> out;
        skip();
        if (pos_ < s_.size() && s_[pos_] == close_or_sep) {
            return out;
        }
        out.push_back(static_cast<int>(integer()));
        while (accept(',')) {
            out.push_back(static_cast<int>(integer()));
        }
        return out;
    }

    NcPoly expr()
    {
        NcPoly v = term();
        while (true) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    NcPoly term()
    {
        NcPoly v = unary();
        while (accept('*')) {
            v = v * unary();
        }
        return v;
    }

    NcPoly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        return power();
    }

    NcPoly power()
    {
        NcPoly base = primary();
        if (!accept('^')) {
            return base;
        }
        const bool negative = accept('-');
        const std::size_t at = pos_;
        const long long e = integer();
        if (!negative) {
            return base.pow(static_cast<unsigned>(e));
        }
        // Negative powers exist only for units q^k * c.
        if (base.size() != 1 || !base.terms().begin()->first.empty() || !base.terms().begin()->second.is_monomial()) {
            pos_ = at;
            fail("negative power of a non-unit");
        }
        const auto& [ex, c] = base.terms().begin()->second.terms().front();
        const int k = static_cast<int>(e);
        return alg_->scalar(Scalar::monomial(c.inverse().pow(k), -ex * k));
    }

    void require(bool ok, std::size_t at, const std::string& why)
    {
        if (!ok) {
            pos_ = at;
            fail(why);
        }
    }

    NcPoly primary()
    {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const long long num = integer();
            long long den = 1;
            if (accept('/')) {
                den = integer();
                require(den != 0, at, "zero denominator");
            }
            return alg_->scalar(Scalar(Rational(num, den)));
        }
        if (accept('(')) {
            NcPoly v = expr();
            expect(')');
            return v;
        }
        if (accept_word("det_q(")) {
            const int m = static_cast<int>(integer());
            expect(')');
            require(m >= 1, at, "det_q(m) needs m >= 1");
            std::vector<int> idx(static_cast<std::size_t>(m));
            std::iota(idx.begin(), idx.end(), 1);
            return guarded(at, [&] { return qminor(kind_, IndexSet(idx), IndexSet(idx)); });
        }
        if (accept_word("minor(")) {
            const auto rows = int_list(';');
            expect(';');
            const auto cols = int_list(')');
            expect(')');
            return guarded(at, [&] { return qminor(kind_, IndexSet(rows), IndexSet(cols)); });
        }
        if (accept_word("zs[") || accept_word("z[") || accept_word("t[")) {
            const std::size_t bracket = s_.find('[', at);
            const std::string name(s_.substr(at, bracket - at));
            const int a = static_cast<int>(integer());
            expect(',');
            const int b = static_cast<int>(integer());
            expect(']');
            const std::string label = name + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
            const auto g = alg_->presentation().find(label);
            require(g.has_value(), at, "generator " + label + " is not in " + alg_->presentation().name());
            return alg_->letter(*g);
        }
        if (accept_word("y(")) {
            const int k = static_cast<int>(integer());
            expect(')');
            require(kind_.family == MatrixFamily::PolMat && k >= 1 && k <= kind_.n, at, "y(k) needs 1 <= k <= n in Pol(Mat_n)_q");
            return build_y(kind_.n, k);
        }
        if (accept_word("x(")) {
            const int k = static_cast<int>(integer());
            expect(')');
            require(kind_.family == MatrixFamily::QMat2n && k >= 1 && k <= kind_.n, at, "x(k) needs 1 <= k <= n in C[M_2n]_q");
            return build_x(kind_.n, k, kind_.param_sign);
        }
        if (accept_word("u(")) {
            const auto parts = int_list(')');
            expect(')');
            require(kind_.family == MatrixFamily::PolMat && static_cast<int>(parts.size()) == kind_.n, at,
                    "u(lambda) needs n parts in Pol(Mat_n)_q");
            return guarded(at, [&] { return u_lambda(kind_.n, Partition(parts)).as_poly(); });
        }
        if (accept('q')) {
            return alg_->scalar(Scalar::q());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // Library errors inside a macro become parse errors at the macro.
    template <typename F>
    NcPoly guarded(std::size_t at, F&& build)
    {
        try {
            return build();
        } catch (const std::logic_error& e) {
            pos_ = at;
            fail(e.what());
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    AlgebraKind kind_;
    std::shared_ptr<const Algebra> alg_;
};

int max_index_after(std::string_view text, std::string_view token, bool until_close, char close)
{
    int best = 0;
    std::size_t p = 0;
    while ((p = text.find(token, p)) != std::string_view::npos) {
        p += token.size();
        int cur = 0;
        bool any = false;
        for (; p < text.size() && (until_close ? text[p] != close : true); ++p) {
            const char c = text[p];
            if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                cur = cur * 10 + (c - '0');
                any = true;
            } else {
                if (any) {
                    best = std::max(best, cur);
                }
                cur = 0;
                any = false;
                if (!until_close) {
                    break;
                }
            }
        }
        if (any) {
            best = std::max(best, cur);
        }
    }
    return best;
}

} // namespace

AlgebraKind infer_kind(std::string_view text, std::optional<int> n)
{
    const bool matrix2n = text.find("t[") != std::string_view::npos || text.find("x(") != std::string_view::npos;
    int need = 1;
    if (matrix2n) {
        need = std::max(need, (max_index_after(text, "t[", true, ']') + 1) / 2);
        need = std::max(need, max_index_after(text, "x(", true, ')'));
        need = std::max(need, (max_index_after(text, "minor(", true, ')') + 1) / 2);
        need = std::max(need, (max_index_after(text, "det_q(", true, ')') + 1) / 2);
    } else {
        need = std::max(need, max_index_after(text, "z[", true, ']'));
        need = std::max(need, max_index_after(text, "zs[", true, ']'));
        need = std::max(need, max_index_after(text, "y(", true, ')'));
        need = std::max(need, max_index_after(text, "minor(", true, ')'));
        need = std::max(need, max_index_after(text, "det_q(", true, ')'));
        // u(l1,..,ln): the number of parts fixes n.
        std::size_t p = 0;
        while ((p = text.find("u(", p)) != std::string_view::npos) {
            const std::size_t close = text.find(')', p);
            const auto inner = text.substr(p + 2, close == std::string_view::npos ? std::string_view::npos : close - p - 2);
            need = std::max(need, static_cast<int>(std::count(inner.begin(), inner.end(), ',')) + 1);
            p += 2;
        }
    }
    if (n) {
        if (*n < 1) {
            throw ParseError("n must be positive", 0);
        }
        need = *n;
    }
    return matrix2n ? AlgebraKind::mat2n(need) : AlgebraKind::pol(need);
}

NcPoly parse_expression(std::string_view text, const AlgebraKind& kind) { return Parser(text, kind).parse(); }

} // namespace qmb
