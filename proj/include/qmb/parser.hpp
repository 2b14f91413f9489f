#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qmb/ncalg.hpp"
#include "qmb/qmatrices.hpp"

namespace qmb {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Algebra an expression lives in: t[..] or x(..) select C[M_2n]_q, everything
// else Pol(Mat_n)_q. n is the smallest size covering every index unless given.
AlgebraKind infer_kind(std::string_view text, std::optional<int> n = std::nullopt);

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] digits)?
//   primary := integer ['/' integer] | 'q' | z[a,b] | zs[a,b] | t[i,j]
//            | det_q(m) | minor(i,..;j,..) | y(k) | x(k) | u(l1,..,ln) | '(' expr ')'
// u(lambda) denotes the holomorphic polynomial whose action on v0 is u_lambda.
NcPoly parse_expression(std::string_view text, const AlgebraKind& kind);

} // namespace qmb
