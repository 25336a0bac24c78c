#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "wsurf/errors.hpp"

namespace wsurf {

using ParamMap = std::map<std::string, cplx, std::less<>>;

/// Arithmetic expression over `z`, the imaginary unit `i`, and named
/// parameters. Grammar: + - * / ^, unary minus, exp(), log(), parentheses,
/// decimal literals. log is the principal branch.
class Expression {
public:
    /// Parameter values are bound at parse time. Unknown identifiers throw
    /// Error(ParseError).
    static Expression parse(std::string_view text, const ParamMap& params = {});

    cplx operator()(cplx z) const;
    const std::string& source() const noexcept { return source_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (no spaces required).
cplx parse_complex(std::string_view text);

} // namespace wsurf
