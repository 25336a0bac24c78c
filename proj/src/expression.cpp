#include "wsurf/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "wsurf/complex_kernel.hpp"

namespace wsurf {

struct Expression::Node {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Exp, Log } kind;
    cplx value{};
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr constant(cplx v) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Constant;
    n->value = v;
    return n;
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw Error(ErrorCode::ParseError, "invalid number '" + std::string(text) + "'");
    return v;
}

class Parser {
public:
    Parser(std::string_view text, const ParamMap& params) : text_(text), params_(params) {}

    NodePtr parse() {
        auto n = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError,
                    "expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expression() {
        auto n = term();
        for (;;) {
            if (accept('+')) n = make(Kind::Add, n, term());
            else if (accept('-')) n = make(Kind::Sub, n, term());
            else return n;
        }
    }

    NodePtr term() {
        auto n = unary();
        for (;;) {
            if (accept('*')) n = make(Kind::Mul, n, unary());
            else if (accept('/')) n = make(Kind::Div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    // right-associative; binds tighter than unary minus on its left: -z^2 = -(z^2)
    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make(Kind::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto n = expression();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        return constant(parse_double(text_.substr(start, pos_ - start)));
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "exp" || name == "log") {
            if (!accept('(')) fail("expected '(' after " + std::string(name));
            auto arg = expression();
            if (!accept(')')) fail("expected ')'");
            return make(name == "exp" ? Kind::Exp : Kind::Log, arg);
        }
        if (name == "z") return make(Kind::Variable);
        if (auto it = params_.find(name); it != params_.end()) return constant(it->second);
        if (name == "i") return constant(cplx(0.0, 1.0));
        fail("unknown identifier '" + std::string(name) + "'");
    }

    std::string_view text_;
    const ParamMap& params_;
    std::size_t pos_ = 0;
};

cplx evaluate(const Expression::Node& n, cplx z) {
    switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Variable: return z;
    case Kind::Add: return evaluate(*n.lhs, z) + evaluate(*n.rhs, z);
    case Kind::Sub: return evaluate(*n.lhs, z) - evaluate(*n.rhs, z);
    case Kind::Mul: return evaluate(*n.lhs, z) * evaluate(*n.rhs, z);
    case Kind::Div: return evaluate(*n.lhs, z) / evaluate(*n.rhs, z);
    case Kind::Neg: return -evaluate(*n.lhs, z);
    case Kind::Exp: return std::exp(evaluate(*n.lhs, z));
    case Kind::Log: return principal_log(evaluate(*n.lhs, z));
    case Kind::Pow: {
        const cplx base = evaluate(*n.lhs, z);
        const cplx e = evaluate(*n.rhs, z);
        // integer exponents by repeated multiplication (valid on the whole plane)
        if (e.imag() == 0.0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 64.0) {
            const int k = int(e.real());
            cplx r = 1.0;
            for (int j = 0; j < std::abs(k); ++j) r *= base;
            return k < 0 ? 1.0 / r : r;
        }
        return principal_pow(base, e);
    }
    }
    return 0.0;
}

} // namespace

Expression Expression::parse(std::string_view text, const ParamMap& params) {
    Expression e;
    e.root_ = Parser(text, params).parse();
    e.source_ = std::string(text);
    return e;
}

cplx Expression::operator()(cplx z) const { return evaluate(*root_, z); }

cplx parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty complex literal");
    if (s.back() != 'i') return parse_double(s);
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t);
    };
    if (split == std::string::npos) return cplx(0.0, imag_part(s));
    return cplx(parse_double(std::string_view(s).substr(0, split)), imag_part(std::string_view(s).substr(split)));
}

} // namespace wsurf
