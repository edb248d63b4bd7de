#include "hecke/parser.hpp"

#include <cctype>

namespace hecke {

namespace {

struct Token {
    enum class Kind { Integer, GenS, GenT, Var, WindowIntro, Plus, Minus, Star, Slash, Caret,
                      LParen, RParen, Comma, End };
    Kind kind;
    std::size_t pos = 0;
    Int value = 0;  // Integer, GenS
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t pos = i_;
        if (i_ >= text_.size()) return {Token::Kind::End, pos};
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return {Token::Kind::Integer, pos, digits()};
        switch (c) {
            case 's': {
                ++i_;
                if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
                    throw SyntaxError(pos, "expected a generator index after 's'");
                return {Token::Kind::GenS, pos, digits()};
            }
            case 't': ++i_; return {Token::Kind::GenT, pos};
            case 'v': ++i_; return {Token::Kind::Var, pos};
            case 'T': ++i_; return {Token::Kind::WindowIntro, pos};
            case '+': ++i_; return {Token::Kind::Plus, pos};
            case '-': ++i_; return {Token::Kind::Minus, pos};
            case '*': ++i_; return {Token::Kind::Star, pos};
            case '/': ++i_; return {Token::Kind::Slash, pos};
            case '^': ++i_; return {Token::Kind::Caret, pos};
            case '(': ++i_; return {Token::Kind::LParen, pos};
            case ')': ++i_; return {Token::Kind::RParen, pos};
            case ',': ++i_; return {Token::Kind::Comma, pos};
            default: break;
        }
        throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }

private:
    Int digits() {
        std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        return Int(std::string(text_.substr(start, i_ - start)));
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

ExprPtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprPtr scalar_node(Rat v) {
    ExprNode n;
    n.kind = ExprNode::Kind::ScalarQ;
    n.scalar = std::move(v);
    return make_node(std::move(n));
}

class Parser {
public:
    Parser(std::string_view text, int rank) : lex_(text), rank_(rank) { advance(); }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (cur_.kind != Token::Kind::End) throw SyntaxError(cur_.pos, "trailing input");
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) throw SyntaxError(cur_.pos, std::string("expected ") + what);
    }

    std::int64_t signed_int(const char* what) {
        bool neg = accept(Token::Kind::Minus);
        if (cur_.kind != Token::Kind::Integer) throw SyntaxError(cur_.pos, std::string("expected ") + what);
        Int v = cur_.value;
        advance();
        if (v > (Int(1) << 40))
            throw Error(Errc::BadInput, "integer literal out of the supported range");
        return static_cast<std::int64_t>(neg ? Int(-v) : v);
    }

    ExprPtr negate(ExprPtr e) {
        ExprNode n;
        n.kind = ExprNode::Kind::Prod;
        n.children = {scalar_node(Rat(-1)), std::move(e)};
        return make_node(std::move(n));
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms;
        bool lead_neg = accept(Token::Kind::Minus);
        ExprPtr first = term();
        terms.push_back(lead_neg ? negate(std::move(first)) : std::move(first));
        while (true) {
            if (accept(Token::Kind::Plus)) {
                terms.push_back(term());
            } else if (accept(Token::Kind::Minus)) {
                terms.push_back(negate(term()));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return terms.front();
        ExprNode n;
        n.kind = ExprNode::Kind::Sum;
        n.children = std::move(terms);
        return make_node(std::move(n));
    }

    ExprPtr term() {
        std::vector<ExprPtr> factors{factor()};
        while (true) {
            if (accept(Token::Kind::Star)) {
                factors.push_back(factor());
            } else if (accept(Token::Kind::Slash)) {
                ExprNode inv;
                inv.kind = ExprNode::Kind::Pow;
                inv.base = factor();
                inv.exponent = -1;
                factors.push_back(make_node(std::move(inv)));
            } else {
                break;
            }
        }
        if (factors.size() == 1) return factors.front();
        ExprNode n;
        n.kind = ExprNode::Kind::Prod;
        n.children = std::move(factors);
        return make_node(std::move(n));
    }

    ExprPtr factor() {
        ExprPtr a = atom();
        if (!accept(Token::Kind::Caret)) return a;
        std::int64_t e = signed_int("an integer exponent");
        if (e == 0) return scalar_node(Rat(1));
        if (e == 1) return a;
        ExprNode n;
        n.kind = ExprNode::Kind::Pow;
        n.base = std::move(a);
        n.exponent = e;
        return make_node(std::move(n));
    }

    ExprPtr atom() {
        switch (cur_.kind) {
            case Token::Kind::Integer: {
                Rat v(cur_.value);
                advance();
                return scalar_node(std::move(v));
            }
            case Token::Kind::Var: {
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::ScalarV;
                return make_node(std::move(n));
            }
            case Token::Kind::GenT: {
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::Gen;
                n.generator = GenName::t();
                return make_node(std::move(n));
            }
            case Token::Kind::GenS: {
                if (cur_.value >= rank_)
                    throw Error(Errc::IndexOutOfRange,
                                "generator s" + cur_.value.str() + " exceeds rank " + std::to_string(rank_));
                int i = static_cast<int>(cur_.value);
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::Gen;
                n.generator = GenName::s(i);
                return make_node(std::move(n));
            }
            case Token::Kind::WindowIntro: {
                advance();
                expect(Token::Kind::LParen, "'(' after 'T'");
                Window w;
                w.push_back(signed_int("a window entry"));
                while (accept(Token::Kind::Comma)) w.push_back(signed_int("a window entry"));
                expect(Token::Kind::RParen, "')'");
                if (static_cast<int>(w.size()) != rank_)
                    throw Error(Errc::RankMismatch, "window literal arity " + std::to_string(w.size()) +
                                                         " does not match rank " + std::to_string(rank_));
                ExprNode n;
                n.kind = ExprNode::Kind::BasisLit;
                n.window = std::move(w);
                return make_node(std::move(n));
            }
            case Token::Kind::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            default:
                throw SyntaxError(cur_.pos, "expected an atom");
        }
    }

    Lexer lex_;
    Token cur_{Token::Kind::End, 0};
    int rank_;
};

}  // namespace

ExprPtr parse_expr_text(std::string_view text, int rank) {
    if (rank < 1) throw Error(Errc::BadInput, "rank must be >= 1");
    return Parser(text, rank).parse();
}

ElementVar eval_in_mode(const ExprPtr& node, int rank, const CoeffMode& mode) {
    if (mode.is_symbolic()) return eval_expr(node, symbolic_config(rank));
    return eval_expr(node, numeric_config(rank, mode.numeric_value()));
}

std::string pretty(const ElementVar& e) {
    return std::visit([](const auto& x) { return to_display(x); }, e);
}

}  // namespace hecke
