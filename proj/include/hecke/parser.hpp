#pragma once

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "hecke/render.hpp"

namespace hecke {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Expression tree of the calculator grammar. Subtraction is stored as a
// (-1)-scaled summand, division as a (-1)-power factor; Pow never carries
// exponent 0 after parsing.
struct ExprNode {
    enum class Kind { Sum, Prod, Pow, Gen, ScalarV, ScalarQ, BasisLit };

    Kind kind = Kind::ScalarQ;
    std::vector<ExprPtr> children;       // Sum, Prod
    ExprPtr base;                        // Pow
    long long exponent = 0;              // Pow
    GenName generator = GenName::t();    // Gen
    Rat scalar;                          // ScalarQ
    Window window;                       // BasisLit
};

// Grammar (whitespace-insensitive between tokens):
//   expr   := ["-"] term { ("+"|"-") term }
//   term   := factor { ("*"|"/") factor }
//   factor := atom [ "^" sint ]
//   atom   := "s" digits | "t" | "v" | digits | "T(" sint {"," sint} ")" | "(" expr ")"
// "s0" is accepted and expands through t s1 t^-1 during evaluation.
ExprPtr parse_expr_text(std::string_view text, int rank);

template <class K>
HeckeElementT<K> eval_expr(const ExprPtr& node, const HeckeConfigT<K>& config) {
    switch (node->kind) {
        case ExprNode::Kind::Sum: {
            HeckeElementT<K> acc(config);
            for (const ExprPtr& c : node->children) acc = acc + eval_expr(c, config);
            return acc;
        }
        case ExprNode::Kind::Prod: {
            HeckeElementT<K> acc = eval_expr(node->children.front(), config);
            for (std::size_t i = 1; i < node->children.size(); ++i)
                acc = mul(acc, eval_expr(node->children[i], config));
            return acc;
        }
        case ExprNode::Kind::Pow:
            return power(eval_expr(node->base, config), node->exponent);
        case ExprNode::Kind::Gen:
            return gen(config, node->generator);
        case ExprNode::Kind::ScalarV:
            if constexpr (std::is_same_v<K, RatFunc>) {
                return RatFunc::variable() * unit(config);
            } else {
                throw Error(Errc::ModeMismatch, "the literal v needs symbolic mode");
            }
        case ExprNode::Kind::ScalarQ:
            return K(node->scalar) * unit(config);
        case ExprNode::Kind::BasisLit:
            return basis_element(config, AffinePerm(config.rank(), node->window));
    }
    throw Error(Errc::BadInput, "unknown expression node");
}

using ElementVar = std::variant<HeckeElementT<Rat>, HeckeElementT<RatFunc>>;

ElementVar eval_in_mode(const ExprPtr& node, int rank, const CoeffMode& mode);

template <class K>
std::string pretty(const HeckeElementT<K>& e) {
    return to_display(e);
}

std::string pretty(const ElementVar& e);

}  // namespace hecke
