#ifndef IFORMS_EXPR_HPP
#define IFORMS_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "iforms/calculus.hpp"
#include "iforms/form.hpp"
#include "iforms/rational.hpp"

namespace iforms {

/// Names visible to expressions: the coordinate chart, plus vector fields and
/// smooth maps bound on the command line.
struct Env {
    Space space;
    std::map<std::string, VectorField> vector_fields;
    std::map<std::string, SmoothMap> maps;

    const VectorField& field(const std::string& name) const;
    const SmoothMap& map(const std::string& name) const;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class OpKind {
    DSlot,     // d1(...), d{1,2}(...) composed over the set
    Lie,       // lie[X](...)
    Insert,    // insert[X,l](...)
    Kappa,     // kappa[(1 2)(3)](...)
    H2,        // H2(...)
    Pullback,  // pullback[phi](...); argument lives over phi's target space
};

struct Expr {
    enum class Kind { Number, Coord, Add, Sub, Mul, Pow, Neg, Op } kind;

    Rational value;            // Number
    std::string name;          // Coord, and the field/map name of Lie/Insert/Pullback
    ExprPtr lhs, rhs;          // Add/Sub/Mul; lhs also the operand of Pow/Neg/Op
    int exponent = 0;          // Pow
    OpKind op = OpKind::DSlot; // Op
    IndexSet slots;            // DSlot
    int slot = 0;              // Insert
    std::vector<std::vector<int>> cycles;  // Kappa
};

/// Recursive-descent parser over a single-line source. `*` (or a literal
/// wedge character) is the graded wedge; `^` is an integer power; rational
/// literals are int or int/int. Throws ParseError with 1-based position.
ExprPtr parse(const std::string& source, const Env& env);

Form eval_expr(const ExprPtr& e, const Env& env);

/// parse + eval in one step.
Form eval_string(const std::string& source, const Env& env);

/// Parses "name: comp, comp, ..." into a named vector field over env.space;
/// components are polynomial expressions.
std::pair<std::string, VectorField> parse_vector_field(const std::string& text, const Env& env);

}  // namespace iforms

#endif
