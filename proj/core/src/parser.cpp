#include "iforms/expr.hpp"

#include <cctype>
#include <utility>

#include "iforms/error.hpp"

namespace iforms {

const VectorField& Env::field(const std::string& name) const {
    auto it = vector_fields.find(name);
    if (it == vector_fields.end()) throw Error("unknown vector field: " + name);
    return it->second;
}

const SmoothMap& Env::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw Error("unknown map: " + name);
    return it->second;
}

namespace {

enum class Tok {
    Num, Ident, Plus, Minus, Star, Caret, Slash,
    LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&] { return i + 1; };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) { ++i; continue; }
        // the wedge character is a synonym for '*'
        if (src.compare(i, 3, "∧") == 0) {
            out.push_back({Tok::Star, "*", col()});
            i += 3;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Num, src.substr(start, i - start), start + 1});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, src.substr(start, i - start), start + 1});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + src[i] + "'", 1, col());
        }
        out.push_back({kind, std::string(1, src[i]), col()});
        ++i;
    }
    out.push_back({Tok::End, "", src.size() + 1});
    return out;
}

bool is_slot_shorthand(const std::string& s) {
    if (s.size() < 2 || s[0] != 'd') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Env& env)
        : tokens_(std::move(tokens)), env_(env) {
        spaces_.push_back(env.space);
    }

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, peek().column);
    }
    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        return take();
    }

    int integer() {
        Token t = expect(Tok::Num, "an integer");
        return std::stoi(t.text);
    }

    static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    ExprPtr expr() {
        bool negate = false;
        if (peek().kind == Tok::Plus) take();
        else if (peek().kind == Tok::Minus) { take(); negate = true; }
        ExprPtr lhs = term();
        if (negate) {
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.lhs = lhs;
            lhs = make(std::move(e));
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool sub = take().kind == Tok::Minus;
            Expr e;
            e.kind = sub ? Expr::Kind::Sub : Expr::Kind::Add;
            e.lhs = lhs;
            e.rhs = term();
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (peek().kind == Tok::Star) {
            take();
            Expr e;
            e.kind = Expr::Kind::Mul;
            e.lhs = lhs;
            e.rhs = factor();
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (peek().kind == Tok::Caret) {
            take();
            Expr e;
            e.kind = Expr::Kind::Pow;
            e.lhs = base;
            e.exponent = integer();
            return make(std::move(e));
        }
        return base;
    }

    ExprPtr paren_arg() {
        expect(Tok::LParen, "'('");
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Num: {
                take();
                Expr e;
                e.kind = Expr::Kind::Number;
                Integer num(t.text);
                if (peek().kind == Tok::Slash) {
                    take();
                    Token d = expect(Tok::Num, "a denominator");
                    e.value = Rational(num, Integer(d.text));
                } else {
                    e.value = Rational(num);
                }
                return make(std::move(e));
            }
            case Tok::LParen: {
                take();
                ExprPtr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident:
                return ident_atom();
            case Tok::Slash:
                fail("division is only allowed between integer literals");
            default:
                fail("expected a value");
        }
    }

    ExprPtr ident_atom() {
        Token t = take();
        const std::string& name = t.text;
        if (name == "H2" && peek().kind == Tok::LParen) {
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::H2;
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (name == "lie" && peek().kind == Tok::LBracket) {
            take();
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::Lie;
            e.name = expect(Tok::Ident, "a vector field name").text;
            expect(Tok::RBracket, "']'");
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (name == "insert" && peek().kind == Tok::LBracket) {
            take();
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::Insert;
            e.name = expect(Tok::Ident, "a vector field name").text;
            expect(Tok::Comma, "','");
            e.slot = integer();
            expect(Tok::RBracket, "']'");
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (name == "kappa" && peek().kind == Tok::LBracket) {
            take();
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::Kappa;
            while (peek().kind == Tok::LParen) {
                take();
                std::vector<int> cycle;
                while (peek().kind != Tok::RParen) {
                    if (peek().kind == Tok::Comma) { take(); continue; }
                    cycle.push_back(integer());
                }
                take();  // ')'
                if (cycle.empty()) fail("empty cycle");
                e.cycles.push_back(std::move(cycle));
            }
            if (e.cycles.empty()) fail("expected a cycle like (1 2)");
            expect(Tok::RBracket, "']'");
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (name == "pullback" && peek().kind == Tok::LBracket) {
            take();
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::Pullback;
            e.name = expect(Tok::Ident, "a map name").text;
            expect(Tok::RBracket, "']'");
            // the argument lives over the map's target space
            const SmoothMap& phi = env_.map(e.name);
            if (phi.source() != spaces_.back())
                fail("pullback map source does not match the surrounding space");
            spaces_.push_back(phi.target());
            e.lhs = paren_arg();
            spaces_.pop_back();
            return make(std::move(e));
        }
        if (name == "d" && peek().kind == Tok::LBrace) {
            take();
            std::vector<int> slots;
            slots.push_back(integer());
            while (peek().kind == Tok::Comma) {
                take();
                slots.push_back(integer());
            }
            expect(Tok::RBrace, "'}'");
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::DSlot;
            e.slots = IndexSet(std::move(slots));
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (is_slot_shorthand(name) && peek().kind == Tok::LParen) {
            Expr e;
            e.kind = Expr::Kind::Op;
            e.op = OpKind::DSlot;
            e.slots = IndexSet{std::stoi(name.substr(1))};
            e.lhs = paren_arg();
            return make(std::move(e));
        }
        if (!spaces_.back().index_of(name)) {
            pos_ -= 1;  // point the error at the identifier itself
            fail("unknown coordinate: " + name);
        }
        Expr e;
        e.kind = Expr::Kind::Coord;
        e.name = name;
        return make(std::move(e));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Env& env_;
    std::vector<Space> spaces_;
};

Form eval_in(const ExprPtr& e, const Env& env, const Space& space) {
    switch (e->kind) {
        case Expr::Kind::Number:
            return Form::from_poly(Poly::constant(space, e->value));
        case Expr::Kind::Coord:
            return Form::from_poly(Poly::coordinate(space, e->name));
        case Expr::Kind::Add:
            return eval_in(e->lhs, env, space) + eval_in(e->rhs, env, space);
        case Expr::Kind::Sub:
            return eval_in(e->lhs, env, space) - eval_in(e->rhs, env, space);
        case Expr::Kind::Mul:
            return eval_in(e->lhs, env, space).wedge(eval_in(e->rhs, env, space));
        case Expr::Kind::Neg:
            return -eval_in(e->lhs, env, space);
        case Expr::Kind::Pow: {
            if (e->exponent < 0) throw Error("negative powers are not supported");
            Form base = eval_in(e->lhs, env, space);
            Form r = Form::unit(space);
            for (int i = 0; i < e->exponent; ++i) r = r.wedge(base);
            return r;
        }
        case Expr::Kind::Op:
            break;
    }
    switch (e->op) {
        case OpKind::DSlot:
            return d_iterated(e->slots, eval_in(e->lhs, env, space));
        case OpKind::Lie:
            return lie(env.field(e->name), eval_in(e->lhs, env, space));
        case OpKind::Insert:
            return insert(env.field(e->name), e->slot, eval_in(e->lhs, env, space));
        case OpKind::Kappa:
            return kappa(SlotMap::from_cycles(e->cycles), eval_in(e->lhs, env, space));
        case OpKind::H2:
            return homotopy_h2(eval_in(e->lhs, env, space));
        case OpKind::Pullback: {
            const SmoothMap& phi = env.map(e->name);
            if (phi.source() != space) throw Error("pullback map source space mismatch");
            return pullback(phi, eval_in(e->lhs, env, phi.target()));
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

ExprPtr parse(const std::string& source, const Env& env) {
    if (source.empty()) throw ParseError("empty expression", 1, 1);
    return Parser(lex(source), env).run();
}

Form eval_expr(const ExprPtr& e, const Env& env) { return eval_in(e, env, env.space); }

Form eval_string(const std::string& source, const Env& env) {
    return eval_expr(parse(source, env), env);
}

std::pair<std::string, VectorField> parse_vector_field(const std::string& text, const Env& env) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("vector field syntax is \"name: comp, comp, ...\"");
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string name = trim(text.substr(0, colon));
    if (name.empty()) throw Error("vector field needs a name");
    std::string body = text.substr(colon + 1);
    // split on top-level commas only
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : body) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    std::vector<Poly> comps;
    for (const auto& part : parts) {
        Form value = eval_string(trim(part), env);
        auto coeff = value.as_coefficient();
        if (!coeff) throw Error("vector field components must be polynomials");
        comps.push_back(*coeff);
    }
    return {name, VectorField(env.space, std::move(comps))};
}

}  // namespace iforms
