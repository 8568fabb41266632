#include "nckit/expr.hpp"

#include <cctype>
#include <sstream>

namespace nckit {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Type { number, ident, symbol, end };
    Type type = Type::end;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token tok;
            tok.line = line_;
            tok.column = column_;
            if (pos_ >= src_.size()) {
                out.push_back(tok);
                return out;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                tok.type = Token::Type::number;
                tok.text = number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                tok.type = Token::Type::ident;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    tok.text += advance();
            } else if (std::string("+-*.~^()/").find(c) != std::string::npos) {
                tok.type = Token::Type::symbol;
                tok.text = std::string(1, advance());
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
            }
            out.push_back(tok);
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    bool digit_at(std::size_t p) const { return p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p])); }

    // Digits with an optional fraction part; a '.' only belongs to the number
    // when a digit follows, so "x1.x2" and "2.x1" still read '.' as an operator.
    std::string number() {
        std::string s;
        while (digit_at(pos_)) s += advance();
        if (pos_ < src_.size() && src_[pos_] == '.' && digit_at(pos_ + 1)) {
            s += advance();
            while (digit_at(pos_)) s += advance();
        }
        return s;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = sum();
        if (peek().type != Token::Type::end) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool is_symbol(const char* s) const { return peek().type == Token::Type::symbol && peek().text == s; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(t.type == Token::Type::end ? "unexpected end of input" : msg, t.line, t.column);
    }
    void expect(const char* s) {
        if (!is_symbol(s)) fail(std::string("expected '") + s + "'");
        take();
    }

    static ExprPtr node(Expr::Kind k, const Token& at) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    static ExprPtr binary(Expr::Kind k, const Token& at, ExprPtr a, ExprPtr b) {
        auto e = node(k, at);
        e->args.push_back(std::move(a));
        e->args.push_back(std::move(b));
        return e;
    }

    ExprPtr sum() {
        ExprPtr left = product();
        while (is_symbol("+") || is_symbol("-")) {
            const Token op = take();
            left = binary(op.text == "+" ? Expr::Kind::sum : Expr::Kind::difference, op, std::move(left), product());
        }
        return left;
    }

    ExprPtr product() {
        ExprPtr left = unary();
        while (is_symbol("*") || is_symbol(".")) {
            const Token op = take();
            left = binary(op.text == "*" ? Expr::Kind::star : Expr::Kind::pointwise, op, std::move(left), unary());
        }
        return left;
    }

    ExprPtr unary() {
        if (is_symbol("-") || is_symbol("~")) {
            const Token op = take();
            auto e = node(op.text == "-" ? Expr::Kind::negate : Expr::Kind::conj, op);
            e->args.push_back(unary());
            return e;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!is_symbol("^")) return base;
        const Token op = take();
        if (peek().type != Token::Type::number || peek().text.find('.') != std::string::npos)
            fail("expected a non-negative integer exponent");
        const Token n = take();
        if (n.text.size() > 4) throw ParseError("exponent too large", n.line, n.column);
        auto e = node(Expr::Kind::power, op);
        e->index = std::stoi(n.text);
        e->args.push_back(std::move(base));
        return e;
    }

    ExprPtr call(Expr::Kind k, const Token& at, int index) {
        expect("(");
        auto e = node(k, at);
        e->index = index;
        e->args.push_back(sum());
        expect(")");
        return e;
    }

    ExprPtr primary() {
        const Token& t = peek();
        if (t.type == Token::Type::number) {
            const Token num = take();
            auto e = node(Expr::Kind::literal, num);
            std::string text = num.text;
            if (is_symbol("/") && toks_[pos_ + 1].type == Token::Type::number) {
                take();
                const Token den = take();
                if (num.text.find('.') != std::string::npos || den.text.find('.') != std::string::npos)
                    throw ParseError("rational literals need integer parts", num.line, num.column);
                text += "/" + den.text;
            }
            try {
                e->value = CRat(parse_decimal_or_rational(text));
            } catch (const std::exception&) {
                throw ParseError("bad number '" + text + "'", num.line, num.column);
            }
            return e;
        }
        if (t.type == Token::Type::ident) {
            const Token id = take();
            static const char* vars[] = {"t", "x1", "x2", "x3", "eps"};
            for (int v = 0; v < kNumVars; ++v)
                if (id.text == vars[v]) {
                    auto e = node(Expr::Kind::variable, id);
                    e->index = v;
                    return e;
                }
            static const char* bases[] = {"dt", "dx1", "dx2", "dx3"};
            for (int mu = 0; mu < 4; ++mu)
                if (id.text == bases[mu]) {
                    auto e = node(Expr::Kind::basis, id);
                    e->index = mu;
                    return e;
                }
            if (id.text == "i") {
                auto e = node(Expr::Kind::literal, id);
                e->value = CRat::i();
                return e;
            }
            if (id.text.size() == 2 && id.text[0] == 'D' && id.text[1] >= '0' && id.text[1] <= '3')
                return call(Expr::Kind::partial, id, id.text[1] - '0');
            if (id.text == "d") return call(Expr::Kind::ext_d, id, 0);
            throw ParseError("unknown identifier '" + id.text + "'", id.line, id.column);
        }
        if (is_symbol("(")) {
            take();
            ExprPtr e = sum();
            expect(")");
            return e;
        }
        fail("unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string where(const Expr& e) {
    return " at line " + std::to_string(e.line) + ", column " + std::to_string(e.column);
}

Poly require_function(const DifferentialForm& f, const Expr& e, const char* op) {
    if (!f.is_function()) throw GradingError(std::string(op) + " needs a function argument" + where(e));
    return f.component(Wedge());
}

}  // namespace

ExprPtr parse(const std::string& src) { return Parser(Lexer(src).run()).run(); }

DifferentialForm evaluate(const Expr& e, const StarContext& ctx) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::literal:
            return DifferentialForm(Poly(e.value));
        case K::variable:
            return DifferentialForm(Poly::var(static_cast<Var>(e.index)));
        case K::basis:
            return DifferentialForm::basis(e.index);
        case K::star:
            return form_mul(evaluate(*e.args[0], ctx), evaluate(*e.args[1], ctx), ctx);
        case K::pointwise: {
            const Poly a = require_function(evaluate(*e.args[0], ctx), e, "'.'");
            const Poly b = require_function(evaluate(*e.args[1], ctx), e, "'.'");
            return DifferentialForm(mul(a, b, ctx.eps_max()));
        }
        case K::sum:
            return evaluate(*e.args[0], ctx) + evaluate(*e.args[1], ctx);
        case K::difference:
            return evaluate(*e.args[0], ctx) - evaluate(*e.args[1], ctx);
        case K::negate:
            return -evaluate(*e.args[0], ctx);
        case K::partial:
            return DifferentialForm(partial(require_function(evaluate(*e.args[0], ctx), e, "D"), e.index));
        case K::conj:
            return conj(evaluate(*e.args[0], ctx), ctx);
        case K::ext_d:
            return exterior_d(evaluate(*e.args[0], ctx));
        case K::power:
            return DifferentialForm(pow(require_function(evaluate(*e.args[0], ctx), e, "'^'"), e.index));
    }
    throw std::logic_error("unhandled expression kind");
}

namespace {

std::string rational_text(const Rational& r) { return r.get_str(); }

// Coefficient text and whether it can take a leading sign in a sum.
std::string coefficient_text(const CRat& c, bool& negative) {
    negative = false;
    if (c.im == 0) {
        negative = c.re < 0;
        return rational_text(abs(c.re));
    }
    if (c.re == 0) {
        negative = c.im < 0;
        const Rational m = abs(c.im);
        return m == 1 ? "i" : rational_text(m) + "*i";
    }
    const Rational m = abs(c.im);
    return "(" + rational_text(c.re) + (c.im < 0 ? " - " : " + ") + (m == 1 ? "i" : rational_text(m) + "*i") + ")";
}

std::string monomial_text(Monomial m) {
    static const char* names[kNumVars] = {"t", "x1", "x2", "x3", "eps"};
    std::string out;
    for (int v = 0; v < kNumVars; ++v) {
        const int k = m.exponent(static_cast<Var>(v));
        if (k == 0) continue;
        if (!out.empty()) out += ".";
        out += names[v];
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string render(const CRat& c) {
    bool negative = false;
    const std::string s = coefficient_text(c, negative);
    return negative ? "-" + s : s;
}

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        bool negative = false;
        std::string coef = coefficient_text(it->coef, negative);
        const std::string mono = monomial_text(it->mono);
        std::string body;
        if (mono.empty())
            body = coef;
        else if (coef == "1")
            body = mono;
        else
            body = coef + "*" + mono;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::string render(const DifferentialForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : f.components()) {
        std::string piece;
        if (w == Wedge()) {
            piece = render(c);
        } else {
            const std::string basis = w.to_string();
            if (c == Poly(1))
                piece = basis;
            else if (c == Poly(-1))
                piece = "-" + basis;
            else if (c.size() == 1)
                piece = render(c) + "*" + basis;
            else
                piece = "(" + render(c) + ")*" + basis;
        }
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

std::string reduce(const std::string& src, const StarContext& ctx) { return render(evaluate(*parse(src), ctx)); }

Poly parse_t_polynomial(const std::string& src) {
    const DifferentialForm f = evaluate(*parse(src), StarContext());
    if (!f.is_function()) throw GradingError("theta entry must be a function of t");
    Poly p = f.component(Wedge());
    for (int v = 1; v < kNumVars; ++v)
        if (p.depends_on(static_cast<Var>(v))) throw std::invalid_argument("theta entry must depend on t only: " + src);
    return p;
}

}  // namespace nckit
