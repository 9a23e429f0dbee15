#include "noethops/parse.hpp"

#include <cctype>

namespace noethops {

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text, int line0 = 1) : s_(text), line_(line0) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '\n') { ++line_; col_ = 1; ++i_; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++i_; continue; }
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
            size_t j = i_;
            bool seen_dot = false;
            while (j < s_.size()) {
                char d = s_[j];
                if (std::isdigit(static_cast<unsigned char>(d))) { ++j; continue; }
                if (d == '.' && !seen_dot) { seen_dot = true; ++j; continue; }
                if ((d == 'e' || d == 'E') && j + 1 < s_.size() &&
                    (std::isdigit(static_cast<unsigned char>(s_[j + 1])) ||
                     ((s_[j + 1] == '+' || s_[j + 1] == '-') && j + 2 < s_.size() &&
                      std::isdigit(static_cast<unsigned char>(s_[j + 2]))))) {
                    j += s_[j + 1] == '+' || s_[j + 1] == '-' ? 2 : 1;
                    continue;
                }
                break;
            }
            tok_.kind = Token::Kind::Number;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.kind = Token::Kind::Ident;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        tok_.kind = Token::Kind::Op;
        tok_.text = std::string(1, c);
        ++col_;
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
    throw ParseError({Diagnostic{at.line, at.col, msg}});
}

// Expressions evaluate to operators; plain polynomials are operators whose
// only differential monomial is 1.  The dx symbols commute with everything
// in this grammar (the library never composes operators).
class ExprParser {
public:
    ExprParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

    DiffOp parse() {
        DiffOp v = expr();
        if (lex_.peek().kind != Token::Kind::End)
            parse_fail(lex_.peek(), "unexpected trailing input '" + lex_.peek().text + "'");
        return v;
    }

    DiffOp expr() {
        DiffOp acc = term();
        while (lex_.peek().kind == Token::Kind::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            Token op = lex_.take();
            DiffOp rhs = term();
            acc = op.text == "+" ? acc + rhs : acc - rhs;
        }
        return acc;
    }

private:
    DiffOp term() {
        DiffOp acc = factor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Op && (t.text == "*" || t.text == "/")) {
                Token op = lex_.take();
                DiffOp rhs = factor();
                acc = op.text == "*" ? mul(acc, rhs) : div(acc, rhs, op);
            } else if (t.kind == Token::Kind::Ident ||
                       (t.kind == Token::Kind::Op && t.text == "(")) {
                DiffOp rhs = factor();
                acc = mul(acc, rhs);
            } else {
                break;
            }
        }
        return acc;
    }

    DiffOp factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Op && (t.text == "-" || t.text == "+")) {
            Token op = lex_.take();
            DiffOp v = factor();
            return op.text == "-" ? -v : v;
        }
        DiffOp base = primary();
        if (lex_.peek().kind == Token::Kind::Op && lex_.peek().text == "^") {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Number || e.text.find('.') != std::string::npos)
                parse_fail(e, "exponent must be a nonnegative integer");
            int n = 0;
            try {
                n = std::stoi(e.text);
            } catch (...) {
                parse_fail(e, "exponent out of range");
            }
            DiffOp acc = constant(Rational(1));
            for (int k = 0; k < n; ++k) acc = mul(acc, base);
            return acc;
        }
        return base;
    }

    DiffOp primary() {
        Token t = lex_.take();
        if (t.kind == Token::Kind::Number) return constant(Rational::from_string(t.text));
        if (t.kind == Token::Kind::Ident) {
            int v = ring_->var_index(t.text);
            if (v >= 0) {
                DiffOp op(ring_);
                op.add_term(Monomial(ring_->arity()),
                            QPoly::variable(ring_, static_cast<size_t>(v)));
                return op;
            }
            if (t.text.size() > 1 && t.text[0] == 'd') {
                int dv = ring_->var_index(t.text.substr(1));
                if (dv >= 0) {
                    DiffOp op(ring_);
                    op.add_term(Monomial::unit(ring_->arity(), static_cast<size_t>(dv)),
                                QPoly::constant(ring_, Rational(1)));
                    return op;
                }
            }
            parse_fail(t, "unknown identifier '" + t.text + "'");
        }
        if (t.kind == Token::Kind::Op && t.text == "(") {
            DiffOp v = expr();
            Token close = lex_.take();
            if (close.kind != Token::Kind::Op || close.text != ")")
                parse_fail(close, "expected ')'");
            return v;
        }
        parse_fail(t, t.kind == Token::Kind::End ? "unexpected end of input"
                                                 : "unexpected token '" + t.text + "'");
    }

    DiffOp constant(Rational c) {
        DiffOp op(ring_);
        op.add_term(Monomial(ring_->arity()), QPoly::constant(ring_, std::move(c)));
        return op;
    }

    DiffOp mul(const DiffOp& a, const DiffOp& b) {
        DiffOp out(ring_);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
        return out;
    }

    DiffOp div(const DiffOp& a, const DiffOp& b, const Token& at) {
        if (b.terms().size() != 1 || !b.terms().begin()->first.is_one() ||
            !b.terms().begin()->second.is_constant())
            parse_fail(at, "division is only defined by nonzero constants");
        Rational d = b.terms().begin()->second.constant_value();
        if (d.is_zero()) parse_fail(at, "division by zero");
        DiffOp out(ring_);
        for (const auto& [m, c] : a.terms()) out.add_term(m, c.scaled(d.inverse()));
        return out;
    }

    Lexer& lex_;
    RingPtr ring_;
};

} // namespace

DiffOp parse_diffop(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    return ExprParser(lex, ring).parse();
}

QPoly parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lex(text);
    DiffOp op = ExprParser(lex, ring).parse();
    for (const auto& [m, c] : op.terms())
        if (!m.is_one())
            throw ParseError({Diagnostic{1, 1, "differential symbols are not allowed here"}});
    if (op.is_zero()) return QPoly::zero(ring);
    return op.terms().begin()->second;
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError({Diagnostic{1, 1, "empty coordinate"}});

    auto read_real = [](const std::string& u) -> double {
        size_t used = 0;
        double v = std::stod(u, &used);
        if (used != u.size()) throw std::invalid_argument(u);
        return v;
    };
    try {
        if (s.back() == 'i') {
            std::string body = s.substr(0, s.size() - 1);
            // split real and imaginary summands at the last sign that does
            // not belong to an exponent
            for (size_t k = body.size(); k-- > 1;) {
                if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
                    body[k - 1] != 'E') {
                    std::string re = body.substr(0, k);
                    std::string im = body.substr(k);
                    if (im == "+" ) im = "1";
                    if (im == "-") im = "-1";
                    return Complex(read_real(re), read_real(im));
                }
            }
            if (body.empty() || body == "+") return Complex(0, 1);
            if (body == "-") return Complex(0, -1);
            return Complex(0, read_real(body));
        }
        return Complex(read_real(s), 0);
    } catch (const std::exception&) {
        throw ParseError({Diagnostic{1, 1, "bad coordinate literal '" + text + "'"}});
    }
}

std::vector<Complex> parse_point(const std::string& text, size_t arity) {
    std::vector<Complex> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string part =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_complex(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != arity)
        throw ParseError({Diagnostic{
            1, 1, "point has " + std::to_string(out.size()) + " coordinates, ring expects " +
                      std::to_string(arity)}});
    return out;
}

} // namespace noethops
