#include "pfol/parser.hpp"

#include <cctype>

namespace pfol {

std::string OneForm::to_string() const {
    return "(" + A.to_string() + ") dx + (" + B.to_string() + ") dy";
}

namespace {

constexpr long kMaxExponent = 1 << 20;

enum class Tok { Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, VarX, VarY, Gen, Dx, Dy, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;  // digits for Int
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ >= s_.size()) break;
            std::size_t start = pos_;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                out.push_back({Tok::Int, start, s_.substr(start, pos_ - start)});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                std::string word = s_.substr(start, pos_ - start);
                if (word == "x") out.push_back({Tok::VarX, start, word});
                else if (word == "y") out.push_back({Tok::VarY, start, word});
                else if (word == "t") out.push_back({Tok::Gen, start, word});
                else if (word == "dx") out.push_back({Tok::Dx, start, word});
                else if (word == "dy") out.push_back({Tok::Dy, start, word});
                else throw InputError("unknown identifier '" + word + "'", start);
                continue;
            }
            ++pos_;
            switch (c) {
                case '+': out.push_back({Tok::Plus, start, "+"}); break;
                case '-': out.push_back({Tok::Minus, start, "-"}); break;
                case '*': out.push_back({Tok::Star, start, "*"}); break;
                case '/': out.push_back({Tok::Slash, start, "/"}); break;
                case '^': out.push_back({Tok::Caret, start, "^"}); break;
                case '(': out.push_back({Tok::LParen, start, "("}); break;
                case ')': out.push_back({Tok::RParen, start, ")"}); break;
                default:
                    throw InputError(std::string("unexpected character '") + c + "'", start);
            }
        }
        out.push_back({Tok::End, s_.size(), ""});
        return out;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const FieldSpec& field, bool t_is_variable = false)
        : field_(field), t_is_variable_(t_is_variable), tokens_(Lexer(text).run()) {}

    MultiPoly parse_poly_all() {
        MultiPoly p = parse_sum(false);
        expect_end();
        return p;
    }

    OneForm parse_one_form_all() {
        const FieldSpec& f = field_;
        OneForm form{MultiPoly::zero(f), MultiPoly::zero(f)};
        bool any = false;
        bool negative = accept_sign();
        while (true) {
            auto [coef, which] = parse_form_term();
            if (negative) coef = -coef;
            (which == Tok::Dx ? form.A : form.B) += coef;
            any = true;
            if (peek().kind == Tok::Plus) {
                next();
                negative = false;
            } else if (peek().kind == Tok::Minus) {
                next();
                negative = true;
            } else {
                break;
            }
        }
        expect_end();
        if (!any) throw InputError("empty 1-form", 0);
        return form;
    }

    RationalFunction parse_rational_function_all() {
        MultiPoly num = parse_sum(false);
        if (peek().kind == Tok::Slash) {
            next();
            MultiPoly den = parse_sum(false);
            expect_end();
            if (den.is_zero()) throw InputError("zero denominator", 0);
            return RationalFunction(num, den);
        }
        expect_end();
        return RationalFunction::from_poly(num);
    }

private:
    const Token& peek() const { return tokens_[idx_]; }
    const Token& next() { return tokens_[idx_++]; }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw InputError("unexpected trailing input '" + peek().text + "'", peek().offset);
    }

    bool accept_sign() {
        if (peek().kind == Tok::Minus) {
            next();
            return true;
        }
        if (peek().kind == Tok::Plus) next();
        return false;
    }

    // sum := sign? term (('+'|'-') term)*
    // stop_at_form: in 1-form coefficient position, stop before dx/dy
    MultiPoly parse_sum(bool stop_at_form) {
        bool negative = accept_sign();
        MultiPoly acc = parse_term(stop_at_form);
        if (negative) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            MultiPoly t = parse_term(stop_at_form);
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MultiPoly parse_term(bool stop_at_form) {
        MultiPoly acc = parse_factor(stop_at_form);
        while (peek().kind == Tok::Star) {
            next();
            acc *= parse_factor(stop_at_form);
        }
        return acc;
    }

    MultiPoly parse_factor(bool stop_at_form) {
        MultiPoly base = parse_primary(stop_at_form);
        if (peek().kind == Tok::Caret) {
            std::size_t at = next().offset;
            if (peek().kind != Tok::Int)
                throw InputError("exponent must be a nonnegative integer literal", peek().offset);
            const Token& e = next();
            long exp = 0;
            for (char c : e.text) {
                exp = exp * 10 + (c - '0');
                if (exp > kMaxExponent) throw InputError("exponent overflow", e.offset);
            }
            (void)at;
            return base.pow(exp);
        }
        return base;
    }

    MultiPoly parse_primary(bool stop_at_form) {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Int: {
                next();
                Rat value(tok.text);
                // rational literal a/b
                if (peek().kind == Tok::Slash && tokens_[idx_ + 1].kind == Tok::Int) {
                    next();
                    const Token& den = next();
                    Rat d(den.text);
                    if (d == 0) throw InputError("zero denominator in rational literal", den.offset);
                    value /= d;
                }
                value.canonicalize();
                return MultiPoly::constant(Scalar::of(field_, value));
            }
            case Tok::VarX:
                next();
                return MultiPoly::variable(field_, Var::X);
            case Tok::VarY:
                next();
                return MultiPoly::variable(field_, Var::Y);
            case Tok::Gen:
                next();
                if (t_is_variable_) return MultiPoly::variable(field_, Var::T);
                if (!field_.is_quadratic())
                    throw InputError("generator 't' used over the rational field", tok.offset);
                return MultiPoly::constant(Scalar::generator(field_));
            case Tok::LParen: {
                next();
                MultiPoly inner = parse_sum(false);
                if (peek().kind != Tok::RParen)
                    throw InputError("expected ')'", peek().offset);
                next();
                return inner;
            }
            case Tok::Minus: {
                next();
                return -parse_factor(stop_at_form);
            }
            default:
                throw InputError("unexpected token '" + tok.text + "'", tok.offset);
        }
    }

    // [coefficient-term] ('dx'|'dy')
    std::pair<MultiPoly, Tok> parse_form_term() {
        if (peek().kind == Tok::Dx || peek().kind == Tok::Dy)
            return {MultiPoly::constant(Scalar::one(field_)), next().kind};
        MultiPoly coef = parse_term(true);
        if (peek().kind != Tok::Dx && peek().kind != Tok::Dy)
            throw InputError("expected dx or dy after coefficient", peek().offset);
        return {coef, next().kind};
    }

    FieldSpec field_;
    bool t_is_variable_ = false;
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const FieldSpec& field) {
    return Parser(text, field).parse_poly_all();
}

OneForm parse_one_form(const std::string& text, const FieldSpec& field) {
    OneForm form = Parser(text, field).parse_one_form_all();
    if (form.is_zero())
        throw InputError("1-form has neither a dx nor a dy part", 0);
    return form;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
    MultiPoly p = parse_poly(text, field);
    if (!p.is_constant()) throw InputError("expected a scalar, got '" + text + "'");
    return p.constant_term();
}

RationalFunction parse_rational_function(const std::string& text, const FieldSpec& field) {
    return Parser(text, field).parse_rational_function_all();
}

MultiPoly parse_poly_t_variable(const std::string& text) {
    return Parser(text, FieldSpec::rationals(), true).parse_poly_all();
}

}  // namespace pfol
