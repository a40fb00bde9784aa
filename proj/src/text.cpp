#include <cctype>

#include "gencliff/freealg.hpp"

namespace gencliff {

namespace {

struct Token {
    enum Kind { Name, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        skip_ws();
        Token t{Token::End, "", line_, col_};
        if (pos_ >= src_.size())
            return t;
        char c = src_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
                advance();
            t.kind = Token::Name;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
                advance();
            t.kind = Token::Int;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        advance();
        switch (c) {
            case '+': t.kind = Token::Plus; return t;
            case '-': t.kind = Token::Minus; return t;
            case '*': t.kind = Token::Star; return t;
            case '^': t.kind = Token::Caret; return t;
            case '/': t.kind = Token::Slash; return t;
            case '(': t.kind = Token::LParen; return t;
            case ')': t.kind = Token::RParen; return t;
        }
        fail_at(Errc::ParseError, std::string("unexpected character '") + c + "'", t.line, t.column);
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else
            ++col_;
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_]))
            advance();
    }
};

class Parser {
public:
    Parser(std::string_view src, const CtxPtr& ctx) : lex_(src), ctx_(ctx) { bump(); }

    NcPoly parse()
    {
        NcPoly p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    Lexer lex_;
    CtxPtr ctx_;
    Token cur_;

    void bump() { cur_ = lex_.next(); }

    void expect(Token::Kind k, const char* what)
    {
        if (cur_.kind != k)
            fail_at(Errc::ParseError, std::string("expected ") + what, cur_.line, cur_.column);
        if (k != Token::End)
            bump();
    }

    NcPoly expr()
    {
        bool negate = false;
        if (cur_.kind == Token::Plus)
            bump();
        else if (cur_.kind == Token::Minus) {
            negate = true;
            bump();
        }
        NcPoly acc = term();
        if (negate)
            acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            bump();
            NcPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    NcPoly term()
    {
        NcPoly acc = factor();
        while (cur_.kind == Token::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    NcPoly factor()
    {
        NcPoly base = primary();
        while (cur_.kind == Token::Caret) {
            bump();
            if (cur_.kind != Token::Int)
                fail_at(Errc::ParseError, "expected integer exponent", cur_.line, cur_.column);
            if (cur_.text.size() > 6)
                fail_at(Errc::ParseError, "exponent too large", cur_.line, cur_.column);
            long k = std::stol(cur_.text);
            if (k < 1)
                fail_at(Errc::ParseError, "exponent must be positive", cur_.line, cur_.column);
            bump();
            base = base.pow(uint32_t(k));
        }
        return base;
    }

    NcPoly primary()
    {
        if (cur_.kind == Token::Int) {
            BigInt num(cur_.text);
            bump();
            if (cur_.kind == Token::Slash) {
                bump();
                if (cur_.kind != Token::Int)
                    fail_at(Errc::ParseError, "expected denominator", cur_.line, cur_.column);
                BigInt den(cur_.text);
                bump();
                return NcPoly::constant(ctx_, Scalar::fraction(ctx_->ring, num, den));
            }
            return NcPoly::constant(ctx_, Scalar::of(ctx_->ring, num));
        }
        if (cur_.kind == Token::Name) {
            int ai = ctx_->agens.index_of(cur_.text);
            if (ai >= 0) {
                bump();
                return NcPoly::generator(ctx_, uint32_t(ai));
            }
            int xi = ctx_->xvars.index_of(cur_.text);
            if (xi >= 0) {
                bump();
                return NcPoly::xvar(ctx_, uint32_t(xi));
            }
            fail_at(Errc::UnknownGenerator, "'" + cur_.text + "' is not a declared generator or variable", cur_.line,
                    cur_.column);
        }
        if (cur_.kind == Token::LParen) {
            bump();
            NcPoly p = expr();
            expect(Token::RParen, "')'");
            return p;
        }
        fail_at(Errc::ParseError, "expected a term", cur_.line, cur_.column);
    }
};

void append_word(std::string& out, const Alphabet& alphabet, const Letters& word, bool& first)
{
    size_t i = 0;
    while (i < word.size()) {
        size_t j = i;
        while (j < word.size() && word[j] == word[i])
            ++j;
        if (!first)
            out += "*";
        first = false;
        out += alphabet[word[i]];
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
}

}  // namespace

NcPoly parse_poly(std::string_view text, const CtxPtr& ctx)
{
    return Parser(text, ctx).parse();
}

std::string format_word(const Alphabet& alphabet, const Letters& word)
{
    std::string out;
    bool first = true;
    append_word(out, alphabet, word, first);
    return out.empty() ? "1" : out;
}

std::string format_monomial(const PolyContext& ctx, const MixedMonomial& mon)
{
    std::string out;
    bool first = true;
    append_word(out, ctx.agens, mon.aword, first);
    append_word(out, ctx.xvars, mon.xpart, first);
    return out;
}

std::string format_poly(const NcPoly& p)
{
    if (p.is_zero())
        return "0";
    const PolyContext& ctx = *p.context();
    std::string out;
    bool first = true;
    for (const auto& [mon, c] : p.sorted_terms()) {
        Scalar mag = c;
        bool neg = c.num() < 0;
        if (neg)
            mag = -c;
        if (first) {
            if (neg)
                out += "-";
            first = false;
        }
        else
            out += neg ? " - " : " + ";
        std::string ms = format_monomial(ctx, mon);
        if (ms.empty())
            out += mag.str();
        else if (mag.is_one())
            out += ms;
        else
            out += mag.str() + "*" + ms;
    }
    return out;
}

}  // namespace gencliff
