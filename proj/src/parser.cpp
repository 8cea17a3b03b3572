#include "efg/parser.hpp"

#include <cctype>
#include <vector>

namespace efg {

namespace {

enum class Tok { LowerIdent, UpperIdent, Number, LParen, RParen, Less, Eq, Bang, Amp, Bar, Arrow, Dot, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::LowerIdent: return "variable";
        case Tok::UpperIdent: return "predicate";
        case Tok::Number: return "number";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Less: return "'<'";
        case Tok::Eq: return "'='";
        case Tok::Bang: return "'!'";
        case Tok::Amp: return "'&'";
        case Tok::Bar: return "'|'";
        case Tok::Arrow: return "'->'";
        case Tok::Dot: return "'.'";
        case Tok::Caret: return "'^'";
        case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto ident_char = [](char c) {
        return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, k = col;
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::LowerIdent, std::string(s.substr(i, j - i)), l, k});
            advance(j - i);
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::UpperIdent, std::string(s.substr(i, j - i)), l, k});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, k});
            advance(j - i);
        } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", l, k});
            advance(2);
        } else {
            Tok t;
            switch (c) {
                case '(': t = Tok::LParen; break;
                case ')': t = Tok::RParen; break;
                case '<': t = Tok::Less; break;
                case '=': t = Tok::Eq; break;
                case '!': t = Tok::Bang; break;
                case '&': t = Tok::Amp; break;
                case '|': t = Tok::Bar; break;
                case '.': t = Tok::Dot; break;
                case '^': t = Tok::Caret; break;
                default: throw ParseError(std::string("unknown token '") + c + "'", l, k);
            }
            out.push_back({t, std::string(1, c), l, k});
            advance(1);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool valid_var(std::string_view v) {
    if (v.empty() || !std::islower(static_cast<unsigned char>(v[0]))) return false;
    for (char c : v)
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula run() {
        Formula f = implies();
        if (peek().kind != Tok::End) fail("unexpected " + std::string(describe(peek().kind)));
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

    Token expect(Tok t) {
        if (peek().kind != t)
            fail(std::string("expected ") + describe(t) + ", found " + describe(peek().kind));
        return take();
    }

    Formula implies() {
        Formula lhs = disjunction();
        if (peek().kind == Tok::Arrow) {
            take();
            return Formula::implies(lhs, implies());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek().kind == Tok::Bar) {
            take();
            f = Formula::disj(f, conjunction());
        }
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (peek().kind == Tok::Amp) {
            take();
            f = Formula::conj(f, unary());
        }
        return f;
    }

    // "Ex." lexes as one uppercase identifier; "E x." as two tokens.
    bool at_quantifier(std::string& var, std::size_t& width) const {
        const Token& t = peek();
        if (t.kind != Tok::UpperIdent || (t.text[0] != 'E' && t.text[0] != 'A')) return false;
        if (t.text.size() > 1) {
            if (!valid_var(std::string_view(t.text).substr(1)) || peek(1).kind != Tok::Dot) return false;
            var = t.text.substr(1);
            width = 2;
            return true;
        }
        if (peek(1).kind == Tok::LowerIdent && peek(2).kind == Tok::Dot) {
            var = peek(1).text;
            width = 3;
            return true;
        }
        return false;
    }

    Formula unary() {
        const Token& t = peek();
        if (t.kind == Tok::Bang) {
            take();
            return Formula::negation(unary());
        }
        std::string var;
        std::size_t width = 0;
        if (at_quantifier(var, width)) {
            const bool ex = t.text[0] == 'E';
            for (std::size_t k = 0; k < width; ++k) take();
            if (peek().kind == Tok::End) fail("quantifier without body");
            Formula body = implies();
            return ex ? Formula::exists(var, body) : Formula::forall(var, body);
        }
        if (t.kind == Tok::LParen) {
            take();
            Formula f = implies();
            expect(Tok::RParen);
            return f;
        }
        if (t.kind == Tok::UpperIdent) {
            std::string name = take().text;
            expect(Tok::LParen);
            Term arg = term();
            expect(Tok::RParen);
            return Formula::pred(name, arg);
        }
        if (t.kind == Tok::LowerIdent && (t.text == "true" || t.text == "false")) {
            take();
            return Formula::truth(t.text == "true");
        }
        if (t.kind == Tok::LowerIdent) {
            Term l = term();
            if (peek().kind == Tok::Less) {
                take();
                return Formula::less(l, term());
            }
            if (peek().kind == Tok::Eq) {
                take();
                return Formula::eq(l, term());
            }
            fail("expected '<' or '=' after term");
        }
        fail("unexpected " + std::string(describe(t.kind)));
    }

    Term term() {
        const Token& t = peek();
        if (t.kind != Tok::LowerIdent) fail("expected term, found " + std::string(describe(t.kind)));
        if (t.text == "true" || t.text == "false") fail("'" + t.text + "' is not a term");
        if (t.text == "f" && (peek(1).kind == Tok::LParen || peek(1).kind == Tok::Caret)) {
            take();
            int power = 1;
            if (peek().kind == Tok::Caret) {
                take();
                const Token n = expect(Tok::Number);
                if (n.text.size() > 6) throw ParseError("f-power too large", n.line, n.col);
                power = std::stoi(n.text);
            }
            expect(Tok::LParen);
            Term inner = term();
            expect(Tok::RParen);
            inner.power += power;
            return inner;
        }
        return Term::variable(take().text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).run(); }

}  // namespace efg
