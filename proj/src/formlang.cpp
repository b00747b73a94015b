#include "loopwitt/formlang.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>

namespace loopwitt {

namespace {

enum class Tok {
    Word,
    Number,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Semicolon,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Equals,
    End,
};

const char* tok_name(Tok k) {
    switch (k) {
    case Tok::Word: return "identifier";
    case Tok::Number: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semicolon: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
    }
    return "token";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

[[noreturn]] void syntax_fail(const Token& at, const std::string& msg) {
    throw ParseError(errc::syntax_error, msg + ", found " + tok_name(at.kind),
                     at.line, at.col);
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
        out.push_back({k, std::move(t), l, c});
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        int tl = line;
        int tc = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            push(Tok::Number, text.substr(i, j - i), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_'))
                ++j;
            push(Tok::Word, text.substr(i, j - i), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Tok k;
        switch (ch) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case '{': k = Tok::LBrace; break;
        case '}': k = Tok::RBrace; break;
        case ',': k = Tok::Comma; break;
        case ':': k = Tok::Colon; break;
        case ';': k = Tok::Semicolon; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '=': k = Tok::Equals; break;
        default:
            throw ParseError(errc::syntax_error,
                             std::string("unexpected character '") + ch + "'",
                             tl, tc);
        }
        push(k, std::string(1, ch), tl, tc);
        ++col;
        ++i;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

constexpr int kMaxDepth = 200;
constexpr long long kMaxExponent = 4096;

std::string subset_text(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!first) s += ", ";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

class Parser {
public:
    Parser(const std::string& text, const ParseContext& ctx)
        : ctx_(ctx), tokens_(lex(text)) {}

    // ----- token plumbing -----

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& get() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(const char* w) const {
        return at(Tok::Word) && peek().text == w;
    }
    const Token& expect(Tok k, const char* what) {
        if (!at(k)) syntax_fail(peek(), std::string("expected ") + what);
        return get();
    }
    void expect_word(const char* w) {
        if (!at_word(w))
            syntax_fail(peek(), std::string("expected '") + w + "'");
        get();
    }
    void expect_end() {
        if (!at(Tok::End)) syntax_fail(peek(), "expected end of input");
    }

    /// Re-raise evaluation errors as positioned input errors, keeping the code.
    template <typename F>
    auto evaluated(const Token& at, F&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.code(), e.what(), at.line, at.col);
        }
    }

    // ----- shared scalar rules -----

    long long parse_uint(long long max, const char* what) {
        const Token& t = expect(Tok::Number, what);
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(t.text.c_str(), &end, 10);
        if (errno == ERANGE || v > max)
            throw ParseError(errc::out_of_range_literal,
                             std::string(what) + " out of range: " + t.text,
                             t.line, t.col);
        return v;
    }

    long long parse_int(long long max, const char* what) {
        bool neg = false;
        if (at(Tok::Minus)) {
            get();
            neg = true;
        } else if (at(Tok::Plus)) {
            get();
        }
        long long v = parse_uint(max, what);
        return neg ? -v : v;
    }

    // ----- poly := ["-"] term {("+"|"-") term} -----

    LaurentPoly poly() {
        if (++depth_ > kMaxDepth)
            throw ParseError(errc::syntax_error, "expression nested too deeply",
                             peek().line, peek().col);
        bool neg = false;
        if (at(Tok::Minus)) {
            get();
            neg = true;
        }
        LaurentPoly acc = term();
        if (neg) acc = -acc;
        while (at(Tok::Plus) || at(Tok::Minus)) {
            bool minus = get().kind == Tok::Minus;
            LaurentPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        --depth_;
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (at(Tok::Star)) {
            get();
            acc = acc * factor();
        }
        return acc;
    }

    LaurentPoly factor() {
        const Token& start = peek();
        LaurentPoly base = atom();
        if (at(Tok::Caret)) {
            get();
            long long e = parse_int(kMaxExponent, "exponent");
            return evaluated(start,
                             [&] { return base.pow(static_cast<int>(e)); });
        }
        return base;
    }

    LaurentPoly atom() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            get();
            LaurentPoly inner = poly();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind == Tok::Number) {
            get();
            mpz_class num(t.text, 10); // default base 0 would read "08" as octal
            if (at(Tok::Slash)) {
                get();
                const Token& dt = expect(Tok::Number, "positive integer");
                mpz_class den(dt.text, 10);
                if (den == 0)
                    throw ParseError(errc::syntax_error,
                                     "denominator must be positive", dt.line,
                                     dt.col);
                FieldElem c = evaluated(t, [&] {
                    return FieldElem::from_fraction(ctx_.field, num, den);
                });
                return LaurentPoly::constant(ctx_.field, ctx_.nvars, c);
            }
            return LaurentPoly::constant(ctx_.field, ctx_.nvars,
                                         FieldElem(ctx_.field, num));
        }
        if (t.kind == Tok::Word) {
            int idx = var_index(t);
            get();
            return LaurentPoly::variable(ctx_.field, ctx_.nvars, idx);
        }
        syntax_fail(t, "expected integer, variable, or '('");
    }

    /// "t<k>" with k >= 1; anything else is a syntax error, a valid name
    /// beyond the ambient tower is unknown_variable.
    int var_index(const Token& t) {
        const std::string& s = t.text;
        if (s.size() < 2 || s[0] != 't' ||
            s.find_first_not_of("0123456789", 1) != std::string::npos)
            syntax_fail(t, "expected integer, variable, or '('");
        if (s[1] == '0')
            throw ParseError(errc::syntax_error,
                             "variable index must be a positive integer "
                             "without leading zeros",
                             t.line, t.col);
        long long idx = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            idx = idx * 10 + (s[i] - '0');
            if (idx > 1000000)
                throw ParseError(errc::unknown_variable,
                                 "no variable " + s + " in a tower of " +
                                     std::to_string(ctx_.nvars) + " variables",
                                 t.line, t.col);
        }
        if (idx > ctx_.nvars)
            throw ParseError(errc::unknown_variable,
                             "no variable " + s + " in a tower of " +
                                 std::to_string(ctx_.nvars) + " variables",
                             t.line, t.col);
        return static_cast<int>(idx);
    }

    // ----- form := "diag" "(" [poly {"," poly}] ")" | matrix -----

    DiagForm diag_form() {
        expect_word("diag");
        expect(Tok::LParen, "'('");
        std::vector<SqClassFn> entries;
        if (!at(Tok::RParen)) {
            for (;;) {
                const Token& start = peek();
                LaurentPoly f = poly();
                entries.push_back(
                    evaluated(start, [&] { return sq_class_fn(f); }));
                if (!at(Tok::Comma)) break;
                get();
            }
        }
        expect(Tok::RParen, "')'");
        return DiagForm(ctx_.field, ctx_.nvars, std::move(entries));
    }

    SymMatrix matrix() {
        const Token& open = expect(Tok::LBracket, "'['");
        QuotMat rows;
        for (;;) {
            expect(Tok::LBracket, "'['");
            std::vector<LaurentQuot> row;
            for (;;) {
                row.emplace_back(poly());
                if (!at(Tok::Comma)) break;
                get();
            }
            expect(Tok::RBracket, "']'");
            if (!rows.empty() && row.size() != rows.front().size())
                throw ParseError(errc::bad_input,
                                 "matrix rows have unequal lengths", open.line,
                                 open.col);
            rows.push_back(std::move(row));
            if (!at(Tok::Comma)) break;
            get();
        }
        expect(Tok::RBracket, "']'");
        if (rows.size() != rows.front().size())
            throw ParseError(errc::bad_input, "matrix is not square", open.line,
                             open.col);
        return evaluated(open, [&] {
            return SymMatrix::from_entries(ctx_.field, ctx_.nvars,
                                           std::move(rows));
        });
    }

    std::variant<DiagForm, SymMatrix> form() {
        if (at_word("diag")) return diag_form();
        if (at(Tok::LBracket)) return matrix();
        syntax_fail(peek(), "expected 'diag(...)' or '[[...]]'");
    }

    // ----- components := "{" subset ":" form {"," subset ":" form} "}" -----

    unsigned subset() {
        const Token& open = expect(Tok::LBrace, "'{'");
        unsigned mask = 0;
        if (!at(Tok::RBrace)) {
            for (;;) {
                const Token& it = peek();
                long long idx = parse_uint(1000000, "subset index");
                if (idx < 1 || idx > ctx_.nvars)
                    throw ParseError(errc::unknown_variable,
                                     "subset index " + std::to_string(idx) +
                                         " is outside 1.." +
                                         std::to_string(ctx_.nvars),
                                     it.line, it.col);
                mask |= 1u << (idx - 1);
                if (!at(Tok::Comma)) break;
                get();
            }
        }
        expect(Tok::RBrace, "'}'");
        (void)open;
        return mask;
    }

    LoopComponents components() {
        const Token& open = expect(Tok::LBrace, "'{'");
        LoopComponents out = evaluated(
            open, [&] { return LoopComponents(ctx_.field, ctx_.nvars); });
        std::vector<bool> seen(out.subset_count(), false);
        for (;;) {
            const Token& st = peek();
            unsigned mask = subset();
            if (seen[mask])
                throw ParseError(errc::duplicate_subset,
                                 "subset listed twice: " + subset_text(mask),
                                 st.line, st.col);
            seen[mask] = true;
            expect(Tok::Colon, "':'");
            const Token& ft = peek();
            BaseForm q = base_form_value(ft);
            evaluated(st, [&] {
                out.set_component(mask, std::move(q));
                return 0;
            });
            if (!at(Tok::Comma)) break;
            get();
        }
        expect(Tok::RBrace, "'}'");
        return out;
    }

    /// Restores the ambient variable count when a scope ends.
    struct NvarsGuard {
        int* slot;
        int saved;
        NvarsGuard(int* s, int value) : slot(s), saved(*s) { *s = value; }
        ~NvarsGuard() { *slot = saved; }
    };

    /// Component values are forms over the base field: parse with zero
    /// ambient variables, diagonalizing a matrix value if one appears.
    BaseForm base_form_value(const Token& at_tok) {
        NvarsGuard guard(&ctx_.nvars, 0);
        auto v = form();
        DiagForm q = std::holds_alternative<DiagForm>(v)
                         ? std::get<DiagForm>(v)
                         : evaluated(at_tok, [&] {
                               return diagonalize(std::get<SymMatrix>(v)).form;
                           });
        std::vector<SquareClass> classes;
        classes.reserve(q.entries().size());
        for (const SqClassFn& c : q.entries()) classes.push_back(c.base());
        return BaseForm(ctx_.field, std::move(classes));
    }

    // ----- cocycle specs -----

    CocycleInput cocycle() {
        expect_word("cocycle");
        expect(Tok::LParen, "'('");
        expect_word("m");
        expect(Tok::Equals, "'='");
        long long m = parse_uint(1000000, "m");
        expect(Tok::Comma, "','");
        expect_word("r");
        expect(Tok::Equals, "'='");
        long long r = parse_uint(64, "r");
        expect(Tok::Comma, "','");
        expect_word("e");
        expect(Tok::Equals, "'='");
        long long e = parse_uint(2, "e");
        expect(Tok::Comma, "','");
        TameGaloisGroup group =
            make_group(static_cast<int>(m), static_cast<int>(r),
                       static_cast<int>(e), ctx_.field);
        if (!at_word("units") && !at_word("target"))
            syntax_fail(peek(), "expected 'units' or 'target'");
        CocycleInput out = at_word("units") ? CocycleInput(orth_data(group))
                                            : CocycleInput(table_data(group));
        expect(Tok::RParen, "')'");
        return out;
    }

    DiagOrthCocycle orth_data(const TameGaloisGroup& group) {
        expect_word("units");
        expect(Tok::Equals, "'='");
        expect(Tok::LParen, "'('");
        std::vector<SquareClass> units;
        {
            NvarsGuard guard(&ctx_.nvars, 0);
            if (!at(Tok::RParen)) {
                for (;;) {
                    const Token& ut = peek();
                    LaurentPoly u = poly();
                    units.push_back(evaluated(ut, [&] {
                        if (u.is_zero())
                            fail(errc::zero_element, "unit must be nonzero");
                        return sq_class(u.terms().begin()->second);
                    }));
                    if (!at(Tok::Comma)) break;
                    get();
                }
            }
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Comma, "','");
        expect_word("exp");
        expect(Tok::Equals, "'='");
        expect(Tok::LBracket, "'['");
        std::vector<std::vector<int>> exps;
        if (!at(Tok::RBracket)) {
            for (;;) {
                expect(Tok::LBracket, "'['");
                std::vector<int> row;
                if (!at(Tok::RBracket)) {
                    for (;;) {
                        row.push_back(static_cast<int>(
                            parse_int(1000000000, "exponent")));
                        if (!at(Tok::Comma)) break;
                        get();
                    }
                }
                expect(Tok::RBracket, "']'");
                exps.push_back(std::move(row));
                if (!at(Tok::Comma)) break;
                get();
            }
        }
        expect(Tok::RBracket, "']'");
        return make_diag_orth(group, ctx_.field, std::move(units),
                              std::move(exps));
    }

    LoopCocycle table_data(const TameGaloisGroup& group) {
        expect_word("target");
        expect(Tok::Equals, "'='");
        expect(Tok::LParen, "'('");
        AbelianTarget target;
        for (;;) {
            long long mod = parse_uint(1000000000, "target modulus");
            if (mod < 1)
                syntax_fail(peek(), "expected positive target modulus");
            target.moduli.push_back(mod);
            if (!at(Tok::Comma)) break;
            get();
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Comma, "','");
        expect_word("action");
        expect(Tok::Equals, "'='");
        const Token& act = expect(Tok::Word, "'trivial' or 'invert'");
        if (act.text == "trivial")
            target.action = AbelianTarget::Action::Trivial;
        else if (act.text == "invert")
            target.action = AbelianTarget::Action::InvertByArithmetic;
        else
            syntax_fail(act, "expected 'trivial' or 'invert'");
        expect(Tok::Comma, "','");
        expect_word("values");
        expect(Tok::Equals, "'='");
        const Token& open = expect(Tok::LBrace, "'{'");
        std::vector<AbelianTarget::Value> values(group.order(), target.zero());
        std::vector<bool> seen(group.order(), false);
        for (;;) {
            const Token& et = peek();
            size_t idx = element_key(group);
            if (seen[idx])
                throw ParseError(errc::duplicate_subset,
                                 "group element listed twice", et.line, et.col);
            seen[idx] = true;
            expect(Tok::Colon, "':'");
            values[idx] = value_tuple(target);
            if (!at(Tok::Comma)) break;
            get();
        }
        expect(Tok::RBrace, "'}'");
        size_t missing = 0;
        for (bool s : seen) missing += !s;
        if (missing)
            throw ParseError(errc::bad_input,
                             "value table is missing " +
                                 std::to_string(missing) + " group element(s)",
                             open.line, open.col);
        return LoopCocycle(group, target, std::move(values));
    }

    /// "(a_1, ..., a_r; s)" reduced into the group's element index.
    size_t element_key(const TameGaloisGroup& group) {
        const Token& open = expect(Tok::LParen, "'('");
        TameGaloisGroup::Element el;
        el.a.assign(group.r(), 0);
        for (int i = 0; i < group.r(); ++i) {
            if (i) expect(Tok::Comma, "','");
            long long a = parse_int(1000000000, "group coordinate");
            long long red = a % group.m();
            if (red < 0) red += group.m();
            el.a[i] = static_cast<int>(red);
        }
        expect(Tok::Semicolon, "';'");
        long long s = parse_int(1000000000, "group coordinate");
        long long sred = s % group.e();
        if (sred < 0) sred += group.e();
        el.s = static_cast<int>(sred);
        expect(Tok::RParen, "')'");
        return evaluated(open, [&] { return group.index(el); });
    }

    AbelianTarget::Value value_tuple(const AbelianTarget& target) {
        expect(Tok::LParen, "'('");
        AbelianTarget::Value v;
        for (size_t i = 0; i < target.moduli.size(); ++i) {
            if (i) expect(Tok::Comma, "','");
            v.push_back(parse_int(1000000000, "target coordinate"));
        }
        expect(Tok::RParen, "')'");
        return target.reduce(std::move(v));
    }

private:
    ParseContext ctx_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int depth_ = 0;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <typename Table>
std::string render_component_table(const Table& cs) {
    std::vector<std::string> parts;
    for (unsigned mask = 0; mask < cs.subset_count(); ++mask)
        parts.push_back(subset_text(mask) + ": " +
                        render(cs.component(mask)));
    return "{" + join(parts, ", ") + "}";
}

} // namespace

LaurentPoly parse_poly(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    LaurentPoly out = p.poly();
    p.expect_end();
    return out;
}

DiagForm parse_diag(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    DiagForm out = p.diag_form();
    p.expect_end();
    return out;
}

SymMatrix parse_matrix(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    SymMatrix out = p.matrix();
    p.expect_end();
    return out;
}

std::variant<DiagForm, SymMatrix> parse_form(const std::string& text,
                                             const ParseContext& ctx) {
    Parser p(text, ctx);
    auto out = p.form();
    p.expect_end();
    return out;
}

DiagForm parse_form_as_diag(const std::string& text, const ParseContext& ctx) {
    auto v = parse_form(text, ctx);
    if (std::holds_alternative<DiagForm>(v)) return std::get<DiagForm>(v);
    return diagonalize(std::get<SymMatrix>(v)).form;
}

LoopComponents parse_components(const std::string& text,
                                const ParseContext& ctx) {
    Parser p(text, ctx);
    LoopComponents out = p.components();
    p.expect_end();
    return out;
}

CocycleInput parse_cocycle(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    CocycleInput out = p.cocycle();
    p.expect_end();
    return out;
}

std::string render(const LaurentPoly& f) { return f.str(); }

std::string render(const SqClassFn& c) { return c.str(); }

std::string render(const DiagForm& q) {
    std::vector<std::string> parts;
    for (const SqClassFn& c : q.entries()) parts.push_back(c.str());
    return "diag(" + join(parts, ", ") + ")";
}

std::string render(const BaseForm& q) {
    std::vector<std::string> parts;
    for (const SquareClass& c : q.entries()) parts.push_back(c.str());
    return "diag(" + join(parts, ", ") + ")";
}

std::string render(const SymMatrix& m) {
    std::vector<std::string> rows;
    for (int i = 0; i < m.size(); ++i) {
        std::vector<std::string> cells;
        for (int j = 0; j < m.size(); ++j) cells.push_back(m.at(i, j).str());
        rows.push_back("[" + join(cells, ", ") + "]");
    }
    return "[" + join(rows, ", ") + "]";
}

std::string render(const LoopComponents& cs) {
    return render_component_table(cs);
}

std::string render(const WittClass& w) { return render_component_table(w); }

std::string render(const DiagOrthCocycle& c) {
    std::vector<std::string> units;
    for (const SquareClass& u : c.units) units.push_back(u.str());
    std::vector<std::string> rows;
    for (const auto& row : c.exponents) {
        std::vector<std::string> cells;
        for (int v : row) cells.push_back(std::to_string(v));
        rows.push_back("[" + join(cells, ", ") + "]");
    }
    std::ostringstream os;
    os << "cocycle(m=" << c.group.m() << ", r=" << c.group.r()
       << ", e=" << c.group.e() << ", units=(" << join(units, ", ")
       << "), exp=[" << join(rows, ", ") << "])";
    return os.str();
}

} // namespace loopwitt
