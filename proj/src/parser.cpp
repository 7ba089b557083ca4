#include "ccexp/parser.hpp"

#include <cctype>
#include <optional>

#include "ccexp/sequences.hpp"

namespace ccexp {

namespace {

enum class Tok {
    Id, Num, LParen, RParen, LBracket, RBracket, Comma,
    Rel, And, Or, Not, Implies, Iff, Plus, Minus, Star,
    Quant, Dollar, At, End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::uint64_t number = 0;
    Relation rel = Relation::Eq;
    char quant = 'E';
    int line = 1;
    int column = 1;
};

struct Lexer {
    std::string_view src;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    explicit Lexer(std::string_view s, int start_line = 1) : src(s), line(start_line) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, column); }

    void advance(std::size_t count = 1) {
        for (std::size_t j = 0; j < count && i < src.size(); ++j, ++i) {
            if (src[i] == '\n') { ++line; column = 1; }
            else ++column;
        }
    }

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) advance();
            if (i >= src.size()) break;
            Token t;
            t.line = line;
            t.column = column;
            char c = src[i];
            auto peek = [&](std::size_t ahead) {
                return i + ahead < src.size() ? src[i + ahead] : '\0';
            };
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::uint64_t value = 0;
                std::size_t j = i;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    value = value * 10 + std::uint64_t(src[j] - '0');
                    ++j;
                }
                t.kind = Tok::Num;
                t.number = value;
                t.text = std::string(src.substr(i, j - i));
                advance(j - i);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~') {
                std::size_t j = i;
                while (j < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                        src[j] == '~'))
                    ++j;
                std::string word(src.substr(i, j - i));
                // quantifier glued to its first variable: Aj, Ei, ...
                if ((word[0] == 'E' || word[0] == 'A') && word.size() > 1 &&
                    std::islower(static_cast<unsigned char>(word[1]))) {
                    t.kind = Tok::Quant;
                    t.quant = word[0];
                    tokens.push_back(t);
                    advance(1);
                    continue;
                }
                if (word == "E" || word == "A") {
                    t.kind = Tok::Quant;
                    t.quant = word[0];
                } else {
                    t.kind = Tok::Id;
                    t.text = word;
                }
                advance(j - i);
            } else {
                switch (c) {
                    case '(': t.kind = Tok::LParen; advance(); break;
                    case ')': t.kind = Tok::RParen; advance(); break;
                    case '[': t.kind = Tok::LBracket; advance(); break;
                    case ']': t.kind = Tok::RBracket; advance(); break;
                    case ',': t.kind = Tok::Comma; advance(); break;
                    case '&': t.kind = Tok::And; advance(); break;
                    case '|': t.kind = Tok::Or; advance(); break;
                    case '~': t.kind = Tok::Not; advance(); break;
                    case '+': t.kind = Tok::Plus; advance(); break;
                    case '-': t.kind = Tok::Minus; advance(); break;
                    case '*': t.kind = Tok::Star; advance(); break;
                    case '$': t.kind = Tok::Dollar; advance(); break;
                    case '@': t.kind = Tok::At; advance(); break;
                    case '=':
                        if (peek(1) == '>') { t.kind = Tok::Implies; advance(2); }
                        else { t.kind = Tok::Rel; t.rel = Relation::Eq; advance(); }
                        break;
                    case '!':
                        if (peek(1) != '=') fail("expected '=' after '!'");
                        t.kind = Tok::Rel;
                        t.rel = Relation::Ne;
                        advance(2);
                        break;
                    case '<':
                        if (peek(1) == '=' && peek(2) == '>') { t.kind = Tok::Iff; advance(3); }
                        else if (peek(1) == '=') { t.kind = Tok::Rel; t.rel = Relation::Le; advance(2); }
                        else { t.kind = Tok::Rel; t.rel = Relation::Lt; advance(); }
                        break;
                    case '>':
                        if (peek(1) == '=') { t.kind = Tok::Rel; t.rel = Relation::Ge; advance(2); }
                        else { t.kind = Tok::Rel; t.rel = Relation::Gt; advance(); }
                        break;
                    default:
                        fail(std::string("unexpected character '") + c + "'");
                }
            }
            tokens.push_back(t);
        }
        Token end;
        end.kind = Tok::End;
        end.line = line;
        end.column = column;
        tokens.push_back(end);
        return tokens;
    }
};

// One parsed operand of an atom: either an arithmetic term or a sequence
// letter T[term] (or a bare letter literal, used only against the former).
struct Operand {
    TermPtr term;          // when arithmetic
    std::string seq;       // when a sequence index
    TermPtr index;
    std::optional<int> letter;  // when @c or a bare small literal
};

struct Parser {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    std::string sequence;

    const Token& peek(std::size_t ahead = 0) const {
        return tokens[std::min(pos + ahead, tokens.size() - 1)];
    }
    const Token& get() { return tokens[std::min(pos++, tokens.size() - 1)]; }
    bool at(Tok kind) const { return peek().kind == kind; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, peek().line, peek().column);
    }

    void expect(Tok kind, const char* what) {
        if (!at(kind)) fail(std::string("expected ") + what);
        ++pos;
    }

    // index of the token after the ')' matching the '(' at `open`
    std::size_t after_matching_paren(std::size_t open) const {
        int depth = 0;
        for (std::size_t j = open; j < tokens.size(); ++j) {
            if (tokens[j].kind == Tok::LParen) ++depth;
            else if (tokens[j].kind == Tok::RParen && --depth == 0) return j + 1;
        }
        throw ParseError("unbalanced '('", tokens[open].line, tokens[open].column);
    }

    // ---- terms -------------------------------------------------------
    TermPtr term_unit() {
        if (at(Tok::Num)) return Term::nat(get().number);
        if (at(Tok::Id)) return Term::var(get().text);
        if (at(Tok::LParen)) {
            ++pos;
            TermPtr t = term_expr();
            expect(Tok::RParen, "')'");
            return t;
        }
        fail("expected a term");
    }

    TermPtr term_factor() {
        TermPtr t = term_unit();
        while (at(Tok::Star)) {
            ++pos;
            TermPtr u = term_unit();
            const Term* a = t.get();
            const Term* b = u.get();
            if (a->kind == Term::Kind::Constant && b->kind == Term::Kind::Constant)
                t = Term::nat(a->value * b->value);
            else if (a->kind == Term::Kind::Constant)
                t = Term::scale(a->value, std::move(u));
            else if (b->kind == Term::Kind::Constant)
                t = Term::scale(b->value, std::move(t));
            else
                fail("multiplication needs a literal factor");
        }
        return t;
    }

    TermPtr term_expr() {
        TermPtr t = term_factor();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            bool plus = get().kind == Tok::Plus;
            TermPtr u = term_factor();
            t = plus ? Term::sum(std::move(t), std::move(u))
                     : Term::diff(std::move(t), std::move(u));
        }
        return t;
    }

    // ---- atoms -------------------------------------------------------
    bool sequence_symbol_next() const {
        return at(Tok::Id) && !peek().text.empty() &&
               std::isupper(static_cast<unsigned char>(peek().text[0])) &&
               peek(1).kind == Tok::LBracket;
    }

    Operand operand() {
        Operand op;
        if (at(Tok::At)) {
            ++pos;
            if (!at(Tok::Num)) fail("expected a letter after '@'");
            op.letter = int(get().number);
            return op;
        }
        if (sequence_symbol_next()) {
            std::string symbol = get().text;
            if (symbol != "T")
                fail("unknown sequence symbol '" + symbol + "'");
            op.seq = sequence;
            expect(Tok::LBracket, "'['");
            op.index = term_expr();
            expect(Tok::RBracket, "']'");
            return op;
        }
        op.term = term_expr();
        return op;
    }

    FormulaPtr atom() {
        if (at(Tok::Dollar)) {
            ++pos;
            if (!at(Tok::Id)) fail("expected a predicate name after '$'");
            std::string callee = get().text;
            expect(Tok::LParen, "'('");
            std::vector<TermPtr> args;
            if (!at(Tok::RParen)) {
                args.push_back(term_expr());
                while (at(Tok::Comma)) {
                    ++pos;
                    args.push_back(term_expr());
                }
            }
            expect(Tok::RParen, "')'");
            return Formula::call(std::move(callee), std::move(args));
        }
        Operand lhs = operand();
        if (!at(Tok::Rel)) fail("expected a relation");
        Relation rel = get().rel;
        Operand rhs = operand();
        return combine(std::move(lhs), rel, std::move(rhs));
    }

    FormulaPtr combine(Operand lhs, Relation rel, Operand rhs) {
        bool seq_l = lhs.index != nullptr, seq_r = rhs.index != nullptr;
        if (seq_l && seq_r) {
            if (rel == Relation::Eq)
                return Formula::seq_eq(lhs.seq, lhs.index, rhs.seq, rhs.index);
            if (rel == Relation::Ne)
                return Formula::negation(
                    Formula::seq_eq(lhs.seq, lhs.index, rhs.seq, rhs.index));
            fail("sequence letters only compare with = or !=");
        }
        if (seq_l || seq_r) {
            Operand& s = seq_l ? lhs : rhs;
            Operand& o = seq_l ? rhs : lhs;
            std::optional<int> letter = o.letter;
            if (!letter && o.term && o.term->kind == Term::Kind::Constant &&
                o.term->value <= 9)
                letter = int(o.term->value);
            if (!letter) fail("a sequence letter compares with a letter constant");
            if (rel == Relation::Eq)
                return Formula::seq_eq_const(s.seq, s.index, *letter);
            if (rel == Relation::Ne)
                return Formula::negation(Formula::seq_eq_const(s.seq, s.index, *letter));
            fail("sequence letters only compare with = or !=");
        }
        if (lhs.letter || rhs.letter) fail("'@' letters only compare with sequence letters");
        return Formula::compare(std::move(lhs.term), rel, std::move(rhs.term));
    }

    // ---- formulas ----------------------------------------------------
    FormulaPtr primary() {
        if (at(Tok::LParen)) {
            std::size_t after = after_matching_paren(pos);
            Tok following = tokens[std::min(after, tokens.size() - 1)].kind;
            bool is_term_paren = following == Tok::Rel || following == Tok::Plus ||
                                 following == Tok::Minus || following == Tok::Star;
            if (!is_term_paren) {
                ++pos;
                FormulaPtr f = formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            return atom();
        }
        return atom();
    }

    FormulaPtr unary() {
        if (at(Tok::Not)) {
            ++pos;
            return Formula::negation(unary());
        }
        if (at(Tok::Quant)) {
            char q = get().quant;
            std::vector<std::string> vars;
            if (!at(Tok::Id)) fail("expected a variable after quantifier");
            vars.push_back(get().text);
            while (at(Tok::Comma)) {
                ++pos;
                if (!at(Tok::Id)) fail("expected a variable after ','");
                vars.push_back(get().text);
            }
            // the body extends as far right as the enclosing group allows
            FormulaPtr body = formula();
            return q == 'E' ? Formula::exists(std::move(vars), std::move(body))
                            : Formula::forall(std::move(vars), std::move(body));
        }
        return primary();
    }

    FormulaPtr conj() {
        FormulaPtr f = unary();
        while (at(Tok::And)) {
            ++pos;
            f = Formula::conjunction(std::move(f), unary());
        }
        return f;
    }

    FormulaPtr disj() {
        FormulaPtr f = conj();
        while (at(Tok::Or)) {
            ++pos;
            f = Formula::disjunction(std::move(f), conj());
        }
        return f;
    }

    FormulaPtr implication() {
        FormulaPtr f = disj();
        if (at(Tok::Implies)) {
            ++pos;
            return Formula::implication(std::move(f), implication());
        }
        return f;
    }

    FormulaPtr formula() {
        FormulaPtr f = implication();
        while (at(Tok::Iff)) {
            ++pos;
            f = Formula::equivalence(std::move(f), implication());
        }
        return f;
    }

    FormulaPtr parse_all() {
        FormulaPtr f = formula();
        if (!at(Tok::End)) fail("trailing input after formula");
        return f;
    }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const std::string& sequence) {
    if (!sequence_registered(sequence))
        throw ParseError("unknown sequence id '" + sequence + "'", 1, 1);
    Parser p;
    p.tokens = Lexer(text).run();
    p.sequence = sequence;
    return p.parse_all();
}

std::vector<ScriptCommand> parse_script(std::string_view text, const std::string& sequence) {
    std::vector<ScriptCommand> commands;
    std::string active = sequence;
    std::size_t i = 0;
    int line = 1;
    auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count && i < text.size(); ++j, ++i)
            if (text[i] == '\n') ++line;
    };
    auto skip_space = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance(1);
    };
    auto read_word = [&]() {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        std::string word(text.substr(i, j - i));
        advance(j - i);
        return word;
    };

    while (true) {
        skip_space();
        if (i >= text.size()) break;
        int at_line = line;
        if (text[i] == '#') {
            advance(1);
            std::size_t mark = i;
            std::string word = read_word();
            if (word == "sequence") {
                skip_space();
                std::string id = read_word();
                if (id.empty()) throw ParseError("expected a sequence id", at_line, 1);
                if (!sequence_registered(id))
                    throw ParseError("unknown sequence id '" + id + "'", at_line, 1);
                active = id;
                ScriptCommand cmd;
                cmd.kind = ScriptCommand::Kind::Sequence;
                cmd.name = id;
                cmd.line = at_line;
                commands.push_back(std::move(cmd));
            } else {
                // ordinary comment: skip the rest of the line
                (void)mark;
                while (i < text.size() && text[i] != '\n') advance(1);
            }
            continue;
        }
        std::string word = read_word();
        if (word != "def" && word != "eval")
            throw ParseError("expected 'def', 'eval', or a '#' line", at_line, 1);
        skip_space();
        std::string name = read_word();
        if (name.empty()) throw ParseError("expected a name after '" + word + "'", at_line, 1);
        skip_space();
        if (i >= text.size() || text[i] != '"')
            throw ParseError("expected a quoted formula", line, 1);
        advance(1);
        int formula_line = line;
        std::size_t start = i;
        while (i < text.size() && text[i] != '"') advance(1);
        if (i >= text.size()) throw ParseError("unterminated formula quote", formula_line, 1);
        std::string body(text.substr(start, i - start));
        advance(1);
        skip_space();
        if (i >= text.size() || text[i] != ':')
            throw ParseError("expected ':' after the formula", line, 1);
        advance(1);

        Parser p;
        p.tokens = Lexer(body, formula_line).run();
        p.sequence = active;
        ScriptCommand cmd;
        cmd.kind = word == "def" ? ScriptCommand::Kind::Define : ScriptCommand::Kind::Eval;
        cmd.name = std::move(name);
        cmd.formula = p.parse_all();
        cmd.formula_text = std::move(body);
        cmd.line = at_line;
        commands.push_back(std::move(cmd));
    }
    return commands;
}

}  // namespace ccexp
