#include "eqg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eqg {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
      line(line),
      col(col) {}

ArityError::ArityError(const std::string& pred, int a, int b)
    : std::runtime_error("predicate '" + pred + "' used with arities " + std::to_string(a) +
                         " and " + std::to_string(b)),
      pred(pred) {}

// ── Factories ───────────────────────────────────────────────────────────────

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr top() {
    static const FormulaPtr t = [] {
        Formula f;
        f.kind = Formula::Kind::Top;
        return make(std::move(f));
    }();
    return t;
}

FormulaPtr bot() {
    static const FormulaPtr b = [] {
        Formula f;
        f.kind = Formula::Kind::Bot;
        return make(std::move(f));
    }();
    return b;
}

FormulaPtr atom(std::string pred, std::vector<Term> args) {
    Formula f;
    f.kind = Formula::Kind::Atom;
    f.name = std::move(pred);
    f.terms = std::move(args);
    return make(std::move(f));
}

FormulaPtr eq(Term lhs, Term rhs) {
    Formula f;
    f.kind = Formula::Kind::Eq;
    f.terms = {std::move(lhs), std::move(rhs)};
    return make(std::move(f));
}

namespace {

FormulaPtr binary(Formula::Kind k, FormulaPtr l, FormulaPtr r, NegSugar sugar = NegSugar::Auto) {
    Formula f;
    f.kind = k;
    f.lhs = std::move(l);
    f.rhs = std::move(r);
    f.sugar = sugar;
    return make(std::move(f));
}

FormulaPtr quantifier(Formula::Kind k, std::string var, FormulaPtr body) {
    Formula f;
    f.kind = k;
    f.name = std::move(var);
    f.rhs = std::move(body);
    return make(std::move(f));
}

}  // namespace

FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return binary(Formula::Kind::And, std::move(l), std::move(r)); }
FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return binary(Formula::Kind::Or, std::move(l), std::move(r)); }

FormulaPtr implies(FormulaPtr l, FormulaPtr r, NegSugar sugar) {
    return binary(Formula::Kind::Implies, std::move(l), std::move(r), sugar);
}

FormulaPtr forall(std::string var, FormulaPtr body) {
    return quantifier(Formula::Kind::Forall, std::move(var), std::move(body));
}

FormulaPtr exists(std::string var, FormulaPtr body) {
    return quantifier(Formula::Kind::Exists, std::move(var), std::move(body));
}

FormulaPtr neg(FormulaPtr f) { return implies(std::move(f), bot(), NegSugar::Not); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->terms != b->terms) return false;
    return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

// ── Lexer ───────────────────────────────────────────────────────────────────

namespace {

enum class Tok {
    End, LParen, RParen, Comma, Arrow, Amp, OrKw, Equal, NotEqual,
    NotKw, TopKw, BotKw, ForallKw, ExistsKw, Var, Const,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

bool word_start(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '(': take(1); tok_.kind = Tok::LParen; return;
            case ')': take(1); tok_.kind = Tok::RParen; return;
            case ',': take(1); tok_.kind = Tok::Comma; return;
            case '&': take(1); tok_.kind = Tok::Amp; return;
            case '=': take(1); tok_.kind = Tok::Equal; return;
            case '-':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    take(2);
                    tok_.kind = Tok::Arrow;
                    return;
                }
                throw ParseError("unexpected '-'", line_, col_);
            case '!':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
                    take(2);
                    tok_.kind = Tok::NotEqual;
                    return;
                }
                throw ParseError("unexpected '!'", line_, col_);
            default: break;
        }
        if (!word_start(c))
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        std::string word;
        while (pos_ < src_.size() && word_char(src_[pos_])) word += src_[pos_], take(1);
        tok_.text = word;
        if (word == "v") tok_.kind = Tok::OrKw;
        else if (word == "not") tok_.kind = Tok::NotKw;
        else if (word == "top") tok_.kind = Tok::TopKw;
        else if (word == "bot") tok_.kind = Tok::BotKw;
        else if (word == "forall") tok_.kind = Tok::ForallKw;
        else if (word == "exists") tok_.kind = Tok::ExistsKw;
        else if (std::isupper(static_cast<unsigned char>(word[0]))) tok_.kind = Tok::Var;
        else tok_.kind = Tok::Const;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take(1);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take(1);
            } else {
                break;
            }
        }
    }

    void take(int n) {
        for (int i = 0; i < n; ++i) {
            if (src_[pos_] == '\n') ++line_, col_ = 1;
            else ++col_;
            ++pos_;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

// ── Parser ──────────────────────────────────────────────────────────────────

class FormulaParser {
public:
    explicit FormulaParser(std::string_view src) : lex_(src) {}

    FormulaPtr parse() {
        FormulaPtr f = formula();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected trailing input '" + describe(t) + "'", t.line, t.col);
        return f;
    }

private:
    FormulaPtr formula() { return impl(); }

    FormulaPtr quant() {
        Token kw = lex_.next();
        bool universal = kw.kind == Tok::ForallKw;
        std::vector<std::string> vars;
        while (lex_.peek().kind == Tok::Var) vars.push_back(lex_.next().text);
        if (vars.empty())
            throw ParseError("expected variable after '" + kw.text + "'", lex_.peek().line,
                             lex_.peek().col);
        FormulaPtr body;
        if (lex_.peek().kind == Tok::ForallKw || lex_.peek().kind == Tok::ExistsKw) {
            body = quant();
        } else if (lex_.peek().kind == Tok::LParen) {
            lex_.next();
            body = formula();
            expect(Tok::RParen, "')'");
        } else {
            body = unary();
        }
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = universal ? forall(*it, body) : exists(*it, body);
        return body;
    }

    FormulaPtr impl() {
        FormulaPtr l = disjunction();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.next();
            return implies(std::move(l), impl(), NegSugar::Arrow);
        }
        return l;
    }

    FormulaPtr disjunction() {
        FormulaPtr f = conjunction();
        while (lex_.peek().kind == Tok::OrKw) {
            lex_.next();
            f = disj(std::move(f), conjunction());
        }
        return f;
    }

    FormulaPtr conjunction() {
        FormulaPtr f = unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.next();
            f = conj(std::move(f), unary());
        }
        return f;
    }

    FormulaPtr unary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::NotKw:
                lex_.next();
                return neg(unary());
            case Tok::TopKw: lex_.next(); return top();
            case Tok::BotKw: lex_.next(); return bot();
            case Tok::LParen: {
                lex_.next();
                FormulaPtr f = formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::ForallKw:
            case Tok::ExistsKw:
                return quant();
            case Tok::Var:
            case Tok::Const:
                return atom_or_eq();
            default:
                throw ParseError("expected formula, found '" + describe(t) + "'", t.line, t.col);
        }
    }

    FormulaPtr atom_or_eq() {
        Token head = lex_.next();
        if (head.kind == Tok::Var) {
            // A lone variable can only open an (in)equality.
            return finish_eq(Term::variable(head.text), head);
        }
        if (lex_.peek().kind == Tok::LParen) {
            lex_.next();
            std::vector<Term> args;
            args.push_back(term());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.next();
                args.push_back(term());
            }
            expect(Tok::RParen, "')'");
            note_arity(head, static_cast<int>(args.size()));
            return atom(head.text, std::move(args));
        }
        if (lex_.peek().kind == Tok::Equal || lex_.peek().kind == Tok::NotEqual)
            return finish_eq(Term::constant(head.text), head);
        note_arity(head, 0);
        return atom(head.text);
    }

    FormulaPtr finish_eq(Term lhs, const Token& at) {
        Tok op = lex_.peek().kind;
        if (op != Tok::Equal && op != Tok::NotEqual)
            throw ParseError("expected '=' or '!=' after term '" + at.text + "'", lex_.peek().line,
                             lex_.peek().col);
        lex_.next();
        FormulaPtr e = eq(std::move(lhs), term());
        return op == Tok::Equal ? e : neg(std::move(e));
    }

    Term term() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Var) return Term::variable(lex_.next().text);
        if (t.kind == Tok::Const) return Term::constant(lex_.next().text);
        throw ParseError("expected term, found '" + describe(t) + "'", t.line, t.col);
    }

    void note_arity(const Token& pred, int arity) {
        auto [it, inserted] = arities_.emplace(pred.text, arity);
        if (!inserted && it->second != arity) throw ArityError(pred.text, it->second, arity);
    }

    void expect(Tok k, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != k)
            throw ParseError(std::string("expected ") + what + ", found '" + describe(t) + "'",
                             t.line, t.col);
        lex_.next();
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Tok::End: return "end of input";
            case Tok::LParen: return "(";
            case Tok::RParen: return ")";
            case Tok::Comma: return ",";
            case Tok::Arrow: return "->";
            case Tok::Amp: return "&";
            case Tok::Equal: return "=";
            case Tok::NotEqual: return "!=";
            case Tok::OrKw: return "v";
            default: return t.text;
        }
    }

    Lexer lex_;
    std::map<std::string, int> arities_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ── Printer ─────────────────────────────────────────────────────────────────

namespace {

// Precedence levels used for minimal parenthesisation: -> 1, v 2, & 3,
// not 4, atoms 5.  Quantifiers sit below -> and always need parentheses
// when they appear as an operand.
constexpr int kPrecImpl = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecNot = 4;
constexpr int kPrecQuant = 4;
constexpr int kPrecAtom = 5;

bool is_neg_of(const Formula& f) {
    return f.kind == Formula::Kind::Implies && f.rhs->is(Formula::Kind::Bot) &&
           !f.lhs->is(Formula::Kind::Bot);
}

std::string term_text(const Term& t) { return t.name; }

void print_rec(const Formula& f, int min_prec, std::string& out);

int effective_prec(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
        case Formula::Kind::Atom:
        case Formula::Kind::Eq:
            return kPrecAtom;
        case Formula::Kind::And: return kPrecAnd;
        case Formula::Kind::Or: return kPrecOr;
        case Formula::Kind::Implies:
            if (is_neg_of(f)) {
                if (f.lhs->is(Formula::Kind::Eq)) return kPrecAtom;  // prints as !=
                if (f.sugar == NegSugar::Not) return kPrecNot;
                if (f.sugar == NegSugar::Arrow) return kPrecImpl;
                // Auto: `not` form only when the operand needs no parentheses.
                return effective_prec(*f.lhs) >= kPrecNot ? kPrecNot : kPrecImpl;
            }
            return kPrecImpl;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            // self-delimiting on the right (the body is parenthesised), so a
            // quantifier can stand as an operand of &, v and ->
            return kPrecQuant;
    }
    return kPrecAtom;
}

void print_atomish(const Formula& f, std::string& out) {
    switch (f.kind) {
        case Formula::Kind::Top: out += "top"; return;
        case Formula::Kind::Bot: out += "bot"; return;
        case Formula::Kind::Atom:
            out += f.name;
            if (!f.terms.empty()) {
                out += '(';
                for (std::size_t i = 0; i < f.terms.size(); ++i) {
                    if (i) out += ',';
                    out += term_text(f.terms[i]);
                }
                out += ')';
            }
            return;
        case Formula::Kind::Eq:
            out += term_text(f.terms[0]) + " = " + term_text(f.terms[1]);
            return;
        default: break;
    }
}

void print_bare(const Formula& f, std::string& out) {
    switch (f.kind) {
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
        case Formula::Kind::Atom:
        case Formula::Kind::Eq:
            print_atomish(f, out);
            return;
        case Formula::Kind::And:
            print_rec(*f.lhs, kPrecAnd, out);
            out += " & ";
            print_rec(*f.rhs, kPrecAnd + 1, out);
            return;
        case Formula::Kind::Or:
            print_rec(*f.lhs, kPrecOr, out);
            out += " v ";
            print_rec(*f.rhs, kPrecOr + 1, out);
            return;
        case Formula::Kind::Implies: {
            if (is_neg_of(f) && effective_prec(f) != kPrecImpl) {
                if (f.lhs->is(Formula::Kind::Eq)) {
                    out += term_text(f.lhs->terms[0]) + " != " + term_text(f.lhs->terms[1]);
                } else {
                    // quantified operands are parenthesised for readability
                    // even though `not forall ...` would reparse fine
                    bool quantified = f.lhs->is(Formula::Kind::Forall) ||
                                      f.lhs->is(Formula::Kind::Exists);
                    out += "not ";
                    print_rec(*f.lhs, quantified ? kPrecAtom : kPrecNot, out);
                }
                return;
            }
            print_rec(*f.lhs, kPrecImpl + 1, out);
            out += " -> ";
            print_rec(*f.rhs, kPrecImpl, out);
            return;
        }
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            out += f.kind == Formula::Kind::Forall ? "forall" : "exists";
            const Formula* cur = &f;
            while (true) {
                out += ' ';
                out += cur->name;
                if (cur->rhs->kind == cur->kind) cur = cur->rhs.get();
                else break;
            }
            out += " (";
            print_rec(*cur->rhs, 0, out);
            out += ')';
            return;
        }
    }
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
    if (effective_prec(f) < min_prec) {
        out += '(';
        print_bare(f, out);
        out += ')';
    } else {
        print_bare(f, out);
    }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
    std::string out;
    print_rec(*f, 0, out);
    return out;
}

// ── Free variables / signature ──────────────────────────────────────────────

namespace {

void free_vars_rec(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind) {
        case Formula::Kind::Atom:
        case Formula::Kind::Eq:
            for (const Term& t : f.terms)
                if (t.is_variable() && !bound.count(t.name)) out.insert(t.name);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            free_vars_rec(*f.lhs, bound, out);
            free_vars_rec(*f.rhs, bound, out);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            bool fresh = bound.insert(f.name).second;
            free_vars_rec(*f.rhs, bound, out);
            if (fresh) bound.erase(f.name);
            return;
        }
        default: return;
    }
}

void collect_signature(const Formula& f, Signature& sig) {
    switch (f.kind) {
        case Formula::Kind::Atom: {
            int arity = static_cast<int>(f.terms.size());
            auto [it, inserted] = sig.predicates.emplace(f.name, arity);
            if (!inserted && it->second != arity) throw ArityError(f.name, it->second, arity);
            for (const Term& t : f.terms)
                if (t.is_constant()) sig.constants.push_back(t.name);
            return;
        }
        case Formula::Kind::Eq:
            for (const Term& t : f.terms)
                if (t.is_constant()) sig.constants.push_back(t.name);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_signature(*f.lhs, sig);
            collect_signature(*f.rhs, sig);
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            collect_signature(*f.rhs, sig);
            return;
        default: return;
    }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    free_vars_rec(*f, bound, out);
    return out;
}

Signature signature_of(const FormulaPtr& f, const std::vector<std::string>& extra_constants) {
    Signature sig;
    collect_signature(*f, sig);
    sig.constants.insert(sig.constants.end(), extra_constants.begin(), extra_constants.end());
    std::sort(sig.constants.begin(), sig.constants.end());
    sig.constants.erase(std::unique(sig.constants.begin(), sig.constants.end()),
                        sig.constants.end());
    return sig;
}

}  // namespace eqg
