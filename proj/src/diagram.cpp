#include "eqg/diagram.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace eqg {

bool Element::operator==(const Element& o) const {
    if (node_.index() != o.node_.index()) return false;
    if (is_pred()) return pred() == o.pred();
    if (is_eq()) return eq() == o.eq();
    return cond() == o.cond();
}

ValidationError::ValidationError(std::vector<Violation> vs)
    : std::runtime_error(vs.empty() ? "invalid diagram" : "invalid diagram: " + vs.front().message),
      violations(std::move(vs)) {}

// ── Validation ──────────────────────────────────────────────────────────────

namespace {

class Validator {
public:
    std::vector<Violation> run(const Diagram& d) {
        region(d.page, {});
        return std::move(violations_);
    }

private:
    void region(const Region& r, std::vector<std::string> visible) {
        for (const std::string& l : r.lines) {
            if (!declared_.insert(l).second)
                add(Violation::Kind::DuplicateLine, l, "line '" + l + "' declared more than once");
            visible.push_back(l);
        }
        for (const Element& e : r.elements) {
            if (e.is_pred()) {
                note_arity(e.pred().pred, static_cast<int>(e.pred().args.size()));
                for (const ArgRef& a : e.pred().args) check_ref(a, visible);
            } else if (e.is_eq()) {
                check_ref(e.eq().lhs, visible);
                check_ref(e.eq().rhs, visible);
            } else {
                const Conditional& c = e.cond();
                std::vector<std::string> inner = visible;
                for (const std::string& l : c.antecedent.lines) {
                    if (!declared_.insert(l).second)
                        add(Violation::Kind::DuplicateLine, l,
                            "line '" + l + "' declared more than once");
                    inner.push_back(l);
                }
                antecedent_body(c.antecedent, inner);
                for (const Region& cons : c.consequents) region(cons, inner);
            }
        }
    }

    // like region() but the lines were already registered by the caller
    void antecedent_body(const Region& r, const std::vector<std::string>& visible) {
        Region stripped = r;
        stripped.lines.clear();
        region(stripped, visible);
    }

    void check_ref(const ArgRef& a, const std::vector<std::string>& visible) {
        if (!a.is_line()) return;
        for (const std::string& l : visible)
            if (l == a.name) return;
        add(Violation::Kind::UnboundLine, a.name, "line '" + a.name + "' is not in scope");
    }

    void note_arity(const std::string& pred, int arity) {
        auto [it, inserted] = arities_.emplace(pred, arity);
        if (!inserted && it->second != arity)
            add(Violation::Kind::ArityConflict, pred,
                "predicate '" + pred + "' used with arities " + std::to_string(it->second) +
                    " and " + std::to_string(arity));
    }

    void add(Violation::Kind k, const std::string& name, std::string msg) {
        // report each (kind, name) once
        for (const Violation& v : violations_)
            if (v.kind == k && v.name == name) return;
        violations_.push_back({k, name, std::move(msg)});
    }

    std::set<std::string> declared_;
    std::map<std::string, int> arities_;
    std::vector<Violation> violations_;
};

}  // namespace

std::vector<Violation> validate(const Diagram& d) { return Validator().run(d); }

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

struct SexpToken {
    enum class Kind { LParen, RParen, Word, End };
    Kind kind;
    std::string text;
    int line, col;
};

class SexpLexer {
public:
    explicit SexpLexer(std::string_view src) : src_(src) { advance(); }

    const SexpToken& peek() const { return tok_; }
    SexpToken next() {
        SexpToken t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        tok_.text.clear();
        if (pos_ >= src_.size()) {
            tok_.kind = SexpToken::Kind::End;
            return;
        }
        char c = src_[pos_];
        if (c == '(') {
            take();
            tok_.kind = SexpToken::Kind::LParen;
            return;
        }
        if (c == ')') {
            take();
            tok_.kind = SexpToken::Kind::RParen;
            return;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            tok_.text += src_[pos_];
            take();
        }
        tok_.kind = SexpToken::Kind::Word;
    }

    void take() {
        if (src_[pos_] == '\n') ++line_, col_ = 1;
        else ++col_;
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    SexpToken tok_{SexpToken::Kind::End, "", 1, 1};
};

bool is_keyword(const std::string& w) {
    return w == "line" || w == "cond" || w == "then" || w == "eq" || w == "neq" || w == "not";
}

class DiagramParser {
public:
    explicit DiagramParser(std::string_view src) : lex_(src) {}

    Diagram parse() {
        Diagram d;
        d.page.kind = Region::Kind::Page;
        while (lex_.peek().kind != SexpToken::Kind::End) item_into(d.page, false);
        return d;
    }

private:
    // Parses one "(...)" item and appends it to `r`; `in_cond` permits
    // `then` blocks, which are collected by the caller instead.
    void item_into(Region& r, bool in_cond) {
        SexpToken open = expect(SexpToken::Kind::LParen, "'('");
        SexpToken head = expect(SexpToken::Kind::Word, "a symbol");
        if (head.text == "line") {
            SexpToken name = expect(SexpToken::Kind::Word, "a line name");
            if (!std::isupper(static_cast<unsigned char>(name.text[0])))
                throw ParseError("line name must start with an uppercase letter", name.line,
                                 name.col);
            expect(SexpToken::Kind::RParen, "')'");
            r.lines.push_back(name.text);
        } else if (head.text == "eq" || head.text == "neq") {
            ArgRef a = arg();
            ArgRef b = arg();
            expect(SexpToken::Kind::RParen, "')'");
            if (head.text == "eq") {
                r.elements.push_back(Element(EqLink{a, b}));
            } else {
                auto c = std::make_shared<Conditional>();
                c->from_not = true;
                c->antecedent.kind = Region::Kind::Antecedent;
                c->antecedent.elements.push_back(Element(EqLink{a, b}));
                r.elements.push_back(Element(CondPtr(std::move(c))));
            }
        } else if (head.text == "not") {
            auto c = std::make_shared<Conditional>();
            c->from_not = true;
            c->antecedent.kind = Region::Kind::Antecedent;
            while (lex_.peek().kind != SexpToken::Kind::RParen) item_into(c->antecedent, false);
            expect(SexpToken::Kind::RParen, "')'");
            r.elements.push_back(Element(CondPtr(std::move(c))));
        } else if (head.text == "cond") {
            auto c = std::make_shared<Conditional>();
            c->antecedent.kind = Region::Kind::Antecedent;
            while (lex_.peek().kind != SexpToken::Kind::RParen) {
                if (peek_then()) {
                    Region cons;
                    cons.kind = Region::Kind::Consequent;
                    expect(SexpToken::Kind::LParen, "'('");
                    lex_.next();  // "then"
                    while (lex_.peek().kind != SexpToken::Kind::RParen) item_into(cons, false);
                    expect(SexpToken::Kind::RParen, "')'");
                    c->consequents.push_back(std::move(cons));
                } else {
                    item_into(c->antecedent, true);
                }
            }
            expect(SexpToken::Kind::RParen, "')'");
            r.elements.push_back(Element(CondPtr(std::move(c))));
        } else if (head.text == "then") {
            throw ParseError("'then' is only allowed inside a cond", open.line, open.col);
        } else {
            if (std::isupper(static_cast<unsigned char>(head.text[0])))
                throw ParseError("predicate name must start lowercase: '" + head.text + "'",
                                 head.line, head.col);
            PredApp p;
            p.pred = head.text;
            while (lex_.peek().kind == SexpToken::Kind::Word) p.args.push_back(arg());
            expect(SexpToken::Kind::RParen, "')'");
            r.elements.push_back(Element(std::move(p)));
        }
        (void)in_cond;
    }

    bool peek_then() {
        // lookahead for "(then"; the lexer has one-token lookahead, so save
        // and restore is simpler with a tiny buffered check
        if (lex_.peek().kind != SexpToken::Kind::LParen) return false;
        SexpLexer probe = lex_;
        probe.next();
        return probe.peek().kind == SexpToken::Kind::Word && probe.peek().text == "then";
    }

    ArgRef arg() {
        SexpToken t = expect(SexpToken::Kind::Word, "an argument");
        if (is_keyword(t.text))
            throw ParseError("'" + t.text + "' cannot be used as an argument", t.line, t.col);
        if (std::isupper(static_cast<unsigned char>(t.text[0]))) return ArgRef::line(t.text);
        return ArgRef::constant(t.text);
    }

    SexpToken expect(SexpToken::Kind k, const char* what) {
        const SexpToken& t = lex_.peek();
        if (t.kind != k) {
            std::string found = t.kind == SexpToken::Kind::End ? "end of input"
                                : t.kind == SexpToken::Kind::LParen ? "("
                                : t.kind == SexpToken::Kind::RParen ? ")"
                                                                    : t.text;
            throw ParseError(std::string("expected ") + what + ", found '" + found + "'", t.line,
                             t.col);
        }
        return lex_.next();
    }

    SexpLexer lex_;
};

}  // namespace

Diagram parse_diagram_unchecked(std::string_view text) { return DiagramParser(text).parse(); }

Diagram parse_diagram(std::string_view text) {
    Diagram d = parse_diagram_unchecked(text);
    std::vector<Violation> vs = validate(d);
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return d;
}

// ── Printer ─────────────────────────────────────────────────────────────────

namespace {

void print_element(const Element& e, std::string& out);

void print_region_body(const Region& r, std::string& out, bool leading_space) {
    bool first = !leading_space;
    auto sep = [&] {
        if (!first) out += ' ';
        first = false;
    };
    for (const std::string& l : r.lines) {
        sep();
        out += "(line " + l + ")";
    }
    for (const Element& e : r.elements) {
        sep();
        print_element(e, out);
    }
}

void print_element(const Element& e, std::string& out) {
    if (e.is_pred()) {
        out += '(' + e.pred().pred;
        for (const ArgRef& a : e.pred().args) out += ' ' + a.name;
        out += ')';
    } else if (e.is_eq()) {
        out += "(eq " + e.eq().lhs.name + ' ' + e.eq().rhs.name + ')';
    } else {
        const Conditional& c = e.cond();
        if (c.from_not && c.consequents.empty()) {
            out += "(not";
            print_region_body(c.antecedent, out, true);
            out += ')';
        } else {
            out += "(cond";
            print_region_body(c.antecedent, out, true);
            for (const Region& cons : c.consequents) {
                out += " (then";
                print_region_body(cons, out, true);
                out += ')';
            }
            out += ')';
        }
    }
}

}  // namespace

std::string print_diagram(const Diagram& d) {
    std::string out;
    print_region_body(d.page, out, false);
    return out;
}

}  // namespace eqg
