#include "dlsim/parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace dlsim {

const char* to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::Lex: return "LEX";
        case ParseErrorKind::Syntax: return "SYNTAX";
        case ParseErrorKind::DuplicateDefinition: return "DUPLICATE_DEFINITION";
        case ParseErrorKind::Cycle: return "CYCLE";
        case ParseErrorKind::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : DlError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok {
    Name, Int, Define, Sub, LParen, RParen, Comma, Dot,
    And, Or, Not, Exists, Forall, AtLeast, Top, Bottom,
    Newline, End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const std::map<std::string, Tok, std::less<>> kKeywords = {
    {"and", Tok::And},       {"or", Tok::Or},         {"not", Tok::Not},
    {"exists", Tok::Exists}, {"forall", Tok::Forall}, {"atleast", Tok::AtLeast},
    {"Top", Tok::Top},       {"Bottom", Tok::Bottom},
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
        default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            int col = column();
            if (ch == '\n') {
                out.push_back({Tok::Newline, "\n", line_, col});
                ++pos_;
                ++line_;
                line_start_ = pos_;
            } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++pos_;
            } else if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                std::string word(text_.substr(start, pos_ - start));
                auto kw = kKeywords.find(word);
                out.push_back({kw == kKeywords.end() ? Tok::Name : kw->second, word, line_, col});
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                out.push_back({Tok::Int, std::string(text_.substr(start, pos_ - start)), line_, col});
            } else if (text_.substr(pos_, 2) == ":=") {
                out.push_back({Tok::Define, ":=", line_, col});
                pos_ += 2;
            } else if (text_.substr(pos_, 2) == "<=") {
                out.push_back({Tok::Sub, "<=", line_, col});
                pos_ += 2;
            } else if (ch == '(' || ch == ')' || ch == ',' || ch == '.') {
                Tok k = ch == '(' ? Tok::LParen : ch == ')' ? Tok::RParen : ch == ',' ? Tok::Comma : Tok::Dot;
                out.push_back({k, std::string(1, ch), line_, col});
                ++pos_;
            } else {
                std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                        ? std::string(1, ch)
                                        : "\\x" + hex(static_cast<unsigned char>(ch));
                throw ParseError(ParseErrorKind::Lex, line_, col, "unexpected character '" + shown + "'");
            }
        }
        out.push_back({Tok::End, "", line_, column()});
        return out;
    }

private:
    int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

    static std::string hex(unsigned v) {
        static const char* digits = "0123456789abcdef";
        return {digits[v >> 4], digits[v & 0xf]};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    int line_ = 1;
};

enum class Usage { Concept, Role };

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    KnowledgeBase kb() {
        KnowledgeBase out;
        std::map<std::string, const Token*> def_sites;
        while (peek().kind != Tok::End) {
            if (accept(Tok::Newline)) continue;
            statement(out, def_sites);
            if (!accept(Tok::Newline)) expect(Tok::End, "end of statement");
        }
        try {
            out.tbox.check_acyclic();
        } catch (const CyclicTBox& e) {
            const Token* site = def_sites.at(e.name());
            throw ParseError(ParseErrorKind::Cycle, site->line, site->column, e.what());
        }
        return out;
    }

    Concept single_concept() {
        while (accept(Tok::Newline)) {}
        Concept c = disjunction();
        while (accept(Tok::Newline)) {}
        expect(Tok::End, "end of input");
        return c;
    }

private:
    void statement(KnowledgeBase& out, std::map<std::string, const Token*>& def_sites) {
        const Token& head = expect(Tok::Name, "a name");
        if (accept(Tok::Define) || accept(Tok::Sub)) {
            DefinitionKind kind = prev().kind == Tok::Define ? DefinitionKind::Equivalent
                                                             : DefinitionKind::Subsumed;
            use(head, Usage::Concept);
            Concept body = disjunction();
            if (out.tbox.defines(head.text))
                throw ParseError(ParseErrorKind::DuplicateDefinition, head.line, head.column,
                                 "duplicate definition of '" + head.text + "'");
            out.tbox.define(head.text, kind, std::move(body));
            def_sites[head.text] = &head;
            return;
        }
        expect(Tok::LParen, "':=', '<=' or '('");
        const Token& first = expect(Tok::Name, "an individual name");
        if (accept(Tok::Comma)) {
            const Token& second = expect(Tok::Name, "an individual name");
            expect(Tok::RParen, "')'");
            use(head, Usage::Role);
            out.abox.assert_role(head.text, first.text, second.text);
        } else {
            expect(Tok::RParen, "')' or ','");
            use(head, Usage::Concept);
            out.abox.assert_concept(head.text, first.text);
        }
    }

    Concept disjunction() {
        std::vector<Concept> parts{conj()};
        while (accept(Tok::Or)) parts.push_back(conj());
        return disjoin(std::move(parts));
    }

    Concept conj() {
        std::vector<Concept> parts{unary()};
        while (accept(Tok::And)) parts.push_back(unary());
        return conjoin(std::move(parts));
    }

    Concept unary() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Not:
                return Concept::negation(unary());
            case Tok::Exists:
            case Tok::Forall: {
                const Token& role = expect(Tok::Name, "a role name");
                use(role, Usage::Role);
                expect(Tok::Dot, "'.'");
                Concept filler = unary();
                return t.kind == Tok::Exists ? Concept::exists(role.text, std::move(filler))
                                             : Concept::forall(role.text, std::move(filler));
            }
            case Tok::AtLeast: {
                const Token& n = expect(Tok::Int, "a positive integer");
                unsigned long value = 0;
                try {
                    value = std::stoul(n.text);
                } catch (const std::out_of_range&) {
                    throw ParseError(ParseErrorKind::Lex, n.line, n.column, "integer out of range");
                }
                if (value == 0 || value > std::numeric_limits<unsigned>::max())
                    throw ParseError(ParseErrorKind::Syntax, n.line, n.column,
                                     "atleast requires a positive count");
                const Token& role = expect(Tok::Name, "a role name");
                use(role, Usage::Role);
                return Concept::at_least(static_cast<unsigned>(value), role.text);
            }
            case Tok::LParen: {
                Concept inner = disjunction();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Top:
                return Concept::top();
            case Tok::Bottom:
                return Concept::bottom();
            case Tok::Name:
                use(t, Usage::Concept);
                return Concept::atom(t.text);
            default:
                throw ParseError(ParseErrorKind::Syntax, t.line, t.column,
                                 "expected a concept, found " + describe(t));
        }
    }

    // A name is either a concept (arity 1) or a role (arity 2), never both.
    void use(const Token& t, Usage u) {
        auto [it, inserted] = usage_.try_emplace(t.text, u);
        if (!inserted && it->second != u) {
            throw ParseError(ParseErrorKind::Syntax, t.line, t.column,
                             "'" + t.text + "' is used both as a concept and as a role");
        }
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& prev() const { return toks_[pos_ - 1]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    const Token& expect(Tok k, const std::string& what) {
        const Token& t = peek();
        if (t.kind != k)
            throw ParseError(ParseErrorKind::Syntax, t.line, t.column,
                             "expected " + what + ", found " + describe(t));
        return next();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, Usage> usage_;
};

bool is_junction(const Concept& c) { return c.is(ConceptKind::And) || c.is(ConceptKind::Or); }

void print(const Concept& c, std::string& out);

void print_operand(const Concept& parent, const Concept& child, std::string& out) {
    // An And inside an Or binds tighter and needs no parentheses.
    bool parens = is_junction(child) && !(parent.is(ConceptKind::Or) && child.is(ConceptKind::And));
    if (parens) out += '(';
    print(child, out);
    if (parens) out += ')';
}

void print_unary_arg(const Concept& arg, std::string& out) {
    bool parens = is_junction(arg);
    if (parens) out += '(';
    print(arg, out);
    if (parens) out += ')';
}

void print(const Concept& c, std::string& out) {
    switch (c.kind()) {
        case ConceptKind::Top: out += "Top"; return;
        case ConceptKind::Bottom: out += "Bottom"; return;
        case ConceptKind::Atom: out += c.name(); return;
        case ConceptKind::Not:
            out += "not ";
            print_unary_arg(c.filler(), out);
            return;
        case ConceptKind::And:
        case ConceptKind::Or: {
            const char* sep = c.is(ConceptKind::And) ? " and " : " or ";
            bool first = true;
            for (const auto& a : c.args()) {
                if (!first) out += sep;
                first = false;
                print_operand(c, a, out);
            }
            return;
        }
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            out += c.is(ConceptKind::Exists) ? "exists " : "forall ";
            out += c.name();
            out += '.';
            print_unary_arg(c.filler(), out);
            return;
        case ConceptKind::AtLeast:
            out += "atleast " + std::to_string(c.count()) + " " + c.name();
            return;
    }
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Parser(Lexer(text).run()).kb(); }

Concept parse_concept(std::string_view text) {
    return Parser(Lexer(text).run()).single_concept();
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kb(buf.str());
}

std::string to_string(const Concept& c) {
    std::string out;
    print(c, out);
    return out;
}

std::string serialize(const KnowledgeBase& kb) {
    std::string out;
    for (const auto& [name, def] : kb.tbox.definitions()) {
        out += name;
        out += def.kind == DefinitionKind::Equivalent ? " := " : " <= ";
        out += to_string(def.body);
        out += '\n';
    }
    for (const auto& a : kb.abox.concept_assertions())
        out += a.concept_name + "(" + a.individual + ")\n";
    for (const auto& a : kb.abox.role_assertions())
        out += a.role + "(" + a.subject + ", " + a.object + ")\n";
    return out;
}

}  // namespace dlsim
