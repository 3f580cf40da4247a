#include "pg/script.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace pg::script {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Point: return "point";
        case Kind::Line: return "line";
        case Kind::Conic: return "conic";
        case Kind::Map: return "map";
        case Kind::Points: return "points";
        case Kind::Count: return "count";
    }
    return "?";
}

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

bool Expr::operator==(const Expr& o) const {
    return tag == o.tag && triple == o.triple && count == o.count && name == o.name && args == o.args;
}

bool EmitOptions::operator==(const EmitOptions& o) const {
    return path == o.path && drop == o.drop && xmin == o.xmin && xmax == o.xmax && ymin == o.ymin &&
           ymax == o.ymax && samples == o.samples;
}

bool Statement::operator==(const Statement& o) const {
    return tag == o.tag && decl_kind == o.decl_kind && name == o.name && args == o.args && emit == o.emit;
}

namespace {

struct Token {
    enum class T { Name, Number, Str, LParen, RParen, LBracket, RBracket, Comma, Equal, Colon, Newline, End };

    T t;
    std::string text;
    int line;
    int col;
};

[[noreturn]] void fail(int line, int col, const std::string& msg) { throw ParseError(line, col, msg); }

bool name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool name_char(char c) { return name_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    size_t i = 0;
    auto push = [&](Token::T t, std::string s, int l, int c) { out.push_back({t, std::move(s), l, c}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            push(Token::T::Newline, "", line, col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (name_start(c)) {
            size_t j = i;
            while (j < text.size() && name_char(text[j])) ++j;
            push(Token::T::Name, text.substr(i, j - i), tl, tc);
            col += int(j - i);
            i = j;
            continue;
        }
        if (digit(c) || c == '-') {
            size_t j = i;
            if (text[j] == '-') ++j;
            if (j >= text.size() || !digit(text[j])) fail(tl, tc, "stray '-'");
            while (j < text.size() && digit(text[j])) ++j;
            if (j < text.size() && text[j] == '/') {
                ++j;
                if (j >= text.size() || !digit(text[j])) fail(tl, tc, "malformed rational");
                while (j < text.size() && digit(text[j])) ++j;
            }
            push(Token::T::Number, text.substr(i, j - i), tl, tc);
            col += int(j - i);
            i = j;
            continue;
        }
        if (c == '"') {
            size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
            if (j >= text.size() || text[j] != '"') fail(tl, tc, "unterminated string");
            push(Token::T::Str, text.substr(i + 1, j - i - 1), tl, tc);
            col += int(j - i + 1);
            i = j + 1;
            continue;
        }
        Token::T t;
        switch (c) {
            case '(': t = Token::T::LParen; break;
            case ')': t = Token::T::RParen; break;
            case '[': t = Token::T::LBracket; break;
            case ']': t = Token::T::RBracket; break;
            case ',': t = Token::T::Comma; break;
            case '=': t = Token::T::Equal; break;
            case ':': t = Token::T::Colon; break;
            default: fail(tl, tc, std::string("unexpected character '") + c + "'");
        }
        push(t, std::string(1, c), tl, tc);
        ++i;
        ++col;
    }
    out.push_back({Token::T::End, "", line, col});
    return out;
}

struct OpSig {
    std::vector<Kind> args;
    Kind result;
};

const std::map<std::string, OpSig>& op_table() {
    static const std::map<std::string, OpSig> t = {
        {"join", {{Kind::Point, Kind::Point}, Kind::Line}},
        {"meet", {{Kind::Line, Kind::Line}, Kind::Point}},
        {"harmonic", {{Kind::Point, Kind::Point, Kind::Point}, Kind::Point}},
        {"projectivity3",
         {{Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point}, Kind::Map}},
        {"apply", {{Kind::Map, Kind::Point}, Kind::Point}},
        {"axis", {{Kind::Map}, Kind::Line}},
        {"conic5", {{Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point}, Kind::Conic}},
        {"tangent", {{Kind::Conic, Kind::Point}, Kind::Line}},
        {"second", {{Kind::Conic, Kind::Point, Kind::Line}, Kind::Point}},
        {"pascal",
         {{Kind::Conic, Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point},
          Kind::Line}},
        {"sixth",
         {{Kind::Conic, Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Point, Kind::Line},
          Kind::Point}},
        {"polar", {{Kind::Point, Kind::Conic}, Kind::Line}},
        {"pole", {{Kind::Line, Kind::Conic}, Kind::Point}},
        {"trace", {{Kind::Conic, Kind::Count}, Kind::Points}},
    };
    return t;
}

// A predicate may admit several signatures (apart and equal work on points
// or on lines).
const std::map<std::string, std::vector<std::vector<Kind>>>& predicate_table() {
    static const std::map<std::string, std::vector<std::vector<Kind>>> t = {
        {"collinear", {{Kind::Point, Kind::Point, Kind::Point}}},
        {"noncollinear", {{Kind::Point, Kind::Point, Kind::Point}}},
        {"incident", {{Kind::Point, Kind::Line}}},
        {"outside", {{Kind::Point, Kind::Line}}},
        {"apart", {{Kind::Point, Kind::Point}, {Kind::Line, Kind::Line}}},
        {"equal", {{Kind::Point, Kind::Point}, {Kind::Line, Kind::Line}}},
        {"harmonic", {{Kind::Point, Kind::Point, Kind::Point, Kind::Point}}},
        {"on_conic", {{Kind::Conic, Kind::Point}}},
    };
    return t;
}

const std::set<std::string>& reserved_names() {
    static const std::set<std::string> s = [] {
        std::set<std::string> r = {"point", "line", "conic", "map",   "points",   "assert",
                                   "print", "emit", "svg",   "chart", "viewport", "samples"};
        for (const auto& [k, v] : op_table()) r.insert(k);
        for (const auto& [k, v] : predicate_table()) r.insert(k);
        return r;
    }();
    return s;
}

std::map<std::string, Kind> kind_keywords() {
    return {{"point", Kind::Point},
            {"line", Kind::Line},
            {"conic", Kind::Conic},
            {"map", Kind::Map},
            {"points", Kind::Points}};
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Script run() {
        Script s;
        for (;;) {
            while (at(Token::T::Newline)) ++pos_;
            if (at(Token::T::End)) break;
            s.statements.push_back(statement());
            if (!at(Token::T::Newline) && !at(Token::T::End))
                fail(cur().line, cur().col, "expected end of line, got '" + cur().text + "'");
        }
        return s;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool at(Token::T t) const { return cur().t == t; }

    const Token& expect(Token::T t, const std::string& what) {
        if (!at(t)) fail(cur().line, cur().col, "expected " + what + ", got '" + cur().text + "'");
        return toks_[pos_++];
    }

    Statement statement() {
        const Token& head = expect(Token::T::Name, "a statement keyword");
        Statement st;
        st.line = head.line;
        st.col = head.col;
        auto kinds = kind_keywords();
        if (auto it = kinds.find(head.text); it != kinds.end()) {
            st.tag = Statement::Tag::Decl;
            st.decl_kind = it->second;
            const Token& name = expect(Token::T::Name, "a binding name");
            if (reserved_names().count(name.text))
                fail(name.line, name.col, "reserved name '" + name.text + "' cannot be bound");
            if (symbols_.count(name.text))
                fail(name.line, name.col, "name '" + name.text + "' is already bound");
            st.name = name.text;
            expect(Token::T::Equal, "'='");
            st.args.push_back(expr());
            if (st.args[0].type != st.decl_kind)
                fail(st.args[0].line, st.args[0].col,
                     "type mismatch: '" + st.name + "' declared " + kind_name(st.decl_kind) +
                         " but the expression has kind " + kind_name(st.args[0].type));
            symbols_.emplace(st.name, st.decl_kind);
            return st;
        }
        if (head.text == "assert") return assertion(st);
        if (head.text == "print") {
            st.tag = Statement::Tag::Print;
            const Token& name = expect(Token::T::Name, "a bound name");
            if (!symbols_.count(name.text)) fail(name.line, name.col, "unbound name '" + name.text + "'");
            st.name = name.text;
            return st;
        }
        if (head.text == "emit") return emit(st);
        fail(head.line, head.col, "unknown statement '" + head.text + "'");
    }

    Statement assertion(Statement& st) {
        st.tag = Statement::Tag::Assert;
        const Token& name = expect(Token::T::Name, "a predicate name");
        auto it = predicate_table().find(name.text);
        if (it == predicate_table().end()) fail(name.line, name.col, "unknown predicate '" + name.text + "'");
        st.name = name.text;
        expect(Token::T::LParen, "'('");
        st.args = arg_list();
        std::vector<Kind> got;
        for (const auto& a : st.args) got.push_back(a.type);
        for (const auto& sig : it->second)
            if (sig == got) return st;
        std::string want;
        for (size_t i = 0; i < it->second.size(); ++i) {
            if (i) want += " or ";
            want += signature_str(it->second[i]);
        }
        fail(name.line, name.col, "predicate '" + st.name + "' expects " + want + ", got " + signature_str(got));
    }

    Statement emit(Statement& st) {
        st.tag = Statement::Tag::Emit;
        const Token& target = expect(Token::T::Name, "'svg'");
        if (target.text != "svg") fail(target.line, target.col, "unknown emit target '" + target.text + "'");
        const Token& path = expect(Token::T::Str, "a quoted output path");
        if (path.text.empty()) fail(path.line, path.col, "empty output path");
        st.emit.path = path.text;
        std::set<std::string> seen;
        while (at(Token::T::Name)) {
            const Token& opt = toks_[pos_++];
            if (opt.text != "chart" && opt.text != "viewport" && opt.text != "samples")
                fail(opt.line, opt.col, "unknown emit option '" + opt.text + "'");
            if (!seen.insert(opt.text).second) fail(opt.line, opt.col, "duplicate option '" + opt.text + "'");
            expect(Token::T::Equal, "'='");
            if (opt.text == "chart") {
                const Token& axis = expect(Token::T::Name, "one of x, y, z");
                if (axis.text == "x") st.emit.drop = 0;
                else if (axis.text == "y") st.emit.drop = 1;
                else if (axis.text == "z") st.emit.drop = 2;
                else fail(axis.line, axis.col, "chart must be x, y or z");
            } else if (opt.text == "viewport") {
                st.emit.xmin = rational("viewport bound");
                expect(Token::T::Colon, "':'");
                st.emit.xmax = rational("viewport bound");
                expect(Token::T::Comma, "','");
                st.emit.ymin = rational("viewport bound");
                expect(Token::T::Colon, "':'");
                st.emit.ymax = rational("viewport bound");
                if (!(st.emit.xmin < st.emit.xmax) || !(st.emit.ymin < st.emit.ymax))
                    fail(opt.line, opt.col, "empty viewport (need min < max on both axes)");
            } else {
                const Token& n = expect(Token::T::Number, "a sample count");
                if (n.text.find('/') != std::string::npos) fail(n.line, n.col, "samples must be an integer");
                long v = 0;
                try {
                    v = std::stol(n.text);
                } catch (const std::exception&) {
                    fail(n.line, n.col, "samples out of range");
                }
                if (v < 8) fail(n.line, n.col, "samples must be at least 8");
                st.emit.samples = v;
            }
        }
        return st;
    }

    std::vector<Expr> arg_list() {
        std::vector<Expr> args;
        if (at(Token::T::RParen)) {
            fail(cur().line, cur().col, "empty argument list");
        }
        args.push_back(expr());
        while (at(Token::T::Comma)) {
            ++pos_;
            args.push_back(expr());
        }
        expect(Token::T::RParen, "')'");
        return args;
    }

    Expr expr() {
        Expr e;
        e.line = cur().line;
        e.col = cur().col;
        if (at(Token::T::LParen) || at(Token::T::LBracket)) {
            bool pt = at(Token::T::LParen);
            ++pos_;
            e.tag = pt ? Expr::Tag::PointLit : Expr::Tag::LineLit;
            e.type = pt ? Kind::Point : Kind::Line;
            e.triple.push_back(rational("a coordinate"));
            while (at(Token::T::Comma)) {
                ++pos_;
                e.triple.push_back(rational("a coordinate"));
            }
            const char* closer = pt ? "')'" : "']'";
            expect(pt ? Token::T::RParen : Token::T::RBracket, closer);
            if (e.triple.size() != 3)
                fail(e.line, e.col,
                     std::string(pt ? "point" : "line") + " literal needs 3 coordinates, got " +
                         std::to_string(e.triple.size()));
            return e;
        }
        if (at(Token::T::Number)) {
            const Token& n = toks_[pos_++];
            if (n.text.find('/') != std::string::npos)
                fail(n.line, n.col, "expected an integer count, got a rational");
            e.tag = Expr::Tag::Count;
            e.type = Kind::Count;
            try {
                e.count = std::stol(n.text);
            } catch (const std::exception&) {
                fail(n.line, n.col, "count out of range");
            }
            return e;
        }
        const Token& name = expect(Token::T::Name, "an expression");
        if (auto it = op_table().find(name.text); it != op_table().end()) {
            e.tag = Expr::Tag::Call;
            e.name = name.text;
            expect(Token::T::LParen, "'('");
            e.args = arg_list();
            const OpSig& sig = it->second;
            if (e.args.size() != sig.args.size())
                fail(e.line, e.col,
                     "'" + e.name + "' expects " + std::to_string(sig.args.size()) + " arguments, got " +
                         std::to_string(e.args.size()));
            for (size_t i = 0; i < e.args.size(); ++i)
                if (e.args[i].type != sig.args[i])
                    fail(e.args[i].line, e.args[i].col,
                         "argument " + std::to_string(i + 1) + " of '" + e.name + "' must be a " +
                             kind_name(sig.args[i]) + ", got " + kind_name(e.args[i].type));
            if (e.name == "trace" && e.args[1].count < 1)
                fail(e.args[1].line, e.args[1].col, "trace count must be at least 1");
            e.type = sig.result;
            return e;
        }
        if (symbols_.count(name.text)) {
            e.tag = Expr::Tag::Ref;
            e.name = name.text;
            e.type = symbols_.at(name.text);
            return e;
        }
        if (reserved_names().count(name.text))
            fail(name.line, name.col, "'" + name.text + "' cannot be used in an expression");
        fail(name.line, name.col, "unbound name '" + name.text + "'");
    }

    Scalar rational(const std::string& what) {
        const Token& n = expect(Token::T::Number, what);
        try {
            return Scalar::parse(n.text);
        } catch (const std::exception&) {
            fail(n.line, n.col, "bad rational '" + n.text + "'");
        }
    }

    static std::string signature_str(const std::vector<Kind>& sig) {
        std::string s = "(";
        for (size_t i = 0; i < sig.size(); ++i) {
            if (i) s += ", ";
            s += kind_name(sig[i]);
        }
        return s + ")";
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::map<std::string, Kind> symbols_;
};

char chart_letter(int drop) { return drop == 0 ? 'x' : (drop == 1 ? 'y' : 'z'); }

}  // namespace

Script parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string format(const Expr& e) {
    switch (e.tag) {
        case Expr::Tag::PointLit:
        case Expr::Tag::LineLit: {
            std::string open = e.tag == Expr::Tag::PointLit ? "(" : "[";
            std::string close = e.tag == Expr::Tag::PointLit ? ")" : "]";
            std::string s = open;
            for (size_t i = 0; i < e.triple.size(); ++i) {
                if (i) s += ", ";
                s += e.triple[i].str();
            }
            return s + close;
        }
        case Expr::Tag::Count: return std::to_string(e.count);
        case Expr::Tag::Ref: return e.name;
        case Expr::Tag::Call: {
            std::string s = e.name + "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) s += ", ";
                s += format(e.args[i]);
            }
            return s + ")";
        }
    }
    return "";
}

std::string format(const Script& s) {
    std::ostringstream out;
    for (const auto& st : s.statements) {
        switch (st.tag) {
            case Statement::Tag::Decl:
                out << kind_name(st.decl_kind) << ' ' << st.name << " = " << format(st.args[0]);
                break;
            case Statement::Tag::Assert: {
                out << "assert " << st.name << '(';
                for (size_t i = 0; i < st.args.size(); ++i) {
                    if (i) out << ", ";
                    out << format(st.args[i]);
                }
                out << ')';
                break;
            }
            case Statement::Tag::Print: out << "print " << st.name; break;
            case Statement::Tag::Emit:
                out << "emit svg \"" << st.emit.path << "\" chart=" << chart_letter(st.emit.drop)
                    << " viewport=" << st.emit.xmin.str() << ':' << st.emit.xmax.str() << ','
                    << st.emit.ymin.str() << ':' << st.emit.ymax.str() << " samples=" << st.emit.samples;
                break;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pg::script
