#include "pg/interp.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "pg/conic.hpp"
#include "pg/error.hpp"
#include "pg/harmonic.hpp"
#include "pg/plane.hpp"
#include "pg/projectivity.hpp"
#include "pg/svg.hpp"

namespace pg::script {

namespace {

using Value = std::variant<Point, Line, Conic, RangeProjectivity, std::vector<Point>, long>;

// Not a geometric failure; reported under its own kind and subject to the
// same halt/keep-going policy.
struct IoFailure {
    std::string message;
};

std::string value_str(const Value& v) {
    struct Visitor {
        std::string operator()(const Point& p) const { return p.str(); }
        std::string operator()(const Line& l) const { return l.str(); }
        std::string operator()(const Conic& k) const { return k.str(); }
        std::string operator()(const RangeProjectivity& f) const {
            return "map " + f.domain().str() + " -> " + f.codomain().str();
        }
        std::string operator()(const std::vector<Point>& ps) const {
            std::string s = "{";
            for (size_t i = 0; i < ps.size(); ++i) {
                if (i) s += ", ";
                s += ps[i].str();
            }
            return s + "}";
        }
        std::string operator()(long n) const { return std::to_string(n); }
    };
    return std::visit(Visitor{}, v);
}

class Interp {
public:
    Interp(const Script& s, const RunOptions& opts) : script_(s), opts_(opts) {}

    Report go() {
        for (const Statement& st : script_.statements) {
            try {
                exec(st);
            } catch (const GeometryError& e) {
                rep_.errors.push_back({st.line, error_kind_name(e.kind()), e.what()});
                if (!opts_.keep_going) break;
            } catch (const IoFailure& e) {
                rep_.errors.push_back({st.line, "IoError", e.message});
                if (!opts_.keep_going) break;
            }
        }
        return rep_;
    }

private:
    void exec(const Statement& st) {
        switch (st.tag) {
            case Statement::Tag::Decl: {
                Value v = eval(st.args[0]);
                rep_.bindings.push_back({st.name, kind_name(st.decl_kind), value_str(v), st.line});
                order_.push_back(st.name);
                env_.emplace(st.name, std::move(v));
                break;
            }
            case Statement::Tag::Assert: {
                std::vector<Value> args;
                for (const Expr& a : st.args) args.push_back(eval(a));
                std::string text = st.name + "(";
                for (size_t i = 0; i < st.args.size(); ++i) {
                    if (i) text += ", ";
                    text += format(st.args[i]);
                }
                text += ")";
                rep_.asserts.push_back({st.line, text, predicate(st.name, args)});
                break;
            }
            case Statement::Tag::Print: {
                rep_.prints.push_back({st.name, value_str(lookup(st.name, st.line, st.col))});
                break;
            }
            case Statement::Tag::Emit: emit(st); break;
        }
    }

    const Value& lookup(const std::string& name, int, int) {
        auto it = env_.find(name);
        if (it == env_.end())
            throw GeometryError(ErrorKind::Degenerate,
                                "value of '" + name + "' unavailable after an earlier error");
        return it->second;
    }

    Value eval(const Expr& e) {
        switch (e.tag) {
            case Expr::Tag::PointLit: return Point(e.triple[0], e.triple[1], e.triple[2]);
            case Expr::Tag::LineLit: return Line(e.triple[0], e.triple[1], e.triple[2]);
            case Expr::Tag::Count: return e.count;
            case Expr::Tag::Ref: return lookup(e.name, e.line, e.col);
            case Expr::Tag::Call: break;
        }
        std::vector<Value> args;
        for (const Expr& a : e.args) args.push_back(eval(a));
        return call(e.name, args);
    }

    static const Point& pt(const Value& v) { return std::get<Point>(v); }
    static const Line& ln(const Value& v) { return std::get<Line>(v); }
    static const Conic& cn(const Value& v) { return std::get<Conic>(v); }
    static const RangeProjectivity& mp(const Value& v) { return std::get<RangeProjectivity>(v); }

    Value call(const std::string& name, const std::vector<Value>& a) {
        if (name == "join") return join(pt(a[0]), pt(a[1]));
        if (name == "meet") return meet(ln(a[0]), ln(a[1]));
        if (name == "harmonic") return harmonic_conjugate(pt(a[0]), pt(a[1]), pt(a[2]));
        if (name == "projectivity3")
            return from_three_points({pt(a[0]), pt(a[1]), pt(a[2])}, {pt(a[3]), pt(a[4]), pt(a[5])});
        if (name == "apply") return mp(a[0]).apply(pt(a[1]));
        if (name == "axis") return axis_of_homology(mp(a[0]));
        if (name == "conic5") return conic_through_five(pt(a[0]), pt(a[1]), pt(a[2]), pt(a[3]), pt(a[4]));
        if (name == "tangent") return tangent_at(cn(a[0]), pt(a[1]));
        if (name == "second") return second_intersection(cn(a[0]), pt(a[1]), ln(a[2]));
        if (name == "pascal")
            return pascal_line(cn(a[0]), {pt(a[1]), pt(a[2]), pt(a[3]), pt(a[4]), pt(a[5]), pt(a[6])});
        if (name == "sixth")
            return sixth_point(cn(a[0]), {pt(a[1]), pt(a[2]), pt(a[3]), pt(a[4]), pt(a[5])}, ln(a[6]));
        if (name == "polar") return polar(pt(a[0]), cn(a[1]));
        if (name == "pole") return pole(ln(a[0]), cn(a[1]));
        if (name == "trace") return trace(cn(a[0]), static_cast<std::size_t>(std::get<long>(a[1])));
        throw GeometryError(ErrorKind::Degenerate, "unknown operation '" + name + "'");
    }

    bool predicate(const std::string& name, const std::vector<Value>& a) {
        if (name == "collinear" || name == "noncollinear") {
            bool coll = dot(cross(pt(a[0]).coords(), pt(a[1]).coords()), pt(a[2]).coords()).is_zero();
            return name == "collinear" ? coll : !coll;
        }
        if (name == "incident") return incident(pt(a[0]), ln(a[1]));
        if (name == "outside") return outside(pt(a[0]), ln(a[1]));
        if (name == "apart")
            return std::holds_alternative<Point>(a[0]) ? point_apart(pt(a[0]), pt(a[1]))
                                                       : line_apart(ln(a[0]), ln(a[1]));
        if (name == "equal")
            return std::holds_alternative<Point>(a[0]) ? pt(a[0]) == pt(a[1]) : ln(a[0]) == ln(a[1]);
        if (name == "harmonic") return is_harmonic_set(pt(a[0]), pt(a[1]), pt(a[2]), pt(a[3]));
        if (name == "on_conic") return contains(cn(a[0]), pt(a[1]));
        throw GeometryError(ErrorKind::Degenerate, "unknown predicate '" + name + "'");
    }

    void emit(const Statement& st) {
        ChartScene scene;
        for (const std::string& name : order_) {
            const Value& v = env_.at(name);
            if (std::holds_alternative<Point>(v)) {
                scene.points.emplace_back(name, pt(v));
            } else if (std::holds_alternative<Line>(v)) {
                scene.lines.emplace_back(name, ln(v));
            } else if (std::holds_alternative<Conic>(v)) {
                scene.conics.emplace_back(name, cn(v));
            } else if (std::holds_alternative<std::vector<Point>>(v)) {
                const auto& ps = std::get<std::vector<Point>>(v);
                for (size_t i = 0; i < ps.size(); ++i)
                    scene.points.emplace_back(name + "[" + std::to_string(i) + "]", ps[i]);
            }
        }
        SvgResult svg = render_svg(scene, st.emit);
        std::filesystem::path path(st.emit.path);
        if (path.is_relative() && !opts_.out_dir.empty()) path = std::filesystem::path(opts_.out_dir) / path;
        if (opts_.write_files) {
            std::ofstream out(path, std::ios::binary);
            out.write(svg.body.data(), static_cast<std::streamsize>(svg.body.size()));
            if (!out) throw IoFailure{"cannot write '" + path.string() + "'"};
            out.close();
        }
        rep_.emits.push_back({path.string(), svg.body.size(), svg.at_infinity});
    }

    const Script& script_;
    RunOptions opts_;
    Report rep_;
    std::map<std::string, Value> env_;
    std::vector<std::string> order_;
};

}  // namespace

bool Report::all_asserts_passed() const {
    return std::all_of(asserts.begin(), asserts.end(), [](const AssertRecord& a) { return a.passed; });
}

int Report::exit_code() const {
    if (!errors.empty()) return 2;
    if (!all_asserts_passed()) return 1;
    return 0;
}

std::string Report::text() const {
    std::ostringstream out;
    if (!bindings.empty()) {
        out << "bindings:\n";
        for (const auto& b : bindings)
            out << "  " << b.name << " : " << b.kind << " = " << b.value << "\n";
    }
    if (!asserts.empty()) {
        out << "asserts:\n";
        for (const auto& a : asserts)
            out << "  line " << a.line << ": " << a.text << " -> " << (a.passed ? "pass" : "FAIL") << "\n";
    }
    if (!prints.empty()) {
        out << "prints:\n";
        for (const auto& p : prints) out << "  " << p.name << " = " << p.value << "\n";
    }
    if (!emits.empty()) {
        out << "emits:\n";
        for (const auto& e : emits) {
            out << "  " << e.path << " (" << e.bytes << " bytes)";
            if (!e.at_infinity.empty()) {
                out << ", at infinity: ";
                for (size_t i = 0; i < e.at_infinity.size(); ++i) {
                    if (i) out << ", ";
                    out << e.at_infinity[i];
                }
            }
            out << "\n";
        }
    }
    if (!errors.empty()) {
        out << "errors:\n";
        for (const auto& e : errors) out << "  line " << e.line << ": " << e.message << "\n";
    }
    out << "exit " << exit_code() << "\n";
    return out.str();
}

std::string Report::json() const {
    nlohmann::json j;
    j["bindings"] = nlohmann::json::array();
    for (const auto& b : bindings)
        j["bindings"].push_back({{"name", b.name}, {"kind", b.kind}, {"value", b.value}, {"line", b.line}});
    j["asserts"] = nlohmann::json::array();
    for (const auto& a : asserts)
        j["asserts"].push_back({{"line", a.line}, {"text", a.text}, {"passed", a.passed}});
    j["prints"] = nlohmann::json::array();
    for (const auto& p : prints) j["prints"].push_back({{"name", p.name}, {"value", p.value}});
    j["emits"] = nlohmann::json::array();
    for (const auto& e : emits)
        j["emits"].push_back({{"path", e.path}, {"bytes", e.bytes}, {"at_infinity", e.at_infinity}});
    j["errors"] = nlohmann::json::array();
    for (const auto& e : errors)
        j["errors"].push_back({{"line", e.line}, {"kind", e.kind}, {"message", e.message}});
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

Report run(const Script& s, const RunOptions& opts) { return Interp(s, opts).go(); }

}  // namespace pg::script
