#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pg/scalar.hpp"

namespace pg::script {

// Value kinds of the construction language. Count is the type of bare
// integers, used only where an operation wants a size.
enum class Kind { Point, Line, Conic, Map, Points, Count };

const char* kind_name(Kind k);

// Expression tree: literals, references to earlier bindings, and nested
// operation calls. The parser stamps each node with its result kind.
struct Expr {
    enum class Tag { PointLit, LineLit, Count, Ref, Call };

    Tag tag = Tag::Ref;
    int line = 0;
    int col = 0;
    std::vector<Scalar> triple;  // PointLit / LineLit
    long count = 0;              // Count
    std::string name;            // Ref: binding; Call: operation
    std::vector<Expr> args;      // Call
    Kind type = Kind::Point;

    bool operator==(const Expr& o) const;
};

// Emission target: an affine chart of the plane rendered to a file.
// drop selects the coordinate divided out (0 x, 1 y, 2 z).
struct EmitOptions {
    std::string path;
    int drop = 2;
    Scalar xmin = Scalar(-5);
    Scalar xmax = Scalar(5);
    Scalar ymin = Scalar(-5);
    Scalar ymax = Scalar(5);
    long samples = 200;

    bool operator==(const EmitOptions& o) const;
};

struct Statement {
    enum class Tag { Decl, Assert, Print, Emit };

    Tag tag = Tag::Decl;
    int line = 0;
    int col = 0;
    Kind decl_kind = Kind::Point;  // Decl
    std::string name;              // Decl: bound name; Assert: predicate; Print: referenced name
    std::vector<Expr> args;        // Decl: single value expression; Assert: arguments
    EmitOptions emit;              // Emit

    bool operator==(const Statement& o) const;
};

struct Script {
    std::vector<Statement> statements;

    bool operator==(const Script& o) const { return statements == o.statements; }
};

// Parses and name-checks in one pass: unknown or rebound names, wrong
// argument kinds and arities are all reported at their position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message);

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

Script parse(const std::string& text);

// Canonical text of a script; parsing it back yields an equal Script.
std::string format(const Script& s);
std::string format(const Expr& e);

}  // namespace pg::script
