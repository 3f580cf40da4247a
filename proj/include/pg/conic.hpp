#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pg/plane.hpp"
#include "pg/projectivity.hpp"

namespace pg {

// Point conic: the locus {meet(l, pi(l))} as l runs over the pencil at U,
// for a nonperspective pencil map pi from U to V. The base pair is part of
// the representation but not of the locus; rebasing is change_base.
class Conic {
public:
    Conic(Point u, Point v, PencilProjectivity pi);

    const Point& u() const { return u_; }
    const Point& v() const { return v_; }
    const PencilProjectivity& pi() const { return pi_; }

    std::string str() const;  // five member points, the first two being the base pair

private:
    Point u_;
    Point v_;
    PencilProjectivity pi_;
};

// Line conic: the envelope {join(Q, phi(Q))} as Q runs over the range of a,
// with phi nonperspective from a to b. Reading the same data in the dual
// plane turns it into a point conic, which carries all the machinery.
struct DualConic {
    Line a;
    Line b;
    RangeProjectivity phi;

    Conic as_conic() const;
};

// A line through p meeting the conic at two apart members, with those
// members exposed; the defining member triple avoids the given points.
struct Secant {
    Line line;
    Point first;
    Point second;
};

// The unique conic through five points, each three noncollinear, based at
// the first two (DegenerateFive names a collinear triple).
Conic conic_through_five(const Point& u, const Point& v, const Point& a, const Point& b,
                         const Point& c);

// Exact membership test; one incidence check once x and the base point are
// compared.
bool contains(const Conic& k, const Point& x);

// n members apart from the base pair and from each other, swept off the
// pencil at u deterministically.
std::vector<Point> trace(const Conic& k, std::size_t n);

// The same locus re-expressed over a new base pair of members (NotOnConic
// otherwise); refit through the new pair and three traced members.
Conic change_base(const Conic& k, const Point& u1, const Point& v1);

// The unique line meeting the conic only at the member p: image of the
// cross-base line after rebasing so that p is the second base point.
Line tangent_at(const Conic& k, const Point& p);

// The second member on a line l through the member p; TangentLine when l
// is the tangent there. Rational throughout, no root extraction.
Point second_intersection(const Conic& k, const Point& p, const Line& l);

// The line carrying the three meets of opposite sides of an inscribed
// hexagon, taken in cyclic order.
Line pascal_line(const Conic& k, const std::array<Point, 6>& hexagon);

// Sixth member on a line l through the fifth of five given members, by the
// one-formula construction; for the tangent at the fifth point it returns
// that point itself. Degenerate reports the failing subterm.
Point sixth_point(const Conic& k, const std::array<Point, 5>& members, const Line& l);

// One secant through an arbitrary point of the plane, found by branching
// on tangent meets of a member triple that avoids the given points.
Secant secant_through(const Conic& k, const Point& p, const std::vector<Point>& avoid = {});

// Two apart secants through an arbitrary point of the plane.
std::pair<Line, Line> secants_through(const Conic& k, const Point& p);

// The envelope of all tangents, built from the base members and one traced
// member; TangentsConcurrent would flag a concurrent tangent triple.
DualConic dual_conic(const Conic& k);

// Membership of a line in the envelope.
bool dual_contains(const DualConic& lam, const Line& l);

// The point at which a line of the envelope touches the underlying conic.
Point contact_point(const DualConic& lam, const Line& l);

// Polar of any point of the plane, uniformly: tangent-meet joined to the
// harmonic conjugate along one secant; for a member this is the tangent.
Line polar(const Point& p, const Conic& k);

// Pole of any line of the plane: the polar construction run in the dual
// plane over the envelope.
Point pole(const Line& l, const Conic& k);

}  // namespace pg
