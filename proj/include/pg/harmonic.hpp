#pragma once

#include <array>

#include "pg/plane.hpp"

namespace pg {

// Intermediate elements of the harmonic conjugate construction, exposed so
// tests can validate the quadrangle that backs the result.
struct HarmonicWitness {
    Line base;  // AB
    Line aux;   // line through C used for the construction, apart from AB
    Point r;    // auxiliary point outside both base and aux
    Point p, q, s;
    Point d;    // the conjugate
};

// Auxiliary line through C and point R for the conjugate construction,
// scanned deterministically from the pool. Depends only on the line AB and
// C, so swapping A and B changes nothing.
std::pair<Line, Point> select_auxiliary(const Point& a, const Point& b, const Point& c,
                                        const AuxPool& pool = {});

// Harmonic conjugate of C with respect to A, B. Requires A apart from B and
// C on the line AB (throws NotApart / Degenerate). One uniform construction
// covers every position of C, including C equal to a base point, where the
// result is C itself.
HarmonicWitness harmonic_conjugate_witness(const Point& a, const Point& b, const Point& c,
                                           const AuxPool& pool = {});
Point harmonic_conjugate(const Point& a, const Point& b, const Point& c, const AuxPool& pool = {});

// True when D equals h(A, B; C). Requires A apart from B and C, D on AB.
bool is_harmonic_set(const Point& a, const Point& b, const Point& c, const Point& d);

// Four points, pairwise apart, no three collinear.
class Quadrangle {
public:
    Quadrangle(Point p, Point q, Point r, Point s);

    const Point& vertex(int i) const { return v_[i]; }

private:
    std::array<Point, 4> v_;
};

// Diagonal points: meets of the three pairs of opposite sides.
std::array<Point, 3> diagonal_points(const Quadrangle& q);

// True when the third diagonal point lies outside the line of the first
// two, i.e. the diagonal triangle is a genuine triangle.
bool fano_check(const Quadrangle& q);

}  // namespace pg
