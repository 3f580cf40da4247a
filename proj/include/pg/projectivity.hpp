#pragma once

#include <array>

#include "pg/mat3.hpp"
#include "pg/plane.hpp"

namespace pg {

// Projectivity between two ranges, represented by a nonsingular matrix on
// homogeneous coordinates, canonical up to scale. The matrix carries the
// range of the domain line onto the range of the codomain line; what it
// does elsewhere is irrelevant, and equality of projectivities is always
// agreement on the range, never matrix identity.
class RangeProjectivity {
public:
    RangeProjectivity(Line domain, Line codomain, const Mat3& m);

    const Line& domain() const { return domain_; }
    const Line& codomain() const { return codomain_; }
    const Mat3& matrix() const { return m_; }

    Point apply(const Point& x) const;  // throws OffDomain when x is not on the domain

    std::string str() const;

private:
    Line domain_;
    Line codomain_;
    Mat3 m_;
};

// Perspectivity with the given center; center must lie outside both lines
// (CenterOnLine). apply agrees with meet(join(center, X), m) on the whole
// range of l.
RangeProjectivity projection(const Point& center, const Line& l, const Line& m);

RangeProjectivity identity_on(const Line& l);
RangeProjectivity compose(const RangeProjectivity& g, const RangeProjectivity& f);  // g after f
RangeProjectivity inverse(const RangeProjectivity& f);

// Extensional equality: same lines and agreement on three deterministically
// chosen apart sample points, which settles it everywhere.
bool equal(const RangeProjectivity& f, const RangeProjectivity& g);

// Projection sending three given points of l to three given points of m
// when l and m are apart and the pairs line up through one center; the
// common point of l and m must appear as the fixed pair. Building block of
// the three-point constructions.
RangeProjectivity projection_through_pairs(const Line& l, const Line& m, const Point& x,
                                           const Point& x2, const Point& y, const Point& y2);

// Chain of two projections over apart lines carrying one apart triple to
// another, all six points apart from the common point.
RangeProjectivity two_projection_chain(const Line& l, const Line& m, const std::array<Point, 3>& from,
                                       const std::array<Point, 3>& to);

// Decomposition of the same chain through its two centers R, S; the chain
// is nonperspective exactly when R and S are apart.
struct TwoCenterChain {
    RangeProjectivity map;
    Point r, s;
};
TwoCenterChain two_center_chain(const Line& l, const Line& m, const std::array<Point, 3>& from,
                                const std::array<Point, 3>& to);

// Fully general chain through two auxiliary lines; works for any pair of
// ranges, including a range onto itself. Always six projections.
struct GeneralChain {
    RangeProjectivity map;
    int projections;
};
GeneralChain six_projection_chain(const std::array<Point, 3>& from, const std::array<Point, 3>& to);

// The unique projectivity carrying one apart collinear triple to another.
// Synthetic chain of projections where the configuration allows the short
// one, the general chain otherwise; the result is verified on the triple,
// with a direct linear solve as backstop.
RangeProjectivity from_three_points(const std::array<Point, 3>& from, const std::array<Point, 3>& to);

// Whether f moves the common point of its two lines, which decides whether
// it moves every point. Lines must be apart (SameLine).
bool is_nonperspective(const RangeProjectivity& f);

// Axis of homology of a nonperspective projectivity between apart ranges:
// the join of the backward and forward images of the common point. Throws
// Perspective when the common point is fixed.
Line axis_of_homology(const RangeProjectivity& f);

// The harmonic conjugacy with respect to A, B as a projectivity on the
// range of AB, built from a three-projection chain.
RangeProjectivity harmonic_involution(const Point& a, const Point& b);

// Projectivity on the line AB interchanging A and B and sending X to Y;
// interchanging two points forces order two.
RangeProjectivity involution_from_swap(const Point& a, const Point& b, const Point& x, const Point& y);

// f maps its own range to itself and composing it with itself fixes three
// apart samples.
bool is_involution(const RangeProjectivity& f);

// Second fixed point of an involution with known fixed point M: harmonic
// conjugate of M with respect to a moved sample and its image. Throws
// NoMovedPoint when the deterministic samples show f to be the identity.
Point second_fixed_point(const RangeProjectivity& f, const Point& m);

// Projectivity between the pencils of two points, carried by a range
// projectivity between the dualized pencils; there is no separate pencil
// machinery anywhere.
struct PencilProjectivity {
    RangeProjectivity dual;

    Point center_from() const { return dualize(dual.domain()); }
    Point center_to() const { return dualize(dual.codomain()); }
    Line apply(const Line& l) const { return dualize(dual.apply(dualize(l))); }
};

PencilProjectivity pencil_from_three_lines(const std::array<Line, 3>& from, const std::array<Line, 3>& to);
PencilProjectivity pencil_compose(const PencilProjectivity& g, const PencilProjectivity& f);
PencilProjectivity pencil_inverse(const PencilProjectivity& f);
bool pencil_nonperspective(const PencilProjectivity& f);

}  // namespace pg
