#pragma once

#include <array>

#include "pg/mat3.hpp"
#include "pg/plane.hpp"

// Independent analytic checkers used to validate the synthetic kernel.
// Everything here is classical coordinate algebra on exact rationals and
// deliberately shares no code with the constructions it checks.
namespace pg::oracle {

// Symmetric matrix of a quadratic form, canonical up to scale.
struct QuadraticForm {
    Mat3 m;

    bool contains(const Point& p) const;  // p^T m p == 0
    int rank() const;
    std::string str() const { return m.str(); }
};

// Fits the unique quadratic form through five points. Throws DegenerateFive
// when the solution space does not have dimension one.
QuadraticForm quadratic_form_fit(const std::array<Point, 5>& ps);

bool collinear_det(const Point& p, const Point& q, const Point& r);

// Cross ratio (A, B; C, D) of four collinear points, computed from the
// parametrization C = <a + t b>. Requires A apart from B and C, D each
// apart from both A and B; a harmonic quadruple yields -1.
Scalar cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

// Direct linear solve for the matrix sending three apart collinear points
// to three apart collinear images. The result is nonsingular and maps the
// span of the first line onto the span of the second.
Mat3 homography_solve(const std::array<Point, 3>& from, const std::array<Point, 3>& to);

}  // namespace pg::oracle
