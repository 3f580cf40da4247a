#include "pg/oracle.hpp"

#include <vector>

namespace pg::oracle {

namespace {

// Row echelon reduction over the rationals; returns the rank. rows is
// modified in place.
int row_reduce(std::vector<std::vector<Scalar>>& rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r) {
            if (!rows[r][c].is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = Scalar(1) / rows[rank][c];
        for (int k = c; k < nc; ++k) rows[rank][k] *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c];
            for (int k = c; k < nc; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool QuadraticForm::contains(const Point& p) const {
    return dot(p.coords(), m.apply(p.coords())).is_zero();
}

int QuadraticForm::rank() const {
    if (!m.det().is_zero()) return 3;
    if (!m.adjugate().is_zero()) return 2;
    return m.is_zero() ? 0 : 1;
}

QuadraticForm quadratic_form_fit(const std::array<Point, 5>& ps) {
    // Unknowns (a, b, c, d, e, f) of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz.
    std::vector<std::vector<Scalar>> rows;
    for (const Point& p : ps) {
        const Scalar& x = p[0];
        const Scalar& y = p[1];
        const Scalar& z = p[2];
        rows.push_back({x * x, y * y, z * z, x * y, x * z, y * z});
    }
    int rank = row_reduce(rows);
    if (rank != 5)
        throw GeometryError(ErrorKind::DegenerateFive,
                            "quadratic form fit has solution space of dimension " + std::to_string(6 - rank));
    // One free column; set it to 1 and back substitute from the echelon form.
    std::array<int, 6> pivot_col{};
    std::array<bool, 6> is_pivot{};
    for (int r = 0; r < 5; ++r) {
        int c = 0;
        while (rows[r][c].is_zero()) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::array<Scalar, 6> sol{};
    sol[free_col] = Scalar(1);
    for (int r = 4; r >= 0; --r) sol[pivot_col[r]] = -rows[r][free_col];
    Mat3 m;
    m.at(0, 0) = sol[0];
    m.at(1, 1) = sol[1];
    m.at(2, 2) = sol[2];
    m.at(0, 1) = m.at(1, 0) = sol[3] / Scalar(2);
    m.at(0, 2) = m.at(2, 0) = sol[4] / Scalar(2);
    m.at(1, 2) = m.at(2, 1) = sol[5] / Scalar(2);
    return QuadraticForm{m.canonical()};
}

bool collinear_det(const Point& p, const Point& q, const Point& r) {
    return Mat3::from_rows(p.coords(), q.coords(), r.coords()).det().is_zero();
}

namespace {

// Coefficients (alpha, beta) with c = alpha a + beta b; requires c in the
// span of a and b with a, b independent.
std::pair<Scalar, Scalar> span_coefficients(const HVec& a, const HVec& b, const HVec& c) {
    HVec ab = cross(a, b);
    if (ab.is_zero()) throw GeometryError(ErrorKind::NotApart, "span basis is dependent");
    if (!dot(ab, c).is_zero()) throw GeometryError(ErrorKind::Degenerate, "point not on the base line");
    int i = 0;
    while (ab[i].is_zero()) ++i;
    Scalar alpha = cross(c, b)[i] / ab[i];
    Scalar beta = cross(a, c)[i] / ab[i];
    return {alpha, beta};
}

}  // namespace

Scalar cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
    for (const Point* p : {&c, &d}) {
        if (!point_apart(*p, a) || !point_apart(*p, b))
            throw GeometryError(ErrorKind::NotApart, "cross ratio needs C, D apart from A and B");
    }
    auto [ca, cb] = span_coefficients(a.coords(), b.coords(), c.coords());
    auto [da, db] = span_coefficients(a.coords(), b.coords(), d.coords());
    return (cb / ca) / (db / da);
}

Mat3 homography_solve(const std::array<Point, 3>& from, const std::array<Point, 3>& to) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (!point_apart(from[i], from[j]) || !point_apart(to[i], to[j]))
                throw GeometryError(ErrorKind::NotApart, "homography solve needs pairwise apart triples");
        }
    const HVec& a = from[0].coords();
    const HVec& b = from[1].coords();
    const HVec& a2 = to[0].coords();
    const HVec& b2 = to[1].coords();
    HVec l = cross(a, b);
    HVec m = cross(a2, b2);
    auto [alpha, beta] = span_coefficients(a, b, from[2].coords());
    auto [alpha2, beta2] = span_coefficients(a2, b2, to[2].coords());
    // Basis map a -> alpha2 beta a2, b -> beta2 alpha b2, l -> m; the first
    // two scales make alpha a + beta b land on alpha2 a2 + beta2 b2, the
    // third condition pins an invertible extension off the line.
    Mat3 src = Mat3::from_cols(a, b, l);
    Mat3 dst = Mat3::from_cols(scale(alpha2 * beta, a2), scale(beta2 * alpha, b2), m);
    return dst.mul(src.inverse()).canonical();
}

}  // namespace pg::oracle
