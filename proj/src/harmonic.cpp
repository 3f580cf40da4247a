#include "pg/harmonic.hpp"

namespace pg {

std::pair<Line, Point> select_auxiliary(const Point& a, const Point& b, const Point& c,
                                        const AuxPool& pool) {
    Line base = join(a, b);
    if (!incident(c, base))
        throw GeometryError(ErrorKind::Degenerate, "point " + c.str() + " is not on " + base.str());
    Line aux = join(c, pool_point_outside({base}, pool));
    Point r = pool_point_outside({base, aux}, pool);
    return {aux, r};
}

HarmonicWitness harmonic_conjugate_witness(const Point& a, const Point& b, const Point& c,
                                           const AuxPool& pool) {
    Line base = join(a, b);
    auto [aux, r] = select_auxiliary(a, b, c, pool);
    Point p = meet(join(b, r), aux);
    Point q = meet(join(a, r), aux);
    Point s = meet(join(a, p), join(b, q));
    Point d = meet(base, join(r, s));
    return HarmonicWitness{base, aux, r, p, q, s, d};
}

Point harmonic_conjugate(const Point& a, const Point& b, const Point& c, const AuxPool& pool) {
    return harmonic_conjugate_witness(a, b, c, pool).d;
}

bool is_harmonic_set(const Point& a, const Point& b, const Point& c, const Point& d) {
    Line base = join(a, b);
    if (!incident(c, base) || !incident(d, base))
        throw GeometryError(ErrorKind::Degenerate, "harmonic set test needs all four points collinear");
    return harmonic_conjugate(a, b, c) == d;
}

Quadrangle::Quadrangle(Point p, Point q, Point r, Point s) : v_{std::move(p), std::move(q), std::move(r), std::move(s)} {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (!point_apart(v_[i], v_[j]))
                throw GeometryError(ErrorKind::Degenerate, "quadrangle vertices coincide: " + v_[i].str());
            for (int k = j + 1; k < 4; ++k) {
                if (!outside(v_[k], join(v_[i], v_[j])))
                    throw GeometryError(ErrorKind::Degenerate,
                                        "quadrangle vertices collinear: " + v_[i].str() + " " + v_[j].str() +
                                            " " + v_[k].str());
            }
        }
}

std::array<Point, 3> diagonal_points(const Quadrangle& q) {
    const Point& p0 = q.vertex(0);
    const Point& p1 = q.vertex(1);
    const Point& p2 = q.vertex(2);
    const Point& p3 = q.vertex(3);
    Point d1 = meet(join(p0, p1), join(p2, p3));
    Point d2 = meet(join(p0, p2), join(p1, p3));
    Point d3 = meet(join(p0, p3), join(p1, p2));
    if (!point_apart(d1, d2) || !point_apart(d1, d3) || !point_apart(d2, d3))
        throw GeometryError(ErrorKind::Degenerate, "diagonal points coincide");
    return {d1, d2, d3};
}

bool fano_check(const Quadrangle& q) {
    auto d = diagonal_points(q);
    return outside(d[2], join(d[0], d[1]));
}

}  // namespace pg
