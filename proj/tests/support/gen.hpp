#pragma once

#include <array>
#include <random>

#include "pg/mat3.hpp"
#include "pg/plane.hpp"

// Deterministic random instance generators shared by the test suites.
// Coordinates are kept small so chained exact arithmetic stays fast.
namespace pgtest {

using namespace pg;

class Gen {
public:
    explicit Gen(unsigned long seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Scalar scalar() { return Scalar(integer(-9, 9), integer(1, 4)); }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    Point point() {
        for (;;) {
            Scalar a = scalar(), b = scalar(), c = scalar();
            if (!(a.is_zero() && b.is_zero() && c.is_zero())) return Point(a, b, c);
        }
    }

    Line line() { return dualize(point()); }

    Point point_apart_from(const Point& p) {
        for (;;) {
            Point q = point();
            if (point_apart(p, q)) return q;
        }
    }

    // Random point of l, drawn from the affine slice <q + t r> plus the
    // basis point r itself now and then.
    Point point_on(const Line& l) {
        auto [q, r] = basis_pair(l);
        if (integer(0, 9) == 0) return r;
        return Point(add(q.coords(), scale(scalar(), r.coords())));
    }

    // Three pairwise apart points on l.
    std::array<Point, 3> triple_on(const Line& l) {
        for (;;) {
            std::array<Point, 3> t = {point_on(l), point_on(l), point_on(l)};
            if (point_apart(t[0], t[1]) && point_apart(t[0], t[2]) && point_apart(t[1], t[2])) return t;
        }
    }

    Mat3 invertible_mat3() {
        for (;;) {
            Mat3 m;
            for (int i = 0; i < 9; ++i) m.a[i] = Scalar(integer(-5, 5));
            if (!m.det().is_zero()) return m;
        }
    }

    Point transported(const Mat3& m, const Point& p) { return Point(m.apply(p.coords())); }
    Line transported_line(const Mat3& m, const Line& l) {
        // Lines move by the inverse transpose so incidence is preserved.
        return Line(m.inverse().transpose().apply(l.coords()));
    }

private:
    std::mt19937_64 eng_;
};

template <typename F>
bool throws_kind(F&& f, ErrorKind kind) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.kind() == kind;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace pgtest
