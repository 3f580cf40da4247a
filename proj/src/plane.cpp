#include "pg/plane.hpp"

#include <algorithm>

namespace pg {

bool point_apart(const Point& p, const Point& q) { return !cross(p.coords(), q.coords()).is_zero(); }
bool line_apart(const Line& l, const Line& m) { return !cross(l.coords(), m.coords()).is_zero(); }

bool incident(const Point& p, const Line& l) { return dot(p.coords(), l.coords()).is_zero(); }
bool outside(const Point& p, const Line& l) { return !dot(p.coords(), l.coords()).is_zero(); }

Line join(const Point& p, const Point& q) {
    HVec c = cross(p.coords(), q.coords());
    if (c.is_zero()) throw GeometryError(ErrorKind::NotApart, "join of equal points " + p.str());
    return Line(c);
}

Point meet(const Line& l, const Line& m) {
    HVec c = cross(l.coords(), m.coords());
    if (c.is_zero()) throw GeometryError(ErrorKind::NotApart, "meet of equal lines " + l.str());
    return Point(c);
}

Line dualize(const Point& p) { return Line(p.coords()); }
Point dualize(const Line& l) { return Point(l.coords()); }

Pick cotransitive_pick(const Point& p, const Point& q, const Point& r) {
    if (!point_apart(p, q))
        throw GeometryError(ErrorKind::NotApart, "cotransitive_pick needs apart base points");
    if (point_apart(r, p)) return Pick::FirstApart;
    // r equals p, which is apart from q.
    return Pick::SecondApart;
}

namespace {

// Lexicographic comparison of canonical coordinate triples.
bool lex_less(const HVec& a, const HVec& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

}  // namespace

std::pair<Point, Point> basis_pair(const Line& l) {
    const HVec& v = l.coords();
    HVec unit[3] = {HVec(1, 0, 0), HVec(0, 1, 0), HVec(0, 0, 1)};
    std::vector<HVec> cand;
    for (int i = 0; i < 3; ++i) {
        HVec c = cross(v, unit[i]);
        if (!c.is_zero()) cand.push_back(canonicalize(c));
    }
    std::sort(cand.begin(), cand.end(), [](const HVec& a, const HVec& b) { return lex_less(b, a); });
    Point q{cand[0]};
    for (size_t i = 1; i < cand.size(); ++i) {
        Point r{cand[i]};
        if (point_apart(q, r)) return {q, r};
    }
    // A nonzero line always has two independent sections among l x e_i.
    throw GeometryError(ErrorKind::Degenerate, "no basis pair on " + l.str());
}

Point fresh_point_on(const Line& l, const std::vector<Point>& avoid) {
    auto [q, r] = basis_pair(l);
    for (long t = 0;; ++t) {
        Point cand{add(q.coords(), scale(Scalar(t), r.coords()))};
        bool clear = true;
        for (const Point& a : avoid) {
            if (!point_apart(cand, a)) { clear = false; break; }
        }
        if (clear) return cand;
    }
}

std::vector<Point> AuxPool::points() const {
    std::vector<Point> ps;
    for (long t = t0; t <= t1; ++t) ps.emplace_back(Scalar(1), Scalar(t), Scalar(t * t));
    return ps;
}

Point pool_point_outside(const std::vector<Line>& lines, const AuxPool& pool) {
    for (const Point& p : pool.points()) {
        bool clear = true;
        for (const Line& l : lines) {
            if (incident(p, l)) { clear = false; break; }
        }
        if (clear) return p;
    }
    throw GeometryError(ErrorKind::Degenerate, "auxiliary pool exhausted");
}

}  // namespace pg
