#pragma once

#include <utility>
#include <vector>

#include "pg/hvec.hpp"

namespace pg {

// Two points (or two lines) are apart exactly when their cross product is
// nonzero; with canonical representatives this coincides with inequality.
bool point_apart(const Point& p, const Point& q);
bool line_apart(const Line& l, const Line& m);

bool incident(const Point& p, const Line& l);   // p.l == 0
bool outside(const Point& p, const Line& l);    // p.l != 0

// Connecting line of two apart points. Throws NotApart otherwise.
Line join(const Point& p, const Point& q);

// Common point of two apart lines. Throws NotApart otherwise.
Point meet(const Line& l, const Line& m);

// The plane is self-dual: swapping the roles of the coordinate triples
// turns every incidence statement into its dual.
Line dualize(const Point& p);
Point dualize(const Line& l);

enum class Pick { FirstApart, SecondApart };

// Cotransitivity, decided exactly: given apart P, Q and any R, reports
// whether R is apart from P (tested first) or from Q.
Pick cotransitive_pick(const Point& p, const Point& q, const Point& r);

// Deterministic basis pair (q, r) of the range of l: candidates are the
// canonical forms of l x e_i, zeros dropped, ordered lexicographically
// descending; q is the first, r the next one apart from q.
std::pair<Point, Point> basis_pair(const Line& l);

// First point of the scan <q + t r>, t = 0, 1, 2, ... apart from every
// avoid point. Avoid entries not on l are ignored. Deterministic, so
// repeated calls with growing avoid sets enumerate pairwise apart points.
Point fresh_point_on(const Line& l, const std::vector<Point>& avoid);

// Points <1, t, t^2> for t in [t0, t1]. They lie on a nondegenerate conic,
// so any line contains at most two of them; with six entries a scan past
// up to two excluded lines always succeeds.
struct AuxPool {
    long t0 = 0;
    long t1 = 5;
    std::vector<Point> points() const;
};

// First pool point outside every given line. Throws Degenerate if the pool
// is exhausted (cannot happen with at most two lines and the default pool).
Point pool_point_outside(const std::vector<Line>& lines, const AuxPool& pool = {});

}  // namespace pg
