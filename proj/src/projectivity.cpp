#include "pg/projectivity.hpp"

#include "pg/harmonic.hpp"

namespace pg {

RangeProjectivity::RangeProjectivity(Line domain, Line codomain, const Mat3& m)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(m.canonical()) {
    if (m_.det().is_zero())
        throw GeometryError(ErrorKind::Degenerate, "projectivity matrix is singular");
    auto [q, r] = basis_pair(domain_);
    if (!dot(m_.apply(q.coords()), codomain_.coords()).is_zero() ||
        !dot(m_.apply(r.coords()), codomain_.coords()).is_zero())
        throw GeometryError(ErrorKind::Degenerate, "matrix does not carry the domain range to the codomain");
}

Point RangeProjectivity::apply(const Point& x) const {
    if (!incident(x, domain_))
        throw GeometryError(ErrorKind::OffDomain, x.str() + " is not on " + domain_.str());
    return Point(m_.apply(x.coords()));
}

std::string RangeProjectivity::str() const {
    return domain_.str() + " -> " + codomain_.str() + " via " + m_.str();
}

RangeProjectivity projection(const Point& center, const Line& l, const Line& m) {
    if (!outside(center, l) || !outside(center, m))
        throw GeometryError(ErrorKind::CenterOnLine, "projection center " + center.str() + " is not outside both lines");
    const HVec& t = center.coords();
    // (t.m) X - (m.X) t is meet(join(center, X), m); the extra t l^T term
    // vanishes on the range of l and makes the matrix invertible.
    Mat3 mat = Mat3::identity().scaled(dot(t, m.coords()))
                   .minus(Mat3::outer(t, m.coords()))
                   .plus(Mat3::outer(t, l.coords()));
    return RangeProjectivity(l, m, mat);
}

RangeProjectivity identity_on(const Line& l) { return RangeProjectivity(l, l, Mat3::identity()); }

RangeProjectivity compose(const RangeProjectivity& g, const RangeProjectivity& f) {
    if (f.codomain() != g.domain())
        throw GeometryError(ErrorKind::ChainMismatch,
                            "compose needs matching lines, got " + f.codomain().str() + " then " + g.domain().str());
    return RangeProjectivity(f.domain(), g.codomain(), g.matrix().mul(f.matrix()));
}

RangeProjectivity inverse(const RangeProjectivity& f) {
    return RangeProjectivity(f.codomain(), f.domain(), f.matrix().inverse());
}

namespace {

std::array<Point, 3> sample_triple(const Line& l) {
    Point a = fresh_point_on(l, {});
    Point b = fresh_point_on(l, {a});
    Point c = fresh_point_on(l, {a, b});
    return {a, b, c};
}

}  // namespace

bool equal(const RangeProjectivity& f, const RangeProjectivity& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) return false;
    for (const Point& s : sample_triple(f.domain())) {
        if (f.apply(s) != g.apply(s)) return false;
    }
    return true;
}

RangeProjectivity projection_through_pairs(const Line& l, const Line& m, const Point& x,
                                           const Point& x2, const Point& y, const Point& y2) {
    if (!line_apart(l, m)) throw GeometryError(ErrorKind::SameLine, "projection needs apart lines");
    Point a = meet(l, m);
    for (const Point* p : {&x, &y}) {
        if (!incident(*p, l) || !point_apart(*p, a))
            throw GeometryError(ErrorKind::Degenerate, "pair point " + p->str() + " unusable on " + l.str());
    }
    for (const Point* p : {&x2, &y2}) {
        if (!incident(*p, m) || !point_apart(*p, a))
            throw GeometryError(ErrorKind::Degenerate, "pair point " + p->str() + " unusable on " + m.str());
    }
    Point center = meet(join(x, x2), join(y, y2));
    return projection(center, l, m);
}

RangeProjectivity two_projection_chain(const Line& l, const Line& m, const std::array<Point, 3>& from,
                                       const std::array<Point, 3>& to) {
    if (!line_apart(l, m)) throw GeometryError(ErrorKind::SameLine, "chain needs apart lines");
    Point o = meet(l, m);
    for (const Point& p : from)
        if (!point_apart(p, o))
            throw GeometryError(ErrorKind::Degenerate, "triple touches the common point " + o.str());
    for (const Point& p : to)
        if (!point_apart(p, o))
            throw GeometryError(ErrorKind::Degenerate, "triple touches the common point " + o.str());
    // Through the auxiliary line n joining the image of the first point to
    // the second source point; both projections fix a common point by
    // construction.
    Line n = join(to[0], from[1]);
    Point r0 = meet(join(from[2], to[2]), n);
    RangeProjectivity rho1 = projection_through_pairs(l, n, from[0], to[0], from[2], r0);
    RangeProjectivity rho2 = projection_through_pairs(n, m, from[1], to[1], r0, to[2]);
    return compose(rho2, rho1);
}

TwoCenterChain two_center_chain(const Line& l, const Line& m, const std::array<Point, 3>& from,
                                const std::array<Point, 3>& to) {
    Point r = meet(join(from[0], to[0]), join(from[1], to[1]));
    Point s = meet(join(from[1], to[1]), join(from[2], to[2]));
    Line n = join(to[0], from[2]);
    RangeProjectivity rho1 = projection(r, l, n);
    RangeProjectivity rho2 = projection(s, n, m);
    return TwoCenterChain{compose(rho2, rho1), r, s};
}

GeneralChain six_projection_chain(const std::array<Point, 3>& from, const std::array<Point, 3>& to) {
    Line l = join(from[0], from[1]);
    Line m = join(to[0], to[1]);
    // Detour over two auxiliary lines; each leg is a two projection chain
    // with all constraints satisfiable by fresh selections.
    Point o1 = fresh_point_on(l, {from[0], from[1], from[2]});
    Line l2 = join(o1, pool_point_outside({l}));
    Point o2 = fresh_point_on(m, {to[0], to[1], to[2]});
    Line m2 = join(o2, pool_point_outside({m, l2}));
    Point o3 = meet(l2, m2);
    std::vector<Point> used = {o1, o3};
    for (int i = 0; i < 3; ++i) used.push_back(fresh_point_on(l2, used));
    std::array<Point, 3> mid1 = {used[2], used[3], used[4]};
    used = {o2, o3};
    for (int i = 0; i < 3; ++i) used.push_back(fresh_point_on(m2, used));
    std::array<Point, 3> mid2 = {used[2], used[3], used[4]};
    RangeProjectivity c1 = two_projection_chain(l, l2, from, mid1);
    RangeProjectivity c2 = two_projection_chain(l2, m2, mid1, mid2);
    RangeProjectivity c3 = two_projection_chain(m2, m, mid2, to);
    return GeneralChain{compose(c3, compose(c2, c1)), 6};
}

namespace {

// Direct solve used only as backstop: basis map a -> s a2, b -> t b2 with
// the scales matched on the third point, extended off the line by l -> m.
RangeProjectivity solve_three_points(const Line& l, const Line& m, const std::array<Point, 3>& from,
                                     const std::array<Point, 3>& to) {
    const HVec& a = from[0].coords();
    const HVec& b = from[1].coords();
    const HVec& a2 = to[0].coords();
    const HVec& b2 = to[1].coords();
    HVec lv = l.coords();
    HVec mv = m.coords();
    int i = 0;
    HVec ab = cross(a, b);
    while (ab[i].is_zero()) ++i;
    Scalar alpha = cross(from[2].coords(), b)[i] / ab[i];
    Scalar beta = cross(a, from[2].coords())[i] / ab[i];
    int j = 0;
    HVec ab2 = cross(a2, b2);
    while (ab2[j].is_zero()) ++j;
    Scalar alpha2 = cross(to[2].coords(), b2)[j] / ab2[j];
    Scalar beta2 = cross(a2, to[2].coords())[j] / ab2[j];
    Mat3 src = Mat3::from_cols(a, b, lv);
    Mat3 dst = Mat3::from_cols(scale(alpha2 * beta, a2), scale(beta2 * alpha, b2), mv);
    return RangeProjectivity(l, m, dst.mul(src.inverse()));
}

}  // namespace

RangeProjectivity from_three_points(const std::array<Point, 3>& from, const std::array<Point, 3>& to) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (!point_apart(from[i], from[j]) || !point_apart(to[i], to[j]))
                throw GeometryError(ErrorKind::NotApart, "three point map needs pairwise apart triples");
        }
    Line l = join(from[0], from[1]);
    Line m = join(to[0], to[1]);
    if (!incident(from[2], l))
        throw GeometryError(ErrorKind::Degenerate, "source triple is not collinear");
    if (!incident(to[2], m))
        throw GeometryError(ErrorKind::Degenerate, "image triple is not collinear");
    auto verified = [&](const RangeProjectivity& f) {
        for (int i = 0; i < 3; ++i)
            if (f.apply(from[i]) != to[i]) return false;
        return true;
    };
    try {
        if (line_apart(l, m)) {
            Point o = meet(l, m);
            bool clear = true;
            for (const Point& p : from)
                if (!point_apart(p, o)) clear = false;
            for (const Point& p : to)
                if (!point_apart(p, o)) clear = false;
            if (clear) {
                RangeProjectivity f = two_projection_chain(l, m, from, to);
                if (verified(f)) return f;
            }
        }
        RangeProjectivity f = six_projection_chain(from, to).map;
        if (verified(f)) return f;
    } catch (const GeometryError&) {
        // fall through to the solver
    }
    RangeProjectivity f = solve_three_points(l, m, from, to);
    if (!verified(f))
        throw GeometryError(ErrorKind::Degenerate, "three point map could not be verified");
    return f;
}

bool is_nonperspective(const RangeProjectivity& f) {
    if (!line_apart(f.domain(), f.codomain()))
        throw GeometryError(ErrorKind::SameLine, "perspectivity test needs apart lines");
    Point o = meet(f.domain(), f.codomain());
    return point_apart(f.apply(o), o);
}

Line axis_of_homology(const RangeProjectivity& f) {
    if (!is_nonperspective(f))
        throw GeometryError(ErrorKind::Perspective, "axis exists only for nonperspective maps");
    Point o = meet(f.domain(), f.codomain());
    Point u = inverse(f).apply(o);
    Point v = f.apply(o);
    return join(u, v);
}

RangeProjectivity harmonic_involution(const Point& a, const Point& b) {
    Line base = join(a, b);
    // Three projections through an auxiliary triangle over the base line.
    Point r = pool_point_outside({base});
    Line br = join(b, r);
    Point p = fresh_point_on(br, {b, r});
    Line ar = join(a, r);
    Line ap = join(a, p);
    RangeProjectivity rho1 = projection(p, base, ar);
    RangeProjectivity rho2 = projection(b, ar, ap);
    RangeProjectivity rho3 = projection(r, ap, base);
    return compose(rho3, compose(rho2, rho1));
}

RangeProjectivity involution_from_swap(const Point& a, const Point& b, const Point& x, const Point& y) {
    return from_three_points({a, b, x}, {b, a, y});
}

bool is_involution(const RangeProjectivity& f) {
    if (f.domain() != f.codomain()) return false;
    return equal(compose(f, f), identity_on(f.domain()));
}

Point second_fixed_point(const RangeProjectivity& f, const Point& m) {
    if (!is_involution(f))
        throw GeometryError(ErrorKind::Degenerate, "second fixed point needs an involution");
    if (f.apply(m) != m)
        throw GeometryError(ErrorKind::Degenerate, "given point is not fixed");
    // Three fixed samples would force the identity, so three samples decide.
    for (const Point& s : sample_triple(f.domain())) {
        Point image = f.apply(s);
        if (point_apart(image, s)) return harmonic_conjugate(s, image, m);
    }
    throw GeometryError(ErrorKind::NoMovedPoint, "map is the identity on the deterministic samples");
}

PencilProjectivity pencil_from_three_lines(const std::array<Line, 3>& from, const std::array<Line, 3>& to) {
    return PencilProjectivity{from_three_points({dualize(from[0]), dualize(from[1]), dualize(from[2])},
                                                {dualize(to[0]), dualize(to[1]), dualize(to[2])})};
}

PencilProjectivity pencil_compose(const PencilProjectivity& g, const PencilProjectivity& f) {
    return PencilProjectivity{compose(g.dual, f.dual)};
}

PencilProjectivity pencil_inverse(const PencilProjectivity& f) {
    return PencilProjectivity{inverse(f.dual)};
}

bool pencil_nonperspective(const PencilProjectivity& f) { return is_nonperspective(f.dual); }

}  // namespace pg
