#include "pg/conic.hpp"

#include <string>

#include "pg/error.hpp"
#include "pg/harmonic.hpp"

namespace pg {

namespace {

// Members in scan order: the pencil at u is the range of the dual line of
// u, walked with the same q + t r scan as fresh_point_on. Lines landing on
// uv, or sent there by pi, yield no member and are skipped.
class MemberScan {
public:
    explicit MemberScan(const Conic& k)
        : k_(k), basis_(basis_pair(dualize(k.u()))), uv_(join(k.u(), k.v())) {}

    Point next() {
        for (;;) {
            Point dual_pt(add(basis_.first.coords(), scale(Scalar(t_), basis_.second.coords())));
            ++t_;
            Line l = dualize(dual_pt);
            if (!line_apart(l, uv_)) continue;
            Line image = k_.pi().apply(l);
            if (!line_apart(image, uv_)) continue;
            return meet(l, image);
        }
    }

private:
    const Conic& k_;
    std::pair<Point, Point> basis_;
    Line uv_;
    long t_ = 0;
};

Point member_apart_from(const Conic& k, const std::vector<Point>& avoid) {
    MemberScan scan(k);
    for (;;) {
        Point m = scan.next();
        bool ok = true;
        for (const Point& p : avoid)
            if (!point_apart(m, p)) {
                ok = false;
                break;
            }
        if (ok) return m;
    }
}

}  // namespace

Conic::Conic(Point u, Point v, PencilProjectivity pi)
    : u_(std::move(u)), v_(std::move(v)), pi_(std::move(pi)) {
    if (!point_apart(u_, v_)) throw GeometryError(ErrorKind::NotApart, "conic base points coincide");
    if (!(pi_.center_from() == u_) || !(pi_.center_to() == v_))
        throw GeometryError(ErrorKind::OffDomain, "pencil map does not connect the base pencils");
    if (!pencil_nonperspective(pi_))
        throw GeometryError(ErrorKind::Perspective, "pencil projection sweeps out a line, not a conic");
}

std::string Conic::str() const {
    std::vector<Point> sample = trace(*this, 3);
    std::string out = "conic{" + u_.str() + ", " + v_.str();
    for (const Point& p : sample) out += ", " + p.str();
    return out + "}";
}

Conic DualConic::as_conic() const {
    return Conic(dualize(a), dualize(b), PencilProjectivity{phi});
}

Conic conic_through_five(const Point& u, const Point& v, const Point& a, const Point& b,
                         const Point& c) {
    const std::array<const Point*, 5> pts = {&u, &v, &a, &b, &c};
    const char* names = "UVABC";
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!point_apart(*pts[i], *pts[j]))
                throw GeometryError(ErrorKind::NotApart,
                                    std::string("coincident defining points ") + names[i] + names[j]);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int n = j + 1; n < 5; ++n)
                if (!outside(*pts[n], join(*pts[i], *pts[j])))
                    throw GeometryError(ErrorKind::DegenerateFive,
                                        std::string("collinear defining triple ") + names[i] +
                                            names[j] + names[n]);
    PencilProjectivity pi = pencil_from_three_lines({join(u, a), join(u, b), join(u, c)},
                                                    {join(v, a), join(v, b), join(v, c)});
    return Conic(u, v, pi);
}

bool contains(const Conic& k, const Point& x) {
    if (x == k.u()) return true;
    return incident(x, k.pi().apply(join(k.u(), x)));
}

std::vector<Point> trace(const Conic& k, std::size_t n) {
    MemberScan scan(k);
    std::vector<Point> out;
    out.reserve(n);
    while (out.size() < n) out.push_back(scan.next());
    return out;
}

Conic change_base(const Conic& k, const Point& u1, const Point& v1) {
    if (!contains(k, u1) || !contains(k, v1))
        throw GeometryError(ErrorKind::NotOnConic, "base points must be members");
    if (!point_apart(u1, v1)) throw GeometryError(ErrorKind::NotApart, "conic base points coincide");
    MemberScan scan(k);
    std::vector<Point> picked;
    while (picked.size() < 3) {
        Point m = scan.next();
        if (point_apart(m, u1) && point_apart(m, v1)) picked.push_back(m);
    }
    return conic_through_five(u1, v1, picked[0], picked[1], picked[2]);
}

Line tangent_at(const Conic& k, const Point& p) {
    if (!contains(k, p)) throw GeometryError(ErrorKind::NotOnConic, "tangent wants a member");
    Point q = member_apart_from(k, {p});
    Conic rebased = change_base(k, q, p);
    return rebased.pi().apply(join(q, p));
}

Point second_intersection(const Conic& k, const Point& p, const Line& l) {
    if (!contains(k, p)) throw GeometryError(ErrorKind::NotOnConic, "secant anchor must be a member");
    if (!incident(p, l))
        throw GeometryError(ErrorKind::OffDomain, "line misses its anchor point " + p.str());
    Point q = member_apart_from(k, {p});
    Conic rebased = change_base(k, q, p);
    Line across = join(q, p);
    if (l == rebased.pi().apply(across))
        throw GeometryError(ErrorKind::TangentLine, "tangent at " + p.str() + " has no second member");
    return meet(l, pencil_inverse(rebased.pi()).apply(l));
}

Line pascal_line(const Conic& k, const std::array<Point, 6>& hexagon) {
    for (const Point& p : hexagon)
        if (!contains(k, p))
            throw GeometryError(ErrorKind::NotOnConic, "hexagon vertex " + p.str() + " off the conic");
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!point_apart(hexagon[i], hexagon[j]))
                throw GeometryError(ErrorKind::NotApart, "hexagon vertices must be pairwise apart");
    Point m1 = meet(join(hexagon[0], hexagon[1]), join(hexagon[3], hexagon[4]));
    Point m2 = meet(join(hexagon[1], hexagon[2]), join(hexagon[4], hexagon[5]));
    return join(m1, m2);
}

namespace {

Point checked_meet(const Line& a, const Line& b, const char* what) {
    if (!line_apart(a, b))
        throw GeometryError(ErrorKind::Degenerate, std::string("sixth point: ") + what);
    return meet(a, b);
}

Line checked_join(const Point& a, const Point& b, const char* what) {
    if (!point_apart(a, b))
        throw GeometryError(ErrorKind::Degenerate, std::string("sixth point: ") + what);
    return join(a, b);
}

}  // namespace

Point sixth_point(const Conic& k, const std::array<Point, 5>& members, const Line& l) {
    for (const Point& p : members)
        if (!contains(k, p))
            throw GeometryError(ErrorKind::NotOnConic, "point " + p.str() + " off the conic");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!point_apart(members[i], members[j]))
                throw GeometryError(ErrorKind::NotApart, "the five members must be pairwise apart");
    const Point& a = members[0];
    const Point& b = members[1];
    const Point& c = members[2];
    const Point& d = members[3];
    const Point& e = members[4];
    if (!incident(e, l))
        throw GeometryError(ErrorKind::OffDomain, "line misses the fifth member " + e.str());
    for (int i = 0; i < 4; ++i)
        if (!outside(members[i], l))
            throw GeometryError(ErrorKind::Degenerate,
                                "line passes through " + members[i].str() + ", leaving no sixth point");
    Point m = checked_meet(join(a, b), join(d, e), "first and fourth sides fall together");
    Point n = checked_meet(join(b, c), l, "second side falls on the line");
    Point t = checked_meet(join(c, d), checked_join(m, n, "cross meets coincide"),
                           "third side misses the cross join");
    return checked_meet(l, checked_join(a, t, "first vertex meets the third side's trace"),
                        "the guiding line came back to the first vertex");
}

Secant secant_through(const Conic& k, const Point& p, const std::vector<Point>& avoid) {
    MemberScan scan(k);
    std::vector<Point> m;
    while (m.size() < 3) {
        Point cand = scan.next();
        bool ok = true;
        for (const Point& q : avoid)
            if (!point_apart(cand, q)) {
                ok = false;
                break;
            }
        if (ok) m.push_back(cand);
    }
    Line a = tangent_at(k, m[0]);
    Line b = tangent_at(k, m[1]);
    Line c = tangent_at(k, m[2]);
    Point e = meet(a, b);
    Point f = meet(b, c);
    if (!outside(e, c))
        throw GeometryError(ErrorKind::TangentsConcurrent, "tangent triple through one point");
    Point anchor = [&] {
        if (cotransitive_pick(e, f, p) == Pick::FirstApart) return outside(p, a) ? m[0] : m[1];
        return outside(p, b) ? m[1] : m[2];
    }();
    Line through = join(p, anchor);
    return Secant{through, anchor, second_intersection(k, anchor, through)};
}

std::pair<Line, Line> secants_through(const Conic& k, const Point& p) {
    Secant one = secant_through(k, p);
    Secant two = secant_through(k, p, {one.first, one.second});
    return {one.line, two.line};
}

DualConic dual_conic(const Conic& k) {
    Point cpt = trace(k, 1)[0];
    Line a = tangent_at(k, k.u());
    Line b = tangent_at(k, k.v());
    Line c = tangent_at(k, cpt);
    Point e = meet(a, b);
    Point f = meet(b, c);
    Point gp = meet(a, c);
    if (!outside(e, c))
        throw GeometryError(ErrorKind::TangentsConcurrent, "tangent triple through one point");
    RangeProjectivity phi = from_three_points({k.u(), e, gp}, {e, k.v(), f});
    return DualConic{a, b, phi};
}

bool dual_contains(const DualConic& lam, const Line& l) {
    return contains(lam.as_conic(), dualize(l));
}

Point contact_point(const DualConic& lam, const Line& l) {
    if (!dual_contains(lam, l))
        throw GeometryError(ErrorKind::NotOnConic, "line " + l.str() + " off the envelope");
    return dualize(tangent_at(lam.as_conic(), dualize(l)));
}

Line polar(const Point& p, const Conic& k) {
    Secant s = secant_through(k, p);
    Point q = meet(tangent_at(k, s.first), tangent_at(k, s.second));
    Point conj = harmonic_conjugate(s.first, s.second, p);
    return join(q, conj);
}

Point pole(const Line& l, const Conic& k) {
    return dualize(polar(dualize(l), dual_conic(k).as_conic()));
}

}  // namespace pg
