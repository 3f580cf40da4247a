#include "pg/svg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "pg/plane.hpp"
#include "pg/projectivity.hpp"

namespace pg::script {

namespace {

constexpr long kSide = 800;

// Nearest integer, ties rounding up. Exact, so the same rational always
// lands on the same pixel.
long round_half_up(const Scalar& v) {
    mpq_class q = v.raw() + mpq_class(1, 2);
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return z.get_si();
}

struct ChartFrame {
    int drop;
    int k1, k2;  // kept coordinate indices, in x, y, z order
    Scalar xmin, xmax, ymin, ymax;

    explicit ChartFrame(const EmitOptions& o)
        : drop(o.drop), xmin(o.xmin), xmax(o.xmax), ymin(o.ymin), ymax(o.ymax) {
        k1 = drop == 0 ? 1 : 0;
        k2 = drop == 2 ? 1 : 2;
    }

    std::optional<std::pair<Scalar, Scalar>> affine(const Point& p) const {
        const Scalar& d = p[drop];
        if (d.is_zero()) return std::nullopt;
        return std::make_pair(p[k1] / d, p[k2] / d);
    }

    long px(const Scalar& u) const { return round_half_up((u - xmin) * Scalar(kSide) / (xmax - xmin)); }
    long py(const Scalar& v) const { return round_half_up((ymax - v) * Scalar(kSide) / (ymax - ymin)); }

    bool inside(const Scalar& u, const Scalar& v) const {
        return xmin <= u && u <= xmax && ymin <= v && v <= ymax;
    }

    // One viewport width/height of slack on every side; conic runs are cut
    // there so sampled branches never produce kilometer-long segments.
    bool near(const Scalar& u, const Scalar& v) const {
        Scalar w = xmax - xmin, h = ymax - ymin;
        return xmin - w <= u && u <= xmax + w && ymin - h <= v && v <= ymax + h;
    }
};

// Segment of A u + B v + C = 0 inside the viewport, endpoints exact.
std::optional<std::array<std::pair<Scalar, Scalar>, 2>> clip_line(const ChartFrame& f, const Scalar& a,
                                                                  const Scalar& b, const Scalar& c) {
    std::vector<std::pair<Scalar, Scalar>> cand;
    if (!b.is_zero()) {
        for (const Scalar& u : {f.xmin, f.xmax}) {
            Scalar v = -(c + a * u) / b;
            if (f.ymin <= v && v <= f.ymax) cand.emplace_back(u, v);
        }
    }
    if (!a.is_zero()) {
        for (const Scalar& v : {f.ymin, f.ymax}) {
            Scalar u = -(c + b * v) / a;
            if (f.xmin <= u && u <= f.xmax) cand.emplace_back(u, v);
        }
    }
    std::sort(cand.begin(), cand.end(), [](const auto& p, const auto& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.second < q.second;
    });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (cand.size() < 2) return std::nullopt;
    return std::array<std::pair<Scalar, Scalar>, 2>{cand.front(), cand.back()};
}

void draw_point(std::ostringstream& out, const ChartFrame& f, const std::string& name, const Point& p,
                std::vector<std::string>& at_infinity) {
    auto uv = f.affine(p);
    if (!uv) {
        at_infinity.push_back(name);
        return;
    }
    if (!f.inside(uv->first, uv->second)) return;
    long x = f.px(uv->first), y = f.py(uv->second);
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#c62828\"/>\n";
    out << "<text x=\"" << x + 8 << "\" y=\"" << y - 8
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#212121\">" << name << "</text>\n";
}

void draw_line(std::ostringstream& out, const ChartFrame& f, const std::string& name, const Line& l,
               std::vector<std::string>& at_infinity) {
    Scalar a = l[f.k1], b = l[f.k2], c = l[f.drop];
    if (a.is_zero() && b.is_zero()) {
        at_infinity.push_back(name);
        return;
    }
    auto seg = clip_line(f, a, b, c);
    if (!seg) return;
    out << "<line x1=\"" << f.px((*seg)[0].first) << "\" y1=\"" << f.py((*seg)[0].second) << "\" x2=\""
        << f.px((*seg)[1].first) << "\" y2=\"" << f.py((*seg)[1].second)
        << "\" stroke=\"#455a64\" stroke-width=\"1\"/>\n";
}

// The locus map l -> meet(l, pi(l)) is total on the pencil at U: the base
// line goes to V and the tangent at U goes to U, so every parameter value
// below yields a point of the conic.
Point member_at(const Conic& k, const HVec& dual_pt) {
    Line l = dualize(Point(dual_pt));
    return meet(l, k.pi().apply(l));
}

void draw_conic(std::ostringstream& out, const ChartFrame& f, const Conic& k, long samples) {
    long half = std::max<long>(2, samples / 2);
    auto [q, r] = basis_pair(dualize(k.u()));
    const HVec& qc = q.coords();
    const HVec& rc = r.coords();

    // Parameter sweep around the whole projective line of the pencil:
    // first q + t r for t in [-1, 1], then s q + r for s from 1 back to
    // -1 (covering t beyond 1 through infinity and back to -1).
    std::vector<HVec> duals;
    for (long i = 0; i <= half; ++i)
        duals.push_back(add(scale(Scalar(half), qc), scale(Scalar(2 * i - half), rc)));
    for (long i = 1; i < half; ++i)
        duals.push_back(add(scale(Scalar(half - 2 * i), qc), scale(Scalar(half), rc)));
    duals.push_back(duals.front());

    std::vector<std::pair<long, long>> run;
    auto flush = [&]() {
        if (run.size() >= 2) {
            out << "<polyline fill=\"none\" stroke=\"#1565c0\" stroke-width=\"2\" points=\"";
            for (size_t i = 0; i < run.size(); ++i) {
                if (i) out << ' ';
                out << run[i].first << ',' << run[i].second;
            }
            out << "\"/>\n";
        }
        run.clear();
    };
    for (const HVec& d : duals) {
        Point m = member_at(k, d);
        auto uv = f.affine(m);
        if (!uv || !f.near(uv->first, uv->second)) {
            flush();
            continue;
        }
        std::pair<long, long> px{f.px(uv->first), f.py(uv->second)};
        if (run.empty() || run.back() != px) run.push_back(px);
    }
    flush();
}

}  // namespace

SvgResult render_svg(const ChartScene& scene, const EmitOptions& opts) {
    ChartFrame f(opts);
    SvgResult res;
    std::ostringstream lines_out, conics_out, points_out;
    std::vector<std::string> line_infinity;

    for (const auto& [name, p] : scene.points) draw_point(points_out, f, name, p, res.at_infinity);
    for (const auto& [name, l] : scene.lines) draw_line(lines_out, f, name, l, line_infinity);
    for (const auto& [name, k] : scene.conics) draw_conic(conics_out, f, k, opts.samples);
    res.at_infinity.insert(res.at_infinity.end(), line_infinity.begin(), line_infinity.end());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSide << "\" height=\"" << kSide
        << "\" viewBox=\"0 0 " << kSide << ' ' << kSide << "\">\n";
    out << "<rect width=\"" << kSide << "\" height=\"" << kSide << "\" fill=\"#ffffff\"/>\n";
    out << lines_out.str() << conics_out.str() << points_out.str();
    out << "</svg>\n";
    res.body = out.str();
    return res;
}

}  // namespace pg::script
