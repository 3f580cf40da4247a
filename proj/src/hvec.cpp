#include "pg/hvec.hpp"

#include <cctype>

namespace pg {

HVec cross(const HVec& a, const HVec& b) {
    return HVec(a.y * b.z - a.z * b.y,
                a.z * b.x - a.x * b.z,
                a.x * b.y - a.y * b.x);
}

Scalar dot(const HVec& a, const HVec& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

HVec add(const HVec& a, const HVec& b) { return HVec(a.x + b.x, a.y + b.y, a.z + b.z); }
HVec sub(const HVec& a, const HVec& b) { return HVec(a.x - b.x, a.y - b.y, a.z - b.z); }
HVec scale(const Scalar& s, const HVec& v) { return HVec(s * v.x, s * v.y, s * v.z); }

HVec canonicalize(const HVec& v) {
    if (v.is_zero()) throw GeometryError(ErrorKind::Degenerate, "zero coordinate triple");
    // Clear denominators, then divide by the gcd of the numerators.
    mpz_class l = 1;
    for (int i = 0; i < 3; ++i) {
        mpz_class d = v[i].den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    mpz_class n[3];
    for (int i = 0; i < 3; ++i) n[i] = v[i].num() * (l / v[i].den());
    mpz_class g = 0;
    for (int i = 0; i < 3; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    for (int i = 0; i < 3; ++i) n[i] /= g;
    int lead = 0;
    for (int i = 0; i < 3; ++i) {
        int s = sgn(n[i]);
        if (s != 0) { lead = s; break; }
    }
    if (lead < 0)
        for (int i = 0; i < 3; ++i) n[i] = -n[i];
    return HVec(Scalar(n[0]), Scalar(n[1]), Scalar(n[2]));
}

namespace {

std::string triple_str(const HVec& v, char open, char close) {
    std::string s(1, open);
    s += v.x.str();
    s += ", ";
    s += v.y.str();
    s += ", ";
    s += v.z.str();
    s += close;
    return s;
}

HVec parse_triple(std::string_view s, char open, char close) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto fail = [&]() -> GeometryError {
        return GeometryError(ErrorKind::Degenerate, "bad coordinate triple '" + std::string(s) + "'");
    };
    skip_ws();
    if (i >= s.size() || s[i] != open) throw fail();
    ++i;
    Scalar c[3];
    for (int k = 0; k < 3; ++k) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && s[i] != ',' && s[i] != close) ++i;
        size_t end = i;
        while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
        if (end == start) throw fail();
        c[k] = Scalar::parse(s.substr(start, end - start));
        if (k < 2) {
            if (i >= s.size() || s[i] != ',') throw fail();
            ++i;
        }
    }
    if (i >= s.size() || s[i] != close) throw fail();
    ++i;
    skip_ws();
    if (i != s.size()) throw fail();
    return HVec(c[0], c[1], c[2]);
}

}  // namespace

std::string Point::str() const { return triple_str(v_, '(', ')'); }
std::string Line::str() const { return triple_str(v_, '[', ']'); }

Point parse_point(std::string_view s) { return Point(parse_triple(s, '(', ')')); }
Line parse_line(std::string_view s) { return Line(parse_triple(s, '[', ']')); }

}  // namespace pg
