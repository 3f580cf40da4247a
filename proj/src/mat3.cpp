#include "pg/mat3.hpp"

namespace pg {

Mat3 Mat3::identity() {
    Mat3 m;
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = Scalar(1);
    return m;
}

Mat3 Mat3::from_rows(const HVec& r0, const HVec& r1, const HVec& r2) {
    Mat3 m;
    for (int c = 0; c < 3; ++c) {
        m.at(0, c) = r0[c];
        m.at(1, c) = r1[c];
        m.at(2, c) = r2[c];
    }
    return m;
}

Mat3 Mat3::from_cols(const HVec& c0, const HVec& c1, const HVec& c2) {
    return from_rows(c0, c1, c2).transpose();
}

Mat3 Mat3::outer(const HVec& u, const HVec& v) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = u[r] * v[c];
    return m;
}

HVec Mat3::row(int r) const { return HVec(at(r, 0), at(r, 1), at(r, 2)); }
HVec Mat3::col(int c) const { return HVec(at(0, c), at(1, c), at(2, c)); }

Mat3 Mat3::mul(const Mat3& o) const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Scalar s;
            for (int k = 0; k < 3; ++k) s += at(r, k) * o.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

HVec Mat3::apply(const HVec& v) const {
    return HVec(dot(row(0), v), dot(row(1), v), dot(row(2), v));
}

Mat3 Mat3::transpose() const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = at(c, r);
    return m;
}

Scalar Mat3::det() const { return dot(row(0), cross(row(1), row(2))); }

Mat3 Mat3::adjugate() const {
    // Rows of the adjugate are cross products of the original columns.
    return Mat3::from_rows(cross(col(1), col(2)), cross(col(2), col(0)), cross(col(0), col(1)));
}

Mat3 Mat3::inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw GeometryError(ErrorKind::Degenerate, "singular matrix");
    return adjugate().scaled(Scalar(1) / d);
}

Mat3 Mat3::scaled(const Scalar& s) const {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = a[i] * s;
    return m;
}

Mat3 Mat3::plus(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = a[i] + o.a[i];
    return m;
}

Mat3 Mat3::minus(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
    return m;
}

Mat3 Mat3::canonical() const {
    mpz_class l = 1;
    for (int i = 0; i < 9; ++i) {
        mpz_class d = a[i].den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    mpz_class n[9];
    mpz_class g = 0;
    for (int i = 0; i < 9; ++i) {
        n[i] = a[i].num() * (l / a[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    if (g == 0) throw GeometryError(ErrorKind::Degenerate, "zero matrix has no canonical form");
    int lead = 0;
    for (int i = 0; i < 9 && lead == 0; ++i) lead = sgn(n[i]);
    if (lead < 0) g = -g;
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = Scalar(mpz_class(n[i] / g));
    return m;
}

bool Mat3::is_zero() const {
    for (int i = 0; i < 9; ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

std::string Mat3::str() const {
    std::string s = "[";
    for (int r = 0; r < 3; ++r) {
        s += "[";
        for (int c = 0; c < 3; ++c) {
            s += at(r, c).str();
            if (c < 2) s += ", ";
        }
        s += "]";
        if (r < 2) s += ", ";
    }
    s += "]";
    return s;
}

}  // namespace pg
