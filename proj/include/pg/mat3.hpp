#pragma once

#include <array>
#include <string>

#include "pg/hvec.hpp"

namespace pg {

// 3x3 matrix of exact rationals, row major. Instances that represent maps
// on homogeneous coordinates are only meaningful up to scale; canonical()
// picks the unique representative with coprime integer entries and positive
// leading entry, mirroring the coordinate canonical form.
struct Mat3 {
    std::array<Scalar, 9> a{};

    static Mat3 identity();
    static Mat3 from_rows(const HVec& r0, const HVec& r1, const HVec& r2);
    static Mat3 from_cols(const HVec& c0, const HVec& c1, const HVec& c2);
    static Mat3 outer(const HVec& u, const HVec& v);  // u v^T

    const Scalar& at(int r, int c) const { return a[3 * r + c]; }
    Scalar& at(int r, int c) { return a[3 * r + c]; }

    HVec row(int r) const;
    HVec col(int c) const;

    Mat3 mul(const Mat3& o) const;
    HVec apply(const HVec& v) const;
    Mat3 transpose() const;
    Scalar det() const;
    Mat3 adjugate() const;
    Mat3 inverse() const;  // throws Degenerate on zero determinant
    Mat3 scaled(const Scalar& s) const;
    Mat3 plus(const Mat3& o) const;
    Mat3 minus(const Mat3& o) const;
    Mat3 canonical() const;

    bool is_zero() const;
    std::string str() const;  // [[a, b, c], [d, e, f], [g, h, i]]

    friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

}  // namespace pg
