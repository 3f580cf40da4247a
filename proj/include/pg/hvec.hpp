#pragma once

#include <array>
#include <string>
#include <string_view>

#include "pg/scalar.hpp"

namespace pg {

// Homogeneous coordinate triple, nonzero. After canonicalize() the entries
// are coprime integers and the first nonzero entry is positive, so a
// projective class has exactly one representative and equality is plain
// componentwise comparison.
struct HVec {
    Scalar x, y, z;

    HVec() = default;
    HVec(Scalar a, Scalar b, Scalar c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

    const Scalar& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Scalar& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend bool operator==(const HVec& a, const HVec& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

HVec cross(const HVec& a, const HVec& b);
Scalar dot(const HVec& a, const HVec& b);
HVec add(const HVec& a, const HVec& b);
HVec sub(const HVec& a, const HVec& b);
HVec scale(const Scalar& s, const HVec& v);

// Unique representative of the projective class. Throws Degenerate on the
// zero triple.
HVec canonicalize(const HVec& v);

class Point {
public:
    Point(Scalar a, Scalar b, Scalar c) : v_(canonicalize(HVec(std::move(a), std::move(b), std::move(c)))) {}
    explicit Point(const HVec& v) : v_(canonicalize(v)) {}

    const HVec& coords() const { return v_; }
    const Scalar& operator[](int i) const { return v_[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a.v_ == b.v_); }

    std::string str() const;  // "(a, b, c)"

private:
    HVec v_;
};

class Line {
public:
    Line(Scalar a, Scalar b, Scalar c) : v_(canonicalize(HVec(std::move(a), std::move(b), std::move(c)))) {}
    explicit Line(const HVec& v) : v_(canonicalize(v)) {}

    const HVec& coords() const { return v_; }
    const Scalar& operator[](int i) const { return v_[i]; }

    friend bool operator==(const Line& a, const Line& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Line& a, const Line& b) { return !(a.v_ == b.v_); }

    std::string str() const;  // "[a, b, c]"

private:
    HVec v_;
};

// Parse "(a, b, c)" / "[a, b, c]" with rational entries. Whitespace around
// entries is ignored. Throws Degenerate on malformed input or zero triple.
Point parse_point(std::string_view s);
Line parse_line(std::string_view s);

}  // namespace pg
