#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pg/error.hpp"

namespace pg {

// Exact rational number. Always kept canonical: gcd(|num|, den) = 1, den > 0.
// Equality and apartness are decidable, which the whole kernel relies on.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw GeometryError(ErrorKind::Degenerate, "zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(const mpz_class& n) : v_(n) {}
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q", "-p/q". Nothing else: GMP itself would skip
    // interior whitespace, which we do not want.
    static Scalar parse(std::string_view s) {
        auto fail = [&]() -> GeometryError {
            return GeometryError(ErrorKind::Degenerate, "bad rational literal '" + std::string(s) + "'");
        };
        size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
        if (digits == 0) throw fail();
        if (i < s.size()) {
            if (s[i] != '/') throw fail();
            ++i;
            digits = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
            if (digits == 0 || i != s.size()) throw fail();
        }
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0) throw fail();
        if (q.get_den() == 0)
            throw GeometryError(ErrorKind::Degenerate, "zero denominator in '" + std::string(s) + "'");
        q.canonicalize();
        return Scalar(q);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool apart(const Scalar& o) const { return v_ != o.v_; }
    int sign() const { return sgn(v_); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw GeometryError(ErrorKind::Degenerate, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    // "3", "-1/2"; denominator printed only when not 1.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

}  // namespace pg
