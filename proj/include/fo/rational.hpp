#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "fo/errors.hpp"

namespace fo {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; there is no floating-point path
/// except the explicit to_double() used by the numeric harmonic check.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw InputError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw InputError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "a" or "a/b" (optional leading '-'), base 10.
    static Rational from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string t = s;
    bool neg = false;
    size_t i = 0;
    if (t[0] == '-') { neg = true; i = 1; }
    else if (t[0] == '+') { i = 1; }
    std::string body = t.substr(i);
    if (body.empty()) throw InputError("bad rational literal '" + s + "'");
    auto slash = body.find('/');
    auto digits_only = [](const std::string& d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    mpz_class num, den = 1;
    if (slash == std::string::npos) {
        if (!digits_only(body)) throw InputError("bad rational literal '" + s + "'");
        num = mpz_class(body);
    } else {
        std::string ns = body.substr(0, slash), ds = body.substr(slash + 1);
        if (!digits_only(ns) || !digits_only(ds))
            throw InputError("bad rational literal '" + s + "'");
        num = mpz_class(ns);
        den = mpz_class(ds);
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

} // namespace fo
