#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace wco {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact conversion; every finite double is a dyadic rational. Throws on NaN/Inf.
BigRat rat_from_double(double x);
double rat_to_double(const BigRat& r);

// Accepts "p/q", "p", and plain decimal strings like "0.25".
BigRat rat_parse(const std::string& s);

struct RatComplex {
    BigRat re;
    BigRat im;

    RatComplex() = default;
    RatComplex(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    BigRat norm2() const { return re * re + im * im; }  // |z|^2
};

// Extended nonnegative rational: a finite value >= 0 or +infinity.
// Arithmetic follows the same conventions as the double helpers
// (0 * inf = 0, t / 0 = inf, 0 / 0 = 0).
class XRat {
public:
    XRat() : inf_(false), v_(0) {}
    explicit XRat(BigRat v) : inf_(false), v_(std::move(v)) {
        if (v_ < 0) throw std::invalid_argument("XRat: negative value");
    }
    static XRat infinity() {
        XRat r;
        r.inf_ = true;
        return r;
    }

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && v_ == 0; }
    const BigRat& value() const {
        if (inf_) throw std::logic_error("XRat: value() on infinity");
        return v_;
    }
    double to_double() const;

    friend XRat operator+(const XRat& a, const XRat& b);
    friend XRat operator*(const XRat& a, const XRat& b);
    static XRat div(const XRat& num, const XRat& den);

    friend bool operator==(const XRat& a, const XRat& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }

private:
    bool inf_;
    BigRat v_;
};

// Exact k-th root of a nonnegative integer, or nullopt when it is irrational.
std::optional<BigInt> iroot_exact(const BigInt& n, unsigned k);

// base^expo for base >= 0 and rational expo, exact or nullopt. 0^0 = 1.
// base == 0 with expo < 0 is rejected here; XRat callers map it to infinity.
std::optional<BigRat> pow_exact(const BigRat& base, const BigRat& expo);
std::optional<XRat> pow_exact(const XRat& base, const BigRat& expo);

}  // namespace wco
