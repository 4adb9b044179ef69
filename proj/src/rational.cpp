#include "wco/rational.hpp"

#include "wco/numeric.hpp"

#include <cmath>

namespace wco {

BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
    if (x == 0.0) return BigRat(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    long long mint = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    BigRat r(mint);
    if (exp > 0) {
        r *= BigRat(BigInt(1) << exp);
    } else if (exp < 0) {
        r /= BigRat(BigInt(1) << (-exp));
    }
    return r;
}

double rat_to_double(const BigRat& r) { return static_cast<double>(r); }

BigRat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
        return BigRat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return BigRat(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return BigRat(BigInt(digits), den);
}

double XRat::to_double() const { return inf_ ? kInf : rat_to_double(v_); }

XRat operator+(const XRat& a, const XRat& b) {
    if (a.inf_ || b.inf_) return XRat::infinity();
    return XRat(a.v_ + b.v_);
}

XRat operator*(const XRat& a, const XRat& b) {
    // 0 * inf = 0
    if (a.is_zero() || b.is_zero()) return XRat();
    if (a.inf_ || b.inf_) return XRat::infinity();
    return XRat(a.v_ * b.v_);
}

XRat XRat::div(const XRat& num, const XRat& den) {
    if (den.is_zero()) return num.is_zero() ? XRat() : XRat::infinity();
    if (den.inf_) return num.inf_ ? XRat::infinity() : XRat();
    if (num.inf_) return XRat::infinity();
    return XRat(num.v_ / den.v_);
}

std::optional<BigInt> iroot_exact(const BigInt& n, unsigned k) {
    if (n < 0) return std::nullopt;
    if (n == 0 || n == 1 || k == 1) return n;
    // binary search on the value of the root
    unsigned bits = boost::multiprecision::msb(n) + 1;
    BigInt lo = BigInt(1) << ((bits - 1) / k);
    BigInt hi = (BigInt(1) << (bits / k + 1)) + 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = boost::multiprecision::pow(mid, k);
        if (p == n) return mid;
        if (p < n)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::optional<BigRat> pow_exact(const BigRat& base, const BigRat& expo) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::pow;

    if (base < 0) return std::nullopt;
    if (expo == 0) return BigRat(1);  // includes 0^0 = 1
    if (base == 0) {
        if (expo > 0) return BigRat(0);
        return std::nullopt;  // 0^negative: infinity, handled by the XRat overload
    }
    if (base == 1) return BigRat(1);

    BigInt p = numerator(expo);
    BigInt qi = denominator(expo);  // > 0, coprime with p
    bool invert = p < 0;
    if (invert) p = -p;
    if (p > 1000000 || qi > 1000000)
        throw std::invalid_argument("pow_exact: exponent too large");
    auto pe = static_cast<unsigned>(p);
    auto qe = static_cast<unsigned>(qi);

    BigInt num = pow(numerator(base), pe);
    BigInt den = pow(denominator(base), pe);
    if (qe > 1) {
        auto rn = iroot_exact(num, qe);
        auto rd = iroot_exact(den, qe);
        if (!rn || !rd) return std::nullopt;
        num = *rn;
        den = *rd;
    }
    BigRat r(num, den);
    if (invert) r = 1 / r;
    return r;
}

std::optional<XRat> pow_exact(const XRat& base, const BigRat& expo) {
    if (base.is_inf()) {
        if (expo > 0) return XRat::infinity();
        if (expo == 0) return XRat(BigRat(1));
        return XRat();
    }
    if (base.is_zero() && expo < 0) return XRat::infinity();  // t/0 convention
    auto r = pow_exact(base.value(), expo);
    if (!r) return std::nullopt;
    return XRat(*r);
}

Tolerances Tolerances::from_env() {
    Tolerances t;
    if (const char* v = std::getenv("WCO_TOL")) {
        try {
            t.exact = std::stod(v);
        } catch (...) {
            // ignore malformed overrides, keep defaults
        }
    }
    return t;
}

}  // namespace wco
