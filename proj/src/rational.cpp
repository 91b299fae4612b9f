#include "qca/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace qca {

int64_t gcd64(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    int64_t g = gcd64(a, b);
    return std::llabs(ck_mul(a / g, b));
}

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = ck_sub(0, n);
        d = ck_sub(0, d);
    }
    int64_t g = gcd64(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    n_ = n;
    d_ = d;
}

int64_t Rational::floor() const {
    int64_t q = n_ / d_;
    if ((n_ % d_ != 0) && (n_ < 0)) --q;
    return q;
}

int64_t Rational::ceil() const {
    int64_t q = n_ / d_;
    if ((n_ % d_ != 0) && (n_ > 0)) ++q;
    return q;
}

Rational& Rational::operator+=(const Rational& o) {
    if (d_ == 1 && o.d_ == 1) {
        n_ = ck_add(n_, o.n_);
        return *this;
    }
    int64_t g = gcd64(d_, o.d_);
    int64_t a = ck_mul(n_, o.d_ / g);
    int64_t b = ck_mul(o.n_, d_ / g);
    *this = Rational(ck_add(a, b), ck_mul(d_, o.d_ / g));
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (d_ == 1 && o.d_ == 1) {
        n_ = ck_mul(n_, o.n_);
        return *this;
    }
    int64_t g1 = gcd64(n_, o.d_);
    int64_t g2 = gcd64(o.n_, d_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    *this = Rational(ck_mul(n_ / g1, o.n_ / g2), ck_mul(d_ / g2, o.d_ / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.n_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(o.d_, o.n_);
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.d_ == b.d_) return a.n_ < b.n_;
    __int128 l = static_cast<__int128>(a.n_) * b.d_;
    __int128 r = static_cast<__int128>(b.n_) * a.d_;
    return l < r;
}

std::string Rational::str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad fraction string '" + s + "'");
    }
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace qca
