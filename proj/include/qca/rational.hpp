#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qca {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline int64_t ck_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in add");
    return r;
}
inline int64_t ck_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in sub");
    return r;
}
inline int64_t ck_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in mul");
    return r;
}

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

class Rational {
public:
    Rational() = default;
    Rational(int64_t n) : n_(n) {}  // NOLINT implicit by design
    Rational(int64_t n, int64_t d);

    int64_t num() const { return n_; }
    int64_t den() const { return d_; }
    bool is_integer() const { return d_ == 1; }
    bool is_zero() const { return n_ == 0; }
    int sign() const { return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0); }
    int64_t floor() const;
    int64_t ceil() const;

    Rational operator-() const { return Rational(ck_sub(0, n_), d_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q" or "p"
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    int64_t n_ = 0;
    int64_t d_ = 1;
};

Rational abs(const Rational& r);

}  // namespace qca
