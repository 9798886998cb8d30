#pragma once

#include <cstdint>
#include <string>

#include "pmf/errors.hpp"

namespace pmf {

using i128 = __int128;

std::string i128_to_string(i128 v);

inline i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "i128 add");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "i128 sub");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "i128 mul");
    return r;
}

// Exact rational with 128-bit numerator and denominator, always normalized
// (den > 0, gcd(|num|, den) = 1).  Arithmetic is overflow-checked: anything
// that would wrap throws instead of silently corrupting a value.
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(int n) : num(n) {}
    Rat(long long n) : num(n) {}
    Rat(i128 n) : num(n) {}
    Rat(i128 n, i128 d) {
        if (d == 0) fail(Err::Internal, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd_i128(n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static Rat raw(i128 n, i128 d) {  // pre-normalized inputs only
        Rat r;
        r.num = n;
        r.den = d;
        return r;
    }

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }
    bool is_positive() const { return num > 0; }
    bool is_integer() const { return den == 1; }

    i128 floor() const {
        if (den == 1) return num;
        i128 q = num / den;
        if (num < 0 && num % den != 0) --q;
        return q;
    }
    i128 ceil() const {
        if (den == 1) return num;
        i128 q = num / den;
        if (num > 0 && num % den != 0) ++q;
        return q;
    }
    Rat frac() const { return *this - Rat(floor()); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.den == 1 && b.den == 1) return Rat::raw(checked_add(a.num, b.num), 1);
        i128 g = gcd_i128(a.den, b.den);
        i128 bd = b.den / g;
        i128 n = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
        i128 d = checked_mul(a.den, bd);
        return Rat(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    Rat operator-() const { return Rat::raw(-num, den); }

    friend Rat operator*(const Rat& a, const Rat& b) {
        if (a.num == 0 || b.num == 0) return Rat();
        i128 g1 = gcd_i128(a.num, b.den);
        i128 g2 = gcd_i128(b.num, a.den);
        return Rat::raw(checked_mul(a.num / g1, b.num / g2),
                        checked_mul(a.den / g2, b.den / g1));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) fail(Err::Internal, "rational division by zero");
        return a * Rat::raw(b.den * (b.num < 0 ? -1 : 1),
                            b.num < 0 ? -b.num : b.num);
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend int cmp(const Rat& a, const Rat& b) {
        if (a.den == b.den) return a.num < b.num ? -1 : (a.num > b.num ? 1 : 0);
        if ((a.num <= 0 && b.num > 0)) return -1;
        if ((a.num >= 0 && b.num < 0) || (a.num > 0 && b.num <= 0)) return 1;
        i128 l = checked_mul(a.num, b.den);
        i128 r = checked_mul(b.num, a.den);
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    std::string str() const;
};

inline Rat abs(const Rat& a) { return a.num < 0 ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Arc/vertex capacity: a rational or the infinity sentinel, which compares
// above every finite value and saturates under + and -.
struct Cap {
    Rat val;
    bool inf = false;

    Cap() = default;
    Cap(Rat v) : val(v) {}
    Cap(int v) : val(v) {}
    Cap(long long v) : val(v) {}
    static Cap infinite() {
        Cap c;
        c.inf = true;
        return c;
    }

    bool is_positive() const { return inf || val.is_positive(); }
    bool is_negative() const { return !inf && val.is_negative(); }

    friend Cap operator+(const Cap& a, const Rat& b) {
        if (a.inf) return a;
        return Cap(a.val + b);
    }
    friend Cap operator-(const Cap& a, const Rat& b) {
        if (a.inf) return a;
        return Cap(a.val - b);
    }
    friend Cap min(const Cap& a, const Cap& b) {
        if (a.inf) return b;
        if (b.inf) return a;
        return a.val < b.val ? a : b;
    }
    friend bool operator<(const Cap& a, const Cap& b) {
        if (b.inf) return !a.inf;
        if (a.inf) return false;
        return a.val < b.val;
    }
    friend bool operator<=(const Cap& a, const Cap& b) { return !(b < a); }
    friend bool operator==(const Cap& a, const Cap& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.val == b.val;
    }
    friend bool operator<(const Rat& a, const Cap& b) { return Cap(a) < b; }
    friend bool operator<=(const Rat& a, const Cap& b) { return !(b < Cap(a)); }

    std::string str() const { return inf ? "inf" : val.str(); }
};

} // namespace pmf
