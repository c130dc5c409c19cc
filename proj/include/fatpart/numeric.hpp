#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace fatpart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? q : Rat(1) / q;
    long n = e > 0 ? e : -e;
    Rat out = 1;
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

// Accepts "3", "-3", "1/2", "-7/4", "2.5", "-0.125".
Rat parse_rational(const std::string& s);

// "p/q" with q omitted when 1.
std::string format_rational(const Rat& q);

// Scalar adapters so templated code can mix Rat and floating entries.
template <class T>
inline T scalar_from_rat(const Rat& q);
template <>
inline Rat scalar_from_rat<Rat>(const Rat& q) { return q; }
template <>
inline double scalar_from_rat<double>(const Rat& q) { return to_double(q); }
template <>
inline cplx scalar_from_rat<cplx>(const Rat& q) { return cplx(to_double(q), 0.0); }

inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const cplx& x) { return x == cplx(0.0, 0.0); }

inline double scalar_abs(const Rat& x) { return std::abs(to_double(x)); }
inline double scalar_abs(double x) { return std::abs(x); }
inline double scalar_abs(const cplx& x) { return std::abs(x); }

}  // namespace fatpart
