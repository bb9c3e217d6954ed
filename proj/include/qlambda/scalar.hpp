#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <gmpxx.h>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "errors.hpp"

namespace qlambda {

using BigInt = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

// Quad-precision complex used underneath the double-precision API. The
// alternating binomial sums in the closed forms lose roughly log10((1-q)^-n)
// digits, which exceeds what a double can give away at q near 1.
using WideReal = boost::multiprecision::float128;
using Wide = boost::multiprecision::complex128;

// |1 + lambda q^l| and friends below this count as a pole for float scalars.
inline constexpr double kPoleEps = 1e-13;

inline bool is_integral(double x) {
    return std::isfinite(x) && std::floor(x) == x;
}

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Wide widen(const Complex& z) { return Wide(WideReal(z.real()), WideReal(z.imag())); }

inline Complex narrow(const Wide& z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

inline WideReal wide_from_big(const BigInt& n) {
    if (n.fits_slong_p()) return WideReal(n.get_si());
    return WideReal(n.get_str());
}

inline WideReal wide_from_rational(const Rational& r) {
    return wide_from_big(r.get_num()) / wide_from_big(r.get_den());
}

/// Per-backend operations the generic algorithms need. Specialized for
/// Rational, Complex, Wide here and for Cyclotomic in cyclotomic.hpp.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long n) { return Rational(n); }
    static Rational from_big(const BigInt& n) { return Rational(n); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& r) { return sgn(r) == 0; }
    static Complex to_complex(const Rational& r) { return {r.get_d(), 0.0}; }
    static Wide to_wide(const Rational& r) { return Wide(wide_from_rational(r)); }
    static double magnitude(const Rational& r) { return std::abs(r.get_d()); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static Complex from_big(const BigInt& n) { return {n.get_d(), 0.0}; }
    static Complex from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
    static bool is_zero(const Complex& z) { return std::abs(z) < kPoleEps; }
    static Complex to_complex(const Complex& z) { return z; }
    static Wide to_wide(const Complex& z) { return widen(z); }
    static double magnitude(const Complex& z) { return std::abs(z); }
};

template <>
struct scalar_traits<Wide> {
    static constexpr bool exact = false;
    static Wide from_int(long n) { return Wide(WideReal(n)); }
    static Wide from_big(const BigInt& n) { return Wide(wide_from_big(n)); }
    static Wide from_rational(const Rational& r) { return Wide(wide_from_rational(r)); }
    static bool is_zero(const Wide& z) { return magnitude(z) < kPoleEps; }
    static Complex to_complex(const Wide& z) { return narrow(z); }
    static Wide to_wide(const Wide& z) { return z; }
    static double magnitude(const Wide& z) { return static_cast<double>(abs(z)); }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <Scalar T>
T from_int(long n) { return scalar_traits<T>::from_int(n); }

template <Scalar T>
T from_big(const BigInt& n) { return scalar_traits<T>::from_big(n); }

template <Scalar T>
T from_rational(const Rational& r) { return scalar_traits<T>::from_rational(r); }

template <Scalar T>
bool is_zero(const T& x) { return scalar_traits<T>::is_zero(x); }

template <Scalar T>
Complex to_complex(const T& x) { return scalar_traits<T>::to_complex(x); }

template <Scalar T>
Wide to_wide(const T& x) { return scalar_traits<T>::to_wide(x); }

template <Scalar T>
double magnitude(const T& x) { return scalar_traits<T>::magnitude(x); }

/// base^n for any integer n; negative n inverts.
template <Scalar T>
T ipow(const T& base, long n) {
    if (n < 0) {
        if (is_zero(base)) throw PoleError("negative power of zero");
        return from_int<T>(1) / ipow(base, -n);
    }
    T result = from_int<T>(1);
    T b = base;
    while (n > 0) {
        if (n & 1) result = result * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return result;
}

/// Finite check on the float backends; exact types are always finite.
template <Scalar T>
void require_finite(const T& x, const char* what) {
    if constexpr (!is_exact_v<T>) {
        const Complex z = to_complex(x);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError(std::string(what) + ": non-finite result");
    }
}

/// Real positive base check used wherever a non-integer power appears.
template <Scalar T>
bool is_positive_real(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
        return sgn(x) > 0;
    } else if constexpr (std::is_same_v<T, Complex>) {
        return x.imag() == 0.0 && x.real() > 0.0;
    } else if constexpr (std::is_same_v<T, Wide>) {
        return x.imag() == 0 && x.real() > 0;
    } else {
        return false;
    }
}

} // namespace qlambda
