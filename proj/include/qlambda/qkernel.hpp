#pragma once

#include <cstddef>
#include <string>

#include "root_of_unity.hpp"

namespace qlambda {

enum class SummationMode { Direct, BinomialResummation };

struct SummationPolicy {
    double tol = 1e-14;
    std::size_t max_terms = 1'000'000;
    SummationMode mode = SummationMode::Direct;

    SummationPolicy with_mode(SummationMode m) const {
        SummationPolicy p = *this;
        p.mode = m;
        return p;
    }
};

// Below this |1 - q| the integer q-bracket switches to the explicit sum.
inline constexpr double kBracketSwitch = 1e-6;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// q^x. Integer x works for every backend; otherwise q must be a positive
/// real float and the principal power is taken.
template <Scalar T>
T q_power(const T& q, double x) {
    if (is_integral(x)) return ipow(q, static_cast<long>(x));
    if constexpr (is_exact_v<T>) {
        throw DomainError("non-integer exponent " + std::to_string(x) + " needs a float backend");
    } else {
        if (!is_positive_real(q)) throw DomainError("non-integer power of a base that is not a positive real");
        if constexpr (std::is_same_v<T, Wide>) {
            return Wide(pow(q.real(), WideReal(x)));
        } else {
            return T(std::pow(q.real(), x));
        }
    }
}

/// [x]_q = (1 - q^x)/(1 - q), with [x]_1 = x.
template <Scalar T>
T q_bracket(double x, const T& q) {
    const T one = from_int<T>(1);
    const bool q_is_one = is_exact_v<T> ? q == one : magnitude(T(q - one)) == 0.0;
    if (q_is_one) {
        if (!is_integral(x) && is_exact_v<T>) throw DomainError("non-integer bracket argument");
        if constexpr (is_exact_v<T>) return from_int<T>(static_cast<long>(x));
        else return T(x);
    }
    if (is_integral(x) && (is_exact_v<T> || magnitude(T(one - q)) < kBracketSwitch)) {
        const long n = static_cast<long>(x);
        if (n < 0) {
            // [-n]_q = -q^{-n} [n]_q
            return -ipow(q, n) * q_bracket(static_cast<double>(-n), q);
        }
        T sum = from_int<T>(0);
        T power = one;
        for (long i = 0; i < n; ++i) {
            sum = sum + power;
            power = power * q;
        }
        return sum;
    }
    return (one - q_power(q, x)) / (one - q);
}

/// [n]_{-q} = (1 - (-q)^n)/(1 + q) for integer n >= 0.
template <Scalar T>
T q_bracket_alt(long n, const T& q) {
    if (n < 0) throw DomainError("[n]_{-q} needs n >= 0");
    const T one = from_int<T>(1);
    const T denom = one + q;
    if (is_zero(denom)) throw PoleError("[n]_{-q} at q = -1");
    return (one - ipow(T(-q), n)) / denom;
}

namespace detail {

template <Scalar T>
void require_archimedean_q(const T& q, const char* where) {
    const double m = magnitude(q);
    if (!(m < 1.0) || is_zero(q)) throw DomainError(std::string(where) + ": need 0 < |q| < 1");
}

// sum_m z^m [m+x]_q^k for |z| < 1 by plain truncation, accumulated in quad.
inline Wide power_sum_direct(unsigned k, double x, const Wide& z, const Wide& q,
                             const SummationPolicy& policy) {
    const double rz = static_cast<double>(abs(z));
    const double rq = static_cast<double>(abs(q));
    // [m+x]_q <= 1/(1-|q|) for integer m+x, and for real q in (0,1)
    const double bracket_bound = std::pow(1.0 / (1.0 - rq), static_cast<double>(k));
    Wide sum(0);
    Wide zm(1);
    Wide bracket = q_bracket(x, q);
    double tail_factor = bracket_bound / (1.0 - rz);
    for (std::size_t m = 0; m < policy.max_terms; ++m) {
        sum += zm * ipow(bracket, static_cast<long>(k));
        zm *= z;
        bracket = Wide(1) + q * bracket;
        tail_factor *= rz;
        if (tail_factor < policy.tol) return sum;
    }
    throw ConvergenceError("power_sum: no convergence within " + std::to_string(policy.max_terms) + " terms");
}

} // namespace detail

/// S = sum_{m>=0} (a lambda)^m [m+x]_q^k.
///
/// Direct mode truncates the series once the geometric tail bound
/// |a lambda|^{m+1}/(1-|a lambda|) (1-|q|)^{-k} drops below tol; it needs
/// |a lambda| < 1. BinomialResummation expands the bracket power and sums
/// each geometric series in closed form:
///   S = (1-q)^{-k} sum_j C(k,j) (-q^x)^j / (1 - a lambda q^j),
/// which stays valid on |a lambda| = 1 (a lambda != 1) where the series
/// converges only in the Abel sense.
template <Scalar T>
T power_sum(unsigned k, double x, const T& a, const T& lambda, const T& q,
            const SummationPolicy& policy = {}) {
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(power_sum<Wide>(k, x, widen(a), widen(lambda), widen(q), policy));
    } else {
        detail::require_archimedean_q(q, "power_sum");
        const T one = from_int<T>(1);
        const T z = a * lambda;
        const double rz = magnitude(z);
        if (is_exact_v<T> ? z == one : magnitude(T(z - one)) < kPoleEps)
            throw DivergenceError("power_sum: a*lambda = 1");
        if (rz > 1.0 + 1e-12) throw DivergenceError("power_sum: |a*lambda| > 1");
        const bool on_circle = std::abs(rz - 1.0) <= 1e-12;

        if (policy.mode == SummationMode::Direct) {
            if (on_circle) throw PolicyError("power_sum: Direct mode needs |a*lambda| < 1");
            if constexpr (is_exact_v<T>) {
                throw PolicyError("power_sum: Direct mode needs a float backend");
            } else {
                return detail::power_sum_direct(k, x, z, q, policy);
            }
        }

        const T qx = q_power(q, x);
        T sum = from_int<T>(0);
        T qj = one;     // q^j
        T mqxj = one;   // (-q^x)^j
        for (unsigned j = 0; j <= k; ++j) {
            const T denom = one - z * qj;
            if (is_zero(denom)) throw PoleError("power_sum: 1 - a*lambda*q^j = 0");
            sum = sum + from_big<T>(binomial(k, j)) * mqxj / denom;
            qj = qj * q;
            mqxj = mqxj * (-qx);
        }
        T result = sum / ipow(T(one - q), static_cast<long>(k));
        require_finite(result, "power_sum");
        return result;
    }
}

/// sum_{m>=0} (-lambda)^m [m+x]_q^{-s} for complex s, evaluated through the
/// absolutely convergent expansion
///   (1-q)^s sum_j C(-s,j) (-1)^j q^{jx} / (1 + lambda q^j).
/// q must be real in (0,1). x = 0 is admitted only for s a non-positive
/// integer, where the m = 0 term is [0]^{-s}.
inline Complex alt_power_sum_exponent(const Complex& s, double x, const Complex& lambda, double q,
                                      const SummationPolicy& policy = {}) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("alt_power_sum_exponent: q must be real in (0,1)");
    if (x < 0.0) throw DomainError("alt_power_sum_exponent: x must be >= 0");
    const bool nonpositive_integer_s = s.imag() == 0.0 && is_integral(s.real()) && s.real() <= 0.0;
    if (x == 0.0 && !nonpositive_integer_s)
        throw DomainError("alt_power_sum_exponent: x = 0 needs s a non-positive integer");
    if (std::abs(lambda + 1.0) < kPoleEps) throw PoleError("alt_power_sum_exponent: lambda = -1");

    const Wide ws = widen(s);
    const Wide wl = widen(lambda);
    const WideReal wq(q);
    const Wide prefactor = exp(ws * log(Wide(1 - wq)));
    const WideReal qx = pow(wq, WideReal(x));

    Wide sum(0);
    Wide coeff(1);  // C(-s, j), running product
    WideReal qj = 1;
    WideReal qxj = 1;
    int quiet = 0;
    for (std::size_t j = 0; j < policy.max_terms; ++j) {
        const Wide denom = Wide(1) + wl * qj;
        if (static_cast<double>(abs(denom)) < kPoleEps) throw PoleError("alt_power_sum_exponent: 1 + lambda q^j = 0");
        Wide term = coeff * qxj / denom;
        if (j % 2 == 1) term = -term;
        sum += term;
        if (static_cast<double>(abs(term * prefactor)) < policy.tol) {
            if (++quiet == 3) return narrow(prefactor * sum);
        } else {
            quiet = 0;
        }
        coeff = coeff * (-ws - WideReal(j)) / WideReal(j + 1);
        qj *= wq;
        qxj *= qx;
    }
    throw ConvergenceError("alt_power_sum_exponent: no convergence within " +
                           std::to_string(policy.max_terms) + " terms");
}

} // namespace qlambda
