#pragma once

#include <cmath>
#include <variant>

#include "qfamilies.hpp"

namespace qlambda {

enum class ZetaKind { ClassicalLerch, QFirst, QSecond, QHurwitzEuler };

inline std::string_view to_string(ZetaKind k) {
    switch (k) {
    case ZetaKind::ClassicalLerch: return "lerch";
    case ZetaKind::QFirst: return "first";
    case ZetaKind::QSecond: return "second";
    case ZetaKind::QHurwitzEuler: return "hurwitz-euler";
    }
    return "unknown";
}

namespace detail {

inline bool is_integer_point(const Complex& s) { return s.imag() == 0.0 && is_integral(s.real()); }

// y^e for the q-zeta sums: integer exponents by repeated multiplication,
// otherwise the principal branch of a positive real base.
inline Wide bracket_power(const Wide& y, const Wide& e, bool integer_exponent) {
    if (integer_exponent) return ipow(y, static_cast<long>(static_cast<double>(e.real())));
    return exp(e * log(y));
}

struct QZetaSums {
    Wide with_shifted_exponent;  // sum_{m>=1} q^m lambda^m [m]^{1-s}
    Wide plain;                  // sum_{m>=1} q^m lambda^m [m]^{-s}
};

// Both absolutely convergent sums, truncated on a geometric tail bound.
inline QZetaSums qzeta_sums(const Complex& lambda, const Complex& s, const Complex& q, double prefactor_mag,
                            bool need_shifted, const SummationPolicy& policy) {
    const bool integer_s = is_integer_point(s);
    const double rq = std::abs(q);
    if (!(rq < 1.0) || rq == 0.0) throw DomainError("q-zeta: need 0 < |q| < 1");
    const bool real_q = q.imag() == 0.0 && q.real() > 0.0;
    if (!integer_s && !real_q) throw DomainError("q-zeta: complex s needs q real in (0,1)");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw DomainError("q-zeta: lambda must lie on the unit circle");

    const Wide wq = widen(q), wl = widen(lambda), ws = widen(s);
    const Wide e_shift = Wide(1) - ws;
    const Wide e_plain = -ws;

    // |[m]_q| lies in [lo, hi] for m >= 1
    const double hi = 1.0 / (1.0 - rq);
    const double lo = real_q ? 1.0 : (1.0 - rq) / (1.0 + rq);
    auto bound = [&](double re_e) { return std::max(std::pow(hi, re_e), std::pow(lo, re_e)); };
    const double c = (need_shifted ? prefactor_mag * bound(1.0 - s.real()) : 0.0) + bound(-s.real());

    QZetaSums out{Wide(0), Wide(0)};
    Wide weight = wq * wl;  // (q lambda)^m
    Wide bracket(1);        // [m]_q
    double tail = rq / (1.0 - rq) * c;
    for (std::size_t m = 1; m <= policy.max_terms; ++m) {
        if (need_shifted) out.with_shifted_exponent += weight * bracket_power(bracket, e_shift, integer_s);
        out.plain += weight * bracket_power(bracket, e_plain, integer_s);
        weight *= wq * wl;
        bracket = Wide(1) + wq * bracket;
        tail *= rq;
        if (tail < policy.tol) return out;
    }
    throw ConvergenceError("q-zeta: no convergence within " + std::to_string(policy.max_terms) + " terms");
}

} // namespace detail

/// Lerch transcendent sum_{n>=0} z^n / (n+a)^s on |z| < 1.
inline Complex classical_lerch(const Complex& z, const Complex& s, double a, const SummationPolicy& policy = {}) {
    if (!(std::abs(z) < 1.0)) throw OutOfScopeError("classical_lerch: only |z| < 1 is implemented");
    if (!(a > 0.0)) throw DomainError("classical_lerch: a must be positive");
    const double rz = std::abs(z);
    const double sigma = std::max(0.0, -s.real());
    const Wide wz = widen(z), ws = widen(s);
    Wide sum(0);
    Wide zn(1);
    for (std::size_t n = 0; n < policy.max_terms; ++n) {
        sum += zn * exp(-ws * log(Wide(WideReal(n) + WideReal(a))));
        zn *= wz;
        // tail from n+1: geometric once the ratio of term bounds drops below 1
        const double base = static_cast<double>(n + 1) + a;
        const double ratio = rz * std::pow((base + 1.0) / base, sigma);
        if (ratio < 1.0) {
            const double next = std::pow(rz, static_cast<double>(n + 1)) *
                                std::max(1.0, std::pow(base, -s.real()));
            if (next / (1.0 - ratio) < policy.tol) return narrow(sum);
        }
    }
    throw ConvergenceError("classical_lerch: no convergence within " + std::to_string(policy.max_terms) + " terms");
}

/// zeta_q(lambda, s) = (1-q) (2-s)/(s-1) sum_{m>=1} q^m lambda^m / [m]^{s-1}
///                     + sum_{m>=1} q^m lambda^m / [m]^s.
inline Complex zeta_q_first(const Complex& lambda, const Complex& s, const Complex& q,
                            const SummationPolicy& policy = {}) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta_q_first: pole at s = 1");
    const Wide ws = widen(s);
    const Wide prefactor = (Wide(1) - widen(q)) * (Wide(2) - ws) / (ws - Wide(1));
    const auto sums = detail::qzeta_sums(lambda, s, q, static_cast<double>(abs(prefactor)), true, policy);
    return narrow(prefactor * sums.with_shifted_exponent + sums.plain);
}

/// zeta*_q(lambda, s) = sum_{m>=1} q^m lambda^m / [m]^s.
inline Complex zeta_q_second(const Complex& lambda, const Complex& s, const Complex& q,
                             const SummationPolicy& policy = {}) {
    return narrow(detail::qzeta_sums(lambda, s, q, 0.0, false, policy).plain);
}

/// zeta_{q,E}(lambda, s, x) = [2]_q sum_{m>=0} (-1)^m lambda^m / [m+x]^s.
inline Complex zeta_q_hurwitz_euler(const Complex& lambda, const Complex& s, double q, double x,
                                    const SummationPolicy& policy = {}) {
    return (1.0 + q) * alt_power_sum_exponent(s, x, lambda, q, policy);
}

struct ZetaQuery {
    ZetaKind kind = ZetaKind::QSecond;
    Complex s{0.0, 0.0};
    Complex q{0.5, 0.0};   // unused for ClassicalLerch
    Complex lambda{1.0, 0.0};  // the Lerch argument z for ClassicalLerch
    double x = 0.0;        // shift; a for ClassicalLerch
    SummationPolicy policy{};
};

inline Complex evaluate(const ZetaQuery& z) {
    switch (z.kind) {
    case ZetaKind::ClassicalLerch: return classical_lerch(z.lambda, z.s, z.x, z.policy);
    case ZetaKind::QFirst: return zeta_q_first(z.lambda, z.s, z.q, z.policy);
    case ZetaKind::QSecond: return zeta_q_second(z.lambda, z.s, z.q, z.policy);
    case ZetaKind::QHurwitzEuler:
        if (z.q.imag() != 0.0) throw DomainError("hurwitz-euler zeta needs real q");
        return zeta_q_hurwitz_euler(z.lambda, z.s, z.q.real(), z.x, z.policy);
    }
    throw DomainError("unknown zeta kind");
}

enum class SpecialKind { First, Second, HurwitzEuler };

template <Scalar T>
struct SpecialValue {
    T closed_value;  // -beta_k/k, -B_k/k, or E_{k-1,q}(lambda, x)
    T series_value;   // what the defining series equals at s = 1-k
};

/// Closed-form value of the q-zeta functions at s = 1 - k.
///
/// The q-zeta series start at m = 1 while the beta/B series start at m = 0;
/// the m = 0 term [0]^{k-1} is nonzero only for k = 1, so there the series
/// equals the closed value minus 1. The second function pairs with the
/// B-family, whose series it reproduces term by term.
template <Scalar T>
SpecialValue<T> zeta_special_value(SpecialKind kind, unsigned k, const DeformParams<T>& p, double x = 0.0) {
    if (k == 0) throw DomainError("zeta_special_value: k must be positive");
    const T kk = from_int<T>(k);
    const T one = from_int<T>(1);
    switch (kind) {
    case SpecialKind::First: {
        const T v = -beta_q(k, p) / kk;
        return {v, k == 1 ? T(v - one) : v};
    }
    case SpecialKind::Second: {
        const T v = -big_b_q(k, p) / kk;
        return {v, k == 1 ? T(v - one) : v};
    }
    case SpecialKind::HurwitzEuler: {
        const T v = euler_q(k - 1, p, x);
        return {v, v};
    }
    }
    throw DomainError("unknown special value kind");
}

} // namespace qlambda
