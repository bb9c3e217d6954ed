#pragma once

#include <algorithm>
#include <string_view>

#include "qkernel.hpp"

namespace qlambda {

enum class QFamily { BetaQ, BigBQ, EulerQ, GenocchiQ, DCEulerQ };
enum class Mode { ClosedForm, Series };

inline std::string_view to_string(QFamily f) {
    switch (f) {
    case QFamily::BetaQ: return "beta";
    case QFamily::BigBQ: return "B";
    case QFamily::EulerQ: return "E";
    case QFamily::GenocchiQ: return "G";
    case QFamily::DCEulerQ: return "Edc";
    }
    return "unknown";
}

inline std::string_view to_string(Mode m) { return m == Mode::ClosedForm ? "closed" : "series"; }

template <Scalar T>
struct FamilyValue {
    QFamily family;
    unsigned n;
    DeformParams<T> params;
    double x;
    T value;
    Mode mode;
};

namespace detail {

template <Scalar T>
void require_not_pole(const T& denom, const char* what) {
    if (is_zero(denom)) throw PoleError(what);
}

template <Scalar T>
void require_q_not_one(const T& q) {
    if (is_zero(T(from_int<T>(1) - q))) throw PoleError("closed form needs q != 1");
}

// (1-q)^{1-k} sum_l C(k,l) (-1)^l (l+1) / (1 - lambda q^{l+1})
template <Scalar T>
T beta_closed(unsigned k, const T& q, const T& lambda) {
    require_q_not_one(q);
    const T one = from_int<T>(1);
    T sum = from_int<T>(0);
    T ql = q;  // q^{l+1}
    for (unsigned l = 0; l <= k; ++l) {
        const T denom = one - lambda * ql;
        require_not_pole(denom, "beta_q: 1 - lambda q^{l+1} = 0");
        T term = from_big<T>(binomial(k, l)) * from_int<T>(l + 1) / denom;
        sum = (l % 2 == 0) ? T(sum + term) : T(sum - term);
        ql = ql * q;
    }
    return sum * ipow(T(one - q), 1 - static_cast<long>(k));
}

// (1-q)^{1-n} sum_{l>=1} C(n,l) (-1)^l l / (1 - lambda q^l); the l = 0 term
// carries the factor l and is dropped.
template <Scalar T>
T big_b_closed(unsigned n, const T& q, const T& lambda) {
    if (n == 0) return from_int<T>(0);
    require_q_not_one(q);
    const T one = from_int<T>(1);
    T sum = from_int<T>(0);
    T ql = q;
    for (unsigned l = 1; l <= n; ++l) {
        const T denom = one - lambda * ql;
        require_not_pole(denom, "B_q: 1 - lambda q^l = 0");
        T term = from_big<T>(binomial(n, l)) * from_int<T>(l) / denom;
        sum = (l % 2 == 0) ? T(sum + term) : T(sum - term);
        ql = ql * q;
    }
    return sum * ipow(T(one - q), 1 - static_cast<long>(n));
}

// [2]_q (1-q)^{-n} sum_l C(n,l) (-1)^l q^{lx} / (1 + lambda q^{l + shift})
// shift 0: E_{n,q}(lambda, x); shift 1: the DC-type E*_{n,q}(lambda, x).
template <Scalar T>
T euler_closed(unsigned n, const T& q, const T& lambda, double x, unsigned shift) {
    require_q_not_one(q);
    const T one = from_int<T>(1);
    const T qx = q_power(q, x);
    T sum = from_int<T>(0);
    T ql = ipow(q, shift);
    T qlx = one;
    for (unsigned l = 0; l <= n; ++l) {
        const T denom = one + lambda * ql;
        require_not_pole(denom, shift == 0 ? "E_q: 1 + lambda q^l = 0" : "E*_q: 1 + lambda q^{l+1} = 0");
        T term = from_big<T>(binomial(n, l)) * qlx / denom;
        sum = (l % 2 == 0) ? T(sum + term) : T(sum - term);
        ql = ql * q;
        qlx = qlx * qx;
    }
    return (one + q) * sum * ipow(T(one - q), -static_cast<long>(n));
}

template <Scalar T>
void require_numbers_only(double x, const char* family) {
    if (x != 0.0) throw DomainError(std::string(family) + " is defined for numbers only (x = 0)");
}

} // namespace detail

/// beta_{k,q}(lambda). Closed form is the finite alternating sum; Series is
/// (1-q)(k+1) sum q^m lambda^m [m]^k - k sum q^m lambda^m [m]^{k-1}.
template <Scalar T>
T beta_q(unsigned k, const DeformParams<T>& p, Mode mode = Mode::ClosedForm, const SummationPolicy& policy = {}) {
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(beta_q(k, p.template as<Wide>(), mode, policy));
    } else {
        detail::require_archimedean_q(p.q, "beta_q");
        const T one = from_int<T>(1);
        T q_pow = p.q;
        for (unsigned l = 0; l <= k; ++l, q_pow = q_pow * p.q)
            detail::require_not_pole(T(one - p.lambda * q_pow), "beta_q: 1 - lambda q^{l+1} = 0");
        if (mode == Mode::ClosedForm) return detail::beta_closed(k, p.q, p.lambda);
        T value = (one - p.q) * from_int<T>(k + 1) * power_sum(k, 0.0, p.q, p.lambda, p.q, policy);
        if (k > 0) value = value - from_int<T>(k) * power_sum(k - 1, 0.0, p.q, p.lambda, p.q, policy);
        return value;
    }
}

/// B_{n,q}(lambda). Series is -n sum_{m>=0} q^m lambda^m [m]^{n-1}.
template <Scalar T>
T big_b_q(unsigned n, const DeformParams<T>& p, Mode mode = Mode::ClosedForm, const SummationPolicy& policy = {}) {
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(big_b_q(n, p.template as<Wide>(), mode, policy));
    } else {
        detail::require_archimedean_q(p.q, "big_b_q");
        const T one = from_int<T>(1);
        T q_pow = p.q;
        for (unsigned l = 1; l <= n; ++l, q_pow = q_pow * p.q)
            detail::require_not_pole(T(one - p.lambda * q_pow), "B_q: 1 - lambda q^l = 0");
        if (n == 0) return from_int<T>(0);
        if (mode == Mode::ClosedForm) return detail::big_b_closed(n, p.q, p.lambda);
        return -from_int<T>(n) * power_sum(n - 1, 0.0, p.q, p.lambda, p.q, policy);
    }
}

/// E_{n,q}(lambda, x); x = 0 gives the numbers. The series
/// [2]_q sum (-lambda)^m [m+x]^n is only Abel-convergent, so Series mode
/// always goes through the binomial resummation.
template <Scalar T>
T euler_q(unsigned n, const DeformParams<T>& p, double x = 0.0, Mode mode = Mode::ClosedForm,
          const SummationPolicy& policy = {}) {
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(euler_q(n, p.template as<Wide>(), x, mode, policy));
    } else {
        detail::require_archimedean_q(p.q, "euler_q");
        if (x < 0.0) throw DomainError("euler_q: x must be >= 0");
        const T one = from_int<T>(1);
        T q_pow = one;
        for (unsigned l = 0; l <= n; ++l, q_pow = q_pow * p.q)
            detail::require_not_pole(T(one + p.lambda * q_pow), "E_q: 1 + lambda q^l = 0");
        if (mode == Mode::ClosedForm) return detail::euler_closed(n, p.q, p.lambda, x, 0);
        return (one + p.q) *
               power_sum(n, x, T(-one), p.lambda, p.q, policy.with_mode(SummationMode::BinomialResummation));
    }
}

/// G_{n,q}(lambda, x) = n E_{n-1,q}(lambda, x), G_0 = 0.
template <Scalar T>
T genocchi_q(unsigned n, const DeformParams<T>& p, double x = 0.0, Mode mode = Mode::ClosedForm,
             const SummationPolicy& policy = {}) {
    if (n == 0) {
        // still validate the parameters the family needs
        detail::require_archimedean_q(p.q, "genocchi_q");
        detail::require_not_pole(T(from_int<T>(1) + p.lambda), "G_q: 1 + lambda = 0");
        return from_int<T>(0);
    }
    return from_int<T>(n) * euler_q(n - 1, p, x, mode, policy);
}

/// DC-type E*_{n,q}(lambda, x): the fermionic family without the q^{-x}
/// twist. Its series [2]_q sum (-1)^m lambda^m q^m [m+x]^n is absolutely
/// convergent and summed directly by default.
template <Scalar T>
T dc_euler_q(unsigned n, const DeformParams<T>& p, double x = 0.0, Mode mode = Mode::ClosedForm,
             const SummationPolicy& policy = {}) {
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(dc_euler_q(n, p.template as<Wide>(), x, mode, policy));
    } else {
        detail::require_archimedean_q(p.q, "dc_euler_q");
        if (x < 0.0) throw DomainError("dc_euler_q: x must be >= 0");
        const T one = from_int<T>(1);
        T q_pow = p.q;
        for (unsigned l = 0; l <= n; ++l, q_pow = q_pow * p.q)
            detail::require_not_pole(T(one + p.lambda * q_pow), "E*_q: 1 + lambda q^{l+1} = 0");
        if (mode == Mode::ClosedForm) return detail::euler_closed(n, p.q, p.lambda, x, 1);
        return (one + p.q) * power_sum(n, x, T(-p.q), p.lambda, p.q, policy);
    }
}

template <Scalar T>
T family_value(QFamily family, unsigned n, const DeformParams<T>& p, double x = 0.0,
               Mode mode = Mode::ClosedForm, const SummationPolicy& policy = {}) {
    switch (family) {
    case QFamily::BetaQ:
        detail::require_numbers_only<T>(x, "beta_q");
        return beta_q(n, p, mode, policy);
    case QFamily::BigBQ:
        detail::require_numbers_only<T>(x, "big_b_q");
        return big_b_q(n, p, mode, policy);
    case QFamily::EulerQ: return euler_q(n, p, x, mode, policy);
    case QFamily::GenocchiQ: return genocchi_q(n, p, x, mode, policy);
    case QFamily::DCEulerQ: return dc_euler_q(n, p, x, mode, policy);
    }
    throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Identity residuals. Float inputs are promoted to quad before the identity
// is formed so the residual measures the identity, not double rounding.

/// max of |lambda E(x+1) + E(x) - [2]_q [x]^n| and the Genocchi analogue
/// |lambda G(x+1) + G(x) - [2]_q n [x]^{n-1}|.
template <Scalar T>
double check_boundary(unsigned n, const DeformParams<T>& p, double x) {
    if constexpr (std::is_same_v<T, Complex>) {
        return check_boundary(n, p.template as<Wide>(), x);
    } else {
        const T two = q_bracket(2.0, p.q);
        const T bx = q_bracket(x, p.q);
        const T e_res = p.lambda * euler_q(n, p, x + 1) + euler_q(n, p, x) - two * ipow(bx, n);
        const T g_rhs = n == 0 ? from_int<T>(0) : T(two * from_int<T>(n) * ipow(bx, n - 1));
        const T g_res = p.lambda * genocchi_q(n, p, x + 1) + genocchi_q(n, p, x) - g_rhs;
        return std::max(magnitude(e_res), magnitude(g_res));
    }
}

/// |E_{n,q}(lambda,x) - [2]_q/[2]_{q^d} [d]_q^n sum_a (-lambda)^a E_{n,q^d}(lambda^d,(x+a)/d)|
/// for odd d.
template <Scalar T>
double check_distribution(unsigned n, const DeformParams<T>& p, double x, unsigned d) {
    if (d == 0 || d % 2 == 0) throw DomainError("check_distribution: d must be odd");
    if constexpr (std::is_same_v<T, Complex>) {
        return check_distribution(n, p.template as<Wide>(), x, d);
    } else {
        DeformParams<T> pd(ipow(p.q, d), ipow(p.lambda, d));
        if (p.root) pd = DeformParams<T>(ipow(p.q, d), p.root->pow(d));
        T sum = from_int<T>(0);
        T sign_pow = from_int<T>(1);  // (-lambda)^a
        for (unsigned a = 0; a < d; ++a) {
            sum = sum + sign_pow * euler_q(n, pd, (x + a) / d);
            sign_pow = sign_pow * (-p.lambda);
        }
        const T rhs = q_bracket(2.0, p.q) / q_bracket(2.0, pd.q) * ipow(q_bracket(static_cast<double>(d), p.q), n) * sum;
        return magnitude(T(euler_q(n, p, x) - rhs));
    }
}

/// |E_{n,q}(lambda,x) - sum_l C(n,l) [x]^{n-l} q^{lx} E_{l,q}(lambda)|; the
/// right side uses the numbers E_{l,q}(lambda), which is what expanding
/// [m+x] = [x] + q^x [m] produces.
template <Scalar T>
double check_addition(unsigned n, const DeformParams<T>& p, double x) {
    if constexpr (std::is_same_v<T, Complex>) {
        return check_addition(n, p.template as<Wide>(), x);
    } else {
        const T bx = q_bracket(x, p.q);
        const T qx = q_power(p.q, x);
        T rhs = from_int<T>(0);
        for (unsigned l = 0; l <= n; ++l)
            rhs = rhs + from_big<T>(binomial(n, l)) * ipow(bx, n - l) * ipow(qx, l) * euler_q(l, p);
        return magnitude(T(euler_q(n, p, x) - rhs));
    }
}

template <Scalar T>
struct AlternatingSumResult {
    T lhs;
    T rhs;
    double residual;
};

/// lambda^n E_{m,q}(lambda, n) + E_{m,q}(lambda) = [2]_q sum_{l<n} (-1)^l lambda^l [l]^m
/// for odd n. With corrected = false the lambda^n factor is dropped, which
/// only holds at lambda = 1.
template <Scalar T>
AlternatingSumResult<T> check_alternating_sum(unsigned m, unsigned n, const DeformParams<T>& p,
                                              bool corrected = true) {
    if (n % 2 == 0) throw DomainError("check_alternating_sum: n must be odd");
    if constexpr (std::is_same_v<T, Complex>) {
        const auto w = check_alternating_sum(m, n, p.template as<Wide>(), corrected);
        return {narrow(w.lhs), narrow(w.rhs), w.residual};
    } else {
        const T lam_n = corrected ? ipow(p.lambda, n) : from_int<T>(1);
        const T lhs = lam_n * euler_q(m, p, static_cast<double>(n)) + euler_q(m, p);
        T sum = from_int<T>(0);
        T sign_pow = from_int<T>(1);
        for (unsigned l = 0; l < n; ++l) {
            sum = sum + sign_pow * ipow(q_bracket(static_cast<double>(l), p.q), m);
            sign_pow = sign_pow * (-p.lambda);
        }
        const T rhs = q_bracket(2.0, p.q) * sum;
        return {lhs, rhs, magnitude(T(lhs - rhs))};
    }
}

/// d/dx E_{n,q}(lambda, x) = n log q E_{n,q}(lambda,x) + (log q/(q-1)) n E_{n-1,q}(lambda,x).
template <Scalar T>
T d_dx_euler_q(unsigned n, const DeformParams<T>& p, double x) {
    static_assert(!is_exact_v<T>, "d_dx_euler_q needs a float backend");
    if (n == 0) throw DomainError("d_dx_euler_q: n must be positive");
    if constexpr (std::is_same_v<T, Complex>) {
        return narrow(d_dx_euler_q(n, p.template as<Wide>(), x));
    } else {
        if (!is_positive_real(p.q) || !(magnitude(p.q) < 1.0))
            throw DomainError("d_dx_euler_q: q must be real in (0,1)");
        if (magnitude(T(p.q - from_int<T>(1))) < 1e-6) throw DomainError("d_dx_euler_q: q too close to 1");
        const T lq = log(p.q);
        const T nn = from_int<T>(n);
        return nn * lq * euler_q(n, p, x) + lq / (p.q - from_int<T>(1)) * nn * euler_q(n - 1, p, x);
    }
}

} // namespace qlambda
