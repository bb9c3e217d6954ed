#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qkernel.hpp"

namespace qlambda::classical {

enum class Family {
    Bernoulli,
    Euler,
    Genocchi,
    FrobeniusEuler,
    LambdaBernoulli,
    LambdaEuler,
    LambdaGenocchi,
};

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::Bernoulli: return "bernoulli";
    case Family::Euler: return "euler";
    case Family::Genocchi: return "genocchi";
    case Family::FrobeniusEuler: return "frobenius-euler";
    case Family::LambdaBernoulli: return "lambda-bernoulli";
    case Family::LambdaEuler: return "lambda-euler";
    case Family::LambdaGenocchi: return "lambda-genocchi";
    }
    return "unknown";
}

// Tables grow factorially; nothing downstream needs more than this.
inline constexpr unsigned kDefaultMaxIndex = 64;

template <Scalar T>
struct SequenceTable {
    Family family;
    std::optional<T> parameter;
    std::vector<T> values;

    const T& operator[](std::size_t n) const { return values.at(n); }
    std::size_t size() const { return values.size(); }

    std::vector<Complex> embedded() const {
        std::vector<Complex> out;
        out.reserve(values.size());
        for (const auto& v : values) out.push_back(to_complex(v));
        return out;
    }
};

namespace detail {

inline void check_index(unsigned n, unsigned limit) {
    if (n > limit)
        throw DomainError("table index " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
}

template <Scalar T>
void require_exact() {
    static_assert(is_exact_v<T>, "classical sequences are computed in exact arithmetic only");
}

} // namespace detail

/// B_0..B_N from sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline SequenceTable<Rational> bernoulli_numbers(unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::check_index(N, limit);
    std::vector<Rational> b(N + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
        b[n] = -acc / (n + 1);
    }
    return {Family::Bernoulli, std::nullopt, std::move(b)};
}

/// Classical Euler numbers E_n = E_n(0) of 2e^{xt}/(e^t+1), through
/// E_n(0) = -2 (2^{n+1} - 1) B_{n+1} / (n+1).
inline SequenceTable<Rational> euler_numbers(unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::check_index(N, limit);
    const auto b = bernoulli_numbers(N + 1, limit + 1);
    std::vector<Rational> e(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        BigInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n + 1);
        e[n] = Rational(-2 * (two_pow - 1)) * b[n + 1] / (n + 1);
    }
    return {Family::Euler, std::nullopt, std::move(e)};
}

/// G_n = 2 (1 - 2^n) B_n.
inline SequenceTable<Rational> genocchi_numbers(unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::check_index(N, limit);
    const auto b = bernoulli_numbers(N, limit);
    std::vector<Rational> g(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        BigInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
        g[n] = Rational(2 * (1 - two_pow)) * b[n];
    }
    if (sgn(g[0]) != 0 || (N >= 1 && g[1] != 1)) throw std::logic_error("genocchi: G_0 = 0, G_1 = 1 violated");
    for (unsigned n = 3; n <= N; n += 2)
        if (sgn(g[n]) != 0) throw std::logic_error("genocchi: odd index beyond 1 is nonzero");
    return {Family::Genocchi, std::nullopt, std::move(g)};
}

/// Frobenius-Euler numbers H_n(u): H_0 = 1 and
/// sum_{k=0}^{n} C(n,k) H_k = u H_n for n >= 1.
template <Scalar T>
SequenceTable<T> frobenius_euler(const T& u, unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::require_exact<T>();
    detail::check_index(N, limit);
    const T one = from_int<T>(1);
    if (u == one) throw PoleError("frobenius_euler: u = 1");
    const T denom_inv = one / (u - one);
    std::vector<T> h(N + 1, from_int<T>(0));
    h[0] = one;
    for (unsigned n = 1; n <= N; ++n) {
        T acc = from_int<T>(0);
        for (unsigned k = 0; k < n; ++k) acc = acc + from_big<T>(binomial(n, k)) * h[k];
        h[n] = acc * denom_inv;
    }
    return {Family::FrobeniusEuler, u, std::move(h)};
}

/// H_n(u, x) = sum_k C(n,k) H_k(u) x^{n-k}.
template <Scalar T>
T frobenius_euler_polynomial(const SequenceTable<T>& h, unsigned n, const T& x) {
    if (n >= h.size()) throw DomainError("frobenius_euler_polynomial: index beyond table");
    T acc = from_int<T>(0);
    for (unsigned k = 0; k <= n; ++k) acc = acc + from_big<T>(binomial(n, k)) * h[k] * ipow(x, n - k);
    return acc;
}

/// lambda-Bernoulli numbers of t/(lambda e^t - 1) from
/// lambda sum_i C(k,i) B_i(lambda) - B_k(lambda) = [k = 1].
template <Scalar T>
SequenceTable<T> lambda_bernoulli(const T& lambda, unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::require_exact<T>();
    detail::check_index(N, limit);
    const T one = from_int<T>(1);
    if (lambda == one) throw PoleError("lambda_bernoulli: lambda = 1");
    const T denom_inv = one / (lambda - one);
    std::vector<T> b(N + 1, from_int<T>(0));
    for (unsigned k = 1; k <= N; ++k) {
        T acc = from_int<T>(0);
        for (unsigned i = 0; i < k; ++i) acc = acc + from_big<T>(binomial(k, i)) * b[i];
        const T rhs = k == 1 ? one : from_int<T>(0);
        b[k] = (rhs - lambda * acc) * denom_inv;
    }
    return {Family::LambdaBernoulli, lambda, std::move(b)};
}

/// E_n(lambda) by lambda sum_i C(n,i) E_i + E_n = 2 [n = 0], which is the
/// generating function 2/(lambda e^t + 1) multiplied through.
template <Scalar T>
SequenceTable<T> lambda_euler_recurrence(const T& lambda, unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::require_exact<T>();
    detail::check_index(N, limit);
    const T one = from_int<T>(1);
    if (lambda == -one) throw PoleError("lambda_euler: lambda = -1");
    const T denom_inv = one / (lambda + one);
    std::vector<T> e(N + 1, from_int<T>(0));
    for (unsigned n = 0; n <= N; ++n) {
        T acc = from_int<T>(0);
        for (unsigned i = 0; i < n; ++i) acc = acc + from_big<T>(binomial(n, i)) * e[i];
        const T rhs = n == 0 ? from_int<T>(2) : from_int<T>(0);
        e[n] = (rhs - lambda * acc) * denom_inv;
    }
    return {Family::LambdaEuler, lambda, std::move(e)};
}

/// E_n(lambda) = 2/(lambda+1) H_n(-1/lambda).
template <Scalar T>
SequenceTable<T> lambda_euler_bridge(const T& lambda, unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::require_exact<T>();
    const T one = from_int<T>(1);
    if (is_zero(lambda)) throw PoleError("lambda_euler: lambda = 0");
    if (lambda == -one) throw PoleError("lambda_euler: lambda = -1");
    const auto h = frobenius_euler(T(-(one / lambda)), N, limit);
    const T scale = from_int<T>(2) / (lambda + one);
    std::vector<T> e;
    e.reserve(N + 1);
    for (const auto& v : h.values) e.push_back(scale * v);
    return {Family::LambdaEuler, lambda, std::move(e)};
}

/// E_n(lambda), computed along both routes; they must agree exactly.
template <Scalar T>
SequenceTable<T> lambda_euler(const T& lambda, unsigned N, unsigned limit = kDefaultMaxIndex) {
    auto rec = lambda_euler_recurrence(lambda, N, limit);
    const auto bridge = lambda_euler_bridge(lambda, N, limit);
    for (unsigned n = 0; n <= N; ++n)
        if (!(rec[n] == bridge[n])) throw std::logic_error("lambda_euler: recurrence and bridge disagree");
    return rec;
}

/// G_0(lambda) = 0, G_{n+1}(lambda) = (n+1) E_n(lambda).
template <Scalar T>
SequenceTable<T> lambda_genocchi(const T& lambda, unsigned N, unsigned limit = kDefaultMaxIndex) {
    detail::check_index(N, limit);
    std::vector<T> g(N + 1, from_int<T>(0));
    if (N >= 1) {
        const auto e = lambda_euler_recurrence(lambda, N - 1, limit);
        for (unsigned n = 1; n <= N; ++n) g[n] = from_int<T>(n) * e[n - 1];
    } else if (lambda == -from_int<T>(1)) {
        throw PoleError("lambda_genocchi: lambda = -1");
    }
    return {Family::LambdaGenocchi, lambda, std::move(g)};
}

} // namespace qlambda::classical
