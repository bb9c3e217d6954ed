#pragma once

#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "scalar.hpp"

namespace qlambda {

namespace detail {

using IntPoly = std::vector<BigInt>;   // low degree first
using RatPoly = std::vector<Rational>;  // low degree first

inline void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division of integer polynomials; b must be monic.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    IntPoly quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const BigInt c = a[i];
        if (sgn(c) == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return quot;
}

/// Phi_n with integer coefficients, low degree first.
inline IntPoly cyclotomic_polynomial(unsigned n) {
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    }
    trim(p);
    return p;
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {{}, a};
    RatPoly quot(a.size() - db, Rational(0));
    const Rational lead = b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (sgn(a[i]) == 0) continue;
        const Rational c = a[i] / lead;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    trim(quot);
    return {quot, a};
}

} // namespace detail

/// Element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// zeta_n reduced modulo Phi_n. Order 0 marks a plain rational that adopts
/// the field of whatever it is combined with.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(const Rational& r) {
        if (sgn(r) != 0) coeffs_.push_back(r);
    }

    /// zeta_order^exponent.
    static Cyclotomic zeta(unsigned order, long exponent) {
        if (order == 0) throw DomainError("cyclotomic order must be positive");
        long e = exponent % static_cast<long>(order);
        if (e < 0) e += order;
        Cyclotomic z;
        z.order_ = order;
        z.modulus_ = std::make_shared<const detail::IntPoly>(detail::cyclotomic_polynomial(order));
        z.coeffs_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
        z.coeffs_[static_cast<std::size_t>(e)] = 1;
        z.reduce();
        return z;
    }

    unsigned order() const { return order_; }
    const detail::RatPoly& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("cyclotomic element is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    Wide to_wide() const {
        if (coeffs_.empty()) return Wide(0);
        if (order_ == 0) return Wide(wide_from_rational(coeffs_[0]));
        const WideReal turn = 2 * boost::math::constants::pi<WideReal>() / order_;
        WideReal re = 0, im = 0;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const WideReal c = wide_from_rational(coeffs_[j]);
            re += c * cos(turn * j);
            im += c * sin(turn * j);
        }
        return Wide(re, im);
    }

    Complex to_complex() const { return narrow(to_wide()); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = unify(a, b);
        if (x.coeffs_.size() < y.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        detail::trim(x.coeffs_);
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = unify(a, b);
        x.coeffs_ = detail::mul(x.coeffs_, y.coeffs_);
        x.reduce();
        return x;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw PoleError("division by zero in cyclotomic field");
        Cyclotomic r = *this;
        if (order_ == 0 || is_rational()) {
            r.coeffs_ = {1 / coeffs_[0]};
            return r;
        }
        detail::RatPoly m = rat_modulus();
        detail::RatPoly r0 = m, r1 = coeffs_;
        detail::RatPoly s0, s1{Rational(1)};
        while (!r1.empty()) {
            auto [quot, rem] = detail::divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            detail::RatPoly next = detail::sub(s0, detail::mul(quot, s1));
            s0 = std::move(s1);
            s1 = std::move(next);
        }
        // Phi_n is irreducible, so the gcd r0 is a nonzero constant.
        const Rational g = r0[0];
        for (auto& c : s0) c /= g;
        r.coeffs_ = std::move(s0);
        r.reduce();
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = unify(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    /// Same value viewed inside Q(zeta_target); order_ must divide target.
    Cyclotomic lifted(unsigned target) const {
        if (order_ == target) return *this;
        if (order_ != 0 && target % order_ != 0)
            throw DomainError("cyclotomic lift to a field that does not contain it");
        Cyclotomic r;
        r.order_ = target;
        r.modulus_ = std::make_shared<const detail::IntPoly>(detail::cyclotomic_polynomial(target));
        const std::size_t stride = order_ == 0 ? 0 : target / order_;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const std::size_t pos = j * stride;
            if (r.coeffs_.size() <= pos) r.coeffs_.resize(pos + 1, Rational(0));
            r.coeffs_[pos] += coeffs_[j];
        }
        r.reduce();
        return r;
    }

private:
    unsigned order_ = 0;
    std::shared_ptr<const detail::IntPoly> modulus_;
    detail::RatPoly coeffs_;

    detail::RatPoly rat_modulus() const {
        detail::RatPoly m;
        for (const auto& c : *modulus_) m.emplace_back(c);
        return m;
    }

    void reduce() {
        detail::trim(coeffs_);
        if (order_ == 0) return;
        const auto& m = *modulus_;
        const std::size_t deg = m.size() - 1;
        for (std::size_t i = coeffs_.size(); i-- > deg;) {
            const Rational c = coeffs_[i];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j <= deg; ++j) coeffs_[i - deg + j] -= c * m[j];
        }
        if (coeffs_.size() > deg) coeffs_.resize(deg);
        detail::trim(coeffs_);
    }

    // A rational constant re-homed into the field of `field`, sharing its modulus.
    Cyclotomic constant_in(const Cyclotomic& field) const {
        Cyclotomic r = *this;
        r.order_ = field.order_;
        r.modulus_ = field.modulus_;
        return r;
    }

    static std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        if (a.order_ == 0) return {a.constant_in(b), b};
        if (b.order_ == 0) return {a, b.constant_in(a)};
        const unsigned l = std::lcm(a.order_, b.order_);
        return {a.lifted(l), b.lifted(l)};
    }
};

template <>
struct scalar_traits<Cyclotomic> {
    static constexpr bool exact = true;
    static Cyclotomic from_int(long n) { return Cyclotomic(n); }
    static Cyclotomic from_big(const BigInt& n) { return Cyclotomic(Rational(n)); }
    static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }
    static bool is_zero(const Cyclotomic& z) { return z.is_zero(); }
    static Complex to_complex(const Cyclotomic& z) { return z.to_complex(); }
    static Wide to_wide(const Cyclotomic& z) { return z.to_wide(); }
    static double magnitude(const Cyclotomic& z) { return std::abs(z.to_complex()); }
};

template <>
inline bool is_positive_real<Cyclotomic>(const Cyclotomic& x) {
    return x.is_rational() && sgn(x.rational_value()) > 0;
}

} // namespace qlambda
