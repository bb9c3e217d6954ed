#pragma once

#include <numeric>
#include <optional>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "cyclotomic.hpp"

namespace qlambda {

/// lambda = exp(2 pi i a / f), kept as the integer pair so that products and
/// powers stay exact until a numeric value is requested.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long order, long exponent) : f_(order), a_(exponent) {
        if (order <= 0) throw DomainError("root of unity order must be positive");
        a_ %= f_;
        if (a_ < 0) a_ += f_;
    }

    long order() const { return f_; }
    long exponent() const { return a_; }

    /// Order of the element itself, f / gcd(f, a).
    long primitive_order() const { return f_ / std::gcd(f_, a_ == 0 ? f_ : a_); }

    RootOfUnity pow(long n) const {
        // (a * n) mod f without overflow for the orders we admit
        const __int128 e = static_cast<__int128>(a_) * n % f_;
        return RootOfUnity(f_, static_cast<long>(e));
    }

    RootOfUnity inverse() const { return RootOfUnity(f_, -a_); }

    friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
        const long l = std::lcm(x.f_, y.f_);
        return RootOfUnity(l, x.a_ * (l / x.f_) + y.a_ * (l / y.f_));
    }

    /// Equality of the underlying complex numbers, not of the (f, a) pairs.
    friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
        const long l = std::lcm(x.f_, y.f_);
        return x.a_ * (l / x.f_) % l == y.a_ * (l / y.f_) % l;
    }

    bool is_one() const { return a_ == 0; }
    bool is_minus_one() const { return 2 * a_ == f_; }

    Wide to_wide() const {
        if (a_ == 0) return Wide(1);
        // quarter turns are exact
        if ((4 * a_) % f_ == 0) {
            switch ((4 * a_) / f_) {
            case 1: return Wide(0, 1);
            case 2: return Wide(-1);
            case 3: return Wide(0, -1);
            }
        }
        const WideReal angle = 2 * boost::math::constants::pi<WideReal>() * a_ / f_;
        return Wide(cos(angle), sin(angle));
    }

    Complex to_complex() const { return narrow(to_wide()); }

    Cyclotomic to_cyclotomic() const {
        if (a_ == 0) return Cyclotomic(1);
        if (is_minus_one()) return Cyclotomic(-1);
        return Cyclotomic::zeta(static_cast<unsigned>(f_), a_);
    }

    /// Exact embedding into the requested backend; Rational only admits +-1.
    template <Scalar T>
    T embed() const {
        if constexpr (std::is_same_v<T, Rational>) {
            if (is_one()) return Rational(1);
            if (is_minus_one()) return Rational(-1);
            throw DomainError("root of unity " + to_string() + " is not rational");
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
            return to_cyclotomic();
        } else if constexpr (std::is_same_v<T, Wide>) {
            return to_wide();
        } else {
            return to_complex();
        }
    }

    std::string to_string() const { return "rou:" + std::to_string(f_) + "/" + std::to_string(a_); }

private:
    long f_ = 1;
    long a_ = 0;
};

/// The deformation pair (q, lambda) in one backend. When lambda came from a
/// RootOfUnity the exact pair is kept alongside for reporting.
template <Scalar T>
struct DeformParams {
    T q;
    T lambda;
    std::optional<RootOfUnity> root;

    DeformParams() = default;
    DeformParams(T q_, T lambda_) : q(std::move(q_)), lambda(std::move(lambda_)) {}
    DeformParams(T q_, const RootOfUnity& r) : q(std::move(q_)), lambda(r.embed<T>()), root(r) {}

    /// The same parameters carried into another backend.
    template <Scalar U>
    DeformParams<U> as() const {
        DeformParams<U> out;
        if constexpr (std::is_same_v<U, Wide>) {
            out.q = to_wide(q);
            out.lambda = root ? root->to_wide() : to_wide(lambda);
        } else if constexpr (std::is_same_v<U, Complex>) {
            out.q = to_complex(q);
            out.lambda = root ? root->to_complex() : to_complex(lambda);
        } else if constexpr (std::is_same_v<U, T>) {
            return *this;
        } else if constexpr (std::is_same_v<U, Cyclotomic> && std::is_same_v<T, Rational>) {
            out.q = Cyclotomic(q);
            out.lambda = root ? root->to_cyclotomic() : Cyclotomic(lambda);
        } else {
            static_assert(!is_exact_v<U>, "exact backends are not converted implicitly");
        }
        out.root = root;
        return out;
    }
};

} // namespace qlambda
