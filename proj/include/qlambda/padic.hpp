#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qfamilies.hpp"

namespace qlambda::padic {

namespace detail {

inline BigInt pow_p(unsigned long p, long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(std::max(0L, e)));
    return r;
}

inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// v_p(n) for n != 0, and strips the factor in place.
inline long strip(BigInt& n, unsigned long p) {
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

inline void require_odd_prime(unsigned long p) {
    const BigInt pp(p);
    if (p < 3 || mpz_probab_prime_p(pp.get_mpz_t(), 30) == 0)
        throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

} // namespace detail

/// x = p^val * unit + O(p^{val + precision}) with unit a residue mod
/// p^precision coprime to p. Zero is kept as O(p^val) (precision 0).
///
/// Every operation returns a precision no larger than its operands justify:
/// products keep the smaller relative precision, sums keep the smaller
/// absolute precision and lose whatever cancels.
class PAdicNumber {
public:
    /// O(p^absolute_precision).
    static PAdicNumber zero(unsigned long p, long absolute_precision) {
        detail::require_odd_prime(p);
        PAdicNumber z;
        z.p_ = p;
        z.val_ = absolute_precision;
        z.prec_ = 0;
        z.zero_ = true;
        return z;
    }

    /// Integer r known modulo p^absolute_precision.
    static PAdicNumber from_residue(unsigned long p, const BigInt& r, long absolute_precision) {
        detail::require_odd_prime(p);
        const BigInt m = detail::pow_p(p, absolute_precision);
        BigInt s = detail::mod(r, m);
        if (absolute_precision <= 0 || sgn(s) == 0) return zero(p, absolute_precision);
        const long e = detail::strip(s, p);
        return make(p, e, s, absolute_precision - e);
    }

    /// Exact rational with `precision` digits of unit kept.
    static PAdicNumber from_rational(unsigned long p, const Rational& r, long precision) {
        detail::require_odd_prime(p);
        if (precision <= 0) throw PrecisionError("from_rational: precision must be positive");
        if (sgn(r) == 0) return zero(p, precision);
        BigInt num = r.get_num(), den = r.get_den();
        const long v = detail::strip(num, p) - detail::strip(den, p);
        const BigInt m = detail::pow_p(p, precision);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        return make(p, v, num * inv, precision);
    }

    static PAdicNumber from_integer(unsigned long p, long n, long precision) {
        return from_rational(p, Rational(n), precision);
    }

    unsigned long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    /// v_p(x); for a zero this is the absolute precision it is known to.
    long valuation() const { return val_; }
    /// Relative precision (digits of the unit that are known).
    long precision() const { return prec_; }
    long absolute_precision() const { return val_ + prec_; }
    const BigInt& unit() const { return unit_; }

    /// |x|_p = p^{-val}; 0 for a zero.
    double norm() const { return zero_ ? 0.0 : std::pow(static_cast<double>(p_), -static_cast<double>(val_)); }

    /// The same number cut to at most `precision` relative digits.
    PAdicNumber truncated(long precision) const {
        if (zero_ || precision >= prec_) return *this;
        if (precision <= 0) return zero(p_, val_ + std::max(0L, precision));
        return make(p_, val_, unit_, precision);
    }

    PAdicNumber truncated_absolute(long absolute_precision) const {
        if (zero_) return zero(p_, std::min(val_, absolute_precision));
        if (absolute_precision <= val_) return zero(p_, absolute_precision);
        return truncated(absolute_precision - val_);
    }

    PAdicNumber operator-() const {
        if (zero_) return *this;
        return make(p_, val_, detail::pow_p(p_, prec_) - unit_, prec_);
    }

    friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
        check_same_prime(a, b);
        const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
        if (a.zero_) return b.truncated_absolute(abs_prec);
        if (b.zero_) return a.truncated_absolute(abs_prec);
        const long vmin = std::min(a.val_, b.val_);
        if (abs_prec <= vmin) return zero(a.p_, abs_prec);
        const BigInt m = detail::pow_p(a.p_, abs_prec - vmin);
        BigInt s = detail::mod(a.unit_ * detail::pow_p(a.p_, a.val_ - vmin) +
                                   b.unit_ * detail::pow_p(b.p_, b.val_ - vmin), m);
        if (sgn(s) == 0) return zero(a.p_, abs_prec);
        const long e = detail::strip(s, a.p_);
        return make(a.p_, vmin + e, s, abs_prec - vmin - e);
    }

    friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return a + (-b); }

    friend PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
        check_same_prime(a, b);
        if (a.zero_ && b.zero_) return zero(a.p_, a.val_ + b.val_);
        if (a.zero_) return zero(a.p_, a.val_ + b.val_);
        if (b.zero_) return zero(a.p_, a.val_ + b.val_);
        const long prec = std::min(a.prec_, b.prec_);
        return make(a.p_, a.val_ + b.val_, a.unit_ * b.unit_, prec);
    }

    PAdicNumber inverse() const {
        if (zero_) throw PoleError("p-adic division by a number indistinguishable from zero");
        const BigInt m = detail::pow_p(p_, prec_);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
        return make(p_, -val_, inv, prec_);
    }

    friend PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) { return a * b.inverse(); }

    PAdicNumber pow(unsigned long n) const {
        PAdicNumber result = from_integer(p_, 1, std::max(prec_, 1L));
        if (zero_) return n == 0 ? result : zero(p_, val_ * static_cast<long>(n));
        PAdicNumber base = *this;
        result = result.truncated(prec_);
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    /// Representation equality (same value, same precision).
    friend bool operator==(const PAdicNumber& a, const PAdicNumber& b) {
        return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.unit_ == b.unit_;
    }

    /// Equal to within the smaller of the two absolute precisions.
    bool agrees_with(const PAdicNumber& other) const { return (*this - other).is_zero(); }

    /// p^val * unit as an exact rational (the representative the digits name).
    Rational representative() const {
        if (zero_) return Rational(0);
        Rational r(unit_);
        if (val_ >= 0) r *= Rational(detail::pow_p(p_, val_));
        else r /= Rational(detail::pow_p(p_, -val_));
        return r;
    }

    std::string to_string() const {
        const std::string pp = std::to_string(p_);
        if (zero_) return "O(" + pp + "^" + std::to_string(val_) + ")";
        return pp + "^" + std::to_string(val_) + " * " + unit_.get_str() + " + O(" + pp + "^" +
               std::to_string(absolute_precision()) + ")";
    }

private:
    unsigned long p_ = 3;
    long val_ = 0;
    long prec_ = 0;
    BigInt unit_;
    bool zero_ = true;

    static PAdicNumber make(unsigned long p, long val, const BigInt& unit, long prec) {
        if (prec <= 0) return zero(p, val);
        PAdicNumber x;
        x.p_ = p;
        x.val_ = val;
        x.prec_ = prec;
        x.unit_ = detail::mod(unit, detail::pow_p(p, prec));
        x.zero_ = false;
        return x;
    }

    static void check_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
        if (a.p_ != b.p_) throw DomainError("p-adic operands with different primes");
    }
};

/// log u = sum_{n>=1} (-1)^{n+1} (u-1)^n / n for |u - 1|_p < 1. The result
/// carries the absolute precision of u; the division by n never costs more
/// than the extra valuation of (u-1)^n supplies.
inline PAdicNumber padic_log(const PAdicNumber& u) {
    const unsigned long p = u.prime();
    if (u.is_zero() || u.valuation() != 0) throw DomainError("padic_log: need |u - 1|_p < 1");
    const long abs_prec = u.absolute_precision();
    const PAdicNumber t = u - PAdicNumber::from_integer(p, 1, abs_prec);
    if (t.is_zero()) return PAdicNumber::zero(p, abs_prec);
    const long a = t.valuation();
    if (a < 1) throw DomainError("padic_log: need |u - 1|_p < 1");

    PAdicNumber sum = PAdicNumber::zero(p, abs_prec + a);
    PAdicNumber power = t;
    for (unsigned long n = 1;; ++n) {
        // every later term has valuation >= n a - log_p n, which is increasing in n
        const long floor_log = static_cast<long>(std::floor(std::log(static_cast<double>(n)) / std::log(static_cast<double>(p)) + 1e-12));
        if (static_cast<long>(n) * a - floor_log >= abs_prec) break;
        PAdicNumber term = power / PAdicNumber::from_integer(p, static_cast<long>(n), abs_prec + 64);
        sum = (n % 2 == 1) ? sum + term : sum - term;
        power = power * t;
    }
    return sum.truncated_absolute(abs_prec);
}

enum class Side { Bosonic, Fermionic };

inline std::string_view to_string(Side s) { return s == Side::Bosonic ? "bosonic" : "fermionic"; }

/// f(x) = lambda^x q^{c x} [x0 + x]_q^k with c in {-1, 0}. lambda and q are
/// exact rationals in Z_p, embedded into Q_p as needed.
struct IntegrandSpec {
    int c = 0;
    unsigned k = 0;
    Rational lambda = 1;
    unsigned long x0 = 0;

    /// f(x + n) = lambda^n q^{cn} * (same integrand with x0 + n)(x).
    IntegrandSpec shifted(unsigned long n) const {
        IntegrandSpec s = *this;
        s.x0 += n;
        return s;
    }

    Rational shift_factor(unsigned long n, const Rational& q) const {
        return ipow(lambda, static_cast<long>(n)) * ipow(q, c * static_cast<long>(n));
    }

    Rational at(unsigned long x, const Rational& q) const {
        return ipow(lambda, static_cast<long>(x)) * ipow(q, c * static_cast<long>(x)) *
               ipow(q_bracket(static_cast<double>(x0 + x), q), k);
    }
};

inline constexpr long kGuardDigits = 4;
inline constexpr unsigned long kMaxTerms = 10'000'000;

namespace detail {

inline long vp(const Rational& r, unsigned long p) {
    if (sgn(r) == 0) return std::numeric_limits<long>::max();
    BigInt num = r.get_num(), den = r.get_den();
    return strip(num, p) - strip(den, p);
}

inline void validate(const IntegrandSpec& f, const Rational& q, unsigned long p, Side side) {
    require_odd_prime(p);
    if (f.c != 0 && f.c != -1) throw DomainError("integrand exponent c must be 0 or -1");
    if (vp(q, p) != 0 || vp(Rational(q - 1), p) < 1) throw DomainError("need |1 - q|_p < 1");
    if (side == Side::Bosonic) {
        if (f.lambda != 1) throw OutOfScopeError("bosonic integrals are restricted to lambda = 1");
    } else {
        if (vp(f.lambda, p) != 0 || vp(Rational(f.lambda - 1), p) < 1) throw DomainError("need |1 - lambda|_p < 1");
    }
}

inline BigInt residue(const Rational& r, const BigInt& m) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("rational is not a p-adic integer");
    return mod(r.get_num() * inv, m);
}

struct LevelSums {
    BigInt weighted;  // sum_x f(x) w^x
    BigInt norm;      // sum_x w^x
};

// Riemann sum numerator and normalizer mod p^W with weight w = q or -q.
inline LevelSums level_sums(const IntegrandSpec& f, const Rational& q, unsigned long p, unsigned N, long W,
                            bool alternating) {
    const BigInt m = pow_p(p, W);
    const BigInt count = pow_p(p, N);
    if (count > BigInt(kMaxTerms)) throw DomainError("Riemann sum level too large");
    const BigInt qm = residue(q, m);
    const BigInt lam = residue(f.lambda, m);
    const BigInt qc = f.c == 0 ? BigInt(1) : residue(Rational(1) / q, m);
    const BigInt w = alternating ? mod(-qm, m) : qm;

    BigInt bracket = 0;  // [x0 + x]_q
    {
        BigInt qi = 1;
        for (unsigned long i = 0; i < f.x0; ++i) {
            bracket += qi;
            qi = mod(qi * qm, m);
        }
        bracket = mod(bracket, m);
    }
    BigInt twist = 1;  // lambda^x q^{cx}
    BigInt wx = 1;     // w^x
    BigInt sum = 0, norm = 0, bk;
    const BigInt lam_qc = mod(lam * qc, m);
    const unsigned long n_terms = count.get_ui();
    for (unsigned long x = 0; x < n_terms; ++x) {
        mpz_powm_ui(bk.get_mpz_t(), bracket.get_mpz_t(), f.k, m.get_mpz_t());
        sum += mod(twist * bk, m) * wx;
        norm += wx;
        if ((x & 63) == 63) {
            sum = mod(sum, m);
            norm = mod(norm, m);
        }
        bracket = mod(1 + qm * bracket, m);
        twist = mod(twist * lam_qc, m);
        wx = mod(wx * w, m);
    }
    return {mod(sum, m), mod(norm, m)};
}

inline PAdicNumber finish(const LevelSums& s, unsigned long p, long W, long M, unsigned N) {
    const PAdicNumber num = PAdicNumber::from_residue(p, s.weighted, W);
    const PAdicNumber den = PAdicNumber::from_residue(p, s.norm, W);
    const PAdicNumber value = num / den;
    const bool enough = value.is_zero() ? value.absolute_precision() >= M : value.precision() >= M;
    if (!enough)
        throw PrecisionError("Riemann sum at level N=" + std::to_string(N) + " keeps only " +
                             std::to_string(value.precision()) + " digits, " + std::to_string(M) + " requested");
    return value.truncated(M);
}

} // namespace detail

/// S_N = sum_{x<p^N} f(x) q^x / [p^N]_q. [p^N]_q has valuation N when
/// v_p(q-1) = 1, so the sum runs at M + N + guard digits.
inline PAdicNumber bosonic_riemann_sum(const IntegrandSpec& f, const Rational& q, unsigned long p, unsigned N,
                                       long M, long guard = kGuardDigits) {
    detail::validate(f, q, p, Side::Bosonic);
    const long W = M + static_cast<long>(N) + guard;
    return detail::finish(detail::level_sums(f, q, p, N, W, false), p, W, M, N);
}

/// S_N = sum_{x<p^N} f(x) (-q)^x / [p^N]_{-q}; the normalizer is a unit.
inline PAdicNumber fermionic_riemann_sum(const IntegrandSpec& f, const Rational& q, unsigned long p, unsigned N,
                                         long M, long guard = kGuardDigits) {
    detail::validate(f, q, p, Side::Fermionic);
    const long W = M + guard;
    return detail::finish(detail::level_sums(f, q, p, N, W, true), p, W, M, N);
}

inline PAdicNumber riemann_sum(Side side, const IntegrandSpec& f, const Rational& q, unsigned long p, unsigned N,
                               long M) {
    return side == Side::Bosonic ? bosonic_riemann_sum(f, q, p, N, M) : fermionic_riemann_sum(f, q, p, N, M);
}

/// [p^N]_{-q} as a p-adic number.
inline PAdicNumber fermionic_normalizer(const Rational& q, unsigned long p, unsigned N, long M) {
    const BigInt count = detail::pow_p(p, N);
    const Rational qn = ipow(q, static_cast<long>(count.get_ui()));
    return PAdicNumber::from_rational(p, (1 + qn) / (1 + q), M);
}

/// The limit of the Riemann sums, from the closed forms.
///
/// Fermionic: c = -1 gives E_{k,q}(lambda, x0), c = 0 the DC-type
/// E*_{k,q}(lambda, x0). Bosonic (lambda = 1): c = 0 gives
/// sum_j C(k,j) [x0]^{k-j} q^{x0 j} beta_{j,q}(1); c = -1 the same expansion
/// over B_{j,q}(1), where at lambda = 1 the l = 0 term of the finite sum
/// becomes (q-1)/log_p q instead of vanishing.
inline PAdicNumber closed_form(Side side, const IntegrandSpec& f, const Rational& q, unsigned long p, long M) {
    detail::validate(f, q, p, side);
    const long work = M + static_cast<long>(f.k) + kGuardDigits;
    if (side == Side::Fermionic) {
        const Rational v = qlambda::detail::euler_closed(f.k, q, f.lambda, static_cast<double>(f.x0), f.c == 0 ? 1u : 0u);
        return PAdicNumber::from_rational(p, v, M);
    }
    const Rational bx0 = q_bracket(static_cast<double>(f.x0), q);
    const Rational qx0 = ipow(q, static_cast<long>(f.x0));
    PAdicNumber total = PAdicNumber::zero(p, work + 16);
    std::optional<PAdicNumber> log_q;
    for (unsigned j = 0; j <= f.k; ++j) {
        const Rational weight = Rational(binomial(f.k, j)) * ipow(bx0, static_cast<long>(f.k - j)) *
                                ipow(qx0, static_cast<long>(j));
        if (sgn(weight) == 0) continue;
        PAdicNumber term = PAdicNumber::zero(p, work + 16);
        if (f.c == 0) {
            term = PAdicNumber::from_rational(p, weight * qlambda::detail::beta_closed(j, q, Rational(1)), work);
        } else {
            if (!log_q) log_q = padic_log(PAdicNumber::from_rational(p, q, work + 2));
            const PAdicNumber finite =
                PAdicNumber::from_rational(p, weight * qlambda::detail::big_b_closed(j, q, Rational(1)), work);
            const PAdicNumber correction =
                PAdicNumber::from_rational(p, weight * (q - 1) / ipow(Rational(1 - q), static_cast<long>(j)), work) /
                *log_q;
            term = finite + correction;
        }
        total = total + term;
    }
    return total.truncated(M);
}

struct ShiftCheck {
    PAdicNumber residual;
    /// v_p of the residual; for a residual that vanishes at working
    /// precision this is the precision it vanishes to.
    long valuation() const { return residual.valuation(); }
    bool vanishes() const { return residual.is_zero(); }
};

/// q S_N(f_1) - S_N(f) - (q-1) f(0) - ((q-1)/log q) f'(0), with
/// f'(0) = (log lambda + c log q)[x0]^k + k [x0]^{k-1} q^{x0} log q/(q-1).
inline ShiftCheck check_bosonic_shift(const IntegrandSpec& f, const Rational& q, unsigned long p, unsigned N,
                                      long M) {
    const long work = M + kGuardDigits;
    const PAdicNumber s0 = bosonic_riemann_sum(f, q, p, N, M);
    const PAdicNumber s1 = bosonic_riemann_sum(f.shifted(1), q, p, N, M) *
                           PAdicNumber::from_rational(p, f.shift_factor(1, q), work);
    const PAdicNumber qp = PAdicNumber::from_rational(p, q, work);
    const PAdicNumber one = PAdicNumber::from_integer(p, 1, work);
    const Rational bx0 = q_bracket(static_cast<double>(f.x0), q);
    const PAdicNumber f0 = PAdicNumber::from_rational(p, ipow(bx0, f.k), work);

    const PAdicNumber log_q = padic_log(qp);
    const PAdicNumber log_lambda = padic_log(PAdicNumber::from_rational(p, f.lambda, work));
    PAdicNumber fprime = (log_lambda + PAdicNumber::from_integer(p, f.c, work) * log_q) * f0;
    if (f.k >= 1) {
        const Rational slope = Rational(f.k) * ipow(bx0, static_cast<long>(f.k) - 1) * ipow(q, static_cast<long>(f.x0));
        if (sgn(slope) != 0)
            fprime = fprime + PAdicNumber::from_rational(p, slope, work) * log_q / (qp - one);
    }
    const PAdicNumber residual = qp * s1 - s0 - (qp - one) * f0 - (qp - one) / log_q * fprime;
    return {residual};
}

/// q^n S_N(f_n) - (-1)^n S_N(f) - [2]_q sum_{l<n} (-1)^{n-1-l} q^l f(l).
inline ShiftCheck check_fermionic_shift(const IntegrandSpec& f, const Rational& q, unsigned n, unsigned long p,
                                        unsigned N, long M) {
    if (n == 0) throw DomainError("check_fermionic_shift: n must be positive");
    const long work = M + kGuardDigits;
    const PAdicNumber s0 = fermionic_riemann_sum(f, q, p, N, M);
    const PAdicNumber sn = fermionic_riemann_sum(f.shifted(n), q, p, N, M) *
                           PAdicNumber::from_rational(p, f.shift_factor(n, q), work);
    Rational boundary = 0;
    for (unsigned l = 0; l < n; ++l) {
        const Rational term = ipow(q, static_cast<long>(l)) * f.at(l, q);
        boundary += ((n - 1 - l) % 2 == 0) ? term : Rational(-term);
    }
    boundary *= (1 + q);
    const PAdicNumber sign = PAdicNumber::from_integer(p, n % 2 == 0 ? 1 : -1, work);
    const PAdicNumber residual = PAdicNumber::from_rational(p, ipow(q, static_cast<long>(n)), work) * sn - sign * s0 -
                                 PAdicNumber::from_rational(p, boundary, work);
    return {residual};
}

} // namespace qlambda::padic
