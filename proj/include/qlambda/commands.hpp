#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "qfamilies.hpp"
#include "qzeta.hpp"

namespace qlambda::commands {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct CommandResult {
    std::vector<io::OutputRecord> records;
    int exit_code = kSuccess;
};

inline QFamily parse_family(const std::string& s) {
    if (s == "beta") return QFamily::BetaQ;
    if (s == "B") return QFamily::BigBQ;
    if (s == "E") return QFamily::EulerQ;
    if (s == "G") return QFamily::GenocchiQ;
    if (s == "Edc") return QFamily::DCEulerQ;
    throw ParseError("unknown family '" + s + "' (expected beta, B, E, G or Edc)");
}

struct NumbersArgs {
    std::string family = "E";
    std::string q = "1/2";
    std::string lambda = "rou:1/0";
    unsigned nmax = 4;
    std::optional<std::string> x;
    std::string mode = "closed";  // closed, series, both
    double tol = 1e-10;
    std::size_t max_terms = 1'000'000;
};

namespace detail {

inline SummationPolicy policy(double tol, std::size_t max_terms) {
    SummationPolicy p;
    p.tol = tol;
    p.max_terms = max_terms;
    return p;
}

inline io::Fields scalar_params(const std::string& q, const std::string& lambda, const std::string& x) {
    return {{"q", q}, {"lambda", lambda}, {"x", x}};
}

inline DeformParams<Complex> complex_params(const io::Param& q, const io::Param& lambda) {
    const Complex qc = io::to_complex(q);
    if (const auto* r = std::get_if<RootOfUnity>(&lambda)) return DeformParams<Complex>(qc, *r);
    return DeformParams<Complex>(qc, io::to_complex(lambda));
}

inline Complex value_as_complex(const io::Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return {r->get_d(), 0.0};
    return std::get<Complex>(v);
}

// Closed form in the most exact backend the parameters allow.
inline io::Value closed_value(QFamily fam, unsigned n, const io::Param& q, const io::Param& lambda, double x) {
    if (io::is_exact(q) && io::is_exact(lambda) && is_integral(x)) {
        const Rational qr = std::get<Rational>(q);
        if (const auto* r = std::get_if<Rational>(&lambda))
            return family_value(fam, n, DeformParams<Rational>(qr, *r), x);
        const auto root = std::get<RootOfUnity>(lambda);
        if (root.is_one() || root.is_minus_one())
            return family_value(fam, n, DeformParams<Rational>(qr, root), x);
        const Cyclotomic v = family_value(fam, n, DeformParams<Cyclotomic>(Cyclotomic(qr), root), x);
        if (v.is_rational()) return v.rational_value();
        return to_complex(v);
    }
    return family_value(fam, n, complex_params(q, lambda), x);
}

} // namespace detail

/// One record per index 0..nmax; `both` adds the series value and the
/// absolute difference.
inline CommandResult cmd_numbers(const NumbersArgs& a) {
    const QFamily fam = parse_family(a.family);
    const io::Param q = io::parse_q(a.q);
    const io::Param lambda = io::parse_lambda(a.lambda);
    const double x = a.x ? io::parse_real(*a.x) : 0.0;
    if (a.mode != "closed" && a.mode != "series" && a.mode != "both")
        throw ParseError("unknown mode '" + a.mode + "' (expected closed, series or both)");
    const auto pol = detail::policy(a.tol, a.max_terms);
    const std::string xs = a.x.value_or("0");

    CommandResult out;
    std::size_t failed = 0, total = 0;
    for (unsigned n = 0; n <= a.nmax; ++n) {
        const auto make = [&](const std::string& mode) {
            io::OutputRecord r;
            r.family = std::string(to_string(fam));
            r.indices = {static_cast<long>(n)};
            r.params = detail::scalar_params(a.q, a.lambda, xs);
            r.mode = mode;
            return r;
        };
        std::optional<io::Value> closed, series;
        if (a.mode != "series") {
            auto r = make("closed");
            ++total;
            try {
                closed = detail::closed_value(fam, n, q, lambda, x);
                r.value = *closed;
            } catch (const Error& e) {
                r.error = io::error_info(e);
                ++failed;
            }
            out.records.push_back(std::move(r));
        }
        if (a.mode != "closed") {
            auto r = make("series");
            ++total;
            try {
                series = family_value(fam, n, detail::complex_params(q, lambda), x, Mode::Series, pol);
                r.value = *series;
            } catch (const Error& e) {
                r.error = io::error_info(e);
                ++failed;
            }
            out.records.push_back(std::move(r));
        }
        if (a.mode == "both" && closed && series) {
            auto r = make("abs-diff");
            r.value = Complex(std::abs(detail::value_as_complex(*closed) - detail::value_as_complex(*series)), 0.0);
            out.records.push_back(std::move(r));
        }
    }
    if (total > 0 && failed == total) out.exit_code = kUsageError;
    return out;
}

struct ZetaArgs {
    std::string kind = "second";
    std::string s = "0";
    std::string q = "1/2";
    std::string lambda = "1";
    std::string x = "0";
    double tol = 1e-10;
    std::size_t max_terms = 1'000'000;
};

inline ZetaKind parse_zeta_kind(const std::string& s) {
    if (s == "lerch") return ZetaKind::ClassicalLerch;
    if (s == "first") return ZetaKind::QFirst;
    if (s == "second") return ZetaKind::QSecond;
    if (s == "hurwitz-euler") return ZetaKind::QHurwitzEuler;
    throw ParseError("unknown zeta kind '" + s + "' (expected first, second, hurwitz-euler or lerch)");
}

/// The zeta value; at s = 1-k also the closed special value and the
/// difference. Any error is fatal (exit 2) since there is one record.
inline CommandResult cmd_zeta(const ZetaArgs& a) {
    ZetaQuery z;
    z.kind = parse_zeta_kind(a.kind);
    z.s = io::parse_complex(a.s);
    const io::Param q = io::parse_q(a.q);
    const io::Param lambda = io::parse_lambda(a.lambda);
    z.q = io::to_complex(q);
    z.lambda = io::to_complex(lambda);
    z.x = io::parse_real(a.x);
    z.policy = detail::policy(a.tol, a.max_terms);

    CommandResult out;
    io::OutputRecord r;
    r.family = "zeta-" + std::string(to_string(z.kind));
    r.params = {{"s", a.s}, {"q", a.q}, {"lambda", a.lambda}, {"x", a.x}};
    r.mode = "series";
    Complex value;
    try {
        value = evaluate(z);
        r.value = value;
    } catch (const Error& e) {
        r.error = io::error_info(e);
        out.records.push_back(r);
        out.exit_code = kUsageError;
        return out;
    }
    out.records.push_back(r);

    const bool special_point = z.kind != ZetaKind::ClassicalLerch && z.s.imag() == 0.0 && is_integral(z.s.real()) && z.s.real() <= 0.0;
    if (special_point) {
        const unsigned k = static_cast<unsigned>(1.0 - z.s.real());
        const SpecialKind sk = z.kind == ZetaKind::QFirst    ? SpecialKind::First
                               : z.kind == ZetaKind::QSecond ? SpecialKind::Second
                                                             : SpecialKind::HurwitzEuler;
        io::OutputRecord c = r;
        c.mode = "special-value";
        c.indices = {static_cast<long>(k)};
        try {
            const auto sv = zeta_special_value(sk, k, detail::complex_params(q, lambda), z.x);
            c.value = sv.series_value;
            out.records.push_back(c);
            io::OutputRecord d = c;
            d.mode = "abs-diff";
            d.value = Complex(std::abs(value - sv.series_value), 0.0);
            out.records.push_back(d);
        } catch (const Error& e) {
            c.value = std::monostate{};
            c.error = io::error_info(e);
            out.records.push_back(c);
        }
    }
    return out;
}

struct PadicArgs {
    unsigned long p = 5;
    std::string q = "1+p";
    unsigned n1 = 1;
    unsigned n2 = 5;
    long M = 12;
    int c = 0;
    unsigned k = 0;
    std::string lambda = "1";
    unsigned long x0 = 0;
    std::string side = "bosonic";
};

inline Rational parse_padic_q(const std::string& s, unsigned long p) {
    if (s == "1+p") return Rational(1 + static_cast<long>(p));
    if (auto r = io::try_parse_rational(s)) return *r;
    throw ParseError("q must be '1+p' or a rational p-adic unit, got '" + s + "'");
}

/// S_N for N = n1..n2, with v_p(S_N - closed form) when the closed form exists.
inline CommandResult cmd_padic(const PadicArgs& a) {
    if (a.n1 > a.n2) throw DomainError("need N1 <= N2");
    const Rational q = parse_padic_q(a.q, a.p);
    const auto lam = io::try_parse_rational(a.lambda);
    if (!lam) throw ParseError("p-adic lambda must be rational, got '" + a.lambda + "'");
    padic::Side side;
    if (a.side == "bosonic") side = padic::Side::Bosonic;
    else if (a.side == "fermionic") side = padic::Side::Fermionic;
    else throw ParseError("side must be bosonic or fermionic");
    const padic::IntegrandSpec f{a.c, a.k, *lam, a.x0};

    std::optional<padic::PAdicNumber> closed;
    std::string closed_note;
    try {
        closed = padic::closed_form(side, f, q, a.p, a.M);
    } catch (const PoleError& e) {
        closed_note = e.what();
    }

    CommandResult out;
    std::size_t failed = 0;
    for (unsigned N = a.n1; N <= a.n2; ++N) {
        io::OutputRecord r;
        r.family = std::string(padic::to_string(side));
        r.indices = {static_cast<long>(a.k)};
        r.params = {{"p", std::to_string(a.p)}, {"N", std::to_string(N)}, {"M", std::to_string(a.M)}, {"q", a.q},
                    {"lambda", a.lambda}, {"c", std::to_string(a.c)}, {"x0", std::to_string(a.x0)}};
        r.mode = "riemann-sum";
        try {
            const auto s = padic::riemann_sum(side, f, q, a.p, N, a.M);
            r.value = io::PAdicValue::from(s);
            if (closed) {
                const auto d = s - *closed;
                r.extra.emplace_back("residual_valuation", std::to_string(d.valuation()));
                if (d.is_zero()) r.extra.emplace_back("residual_vanishes", "true");
            } else if (!closed_note.empty()) {
                r.extra.emplace_back("closed_form", "unavailable");
            }
        } catch (const Error& e) {
            r.error = io::error_info(e);
            ++failed;
        }
        out.records.push_back(std::move(r));
    }
    if (failed == out.records.size()) out.exit_code = kUsageError;
    return out;
}

} // namespace qlambda::commands
