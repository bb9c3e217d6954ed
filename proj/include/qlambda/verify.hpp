#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classical.hpp"
#include "io.hpp"
#include "qfamilies.hpp"
#include "qzeta.hpp"

namespace qlambda::verify {

struct CheckResult {
    std::string name;
    std::string module;
    std::string grid_point;
    std::optional<double> residual;
    std::optional<long> residual_valuation;
    std::string threshold;
    bool pass = false;
    std::string error;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;  // pole points, not counted in total
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    Summary summary;

    int exit_code() const { return summary.failed == 0 ? 0 : 1; }
};

struct VerifyOptions {
    std::vector<double> qs{0.3, 0.5, 0.7};
    std::vector<io::Param> lambdas{RootOfUnity(2, 1), RootOfUnity(3, 1), RootOfUnity(4, 1), RootOfUnity(6, 1),
                                   RootOfUnity(1, 0)};
    std::optional<unsigned> nmax;
    bool correction = true;
    std::vector<std::string> modules;
    std::vector<std::string> checks;
};

class Recorder {
public:
    Recorder(std::string name, std::string module, VerifyReport& report)
        : name_(std::move(name)), module_(std::move(module)), report_(report) {}

    void below(const std::string& point, double residual, double tol) {
        CheckResult r = base(point);
        r.residual = residual;
        r.threshold = "< " + io::format_short(tol);
        r.pass = residual < tol;
        push(std::move(r));
    }

    void valuation_at_least(const std::string& point, const padic::PAdicNumber& residual, long bound) {
        CheckResult r = base(point);
        r.residual_valuation = residual.valuation();
        r.threshold = ">= " + std::to_string(bound);
        r.pass = residual.valuation() >= bound;
        push(std::move(r));
    }

    void exact(const std::string& point, bool holds) {
        CheckResult r = base(point);
        r.residual = holds ? 0.0 : 1.0;
        r.threshold = "exact";
        r.pass = holds;
        push(std::move(r));
    }

    void custom(const std::string& point, std::optional<long> valuation, const std::string& threshold, bool pass) {
        CheckResult r = base(point);
        r.residual_valuation = valuation;
        r.threshold = threshold;
        r.pass = pass;
        push(std::move(r));
    }

    void failure(const std::string& point, const Error& e) {
        CheckResult r = base(point);
        r.threshold = "no error";
        r.error = std::string(to_string(e.kind())) + ": " + e.what();
        push(std::move(r));
    }

    void skip() { ++report_.summary.skipped; }

    /// Runs fn; a pole is a skipped point, any other library error a failure.
    template <typename Fn>
    void guarded(const std::string& point, Fn&& fn) {
        try {
            fn();
        } catch (const PoleError&) {
            skip();
        } catch (const Error& e) {
            failure(point, e);
        }
    }

private:
    std::string name_;
    std::string module_;
    VerifyReport& report_;

    CheckResult base(const std::string& point) const {
        CheckResult r;
        r.name = name_;
        r.module = module_;
        r.grid_point = point;
        return r;
    }

    void push(CheckResult r) {
        ++report_.summary.total;
        if (r.pass) ++report_.summary.passed;
        else ++report_.summary.failed;
        report_.checks.push_back(std::move(r));
    }
};

namespace detail {

inline std::string lambda_text(const io::Param& p) {
    if (const auto* r = std::get_if<Rational>(&p)) return r->get_str();
    if (const auto* u = std::get_if<RootOfUnity>(&p)) return u->to_string();
    const Complex c = std::get<Complex>(p);
    return io::format_short(c.real()) + "," + io::format_short(c.imag());
}

inline DeformParams<Complex> complex_params(double q, const io::Param& lambda) {
    if (const auto* u = std::get_if<RootOfUnity>(&lambda)) return DeformParams<Complex>(Complex(q), *u);
    return DeformParams<Complex>(Complex(q), io::to_complex(lambda));
}

inline std::string point(double q, const io::Param& lambda, std::initializer_list<std::pair<const char*, double>> rest) {
    std::string s = "q=" + io::format_short(q) + " lambda=" + lambda_text(lambda);
    for (const auto& [k, v] : rest) s += std::string(" ") + k + "=" + io::format_short(v);
    return s;
}

inline unsigned nmax_or(const VerifyOptions& o, unsigned fallback) { return o.nmax.value_or(fallback); }

inline const std::vector<QFamily>& all_families() {
    static const std::vector<QFamily> f{QFamily::BetaQ, QFamily::BigBQ, QFamily::EulerQ, QFamily::GenocchiQ, QFamily::DCEulerQ};
    return f;
}

} // namespace detail

using CheckFn = std::function<void(const VerifyOptions&, Recorder&)>;

struct CheckSpec {
    std::string name;
    std::string module;
    CheckFn run;
};

inline void check_mode_agreement(const VerifyOptions& o, Recorder& rec) {
    for (auto fam : detail::all_families())
        for (unsigned n = 0; n <= detail::nmax_or(o, 12); ++n)
            for (double q : o.qs)
                for (const auto& lam : o.lambdas) {
                    const auto p = detail::complex_params(q, lam);
                    const std::string pt = std::string(to_string(fam)) + " n=" + std::to_string(n) + " " + detail::point(q, lam, {});
                    rec.guarded(pt, [&] {
                        const Complex c = family_value(fam, n, p, 0.0, Mode::ClosedForm);
                        const Complex s = family_value(fam, n, p, 0.0, Mode::Series);
                        rec.below(pt, std::abs(c - s), 1e-10);
                    });
                }
}

inline void check_boundary_identity(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 12); ++n)
                for (double x : {0.0, 0.5, 1.0, 2.0}) {
                    const std::string pt = detail::point(q, lam, {{"n", n}, {"x", x}});
                    rec.guarded(pt, [&] { rec.below(pt, check_boundary(n, detail::complex_params(q, lam), x), 1e-12); });
                }
}

inline void check_distribution_relation(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 8); ++n)
                for (double x : {0.0, 0.5, 1.0, 2.0})
                    for (unsigned d : {1u, 3u, 5u}) {
                        const std::string pt = detail::point(q, lam, {{"n", n}, {"x", x}, {"d", d}});
                        rec.guarded(pt, [&] {
                            rec.below(pt, check_distribution(n, detail::complex_params(q, lam), x, d), 1e-10);
                        });
                    }
}

inline void check_addition_theorem(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 8); ++n)
                for (double x : {0.0, 0.5, 1.0, 2.0}) {
                    const std::string pt = detail::point(q, lam, {{"n", n}, {"x", x}});
                    rec.guarded(pt, [&] { rec.below(pt, check_addition(n, detail::complex_params(q, lam), x), 1e-10); });
                }
}

inline void check_alternating(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned m = 0; m <= std::min(detail::nmax_or(o, 4), 12u); ++m)
                for (unsigned n : {1u, 3u, 5u}) {
                    const std::string pt = detail::point(q, lam, {{"m", m}, {"n", n}});
                    rec.guarded(pt, [&] {
                        const auto r = check_alternating_sum(m, n, detail::complex_params(q, lam), o.correction);
                        rec.below(pt, r.residual, 1e-10);
                    });
                }
}

inline void check_derivative(const VerifyOptions& o, Recorder& rec) {
    const double h = 1e-5;
    for (double q : o.qs) {
        if (!(q > 0.0 && q < 1.0)) continue;
        for (const auto& lam : o.lambdas)
            for (unsigned n = 1; n <= std::max(1u, detail::nmax_or(o, 8)); ++n)
                for (double x : {0.5, 1.0}) {
                    const std::string pt = detail::point(q, lam, {{"n", n}, {"x", x}});
                    rec.guarded(pt, [&] {
                        const auto p = detail::complex_params(q, lam);
                        const Complex fd = (euler_q(n, p, x + h) - euler_q(n, p, x - h)) / (2 * h);
                        rec.below(pt, std::abs(d_dx_euler_q(n, p, x) - fd), 1e-6);
                    });
                }
    }
}

inline void check_genocchi_euler(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 12); ++n) {
                const std::string pt = detail::point(q, lam, {{"n", n}});
                rec.guarded(pt, [&] {
                    const auto p = detail::complex_params(q, lam);
                    const Complex g = genocchi_q(n + 1, p) / Complex(static_cast<double>(n + 1));
                    const Complex e = euler_q(n, p);
                    // scaled by the value: the only error is the double rounding of n E
                    rec.below(pt, std::abs(g - e) / (1.0 + std::abs(e)), 1e-14);
                });
            }
}

inline void check_dc_tail(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 8); ++n) {
                const std::string pt = detail::point(q, lam, {{"n", n}});
                rec.guarded(pt, [&] {
                    const auto p = detail::complex_params(q, lam);
                    SummationPolicy base;
                    base.tol = 1e-12;
                    base.max_terms = 20000;
                    SummationPolicy doubled = base;
                    doubled.max_terms *= 2;
                    const Complex a = dc_euler_q(n, p, 0.0, Mode::Series, base);
                    const Complex b = dc_euler_q(n, p, 0.0, Mode::Series, doubled);
                    rec.below(pt, std::abs(a - b), 1e-10);
                });
            }
}

inline void check_q_limit(const VerifyOptions& o, Recorder& rec) {
    const Rational q(9999, 10000);
    for (const auto& lam : o.lambdas) {
        const auto* root = std::get_if<RootOfUnity>(&lam);
        if (root == nullptr) continue;  // exact classical values need an exact lambda
        const Cyclotomic cl = root->to_cyclotomic();
        const DeformParams<Cyclotomic> p(Cyclotomic(q), *root);
        std::optional<classical::SequenceTable<Cyclotomic>> b, e;
        try {
            b = classical::lambda_bernoulli(cl, 8);
        } catch (const PoleError&) {
        }
        try {
            e = classical::lambda_euler_recurrence(cl, 8);
        } catch (const PoleError&) {
        }
        for (unsigned k = 0; k <= std::min(detail::nmax_or(o, 8), 8u); ++k) {
            const auto compare = [&](const char* fam, auto&& value, const std::optional<classical::SequenceTable<Cyclotomic>>& ref) {
                const std::string pt = std::string(fam) + " k=" + std::to_string(k) + " lambda=" + root->to_string();
                if (!ref) {
                    rec.skip();
                    return;
                }
                rec.guarded(pt, [&] {
                    const Cyclotomic want = (*ref)[k];
                    const double dev = std::abs(to_complex(Cyclotomic(value() - want)));
                    rec.below(pt, dev / (1.0 + std::abs(to_complex(want))), 1e-2);
                });
            };
            compare("beta", [&] { return beta_q(k, p); }, b);
            compare("B", [&] { return big_b_q(k, p); }, b);
            compare("E", [&] { return euler_q(k, p); }, e);
        }
    }
}

inline void check_zeta_special(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned k = 1; k <= std::max(2u, detail::nmax_or(o, 10)); ++k) {
                const auto p = detail::complex_params(q, lam);
                const Complex s(1.0 - k, 0.0);
                const Complex want = k == 1 ? Complex(-1.0) : Complex(0.0);
                const double tol = k == 1 ? 1e-12 : 1e-10;
                const std::string pt1 = "first " + detail::point(q, lam, {{"k", k}});
                rec.guarded(pt1, [&] {
                    const Complex v = zeta_q_first(p.lambda, s, p.q) + beta_q(k, p) / Complex(static_cast<double>(k));
                    rec.below(pt1, std::abs(v - want), tol);
                });
                const std::string pt2 = "second " + detail::point(q, lam, {{"k", k}});
                rec.guarded(pt2, [&] {
                    const Complex v = zeta_q_second(p.lambda, s, p.q) + big_b_q(k, p) / Complex(static_cast<double>(k));
                    rec.below(pt2, std::abs(v - want), tol);
                });
            }
}

inline void check_hurwitz_euler(const VerifyOptions& o, Recorder& rec) {
    for (double q : o.qs)
        for (const auto& lam : o.lambdas)
            for (unsigned n = 0; n <= detail::nmax_or(o, 8); ++n)
                for (double x : {0.5, 1.0, 2.0}) {
                    const std::string pt = detail::point(q, lam, {{"n", n}, {"x", x}});
                    rec.guarded(pt, [&] {
                        const auto p = detail::complex_params(q, lam);
                        const Complex z = zeta_q_hurwitz_euler(p.lambda, Complex(-static_cast<double>(n)), q, x);
                        rec.below(pt, std::abs(z - euler_q(n, p, x)), 1e-10);
                    });
                }
}

inline void check_classical_bridges(const VerifyOptions&, Recorder& rec) {
    using namespace classical;
    for (const Rational& lam : {Rational(-1), Rational(3)}) {
        const std::string at = "lambda=" + lam.get_str();
        const auto b = lambda_bernoulli(lam, 16);
        rec.exact("B_1 " + at, b[1] == 1 / (lam - 1));
        rec.exact("B_2 " + at, b[2] == -2 * lam / ((lam - 1) * (lam - 1)));
        const auto h = frobenius_euler(Rational(1 / lam), 15);
        for (unsigned m = 1; m <= 16; ++m)
            rec.exact("B_m via H_{m-1} m=" + std::to_string(m) + " " + at, b[m] == Rational(m) / (lam - 1) * h[m - 1]);
        rec.guarded("E_n bridge " + at, [&] {
            const auto rec_e = lambda_euler_recurrence(lam, 16);
            const auto bridge = lambda_euler_bridge(lam, 16);
            for (unsigned n = 0; n <= 16; ++n)
                rec.exact("E_n bridge n=" + std::to_string(n) + " " + at, rec_e[n] == bridge[n]);
        });
    }
    const auto bern = bernoulli_numbers(20);
    const auto gen = genocchi_numbers(20);
    for (unsigned n = 0; n <= 20; ++n) {
        rec.exact("G_n = 2(1-2^n)B_n n=" + std::to_string(n), gen[n] == 2 * (1 - Rational(BigInt(1) << n)) * bern[n]);
        if (n >= 3 && n % 2 == 1) rec.exact("G_n = 0 n=" + std::to_string(n), gen[n] == 0);
    }
}

namespace detail {

inline constexpr unsigned long kP = 5;
inline constexpr long kM = 12;
inline Rational padic_q() { return Rational(6); }

inline bool increasing(const std::vector<padic::ShiftCheck>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i].vanishes()) continue;
        if (seq[i - 1].vanishes() || seq[i].valuation() <= seq[i - 1].valuation()) return false;
    }
    return true;
}

} // namespace detail

inline void check_padic_unit_sum(const VerifyOptions&, Recorder& rec) {
    using namespace padic;
    const auto one = PAdicNumber::from_integer(detail::kP, 1, detail::kM);
    for (unsigned N = 0; N <= 5; ++N) {
        const std::string pt = "bosonic f=1 N=" + std::to_string(N);
        rec.guarded(pt, [&] {
            rec.exact(pt, bosonic_riemann_sum(IntegrandSpec{0, 0, 1, 0}, detail::padic_q(), detail::kP, N, detail::kM) == one);
        });
    }
}

inline void check_padic_convergence(const VerifyOptions&, Recorder& rec) {
    using namespace padic;
    const auto run = [&](Side side, const IntegrandSpec& f, const std::string& label) {
        rec.guarded(label, [&] {
            const auto closed = closed_form(side, f, detail::padic_q(), detail::kP, detail::kM);
            for (unsigned N = 2; N <= 5; ++N) {
                const auto s = riemann_sum(side, f, detail::padic_q(), detail::kP, N, detail::kM);
                rec.valuation_at_least(label + " N=" + std::to_string(N), s - closed, static_cast<long>(N));
            }
        });
    };
    for (unsigned k = 0; k <= 4; ++k) {
        run(Side::Bosonic, IntegrandSpec{0, k, 1, 0}, "bosonic c=0 k=" + std::to_string(k));
        run(Side::Bosonic, IntegrandSpec{-1, k, 1, 0}, "bosonic c=-1 k=" + std::to_string(k));
    }
    for (unsigned k = 0; k <= 4; ++k) {
        run(Side::Fermionic, IntegrandSpec{-1, k, Rational(6), 0}, "fermionic c=-1 lambda=6 k=" + std::to_string(k));
        run(Side::Fermionic, IntegrandSpec{0, k, Rational(6), 0}, "fermionic c=0 lambda=6 k=" + std::to_string(k));
    }
}

inline void check_padic_shift(const VerifyOptions&, Recorder& rec) {
    using namespace padic;
    const auto judge = [&](const std::string& label, auto&& at_level) {
        rec.guarded(label, [&] {
            std::vector<ShiftCheck> seq;
            std::string vals;
            for (unsigned N = 2; N <= 5; ++N) {
                seq.push_back(at_level(N));
                vals += (vals.empty() ? "" : ",") + (seq.back().vanishes() ? std::string("zero") : std::to_string(seq.back().valuation()));
            }
            bool at_least_n = true;
            for (std::size_t i = 0; i < seq.size(); ++i) at_least_n &= seq[i].valuation() >= static_cast<long>(i + 2);
            rec.custom(label + " valuations N=2..5: " + vals, seq.back().valuation(), "strictly increasing, >= N",
                       detail::increasing(seq) && at_least_n);
        });
    };
    for (int c : {0, -1})
        for (unsigned k = 0; k <= 3; ++k)
            judge("bosonic c=" + std::to_string(c) + " k=" + std::to_string(k), [&](unsigned N) {
                return check_bosonic_shift(IntegrandSpec{c, k, 1, 0}, detail::padic_q(), detail::kP, N, detail::kM);
            });
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n)
            judge("fermionic m=" + std::to_string(m) + " n=" + std::to_string(n), [&](unsigned N) {
                return check_fermionic_shift(IntegrandSpec{-1, m, Rational(6), 0}, detail::padic_q(), n, detail::kP, N,
                                             detail::kM);
            });
}

inline void check_padic_log(const VerifyOptions&, Recorder& rec) {
    using namespace padic;
    for (long a : {6L, 11L, 26L, 31L}) {
        for (long b : {6L, 16L}) {
            const std::string pt = "log(" + std::to_string(a) + "*" + std::to_string(b) + ")";
            rec.guarded(pt, [&] {
                const auto x = PAdicNumber::from_integer(detail::kP, a, detail::kM);
                const auto y = PAdicNumber::from_integer(detail::kP, b, detail::kM);
                const auto lhs = padic_log(x * y);
                const auto rhs = padic_log(x) + padic_log(y);
                rec.valuation_at_least(pt, lhs - rhs, detail::kM);
            });
        }
    }
}

/// Every registered check, in report order.
inline const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> checks{
        {"mode-agreement", "qfamilies", check_mode_agreement},
        {"boundary", "qfamilies", check_boundary_identity},
        {"distribution", "qfamilies", check_distribution_relation},
        {"addition", "qfamilies", check_addition_theorem},
        {"alternating-sum", "qfamilies", check_alternating},
        {"derivative", "qfamilies", check_derivative},
        {"genocchi-euler", "qfamilies", check_genocchi_euler},
        {"dc-tail", "qfamilies", check_dc_tail},
        {"q-limit", "qfamilies", check_q_limit},
        {"zeta-special-values", "qzeta", check_zeta_special},
        {"hurwitz-euler", "qzeta", check_hurwitz_euler},
        {"classical-bridges", "classical", check_classical_bridges},
        {"padic-unit-sum", "padic", check_padic_unit_sum},
        {"padic-convergence", "padic", check_padic_convergence},
        {"padic-shift", "padic", check_padic_shift},
        {"padic-log", "padic", check_padic_log},
    };
    return checks;
}

inline bool selected(const CheckSpec& c, const VerifyOptions& o) {
    const auto in = [](const std::vector<std::string>& v, const std::string& s) {
        return v.empty() || std::find(v.begin(), v.end(), s) != v.end();
    };
    return in(o.modules, c.module) && in(o.checks, c.name);
}

inline VerifyReport run(const VerifyOptions& o) {
    for (const auto& m : o.modules) {
        const bool known = std::any_of(registry().begin(), registry().end(), [&](const CheckSpec& c) { return c.module == m; });
        if (!known) throw DomainError("unknown module '" + m + "'");
    }
    for (const auto& n : o.checks) {
        const bool known = std::any_of(registry().begin(), registry().end(), [&](const CheckSpec& c) { return c.name == n; });
        if (!known) throw DomainError("unknown check '" + n + "'");
    }
    VerifyReport report;
    for (const auto& c : registry()) {
        if (!selected(c, o)) continue;
        Recorder rec(c.name, c.module, report);
        c.run(o, rec);
    }
    return report;
}

// --- rendering ------------------------------------------------------------

inline nlohmann::ordered_json to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchemaVersion;
    j["name"] = r.name;
    j["module"] = r.module;
    j["grid_point"] = r.grid_point;
    if (r.residual) j["residual"] = *r.residual;
    if (r.residual_valuation) j["residual_valuation"] = *r.residual_valuation;
    j["threshold"] = r.threshold;
    j["pass"] = r.pass;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline nlohmann::ordered_json summary_json(const Summary& s) {
    return {{"schema", io::kSchemaVersion}, {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}};
}

/// Whole report as one document.
inline nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchemaVersion;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        auto cj = to_json(c);
        cj.erase("schema");
        j["checks"].push_back(std::move(cj));
    }
    j["summary"] = summary_json(report.summary)["summary"];
    return j;
}

inline std::string residual_text(const CheckResult& r) {
    if (!r.error.empty()) return "error";
    if (r.residual_valuation) return "v_p=" + std::to_string(*r.residual_valuation);
    if (r.residual) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", *r.residual);
        return buf;
    }
    return "";
}

/// One row per check with the worst point, then every failing point.
inline std::string render_table(const VerifyReport& report) {
    struct Agg {
        std::string module;
        std::size_t points = 0, failed = 0;
        std::optional<double> worst;
        std::string threshold;
    };
    std::vector<std::string> order;
    std::map<std::string, Agg> agg;
    for (const auto& c : report.checks) {
        if (!agg.count(c.name)) order.push_back(c.name);
        auto& a = agg[c.name];
        a.module = c.module;
        ++a.points;
        if (!c.pass) ++a.failed;
        if (c.residual && !c.residual_valuation) a.worst = std::max(a.worst.value_or(0.0), *c.residual);
        if (a.points == 1) a.threshold = c.threshold;
        else if (a.threshold != c.threshold) a.threshold = "per point";
    }
    std::vector<std::vector<std::string>> rows{{"check", "module", "points", "failed", "worst residual", "threshold", "status"}};
    for (const auto& name : order) {
        const auto& a = agg[name];
        std::string worst = "-";
        if (a.worst) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", *a.worst);
            worst = buf;
        }
        rows.push_back({name, a.module, std::to_string(a.points), std::to_string(a.failed), worst, a.threshold,
                        a.failed == 0 ? "PASS" : "FAIL"});
    }
    std::string out = io::align_rows(rows);
    std::vector<std::vector<std::string>> fails{{"failed check", "grid point", "residual", "threshold"}};
    for (const auto& c : report.checks)
        if (!c.pass) fails.push_back({c.name, c.grid_point, c.error.empty() ? residual_text(c) : c.error, c.threshold});
    if (fails.size() > 1) out += "\n" + io::align_rows(fails);
    const auto& s = report.summary;
    out += "\nsummary: total=" + std::to_string(s.total) + " passed=" + std::to_string(s.passed) +
           " failed=" + std::to_string(s.failed) + " skipped=" + std::to_string(s.skipped) + "\n";
    return out;
}

inline std::string render(const VerifyReport& report, io::Format f) {
    std::string out;
    switch (f) {
    case io::Format::Table: return render_table(report);
    case io::Format::Jsonl:
        for (const auto& c : report.checks) out += to_json(c).dump() + "\n";
        out += summary_json(report.summary).dump() + "\n";
        return out;
    case io::Format::Csv:
        out = "name,module,grid_point,residual,residual_valuation,threshold,pass,error\n";
        for (const auto& c : report.checks)
            out += io::csv_join({c.name, c.module, c.grid_point, c.residual ? io::format_double(*c.residual) : "",
                                 c.residual_valuation ? std::to_string(*c.residual_valuation) : "", c.threshold,
                                 c.pass ? "true" : "false", c.error}) + "\n";
        return out;
    }
    return out;
}

} // namespace qlambda::verify
