// Exact and floating evaluation of the deformed families, a q-zeta special
// value, and p-adic Riemann sums approaching their limit.

#include <iostream>

#include "qlambda/qlambda.hpp"

using namespace qlambda;

int main() {
    // Exact: q = 1/2, lambda = -1.
    const DeformParams<Rational> exact(Rational(1, 2), RootOfUnity(2, 1));
    for (unsigned n = 0; n <= 3; ++n)
        std::cout << "beta_" << n << " = " << beta_q(n, exact) << "   B_" << n << " = " << big_b_q(n, exact) << "\n";

    // lambda a primitive cube root of unity, exact in Q(zeta_3) and in complex floats.
    const RootOfUnity w(3, 1);
    const Cyclotomic e2 = euler_q(2, DeformParams<Cyclotomic>(Cyclotomic(Rational(1, 2)), w), 1.0);
    const Complex e2f = euler_q(2, DeformParams<Complex>(Complex(0.5), w), 1.0, Mode::Series);
    std::cout << "E_2(w, 1): exact " << io::format_short(to_complex(e2).real()) << ","
              << io::format_short(to_complex(e2).imag()) << "  series " << io::format_short(e2f.real()) << ","
              << io::format_short(e2f.imag()) << "\n";

    // zeta*_q(lambda, 1-k) against -B_k/k.
    const DeformParams<Complex> cp(Complex(0.5), RootOfUnity(4, 1));
    const auto sv = zeta_special_value(SpecialKind::Second, 3, cp);
    const Complex z = zeta_q_second(cp.lambda, Complex(-2.0), cp.q);
    std::cout << "|zeta*(i, -2) + B_3/3| = " << std::abs(z - sv.series_value) << "\n";

    // Fermionic sums at p = 5, q = 6 converge to E_{2,q}(6).
    const padic::IntegrandSpec f{-1, 2, Rational(6), 0};
    const auto limit = padic::closed_form(padic::Side::Fermionic, f, Rational(6), 5, 12);
    for (unsigned N = 1; N <= 4; ++N) {
        const auto s = padic::fermionic_riemann_sum(f, Rational(6), 5, N, 12);
        std::cout << "N = " << N << "  S_N = " << s.to_string() << "  v_5(S_N - limit) = " << (s - limit).valuation()
                  << "\n";
    }
}
