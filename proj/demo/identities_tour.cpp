// Walks through a few identities and prints both sides.
#include "thetalab/cubic_agm.hpp"
#include "thetalab/double_product.hpp"
#include "thetalab/landen.hpp"
#include "thetalab/qseries.hpp"

#include <cstdio>
#include <iostream>

using namespace thetalab;

namespace {

void show(const char* what, Complex lhs, Complex rhs) {
    std::printf("%-34s %+.15f%+.15fi  %+.15f%+.15fi  |diff| %.1e\n", what, lhs.real(), lhs.imag(), rhs.real(),
                rhs.imag(), std::abs(lhs - rhs));
}

} // namespace

int main() {
    const TauPoint tau(Complex(0.3, 1.2));
    std::cout << "tau = " << format_complex(tau.value()) << "\n\n";

    for (int p : {2, 3, 5})
        show(("landen p=" + std::to_string(p)).c_str(), landen_ratio(p, Complex(0.11, 0.03), tau), landen_rhs(p, tau));

    const SidePair dp = double_product_split(ProductKind::k33, 0.13, Complex(0.2, -0.05), tau, Complex(0, 1.1));
    show("theta3*theta3 as genus-2 sum", dp.lhs, dp.rhs);
    const SidePair dup = duplication(ProductKind::k11, 0.2, 0.1, tau);
    show("theta1*theta1 via 2 tau", dup.lhs, dup.rhs);

    const double q = 0.3;
    const Complex a = abc_value(AbcKind::a, Nome::from_value(q), std::nullopt);
    const Complex b = abc_value(AbcKind::b, Nome::from_value(q), std::nullopt);
    const Complex c = abc_value(AbcKind::c, Nome::from_value(q), std::nullopt);
    show("a^3 vs b^3 + c^3 at q=0.3", a * a * a, b * b * b + c * c * c);

    const IdentityReport off = cubic_identity(0.2, Complex(0.5));
    std::printf("%-34s residual %.3e (two-parameter series, r^2 != q)\n", "a^3 vs b^3 + c^3 off diagonal",
                off.residual);

    std::cout << "\ntheta3(q)^4 coefficients, q^0..q^9:\n";
    const TruncatedSeries t = expand_product(ProductFamily::theta3, 10).pow(4);
    for (int n = 0; n < 10; ++n) std::cout << ' ' << t.coefficient(n);
    std::cout << "\nquartic identity to q^200: " << (formal_verify("quartic", 200).passed ? "exact" : "broken")
              << '\n';
}
