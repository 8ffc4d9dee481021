#pragma once

// Closed-form reference functions used by the tests.

namespace susyq::ref {

/// Fourth-order partner for e = -11/2, -9/2, -7/2, -5/2 with parities
/// (-, +, -, +): explicit rational potential.
double quartic_example_potential(double x);

/// 8(2x^4 - 8x^2 + 15)x^4 + 45, the polynomial part of its Wronskian.
double quartic_example_denominator(double x);

/// Added states at e_2 = -9/2 and e_4 = -5/2 of the same partner.
double quartic_example_phi2(double x);
double quartic_example_phi4(double x);

/// First-order partner eigenfunctions written with 1F1 (evaluated through the
/// MPFR reference): odd seed at energy eps acting on psi_n, and even seed
/// acting on chi_n. The odd case carries 4n/3 in front of 1F1(1-n, 5/2; x^2);
/// a constant 4/3 would leave a non-solution at n = 0.
double first_order_odd_image(int n, double eps, double x);
double first_order_even_image(int n, double eps, double x);

}  // namespace susyq::ref
