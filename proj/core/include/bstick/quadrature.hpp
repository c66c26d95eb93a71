#pragma once

#include "bstick/rational.hpp"

namespace bstick {

/// Closed form -j^{-(k-3)} / ((n-k+2)/j + 1)_{k-2} of the iterated integral
///
///   int_0^inf e^{-(n-k+2) x_{k-2}} int_0^{x_{k-2}} ... int_0^{x_3}
///     [e^{-j(2x_2 + x_3 + ... + x_{k-2})} - e^{-j(x_2 + ... + x_{k-2})}]
///     dx_2 ... dx_{k-2}.
Rational lemma3_rhs(int k, int n, int j);

struct Lemma3Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  // Largest error estimate reported by any quadrature level.
  double error_estimate = 0.0;
  bool converged = false;
};

/// Evaluates the iterated integral above by nested adaptive Gauss-Kronrod
/// quadrature and compares it with lemma3_rhs converted to double.
///
/// The outer improper integral is truncated at X with e^{-(n-k+2)X} = 1e-16;
/// inner integrals use their exact bounds. Supports k in {4, 5, 6},
/// n >= k and 1 <= j <= n-k+2; throws InvalidArgument otherwise.
/// Non-convergence is reported through `converged`, not thrown.
Lemma3Result lemma3_residual(int k, int n, int j);

}  // namespace bstick
