#include "bstick/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bstick/combinatorics.hpp"
#include "bstick/errors.hpp"

namespace bstick {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

constexpr unsigned kMaxDepth = 15;
constexpr double kRelativeTolerance = 1e-13;
constexpr double kConvergedError = 1e-10;

void require_lemma3_args(int k, int n, int j) {
  if (k < 4 || k > 6) throw InvalidArgument("lemma3: k must be 4, 5 or 6, got " + std::to_string(k));
  if (n < k) throw InvalidArgument("lemma3: need n >= k");
  if (j < 1 || j > n - k + 2) throw InvalidArgument("lemma3: need 1 <= j <= n-k+2");
}

}  // namespace

Rational lemma3_rhs(int k, int n, int j) {
  require_lemma3_args(k, n, j);
  const Rational base = Rational(n - k + 2, j) + 1;
  return -(Rational(j).pow(static_cast<unsigned long>(k - 3)) *
           pochhammer(base, static_cast<unsigned long>(k - 2)))
              .reciprocal();
}

Lemma3Result lemma3_residual(int k, int n, int j) {
  require_lemma3_args(k, n, j);
  const double jd = j;
  const double decay = n - k + 2;
  const double cutoff = 16.0 * std::log(10.0) / decay;

  double worst_error = 0.0;
  auto integrate = [&](const std::function<double(double)>& f, double upper) {
    // Integrate over [0, 1] and rescale.
    double error = 0.0;
    const double value =
        Rule::integrate([&](double u) { return f(upper * u); }, 0.0, 1.0, kMaxDepth, kRelativeTolerance, &error);
    worst_error = std::max(worst_error, error * upper);
    return upper * value;
  };

  // Integrand in variable x_level given the sum `tail` of x_{level+1}..x_{k-2}.
  // x_2 carries the bracketed difference; each higher variable integrates the
  // one below it over [0, x_level].
  std::function<double(int, double, double)> integrand = [&](int level, double x, double tail) -> double {
    if (level == 2) return std::exp(-jd * (tail + x)) * std::expm1(-jd * x);
    return integrate([&, level, x, tail](double inner) { return integrand(level - 1, inner, tail + x); }, x);
  };

  Lemma3Result result;
  result.lhs = integrate([&](double x) { return std::exp(-decay * x) * integrand(k - 2, x, 0.0); }, cutoff);
  result.rhs = lemma3_rhs(k, n, j).to_double();
  result.residual = std::abs(result.lhs - result.rhs);
  result.error_estimate = worst_error;
  result.converged = std::isfinite(result.lhs) && worst_error <= kConvergedError;
  return result;
}

}  // namespace bstick
