#include "fraclap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap::oracle {
namespace {
using std::numbers::pi;
}

void QuadratureRule::validate() const {
  if (nodes < 3) throw DomainError("quadrature rule needs at least 3 nodes");
  if (kind == Kind::simpson && nodes % 2 == 0) {
    throw DomainError("Simpson rule needs an odd node count");
  }
  if (!(hi > lo)) throw DomainError("quadrature interval must satisfy lo < hi");
}

std::vector<double> QuadratureRule::weights() const {
  validate();
  const double h = step();
  std::vector<double> w(static_cast<std::size_t>(nodes));
  const auto last = w.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    if (kind == Kind::trapezoid) {
      w[i] = (i == 0 || i == last) ? h / 2.0 : h;
    } else {
      w[i] = (i == 0 || i == last) ? h / 3.0 : (i % 2 == 1 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    }
  }
  return w;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
  const auto w = rule.weights();
  const double h = rule.step();
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double x = i + 1 == w.size() ? rule.hi : rule.lo + static_cast<double>(i) * h;
    acc += w[i] * f(x);
  }
  return acc;
}

OracleValue coefficient_oracle(const Field& field, std::int64_t k, const QuadratureRule& rule) {
  if (k < 1) throw DomainError("mode index must be >= 1");
  const auto* grid = std::get_if<Grid1D>(&field.grid);
  if (grid == nullptr) throw DomainError("coefficient_oracle needs a 1D field");
  if (static_cast<std::int64_t>(grid->size()) != rule.nodes || grid->lo() != rule.lo ||
      grid->hi() != rule.hi) {
    throw DomainError("field grid does not match the quadrature nodes");
  }
  const auto w = rule.weights();
  const double h = rule.step();
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double x = rule.lo + static_cast<double>(i) * h;
    acc += w[i] * field.values[i] * std::sin(static_cast<double>(k) * pi * (x + 1.0) / 2.0);
  }
  return {acc, rule.nodes < 8 * k};
}

double apply_spectral_operator(std::span<const double> coeffs, double s, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    const double kk = static_cast<double>(i + 1);
    acc += std::pow(kk * pi / 2.0, 2.0 * s) * coeffs[i] * std::sin(kk * pi * (x + 1.0) / 2.0);
  }
  return acc;
}

double classical_reference(ClassicalProblem problem, double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("classical_reference: point outside [-1,1]");
  switch (problem) {
    case ClassicalProblem::constant_rhs_1d:
      return (1.0 - x) * (1.0 + x) / 2.0;
    case ClassicalProblem::dirac_1d:
      return (1.0 - std::fabs(x)) / 2.0;
  }
  return 0.0;
}

double discrete_laplacian_residual(const Field& field2d, double h) {
  const auto* grid = std::get_if<Grid2D>(&field2d.grid);
  if (grid == nullptr) throw DomainError("discrete_laplacian_residual needs a 2D field");
  const std::size_t nx = grid->x().size();
  const std::size_t ny = grid->y().size();
  if (nx < 5 || ny < 5) throw DomainError("grid too coarse for the 5-point residual");
  const auto close = [h](double step) { return std::fabs(step - h) <= 1e-9 * h; };
  if (!close(grid->x().step()) || !close(grid->y().step())) {
    throw DomainError("grid spacing does not match h");
  }
  double worst = 0.0;
  for (std::size_t iy = 1; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 1; ix + 1 < nx; ++ix) {
      const double lap = (field2d.at(ix + 1, iy) + field2d.at(ix - 1, iy) +
                          field2d.at(ix, iy + 1) + field2d.at(ix, iy - 1) -
                          4.0 * field2d.at(ix, iy)) /
                         (h * h);
      worst = std::max(worst, std::fabs(lap));
    }
  }
  return worst;
}

double five_point_laplacian(const std::function<double(double, double)>& f, double x, double y,
                            double h) {
  return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
}

}  // namespace fraclap::oracle
