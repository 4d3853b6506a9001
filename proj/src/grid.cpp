#include "fraclap/grid.hpp"

#include <string>

namespace fraclap {

Grid1D::Grid1D(std::size_t points, double lo, double hi) : points_(points), lo_(lo), hi_(hi) {
  if (points < 2) throw DomainError("grid needs at least 2 points");
  if (!(hi > lo)) throw DomainError("grid interval must satisfy lo < hi");
}

double Grid1D::operator[](std::size_t i) const {
  if (i == 0) return lo_;
  if (i + 1 == points_) return hi_;
  // Index from the nearer end so that symmetric grids produce exactly
  // mirrored nodes.
  const double n = static_cast<double>(points_ - 1);
  const double t = static_cast<double>(i);
  if (2 * i == points_ - 1) return lo_ + (hi_ - lo_) * 0.5;
  if (2 * i < points_ - 1) return lo_ + (hi_ - lo_) * (t / n);
  return hi_ - (hi_ - lo_) * ((n - t) / n);
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(points_);
  for (std::size_t i = 0; i < points_; ++i) out[i] = (*this)[i];
  return out;
}

std::string_view to_string(Formulation f) {
  return f == Formulation::riesz ? "riesz" : "spectral";
}

Field::Field(std::variant<Grid1D, Grid2D> g, std::vector<double> v, Formulation f,
             TruncationPolicy t, FracPower power)
    : grid(std::move(g)), values(std::move(v)), formulation(f), truncation(t), s(power) {
  if (values.size() != point_count()) {
    throw DomainError("field has " + std::to_string(values.size()) + " values for " +
                      std::to_string(point_count()) + " grid points");
  }
}

std::size_t Field::point_count() const {
  return std::visit([](const auto& grid) { return grid.size(); }, grid);
}

double Field::at(std::size_t ix, std::size_t iy) const {
  if (const auto* g2 = std::get_if<Grid2D>(&grid)) return values.at(g2->index(ix, iy));
  if (iy != 0) throw DomainError("1D field indexed with iy != 0");
  return values.at(ix);
}

}  // namespace fraclap
