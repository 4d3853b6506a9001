#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/frac_power.hpp"
#include "fraclap/summation.hpp"

namespace fraclap {

/// Uniform nodes lo = x_0 < ... < x_{n-1} = hi, endpoints included.
class Grid1D {
 public:
  Grid1D(std::size_t points, double lo = -1.0, double hi = 1.0);

  std::size_t size() const { return points_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double step() const { return (hi_ - lo_) / static_cast<double>(points_ - 1); }

  // Endpoints are returned exactly; the midpoint of a symmetric grid is 0.
  double operator[](std::size_t i) const;
  std::vector<double> nodes() const;

 private:
  std::size_t points_;
  double lo_;
  double hi_;
};

/// Tensor grid on a rectangle; row-major with x varying fastest.
class Grid2D {
 public:
  Grid2D(Grid1D x, Grid1D y) : x_(std::move(x)), y_(std::move(y)) {}
  explicit Grid2D(std::size_t points_per_axis)
      : x_(points_per_axis), y_(points_per_axis) {}

  const Grid1D& x() const { return x_; }
  const Grid1D& y() const { return y_; }
  std::size_t size() const { return x_.size() * y_.size(); }
  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * x_.size() + ix; }

 private:
  Grid1D x_;
  Grid1D y_;
};

enum class Formulation { riesz, spectral };

std::string_view to_string(Formulation f);

/// Samples of a solution bound to the grid and the parameters that made them.
struct Field {
  std::variant<Grid1D, Grid2D> grid;
  std::vector<double> values;
  Formulation formulation;
  TruncationPolicy truncation;
  FracPower s;

  Field(std::variant<Grid1D, Grid2D> g, std::vector<double> v, Formulation f,
        TruncationPolicy t, FracPower power);

  std::size_t point_count() const;
  double at(std::size_t ix, std::size_t iy) const;
};

}  // namespace fraclap
