#pragma once

#include <functional>
#include <vector>

#include "xcreg/grid.hpp"

namespace xcreg {

enum class InterpMethod { Linear, CubicNatural };

// Evaluation beyond the last grid point. ConstantRight holds the final
// value, matching how growth records are padded into adulthood.
enum class ExtensionPolicy { None, ConstantRight };

/// A sampled function on a Grid. Immutable after construction; evaluation
/// interpolates between nodes and reproduces stored values exactly at nodes.
class Curve {
 public:
  Curve() = default;
  Curve(Grid grid, std::vector<double> values,
        InterpMethod interp = InterpMethod::Linear,
        ExtensionPolicy ext = ExtensionPolicy::None);

  double evaluate(double t) const;

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  InterpMethod interp() const { return interp_; }
  ExtensionPolicy extension() const { return ext_; }

  double domain_lo() const { return grid_.front(); }
  double domain_hi() const { return grid_.back(); }

  /// Same grid and interpolation, new values.
  Curve with_values(std::vector<double> values) const {
    return Curve(grid_, std::move(values), interp_, ext_);
  }
  Curve with_extension(ExtensionPolicy ext) const {
    return Curve(grid_, values_, interp_, ext);
  }

  /// Natural-spline second derivatives at nodes; empty for linear curves.
  const std::vector<double>& spline_moments() const { return moments_; }

 private:
  Grid grid_;
  std::vector<double> values_;
  InterpMethod interp_ = InterpMethod::Linear;
  ExtensionPolicy ext_ = ExtensionPolicy::None;
  std::vector<double> moments_;
};

/// Sample a callable onto a grid.
Curve sample_curve(const Grid& grid, const std::function<double(double)>& f,
                   InterpMethod interp = InterpMethod::Linear);

}  // namespace xcreg
