#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xcreg/curve.hpp"
#include "xcreg/errors.hpp"

namespace xcreg {

/// n subjects x p components of curves sharing one grid.
class MultiCurveSample {
 public:
  MultiCurveSample() = default;

  MultiCurveSample(Grid grid, std::size_t n, std::size_t p,
                   std::vector<std::vector<double>> values_row_major,
                   std::vector<std::string> component_names = {},
                   InterpMethod interp = InterpMethod::Linear);

  /// Assembles from prebuilt curves (subject-major); grids must all match.
  MultiCurveSample(std::size_t n, std::size_t p, std::vector<Curve> curves,
                   std::vector<std::string> component_names = {});

  std::size_t n_subjects() const { return n_; }
  std::size_t n_components() const { return p_; }
  const Grid& grid() const { return grid_; }
  const std::vector<std::string>& component_names() const { return names_; }

  const Curve& curve(std::size_t subject, std::size_t component) const {
    return curves_[subject * p_ + component];
  }
  Curve& curve(std::size_t subject, std::size_t component) {
    return curves_[subject * p_ + component];
  }
  const std::vector<Curve>& curves() const { return curves_; }

  /// All curves of one subject, component order.
  std::vector<Curve> subject_curves(std::size_t subject) const;

  MultiCurveSample map_curves(const std::function<Curve(const Curve&)>& fn) const;

 private:
  void check_invariants() const;

  Grid grid_;
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<Curve> curves_;  // subject-major, n_*p_
  std::vector<std::string> names_;
};

}  // namespace xcreg
