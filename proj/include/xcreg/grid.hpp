#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "xcreg/errors.hpp"

namespace xcreg {

/// Strictly increasing time grid shared by the curves of a sample.
/// Copies are cheap: the point vector is immutable and shared.
class Grid {
 public:
  Grid() = default;

  explicit Grid(std::vector<double> points)
      : points_(std::make_shared<const std::vector<double>>(std::move(points))) {
    validate();
  }

  /// Uniform grid start, start+step, ..., stop (inclusive within rounding).
  static Grid uniform(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop > start)) {
      throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                  "Grid::uniform requires stop > start and step > 0");
    }
    const auto count = static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
    std::vector<double> pts(count);
    for (std::size_t k = 0; k < count; ++k) pts[k] = start + static_cast<double>(k) * step;
    return Grid(std::move(pts));
  }

  std::size_t size() const { return points_ ? points_->size() : 0; }
  double operator[](std::size_t i) const { return (*points_)[i]; }
  double front() const { return points_->front(); }
  double back() const { return points_->back(); }
  std::span<const double> points() const {
    return points_ ? std::span<const double>(*points_) : std::span<const double>();
  }

  double median_spacing() const {
    std::vector<double> gaps(size() - 1);
    for (std::size_t i = 0; i + 1 < size(); ++i) gaps[i] = (*points_)[i + 1] - (*points_)[i];
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return gaps[gaps.size() / 2];
  }

  bool same_as(const Grid& other) const {
    if (points_ == other.points_) return true;
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if ((*points_)[i] != (*other.points_)[i]) return false;
    }
    return true;
  }

  /// Index i with grid[i] <= t <= grid[i+1]. Ends are clamped within a
  /// small relative tolerance so roundoff at domain boundaries is not fatal.
  std::size_t segment_index(double t) const;

 private:
  void validate() const {
    if (!points_ || points_->size() < 2) {
      throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                  "Grid needs at least 2 points");
    }
    for (std::size_t i = 0; i < points_->size(); ++i) {
      if (!std::isfinite((*points_)[i])) {
        throw_error(ErrorKind::NonFinite, ErrorCode::InvariantViolation,
                    "Grid point " + std::to_string(i) + " is not finite");
      }
      if (i > 0 && !((*points_)[i] > (*points_)[i - 1])) {
        throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                    "Grid must be strictly increasing at index " + std::to_string(i));
      }
    }
  }

  std::shared_ptr<const std::vector<double>> points_;
};

}  // namespace xcreg
