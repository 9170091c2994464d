#pragma once

#include <cmath>
#include <string>

#include "xcreg/errors.hpp"
#include "xcreg/grid.hpp"

namespace xcreg {

/// Integration window [r1, r2] inside the data domain [t0, tmax].
///
/// Shifting a curve by tau and evaluating it on the window needs
/// t - tau to stay inside [t0, tmax] for every t in [r1, r2], so the
/// admissible shift range is [-(tmax - r2), r1 - t0]. A window flush with
/// a domain edge is legal (used for whole-domain integrals) but yields a
/// degenerate range on that side; shift estimation rejects it.
struct SubintervalSpec {
  double r1 = 0.0;
  double r2 = 0.0;
  double t0 = 0.0;
  double tmax = 0.0;

  SubintervalSpec() = default;
  SubintervalSpec(double r1_, double r2_, double t0_, double tmax_)
      : r1(r1_), r2(r2_), t0(t0_), tmax(tmax_) {
    if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(t0) ||
        !std::isfinite(tmax)) {
      throw_error(ErrorKind::NonFinite, ErrorCode::InvariantViolation,
                  "SubintervalSpec bounds must be finite");
    }
    if (!(t0 <= r1 && r1 < r2 && r2 <= tmax)) {
      throw_error(ErrorKind::InvalidArgument, ErrorCode::InvariantViolation,
                  "SubintervalSpec requires t0 <= r1 < r2 <= tmax, got r1=" +
                      std::to_string(r1) + " r2=" + std::to_string(r2));
    }
  }

  static SubintervalSpec full(const Grid& grid) {
    return SubintervalSpec(grid.front(), grid.back(), grid.front(), grid.back());
  }

  double shift_lo() const { return -(tmax - r2); }
  double shift_hi() const { return r1 - t0; }
  double length() const { return r2 - r1; }

  /// True when the admissible range straddles zero with positive length.
  bool shift_range_usable() const { return shift_lo() < 0.0 && shift_hi() > 0.0; }
};

}  // namespace xcreg
