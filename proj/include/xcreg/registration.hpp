#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "xcreg/global_shift.hpp"
#include "xcreg/pairwise.hpp"

namespace xcreg {

struct RegistrationOptions {
  QuadratureSpec quad;
  MinimizerOpts minimizer;
};

/// Full cross-component registration of one sample: every pairwise shift
/// (lexicographic order, estimated concurrently), then the global solve.
struct RegistrationResult {
  GlobalShiftResult global;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<PairwiseShift> pairwise;

  bool any_censored() const {
    for (const auto& s : pairwise)
      if (s.censored) return true;
    return false;
  }
  bool any_multimodal() const {
    for (const auto& s : pairwise)
      if (s.near_minima.size() > 1) return true;
    return false;
  }
};

RegistrationResult register_components(const MultiCurveSample& sample,
                                       const SubintervalSpec& window,
                                       const RegistrationOptions& opts = {});

}  // namespace xcreg
