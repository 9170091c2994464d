#include "xcreg/registration.hpp"

#include "xcreg/parallel.hpp"

namespace xcreg {

RegistrationResult register_components(const MultiCurveSample& sample,
                                       const SubintervalSpec& window,
                                       const RegistrationOptions& opts) {
  const std::size_t p = sample.n_components();
  RegistrationResult result;
  result.pairs = component_pairs(p);
  result.pairwise.resize(result.pairs.size());

  parallel_for(result.pairs.size(), [&](std::size_t r) {
    const auto [j, k] = result.pairs[r];
    PairwiseCriterion criterion(sample, j, k, window, opts.quad);
    result.pairwise[r] = estimate_pairwise_shift(criterion, opts.minimizer);
  });

  std::vector<double> taus(result.pairs.size());
  for (std::size_t r = 0; r < taus.size(); ++r) taus[r] = result.pairwise[r].tau_hat;
  result.global = solve_global_shifts(taus, p, sample.component_names());
  return result;
}

}  // namespace xcreg
