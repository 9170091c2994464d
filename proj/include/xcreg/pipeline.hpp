#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xcreg/csv_io.hpp"
#include "xcreg/registration.hpp"

namespace xcreg {

/// End-to-end registration run as configured from a file plus CLI
/// overrides: load, optional preprocessing, pairwise + global estimation,
/// diagnostics, artifact emission.
struct PipelineConfig {
  std::string input;
  std::string output_dir;
  double window_r1 = 0.0;
  double window_r2 = 0.0;

  bool derivative = false;
  double bandwidth = 0.0;  // <= 0: 10x median grid spacing
  bool normalize = false;
  double extend_to = 0.0;  // <= 0: no constant-right extension

  MinimizerOpts minimizer;
  QuadratureSpec quadrature;
  std::optional<ColumnFilter> group_by;
  std::uint64_t seed = 0;  // recorded in the report for provenance

  static PipelineConfig from_toml_file(const std::string& path);
};

struct RegisterArtifacts {
  std::string shift_table_csv;
  std::string diagnostics_json;
  std::string curves_unaligned_csv;
  std::string curves_aligned_csv;
  std::string xd_reduction_csv;
  RegistrationResult registration;
};

/// Runs the pipeline and writes all artifacts under config.output_dir.
/// Throws xcreg::Error; the CLI maps error codes to exit statuses.
RegisterArtifacts run_register(const PipelineConfig& config);

/// Smallest interval spanning per-subject landmark intervals, optionally
/// widened to a user interval that must contain it.
SubintervalSpec overlap_window(const std::vector<std::pair<double, double>>& intervals,
                               std::optional<std::pair<double, double>> enclosing,
                               std::optional<std::pair<double, double>> domain);

}  // namespace xcreg
