#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xcreg/sample.hpp"

namespace xcreg {

/// Row filter on an auxiliary CSV column, e.g. {"sex", "M"}.
struct ColumnFilter {
  std::string column;
  std::string value;
};

/// Loads the long curve format: header subject_id,component,t,value with
/// extra columns tolerated. Every (subject, component) series must sit on
/// the identical grid; the first offending row is named on failure.
/// Subjects and components keep first-appearance order.
MultiCurveSample load_long_csv(const std::string& path,
                               const std::optional<ColumnFilter>& filter = std::nullopt,
                               InterpMethod interp = InterpMethod::Linear);
MultiCurveSample parse_long_csv(std::istream& in, const std::string& origin,
                                const std::optional<ColumnFilter>& filter = std::nullopt,
                                InterpMethod interp = InterpMethod::Linear);

void write_long_csv(const std::string& path, const MultiCurveSample& sample,
                    const std::vector<std::string>& subject_ids = {});

/// Component-level curves (one value column per grid point row), used for
/// the noise-free truth sidecar.
void write_component_curves_csv(const std::string& path,
                                const std::vector<std::string>& names,
                                const std::vector<Curve>& curves);

void write_shift_table_csv(const std::string& path,
                           const std::vector<std::string>& component_names,
                           const std::vector<double>& theta_hat);

std::vector<std::string> split_csv_line(const std::string& line);

/// Deterministic shortest-roundtrip formatting used by all writers.
std::string format_double(double v);

}  // namespace xcreg
