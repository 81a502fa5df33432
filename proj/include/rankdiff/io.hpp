#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "rankdiff/degenerate.hpp"
#include "rankdiff/localtime.hpp"
#include "rankdiff/mc.hpp"
#include "rankdiff/pathgen.hpp"
#include "rankdiff/stationary.hpp"

namespace rankdiff {

/// Locale-independent decimal rendering at 17 significant digits (the
/// shortest round-trip-safe width for doubles).
std::string format_number(double v);

/// Flat key = value document: one pair per line, '#' comments, blank lines
/// ignored. All values parse as doubles; malformed lines are errors.
std::map<std::string, double> parse_config(std::istream& in);
std::map<std::string, double> parse_config_file(const std::string& path);

// CSV exports; header row then newline-terminated data rows.
void write_path_csv(std::ostream& out, const PathBundle& b);
void write_degenerate_csv(std::ostream& out, const DegenerateBundle& b);
void write_histogram_csv(std::ostream& out, const Histogram2D& h);
void write_density_grid_csv(std::ostream& out, const SumExpDensity& d, double upper,
                            std::size_t n);
void write_identity_csv(std::ostream& out, const IdentityReport& rep);

/// JSON run manifest: parameters, grid, seeds, thresholds, library version,
/// wall time. Everything needed to regenerate the artifacts.
std::string make_manifest(const Scenario& s, const std::string& command, double wall_seconds);

/// Structured error record for standard error: {"code", "module", "message"}.
std::string error_record(const std::string& code, const std::string& module,
                         const std::string& message);

// process exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInternalError = 2;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rankdiff
