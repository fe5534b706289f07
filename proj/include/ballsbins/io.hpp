#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ballsbins/core.hpp"
#include "ballsbins/experiments.hpp"

namespace ballsbins {

/// Raised when an output file cannot be written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Weight file: one non-negative decimal per line, '#' starts a comment,
/// blank lines are skipped. Errors name the offending line (1-based).
BallSet parse_weight_file(std::istream& in);
BallSet read_weight_file(const std::string& path);

/// Comma- or whitespace-separated weights, e.g. "1,1,2,3".
BallSet parse_weight_list(std::string_view text);

/// One line of experiment output.
struct CsvRow {
  std::string algorithm;
  std::string sorter;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t repetitions = 0;
  std::uint64_t master_seed = 0;
  double mean_gap = 0.0;
  double sigma_gap = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
  std::int64_t mean_runtime_ns = 0;

  bool operator==(const CsvRow&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "algorithm,sorter,n,m,repetitions,master_seed,mean_gap,sigma_gap,min_gap,max_gap,"
    "mean_runtime_ns";

/// Reals are written with 9 significant digits.
std::string format_real(double x);

CsvRow to_csv_row(const ExperimentStats& stats);

void write_csv(std::ostream& out, std::span<const CsvRow> rows);
void write_json(std::ostream& out, std::span<const CsvRow> rows);
/// Inverse of write_csv; throws InvalidInput on a malformed table.
std::vector<CsvRow> parse_csv(std::istream& in);

}  // namespace ballsbins
