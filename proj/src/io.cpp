#include "ballsbins/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ballsbins {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Parses one weight token; returns an empty string on success, else the reason.
std::string parse_weight(std::string_view token, double& value) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    return "'" + std::string(token) + "' is not a number";
  if (!std::isfinite(value))
    return "'" + std::string(token) + "' is not finite";
  if (value < 0.0)
    return "'" + std::string(token) + "' is negative";
  return {};
}

template <class T>
T parse_integer(std::string_view field, std::string_view name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw InvalidInput("csv: bad " + std::string(name) + " '" + std::string(field) + "'");
  return value;
}

double parse_real(std::string_view field, std::string_view name) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw InvalidInput("csv: bad " + std::string(name) + " '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

}  // namespace

BallSet parse_weight_file(std::istream& in) {
  std::vector<Weight> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    view = trim(view);
    if (view.empty())
      continue;
    double value = 0.0;
    if (auto why = parse_weight(view, value); !why.empty())
      throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
    weights.push_back(value);
  }
  if (weights.empty())
    throw InvalidInput("no balls");
  return BallSet(std::move(weights));
}

BallSet read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open weight file '" + path + "'");
  return parse_weight_file(in);
}

BallSet parse_weight_list(std::string_view text) {
  std::vector<Weight> weights;
  std::size_t pos = 0;
  std::size_t item = 0;
  while (pos <= text.size()) {
    const auto end = text.find_first_of(", \t\n", pos);
    const auto token = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (!token.empty()) {
      ++item;
      double value = 0.0;
      if (auto why = parse_weight(token, value); !why.empty())
        throw InvalidInput("weight " + std::to_string(item) + ": " + why);
      weights.push_back(value);
    }
    if (end == std::string_view::npos)
      break;
    pos = end + 1;
  }
  if (weights.empty())
    throw InvalidInput("no balls");
  return BallSet(std::move(weights));
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

CsvRow to_csv_row(const ExperimentStats& stats) {
  const auto& cfg = stats.config;
  CsvRow row;
  row.algorithm = std::string(to_string(cfg.algorithm));
  row.sorter = cfg.algorithm == Algorithm::greedy ? "none" : std::string(to_string(cfg.sorter.kind));
  row.n = cfg.n;
  row.m = cfg.m;
  row.repetitions = cfg.repetitions;
  row.master_seed = cfg.master_seed;
  row.mean_gap = stats.mean_gap;
  row.sigma_gap = stats.sigma_gap;
  row.min_gap = stats.min_gap;
  row.max_gap = stats.max_gap;
  row.mean_runtime_ns = std::llround(stats.mean_runtime_ns);
  return row;
}

void write_csv(std::ostream& out, std::span<const CsvRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.sorter << ',' << r.n << ',' << r.m << ',' << r.repetitions
        << ',' << r.master_seed << ',' << format_real(r.mean_gap) << ','
        << format_real(r.sigma_gap) << ',' << format_real(r.min_gap) << ','
        << format_real(r.max_gap) << ',' << r.mean_runtime_ns << '\n';
  }
}

void write_json(std::ostream& out, std::span<const CsvRow> rows) {
  auto real = [](double x) { return std::stod(format_real(x)); };
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"algorithm", r.algorithm},
                   {"sorter", r.sorter},
                   {"n", r.n},
                   {"m", r.m},
                   {"repetitions", r.repetitions},
                   {"master_seed", r.master_seed},
                   {"mean_gap", real(r.mean_gap)},
                   {"sigma_gap", real(r.sigma_gap)},
                   {"min_gap", real(r.min_gap)},
                   {"max_gap", real(r.max_gap)},
                   {"mean_runtime_ns", r.mean_runtime_ns}});
  }
  out << doc.dump(2) << '\n';
}

std::vector<CsvRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw InvalidInput("csv: missing or unexpected header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    const auto f = split(line, ',');
    if (f.size() != 11)
      throw InvalidInput("csv: expected 11 fields, got " + std::to_string(f.size()));
    CsvRow r;
    r.algorithm = std::string(f[0]);
    r.sorter = std::string(f[1]);
    r.n = parse_integer<std::uint64_t>(f[2], "n");
    r.m = parse_integer<std::uint64_t>(f[3], "m");
    r.repetitions = parse_integer<std::uint64_t>(f[4], "repetitions");
    r.master_seed = parse_integer<std::uint64_t>(f[5], "master_seed");
    r.mean_gap = parse_real(f[6], "mean_gap");
    r.sigma_gap = parse_real(f[7], "sigma_gap");
    r.min_gap = parse_real(f[8], "min_gap");
    r.max_gap = parse_real(f[9], "max_gap");
    r.mean_runtime_ns = parse_integer<std::int64_t>(f[10], "mean_runtime_ns");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ballsbins
