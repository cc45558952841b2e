#pragma once

// Job configuration, task dispatch and report rendering behind the
// `weylindex` command line tool. The configuration and structured output
// formats are JSON with every rational written as a decimal string; see
// docs/config-format.md.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylindex/indices.hpp"
#include "weylindex/polytope.hpp"
#include "weylindex/rootsys.hpp"

namespace weylindex {

enum class MethodChoice { monomial, polarization, both };
enum class OutputFormat { text, structured };

struct TaskSpec {
  enum class Kind { degree, chern, euler, orbits, regularity, mixed };
  Kind kind;
  int parameter = -1;  // i for chern tasks
  std::string label;   // as written in the config, e.g. "chern:1"
};

struct JobConfig {
  std::vector<CartanType> factors;
  int central_rank = 0;
  std::string lattice_name = "simply_connected";
  std::optional<linalg::Matrix> lattice_basis;  // columns are basis vectors
  std::optional<WeightVector> highest_weight;
  std::vector<WeightVector> weights;
  std::vector<std::vector<WeightVector>> weight_lists;
  std::vector<TaskSpec> tasks;
  MethodChoice method = MethodChoice::monomial;
  bool flag_path = false;

  RootSystem root_system() const;
  LatticeSpec lattice() const;
  /// Either {highest_weight} or the explicit weight list.
  std::vector<WeightVector> representation_weights() const;
};

MethodChoice parse_method(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Parses and validates a job. Throws Error(Errc::config_invalid) (or a more
/// specific code) with the offending line or field path in the message.
JobConfig parse_config(std::string_view text);

struct PathValue {
  std::string path;  // "direct/monomial", "direct/polarization", "flag"
  Rational value;
};

struct IndexReport {
  std::string task;
  std::string quantity;
  int parameter = -1;
  std::string group;
  std::string lattice;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  bool regular = false;
  std::string regularity_reason;
  std::optional<Rational> value;
  std::vector<PathValue> paths;
  bool degenerate = false;
  std::vector<CensusRow> census;
  double seconds = 0;  // wall time; shown in text output only
};

/// One report per task, in config order. Tasks run on up to
/// WEYLINDEX_THREADS worker threads. Throws Errc::cross_check_failed when
/// two paths disagree or a value is not an integer.
std::vector<IndexReport> run(const JobConfig& config);

/// Text: an aligned table. Structured: deterministic JSON with integers as
/// decimal strings and no timing information.
std::string render(const std::vector<IndexReport>& reports, OutputFormat format);

/// Reads structured output back (timing is not part of it).
std::vector<IndexReport> parse_reports(std::string_view structured);

inline constexpr int kSchemaVersion = 1;

}  // namespace weylindex
