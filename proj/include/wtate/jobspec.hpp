#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtate/resolution.hpp"

namespace wtate {

/// Problem in a job specification, located by 1-based line and column.
class SpecError : public Error {
 public:
  SpecError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        detail_(what),
        line_(line),
        column_(column) {}
  /// The message without its location.
  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string detail_;
  std::size_t line_, column_;
};

/// Inclusive integer range written "LO..HI".
using Range = std::pair<int, int>;

/// Parses "LO..HI" (LO <= HI, both possibly negative).
std::optional<Range> parse_range(std::string_view text);

struct ModuleSpec {
  /// "quotient-by-ideal" or "cokernel".
  std::string kind;
  /// Ideal generators (quotient-by-ideal).
  std::vector<std::string> generators;
  /// Cokernel: generator degrees of the target and the matrix by rows; each
  /// column is one relation.
  std::vector<int> ambient_degrees;
  std::vector<std::vector<std::string>> matrix;
};

/// Options a job file may preset; command-line flags override them.
struct JobDefaults {
  std::optional<Range> twists;
  std::optional<int> imax;
  std::optional<int> r;
  std::optional<int> steps;
  std::optional<Range> range;
  std::optional<std::size_t> max_dimension;
};

struct JobSpec {
  std::string name;
  /// Weights sorted nondecreasing; variable k of the ring is variable
  /// permutation[k] of the file.
  std::vector<int> weights;
  std::vector<int> permutation;
  std::uint32_t characteristic = 32003;
  std::vector<std::string> vars;
  ModuleSpec module;
  JobDefaults defaults;
};

/// Parses a job document (a JSON object). Every error is a SpecError.
JobSpec parse_job_spec(std::string_view text);
JobSpec load_job_spec(const std::string& path);

/// Ring and module described by the job. Polynomial errors are reported as
/// SpecError pointing into `text` when it is given.
WeightedRing build_ring(const JobSpec& job);
ModulePresentation build_module(const JobSpec& job, std::string_view text = {});

}  // namespace wtate
