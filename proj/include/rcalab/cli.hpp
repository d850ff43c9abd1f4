#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcalab/io.hpp"

namespace rcalab {

/// Checks in execution order.
const std::vector<std::string>& check_names();

struct RunConfig {
  int ell = 9;
  int n = 3;
  int k = 2;
  std::optional<std::string> word;  // control word override, length l
  std::string gates = "standard";
  std::uint64_t budget = default_budget();
  std::uint64_t seed = 1;
  std::optional<std::string> report_path;
  std::vector<std::string> checks;  // empty: all
  std::optional<Perm> involution;   // F override
  int samples = 10;                 // random cases per identity check
  int certificate_ell = 6;          // window length for sample certificates

  /// Throws ConfigInvalid.
  void validate() const;
  bool selected(const std::string& check) const;
  /// w = override or 0^{l-1}1.
  Word control_word() const;
};

struct CheckRecord {
  std::string check;
  io::Json parameters = io::Json::object();
  bool verdict = false;
  std::string status;
  io::Json witness;  // null unless a counterexample or failure note exists
  double elapsed_ms = 0;
  std::string provenance;  // "exhaustive" or "probabilistic"
  io::Json details = io::Json::object();
};

struct Report {
  io::Json config = io::Json::object();
  std::vector<CheckRecord> records;
  std::vector<std::string> limitations;
  bool ok() const;
};

/// Runs the selected checks in dependency order; check failures are recorded, not thrown.
Report run(const RunConfig& config);

io::Json to_json(const Report& report, bool timing = true);
std::string summary(const Report& report);

/// F for width n: the configured one, the built-in width-3 involution, or the
/// first hit of search_universal_involution(n, min(n + 3, 10)).
std::optional<Perm> choose_involution(int n, std::uint64_t seed);

}  // namespace rcalab
