#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mubs/mub_core.hpp"

namespace mubs {

/// One named pass/fail line of a verification run.
struct CheckEntry {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  std::uint64_t checked = 0;
  std::string witness;  // empty when passed
  std::string detail;
};

struct VerificationReport {
  std::size_t n = 0;
  std::string poly;
  std::vector<CheckEntry> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const std::vector<CheckEntry>& more);
  std::string to_text() const;
};

// Exhaustive coefficient-level suites over all j < 2^n (n <= 20).

/// b_{s,t}(j) from its definition depends only on s+t and equals coeff_b.
CheckEntry check_entanglement_structure(const MubContext& ctx);
/// compose_from_generators reproduces build_circuit for every j.
CheckEntry check_linear_relation(const MubContext& ctx);
/// Exact totals 2^n.3n/2, 2^n.(n^2-n)/4 and 2^n.(n-u)/2, plus the
/// (n^2+7n)/2 per-circuit bound.
std::vector<CheckEntry> check_gate_statistics(const MubContext& ctx);

}  // namespace mubs
