#pragma once

// Data-parallel sweeps. Each kernel exists twice with identical signatures:
// `serial` is the reference implementation, `omp` distributes the outer loop
// with OpenMP and must return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mubs/mub_core.hpp"
#include "mubs/verify_sim.hpp"

namespace mubs::kernels {

struct PairSweep {
  std::uint64_t pairs = 0;
  double max_deviation = 0.0;
  /// Lexicographically first pair attaining max_deviation.
  std::size_t worst_a = 0;
  std::size_t worst_b = 0;

  friend bool operator==(const PairSweep&, const PairSweep&) = default;
};

struct EquivalenceSweep {
  double max_deviation = 0.0;
  std::uint64_t worst_j = 0;

  friend bool operator==(const EquivalenceSweep&, const EquivalenceSweep&) = default;
};

namespace serial {
std::vector<MubCircuit> build_batch(const MubContext& ctx, std::span<const FieldElement> js);
/// All j < 2^n; n <= 40.
GateTotals gate_totals_all(const MubContext& ctx);
/// max over a < b of max_{r,c} | |(U_a^dag U_b)_rc|^2 - 1/d |.
PairSweep pairwise_chm(std::span<const ComplexMatrix> unitaries);
/// max over j < 2^n of max |circuit(j) - formula(j)|; n <= kUnitaryQubitCap.
EquivalenceSweep oracle_equivalence(const MubContext& ctx);
}  // namespace serial

namespace omp {
std::vector<MubCircuit> build_batch(const MubContext& ctx, std::span<const FieldElement> js);
GateTotals gate_totals_all(const MubContext& ctx);
PairSweep pairwise_chm(std::span<const ComplexMatrix> unitaries);
EquivalenceSweep oracle_equivalence(const MubContext& ctx);
}  // namespace omp

/// Worker threads the omp kernels will use (1 without OpenMP).
int max_threads();

}  // namespace mubs::kernels
