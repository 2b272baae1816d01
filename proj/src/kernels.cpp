#include "mubs/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mubs::kernels {

namespace {

constexpr std::size_t kTotalsCap = 40;

void require_totals_cap(const MubContext& ctx) {
  if (ctx.n() > kTotalsCap)
    throw std::length_error("gate_totals_all: 2^n sweep limited to n <= " + std::to_string(kTotalsCap));
}

// Strict improvement or an earlier pair at the same deviation.
bool better(double dev, std::size_t a, std::size_t b, const PairSweep& cur) {
  if (dev != cur.max_deviation) return dev > cur.max_deviation;
  return std::pair(a, b) < std::pair(cur.worst_a, cur.worst_b);
}

double chm_deviation(const ComplexMatrix& ua_dag, const ComplexMatrix& ub) {
  const ComplexMatrix g = ua_dag * ub;
  const double target = 1.0 / static_cast<double>(g.rows());
  double m = 0.0;
  for (const auto& x : g.data()) m = std::max(m, std::abs(std::norm(x) - target));
  return m;
}

void check_shapes(std::span<const ComplexMatrix> us) {
  for (const auto& u : us)
    if (!u.is_square() || u.rows() != us.front().rows())
      throw std::invalid_argument("pairwise_chm needs square matrices of one dimension");
}

double equivalence_deviation(const MubContext& ctx, std::uint64_t j) {
  const UnitaryMatrix circuit = apply_gatelist(emit_gates(build_circuit(ctx, ctx.index(j))), ctx.n());
  return max_abs_diff(circuit, formula_unitary(ctx.field(), j));
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// ------------------------------------------------------------------ serial

namespace serial {

std::vector<MubCircuit> build_batch(const MubContext& ctx, std::span<const FieldElement> js) {
  std::vector<MubCircuit> out;
  out.reserve(js.size());
  for (const auto& j : js) out.push_back(build_circuit(ctx, j));
  return out;
}

GateTotals gate_totals_all(const MubContext& ctx) {
  require_totals_cap(ctx);
  GateTotals totals(ctx.n());
  for (std::uint64_t j = 0; j < ctx.basis_count(); ++j) totals.add(build_circuit(ctx, ctx.index(j)));
  return totals;
}

PairSweep pairwise_chm(std::span<const ComplexMatrix> unitaries) {
  check_shapes(unitaries);
  PairSweep sweep;
  for (std::size_t a = 0; a < unitaries.size(); ++a) {
    const ComplexMatrix ua_dag = unitaries[a].adjoint();
    for (std::size_t b = a + 1; b < unitaries.size(); ++b) {
      const double dev = chm_deviation(ua_dag, unitaries[b]);
      ++sweep.pairs;
      if (sweep.pairs == 1 || better(dev, a, b, sweep)) {
        sweep.max_deviation = dev;
        sweep.worst_a = a;
        sweep.worst_b = b;
      }
    }
  }
  return sweep;
}

EquivalenceSweep oracle_equivalence(const MubContext& ctx) {
  require_qubit_cap(ctx.n(), kUnitaryQubitCap, "oracle_equivalence");
  EquivalenceSweep sweep;
  for (std::uint64_t j = 0; j < ctx.basis_count(); ++j) {
    const double dev = equivalence_deviation(ctx, j);
    if (dev > sweep.max_deviation) {
      sweep.max_deviation = dev;
      sweep.worst_j = j;
    }
  }
  return sweep;
}

}  // namespace serial

// --------------------------------------------------------------------- omp

namespace omp {

std::vector<MubCircuit> build_batch(const MubContext& ctx, std::span<const FieldElement> js) {
  std::vector<std::optional<MubCircuit>> slots(js.size());
  const auto count = static_cast<std::int64_t>(js.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) slots[i].emplace(build_circuit(ctx, js[i]));
  std::vector<MubCircuit> out;
  out.reserve(js.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

GateTotals gate_totals_all(const MubContext& ctx) {
  require_totals_cap(ctx);
  const auto d = static_cast<std::int64_t>(ctx.basis_count());
  const int chunks = std::max(1, max_threads());
  std::vector<GateTotals> partial(chunks, GateTotals(ctx.n()));
#pragma omp parallel for schedule(static, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t lo = d * c / chunks;
    const std::int64_t hi = d * (c + 1) / chunks;
    for (std::int64_t j = lo; j < hi; ++j) partial[c].add(build_circuit(ctx, ctx.index(static_cast<std::uint64_t>(j))));
  }
  GateTotals totals(ctx.n());
  for (const auto& p : partial) totals.merge(p);
  return totals;
}

PairSweep pairwise_chm(std::span<const ComplexMatrix> unitaries) {
  check_shapes(unitaries);
  const auto m = static_cast<std::int64_t>(unitaries.size());
  std::vector<ComplexMatrix> adj(unitaries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < m; ++a) adj[a] = unitaries[a].adjoint();

  // One row of the upper triangle per iteration; rows merge in order.
  std::vector<PairSweep> rows(unitaries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < m; ++a) {
    PairSweep& row = rows[a];
    for (std::int64_t b = a + 1; b < m; ++b) {
      const double dev = chm_deviation(adj[a], unitaries[b]);
      ++row.pairs;
      if (row.pairs == 1 || better(dev, a, b, row)) {
        row.max_deviation = dev;
        row.worst_a = a;
        row.worst_b = b;
      }
    }
  }
  PairSweep sweep;
  for (const auto& row : rows) {
    if (row.pairs == 0) continue;
    if (sweep.pairs == 0 || better(row.max_deviation, row.worst_a, row.worst_b, sweep)) {
      sweep.max_deviation = row.max_deviation;
      sweep.worst_a = row.worst_a;
      sweep.worst_b = row.worst_b;
    }
    sweep.pairs += row.pairs;
  }
  return sweep;
}

EquivalenceSweep oracle_equivalence(const MubContext& ctx) {
  require_qubit_cap(ctx.n(), kUnitaryQubitCap, "oracle_equivalence");
  const auto d = static_cast<std::int64_t>(ctx.basis_count());
  std::vector<double> dev(d);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < d; ++j) dev[j] = equivalence_deviation(ctx, static_cast<std::uint64_t>(j));
  EquivalenceSweep sweep;
  for (std::int64_t j = 0; j < d; ++j)
    if (dev[j] > sweep.max_deviation) {
      sweep.max_deviation = dev[j];
      sweep.worst_j = static_cast<std::uint64_t>(j);
    }
  return sweep;
}

}  // namespace omp

}  // namespace mubs::kernels
