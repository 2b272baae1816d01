#pragma once

// Three-stage MUB circuits U(j) = U_CZ(j) . U_S(j) . H^(x)n.
//
// Qubit q_t carries bit l_t of the computational basis index, l_0 least
// significant. a_r(j) is the number of S gates on qubit r; b_m(j) flags the
// CZ sub-part CZ(m) = prod_{s<t, s+t=m} CZ(s,t).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mubs/gf2n.hpp"

namespace mubs {

/// Polynomial context plus the cached projections M0.(x^m)^T and M1.(x^m)^T
/// for m = 0..2n-2. Building it costs O(n^3) once; every circuit after that
/// costs O(n^2).
class MubContext {
 public:
  explicit MubContext(PolyContext poly);
  static MubContext for_qubits(std::size_t n);

  std::size_t n() const { return poly_->n(); }
  const PolyContext& poly() const { return poly_; }
  const IrreduciblePoly& field() const { return *poly_; }
  const FieldElement& proj0(std::size_t m) const { return proj0_[m]; }
  const FieldElement& proj1(std::size_t m) const { return proj1_[m]; }

  /// Number of basis indices 2^n; only meaningful for n < 64.
  std::uint64_t basis_count() const;
  FieldElement index(std::uint64_t j) const { return poly_->element(j); }

 private:
  PolyContext poly_;
  std::vector<FieldElement> proj0_;
  std::vector<FieldElement> proj1_;
};

/// tau: {0,1,2,3} <-> F2^2, 0->(0,0), 1->(1,1), 2->(0,1), 3->(1,0).
std::pair<bool, bool> tau(int a);
int tau_inverse(bool first, bool second);

/// b_m(j) = j.M0.(x^m)^T for m in [1, 2n-3].
bool coeff_b(const MubContext& ctx, const FieldElement& j, std::size_t m);

/// a_r(j) from (j.M0.(x^2r)^T, j.M1.(x^2r)^T) through tau^-1.
int coeff_a(const MubContext& ctx, const FieldElement& j, std::size_t r);

/// b_{s,t}(j) straight from its definition: constant coefficient of
/// j (.) x^s (.) x^t, evaluated with two field multiplications.
bool coeff_b_pair_definition(const IrreduciblePoly& field, const FieldElement& j, std::size_t s,
                             std::size_t t);

class MubCircuit {
 public:
  MubCircuit(PolyContext poly, FieldElement j, std::vector<std::uint8_t> s_exp,
             std::vector<std::uint8_t> cz_flags);

  std::size_t n() const { return poly_->n(); }
  const FieldElement& j() const { return j_; }
  const PolyContext& poly() const { return poly_; }
  std::span<const std::uint8_t> s_exp() const { return s_exp_; }
  /// Flags for m = 1..2n-3 (index 0 is m = 1).
  std::span<const std::uint8_t> cz_flags() const { return cz_flags_; }

  bool cz_flag(std::size_t m) const;
  bool cz_pair(std::size_t s, std::size_t t) const;
  std::vector<std::pair<std::size_t, std::size_t>> cz_pairs() const;

  std::size_t s_gate_count() const;
  std::size_t cz_gate_count() const;
  /// n Hadamards + S count + CZ count.
  std::size_t gate_count() const { return n() + s_gate_count() + cz_gate_count(); }

  /// Same polynomial (by value), index and coefficients.
  friend bool operator==(const MubCircuit& a, const MubCircuit& b);

 private:
  PolyContext poly_;
  FieldElement j_;
  std::vector<std::uint8_t> s_exp_;
  std::vector<std::uint8_t> cz_flags_;
};

MubCircuit build_circuit(const MubContext& ctx, const FieldElement& j);

enum class GateKind : std::uint8_t { H, S, Z, Sdg, CZ };

struct Gate {
  GateKind kind;
  std::size_t q0;
  std::size_t q1 = 0;

  static Gate single(GateKind kind, std::size_t q) { return {kind, q, 0}; }
  /// CZ is symmetric; stored with q0 < q1.
  static Gate cz(std::size_t s, std::size_t t);
  friend bool operator==(const Gate&, const Gate&) = default;
};

using GateList = std::vector<Gate>;

std::string gate_name(GateKind kind);

/// H layer, then S / Z / Sdg per qubit for a = 1 / 2 / 3, then CZ(s,t) for
/// every flagged pair in (s,t) order.
GateList emit_gates(const MubCircuit& c);

/// Gate list of the inverse circuit.
GateList inverse_gates(const GateList& gates);

struct CzSubpart {
  std::size_t m;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

CzSubpart cz_subpart(std::size_t n, std::size_t m);
std::vector<CzSubpart> cz_subpart_catalog(std::size_t n);

/// Rebuilds U(j) from the generators U(2^0)..U(2^(n-1)): CZ flags XOR over the
/// set bits of j, S exponents XOR in the tau picture.
MubCircuit compose_from_generators(std::span<const MubCircuit> gens, const FieldElement& j);

struct CircuitGateCount {
  FieldElement j;
  std::uint64_t s_gates = 0;
  std::uint64_t cz_gates = 0;
  std::uint64_t total = 0;
};

struct GateTotals {
  std::uint64_t circuits = 0;
  std::uint64_t s_gates = 0;
  std::uint64_t cz_gates = 0;
  /// Index u = t - s, entry 0 unused.
  std::vector<std::uint64_t> cz_by_distance;
  std::uint64_t max_gates = 0;
  FieldElement argmax;

  explicit GateTotals(std::size_t n = 0) : cz_by_distance(n, 0), argmax(n) {}
  void add(const MubCircuit& c);
  void merge(const GateTotals& other);
};

struct StatsRecord {
  std::size_t n = 0;
  std::vector<CircuitGateCount> per_circuit;
  GateTotals totals;

  double average_s() const;
  double average_cz() const;
  double average_cz_at_distance(std::size_t u) const;
};

/// Per-circuit and aggregate gate counts over an explicit index set. Sweeps
/// over all 2^n indices live in kernels.hpp.
StatsRecord gate_stats(const MubContext& ctx, std::span<const FieldElement> j_set);

/// (n^2 + 7n)/2.
std::uint64_t max_gate_bound(std::size_t n);

}  // namespace mubs
