#include "mubs/mub_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace mubs {

namespace {

std::size_t cz_flag_count(std::size_t n) { return n >= 2 ? 2 * n - 3 : 0; }

// s ranges over [lo, hi] for the pairs (s, m - s) with s < m - s <= n - 1.
std::pair<std::size_t, std::size_t> subpart_range(std::size_t n, std::size_t m) {
  const std::size_t lo = m + 1 > n ? m + 1 - n : 0;
  const std::size_t hi = (m - 1) / 2;
  return {lo, hi};
}

void check_subpart_index(std::size_t n, std::size_t m) {
  if (n < 2 || m < 1 || m > 2 * n - 3)
    throw std::out_of_range("CZ sub-part index m=" + std::to_string(m) + " outside [1, 2n-3] for n=" +
                            std::to_string(n));
}

}  // namespace

// ------------------------------------------------------------------ MubContext

MubContext::MubContext(PolyContext poly) : poly_(std::move(poly)) {
  if (!poly_) throw std::invalid_argument("null polynomial context");
  const auto powers = poly_->power_table();
  proj0_.reserve(powers.size());
  proj1_.reserve(powers.size());
  for (const auto& xm : powers) {
    proj0_.push_back(poly_->m0().apply(xm));
    proj1_.push_back(poly_->m1().apply(xm));
  }
}

MubContext MubContext::for_qubits(std::size_t n) { return MubContext(find_irreducible(n)); }

std::uint64_t MubContext::basis_count() const {
  if (n() >= 64) throw std::overflow_error("2^n does not fit in 64 bits");
  return std::uint64_t{1} << n();
}

// ---------------------------------------------------------------- coefficients

std::pair<bool, bool> tau(int a) {
  switch (a) {
    case 0: return {false, false};
    case 1: return {true, true};
    case 2: return {false, true};
    case 3: return {true, false};
    default: throw std::out_of_range("S exponent must be in {0,1,2,3}");
  }
}

int tau_inverse(bool first, bool second) {
  if (!first) return second ? 2 : 0;
  return second ? 1 : 3;
}

bool coeff_b(const MubContext& ctx, const FieldElement& j, std::size_t m) {
  check_subpart_index(ctx.n(), m);
  return dot(j, ctx.proj0(m));
}

int coeff_a(const MubContext& ctx, const FieldElement& j, std::size_t r) {
  if (r >= ctx.n()) throw std::out_of_range("qubit index out of range");
  return tau_inverse(dot(j, ctx.proj0(2 * r)), dot(j, ctx.proj1(2 * r)));
}

bool coeff_b_pair_definition(const IrreduciblePoly& field, const FieldElement& j, std::size_t s,
                             std::size_t t) {
  const std::size_t n = field.n();
  if (s >= n || t >= n) throw std::out_of_range("qubit index out of range");
  const FieldElement js = gf_mul(field, j, FieldElement::unit(n, s));
  return gf_mul(field, js, FieldElement::unit(n, t)).bit(0);
}

// ------------------------------------------------------------------ MubCircuit

MubCircuit::MubCircuit(PolyContext poly, FieldElement j, std::vector<std::uint8_t> s_exp,
                       std::vector<std::uint8_t> cz_flags)
    : poly_(std::move(poly)), j_(std::move(j)), s_exp_(std::move(s_exp)), cz_flags_(std::move(cz_flags)) {
  if (!poly_) throw std::invalid_argument("circuit without polynomial");
  const std::size_t n = poly_->n();
  if (j_.width() != n) throw std::invalid_argument("basis index width differs from n");
  if (s_exp_.size() != n) throw std::invalid_argument("expected one S exponent per qubit");
  if (std::any_of(s_exp_.begin(), s_exp_.end(), [](std::uint8_t a) { return a > 3; }))
    throw std::invalid_argument("S exponents must lie in {0,1,2,3}");
  if (cz_flags_.size() != cz_flag_count(n)) throw std::invalid_argument("expected 2n-3 CZ flags");
  if (std::any_of(cz_flags_.begin(), cz_flags_.end(), [](std::uint8_t b) { return b > 1; }))
    throw std::invalid_argument("CZ flags must be 0 or 1");
}

bool MubCircuit::cz_flag(std::size_t m) const {
  check_subpart_index(n(), m);
  return cz_flags_[m - 1] != 0;
}

bool MubCircuit::cz_pair(std::size_t s, std::size_t t) const {
  if (s >= t || t >= n()) throw std::out_of_range("CZ pair must satisfy s < t < n");
  return cz_flags_[s + t - 1] != 0;
}

std::vector<std::pair<std::size_t, std::size_t>> MubCircuit::cz_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m = 1; m <= cz_flags_.size(); ++m) {
    if (cz_flags_[m - 1] == 0) continue;
    const auto [lo, hi] = subpart_range(n(), m);
    for (std::size_t s = lo; s <= hi; ++s) out.emplace_back(s, m - s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MubCircuit::s_gate_count() const {
  std::size_t total = 0;
  for (auto a : s_exp_) total += a;
  return total;
}

std::size_t MubCircuit::cz_gate_count() const {
  std::size_t total = 0;
  for (std::size_t m = 1; m <= cz_flags_.size(); ++m) {
    if (cz_flags_[m - 1] == 0) continue;
    const auto [lo, hi] = subpart_range(n(), m);
    total += hi + 1 - lo;
  }
  return total;
}

bool operator==(const MubCircuit& a, const MubCircuit& b) {
  return a.poly_->poly() == b.poly_->poly() && a.j_ == b.j_ && a.s_exp_ == b.s_exp_ &&
         a.cz_flags_ == b.cz_flags_;
}

MubCircuit build_circuit(const MubContext& ctx, const FieldElement& j) {
  const std::size_t n = ctx.n();
  if (j.width() != n) throw std::invalid_argument("basis index width differs from n");
  std::vector<std::uint8_t> s_exp(n);
  for (std::size_t r = 0; r < n; ++r) s_exp[r] = static_cast<std::uint8_t>(coeff_a(ctx, j, r));
  std::vector<std::uint8_t> flags(cz_flag_count(n));
  for (std::size_t m = 1; m <= flags.size(); ++m) flags[m - 1] = dot(j, ctx.proj0(m)) ? 1 : 0;
  return MubCircuit(ctx.poly(), j, std::move(s_exp), std::move(flags));
}

// ----------------------------------------------------------------------- gates

Gate Gate::cz(std::size_t s, std::size_t t) {
  if (s == t) throw std::invalid_argument("CZ needs two distinct qubits");
  return {GateKind::CZ, std::min(s, t), std::max(s, t)};
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Z: return "z";
    case GateKind::Sdg: return "sdg";
    case GateKind::CZ: return "cz";
  }
  return "?";
}

GateList emit_gates(const MubCircuit& c) {
  GateList gates;
  const std::size_t n = c.n();
  for (std::size_t q = 0; q < n; ++q) gates.push_back(Gate::single(GateKind::H, q));
  const auto s_exp = c.s_exp();
  for (std::size_t q = 0; q < n; ++q) {
    switch (s_exp[q]) {
      case 1: gates.push_back(Gate::single(GateKind::S, q)); break;
      case 2: gates.push_back(Gate::single(GateKind::Z, q)); break;
      case 3: gates.push_back(Gate::single(GateKind::Sdg, q)); break;
      default: break;
    }
  }
  for (const auto& [s, t] : c.cz_pairs()) gates.push_back(Gate::cz(s, t));
  return gates;
}

GateList inverse_gates(const GateList& gates) {
  GateList out(gates.rbegin(), gates.rend());
  for (auto& g : out) {
    if (g.kind == GateKind::S)
      g.kind = GateKind::Sdg;
    else if (g.kind == GateKind::Sdg)
      g.kind = GateKind::S;
  }
  return out;
}

// ------------------------------------------------------------------ sub-parts

CzSubpart cz_subpart(std::size_t n, std::size_t m) {
  check_subpart_index(n, m);
  CzSubpart part{m, {}};
  const auto [lo, hi] = subpart_range(n, m);
  for (std::size_t s = lo; s <= hi; ++s) part.pairs.emplace_back(s, m - s);
  return part;
}

std::vector<CzSubpart> cz_subpart_catalog(std::size_t n) {
  std::vector<CzSubpart> out;
  for (std::size_t m = 1; m <= cz_flag_count(n); ++m) out.push_back(cz_subpart(n, m));
  return out;
}

// ------------------------------------------------------------ linear relation

MubCircuit compose_from_generators(std::span<const MubCircuit> gens, const FieldElement& j) {
  if (gens.empty()) throw std::invalid_argument("generator set incomplete: no circuits");
  const PolyContext& poly = gens.front().poly();
  const std::size_t n = poly->n();
  if (gens.size() != n)
    throw std::invalid_argument("generator set incomplete: need " + std::to_string(n) +
                                " circuits U(2^u), got " + std::to_string(gens.size()));
  for (std::size_t u = 0; u < n; ++u) {
    if (gens[u].poly()->poly() != poly->poly())
      throw std::invalid_argument("generator polynomial mismatch");
    if (gens[u].j() != FieldElement::unit(n, u))
      throw std::invalid_argument("generator " + std::to_string(u) + " is not U(2^" +
                                  std::to_string(u) + ")");
  }
  if (j.width() != n) throw std::invalid_argument("basis index width differs from n");

  std::vector<std::uint8_t> flags(cz_flag_count(n), 0);
  std::vector<std::uint8_t> first(n, 0);
  std::vector<std::uint8_t> second(n, 0);
  j.for_each_set_bit([&](std::size_t u) {
    const auto gflags = gens[u].cz_flags();
    for (std::size_t m = 0; m < flags.size(); ++m) flags[m] ^= gflags[m];
    const auto gs = gens[u].s_exp();
    for (std::size_t r = 0; r < n; ++r) {
      const auto [a, b] = tau(gs[r]);
      first[r] ^= a ? 1 : 0;
      second[r] ^= b ? 1 : 0;
    }
  });
  std::vector<std::uint8_t> s_exp(n);
  for (std::size_t r = 0; r < n; ++r)
    s_exp[r] = static_cast<std::uint8_t>(tau_inverse(first[r] != 0, second[r] != 0));
  return MubCircuit(poly, j, std::move(s_exp), std::move(flags));
}

// ------------------------------------------------------------------ statistics

void GateTotals::add(const MubCircuit& c) {
  const std::size_t n = c.n();
  if (cz_by_distance.size() != n) throw std::invalid_argument("GateTotals sized for another n");
  ++circuits;
  const std::uint64_t s = c.s_gate_count();
  std::uint64_t cz = 0;
  const auto flags = c.cz_flags();
  for (std::size_t m = 1; m <= flags.size(); ++m) {
    if (flags[m - 1] == 0) continue;
    const auto [lo, hi] = subpart_range(n, m);
    for (std::size_t p = lo; p <= hi; ++p) ++cz_by_distance[m - 2 * p];
    cz += hi + 1 - lo;
  }
  s_gates += s;
  cz_gates += cz;
  const std::uint64_t total = n + s + cz;
  if (circuits == 1 || total > max_gates || (total == max_gates && c.j() < argmax)) {
    max_gates = total;
    argmax = c.j();
  }
}

void GateTotals::merge(const GateTotals& other) {
  if (other.circuits == 0) return;
  if (cz_by_distance.size() != other.cz_by_distance.size())
    throw std::invalid_argument("GateTotals sized for another n");
  if (circuits == 0 || other.max_gates > max_gates ||
      (other.max_gates == max_gates && other.argmax < argmax)) {
    max_gates = other.max_gates;
    argmax = other.argmax;
  }
  circuits += other.circuits;
  s_gates += other.s_gates;
  cz_gates += other.cz_gates;
  for (std::size_t u = 0; u < cz_by_distance.size(); ++u) cz_by_distance[u] += other.cz_by_distance[u];
}

double StatsRecord::average_s() const {
  return totals.circuits == 0 ? 0.0
                              : static_cast<double>(totals.s_gates) / static_cast<double>(totals.circuits);
}

double StatsRecord::average_cz() const {
  return totals.circuits == 0 ? 0.0
                              : static_cast<double>(totals.cz_gates) / static_cast<double>(totals.circuits);
}

double StatsRecord::average_cz_at_distance(std::size_t u) const {
  if (totals.circuits == 0 || u >= totals.cz_by_distance.size()) return 0.0;
  return static_cast<double>(totals.cz_by_distance[u]) / static_cast<double>(totals.circuits);
}

StatsRecord gate_stats(const MubContext& ctx, std::span<const FieldElement> j_set) {
  StatsRecord rec;
  rec.n = ctx.n();
  rec.totals = GateTotals(ctx.n());
  rec.per_circuit.reserve(j_set.size());
  for (const auto& j : j_set) {
    const MubCircuit c = build_circuit(ctx, j);
    rec.totals.add(c);
    rec.per_circuit.push_back({j, c.s_gate_count(), c.cz_gate_count(), c.gate_count()});
  }
  return rec;
}

std::uint64_t max_gate_bound(std::size_t n) { return (n * n + 7 * n) / 2; }

}  // namespace mubs
