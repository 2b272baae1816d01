#include "mubs/checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mubs/kernels.hpp"

namespace mubs {

namespace {

constexpr std::size_t kExhaustiveCap = 20;

void require_exhaustive(const MubContext& ctx, const char* what) {
  if (ctx.n() > kExhaustiveCap)
    throw std::length_error(std::string(what) + ": exhaustive sweep limited to n <= " +
                            std::to_string(kExhaustiveCap));
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckEntry& c) { return !c.passed; }));
}

void VerificationReport::append(const std::vector<CheckEntry>& more) {
  checks.insert(checks.end(), more.begin(), more.end());
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "n=" << n << " poly=" << poly << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " checked=" << c.checked << " max_dev=" << c.max_deviation;
    if (!c.witness.empty()) out << " witness=" << c.witness;
    out << "\n";
  }
  out << (passed() ? "ALL PASS" : std::to_string(failures()) + " FAILED") << "\n";
  return out.str();
}

CheckEntry check_entanglement_structure(const MubContext& ctx) {
  require_exhaustive(ctx, "check_entanglement_structure");
  const std::size_t n = ctx.n();
  CheckEntry e{"entanglement_structure", true, 0.0, 0, "",
               "b_{s,t}(j) from the field product depends only on s+t and equals b_{s+t}(j)"};
  for (std::uint64_t jv = 0; jv < ctx.basis_count() && e.passed; ++jv) {
    const FieldElement j = ctx.index(jv);
    for (std::size_t s = 0; s < n && e.passed; ++s)
      for (std::size_t t = s + 1; t < n; ++t) {
        ++e.checked;
        if (coeff_b_pair_definition(ctx.field(), j, s, t) != coeff_b(ctx, j, s + t)) {
          e.passed = false;
          e.witness = "j=" + std::to_string(jv) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t);
          break;
        }
      }
  }
  return e;
}

CheckEntry check_linear_relation(const MubContext& ctx) {
  require_exhaustive(ctx, "check_linear_relation");
  const std::size_t n = ctx.n();
  std::vector<MubCircuit> gens;
  for (std::size_t u = 0; u < n; ++u) gens.push_back(build_circuit(ctx, FieldElement::unit(n, u)));
  CheckEntry e{"linear_relation", true, 0.0, 0, "", "U(j) composed from U(2^u) generators equals the direct build"};
  for (std::uint64_t jv = 0; jv < ctx.basis_count(); ++jv) {
    const FieldElement j = ctx.index(jv);
    ++e.checked;
    if (!(compose_from_generators(gens, j) == build_circuit(ctx, j))) {
      e.passed = false;
      e.witness = "j=" + std::to_string(jv);
      break;
    }
  }
  return e;
}

std::vector<CheckEntry> check_gate_statistics(const MubContext& ctx) {
  require_exhaustive(ctx, "check_gate_statistics");
  const std::size_t n = ctx.n();
  const std::uint64_t d = ctx.basis_count();
  const GateTotals totals = kernels::omp::gate_totals_all(ctx);
  std::vector<CheckEntry> out;

  auto exact = [&](std::string name, std::uint64_t got, std::uint64_t want, std::string detail) {
    CheckEntry e{std::move(name), got == want, 0.0, d, "", std::move(detail)};
    if (!e.passed) e.witness = "got " + std::to_string(got) + " expected " + std::to_string(want);
    out.push_back(std::move(e));
  };

  // 2^n . 3n/2 and 2^n (n^2-n)/4 are integers for n >= 2; n = 1 uses the
  // doubled forms.
  exact("total_s_gates", 2 * totals.s_gates, d * 3 * n, "sum_j #S = 2^n . 3n/2");
  exact("total_cz_gates", 4 * totals.cz_gates, d * (n * n - n), "sum_j #CZ = 2^n (n^2-n)/4");
  {
    CheckEntry e{"cz_by_distance", true, 0.0, d, "", "sum_j #CZ at distance u = 2^n (n-u)/2"};
    for (std::size_t u = 1; u < n; ++u)
      if (2 * totals.cz_by_distance[u] != d * (n - u) && e.passed) {
        e.passed = false;
        e.witness = "u=" + std::to_string(u) + " got " + std::to_string(totals.cz_by_distance[u]);
      }
    out.push_back(e);
  }
  {
    const std::uint64_t bound = max_gate_bound(n);
    CheckEntry e{"max_gate_bound", totals.max_gates <= bound, 0.0, d, "",
                 "max_j gates(U(j)) = " + std::to_string(totals.max_gates) + " <= (n^2+7n)/2 = " +
                     std::to_string(bound)};
    if (!e.passed) e.witness = "j=" + totals.argmax.to_decimal();
    out.push_back(e);
  }
  return out;
}

}  // namespace mubs
