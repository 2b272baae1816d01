// Acceptance suite: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mubs/checks.hpp"
#include "mubs/kernels.hpp"
#include "mubs/mub_search.hpp"
#include "mubs/verify_sim.hpp"

using namespace mubs;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail.clear();
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

MubContext ctx_of(const char* poly) { return MubContext(IrreduciblePoly::create(BinaryPolynomial::parse(poly))); }

std::string s_exp_of(const MubCircuit& c) {
  std::string s;
  for (auto a : c.s_exp()) s += static_cast<char>('0' + a);
  return s;
}

std::string cz_of(const MubCircuit& c) {
  std::string s;
  for (auto [a, b] : c.cz_pairs()) {
    if (!s.empty()) s += ",";
    s += std::to_string(a) + std::to_string(b);
  }
  return s;
}

// Circuits as drawn: S exponent per qubit (q0 first) and CZ pairs.
struct Drawn {
  std::uint64_t j;
  const char* s_exp;
  const char* cz;
};

Outcome criterion_figures() {
  Outcome out;
  std::size_t compared = 0;
  auto compare = [&](const char* label, const MubContext& ctx, std::initializer_list<Drawn> rows) {
    for (const auto& d : rows) {
      const MubCircuit c = build_circuit(ctx, ctx.index(d.j));
      ++compared;
      if (s_exp_of(c) != d.s_exp || cz_of(c) != d.cz)
        out.fail(std::string(label) + " U(" + std::to_string(d.j) + "): drawn s=" + d.s_exp + " cz={" + d.cz +
                 "}, generated s=" + s_exp_of(c) + " cz={" + cz_of(c) + "}");
    }
  };
  compare("n=1", MubContext::for_qubits(1), {{0, "0", ""}, {1, "1", ""}});
  compare("n=2", MubContext::for_qubits(2), {{0, "00", ""}, {1, "31", ""}, {2, "23", "01"}, {3, "12", "01"}});
  compare("p1", ctx_of("x^3+x+1"),
          {{1, "302", "12"}, {2, "211", "02"}, {3, "113", "02,12"}, {4, "023", "01,12"},
           {5, "321", "01"}, {6, "232", "01,02,12"}, {7, "232", "01,02"}});
  compare("p2", ctx_of("x^3+x^2+1"),
          {{1, "301", "12"}, {2, "231", "02,12"}, {3, "130", "02"}, {4, "012", "01,02,12"},
           {5, "313", "01,02"}, {6, "223", "01"}, {7, "122", "01,12"}});
  if (out.passed) out.detail = std::to_string(compared) + " drawn circuits match";
  return out;
}

Outcome criterion_mu() {
  Outcome out;
  double worst = 0.0;
  std::uint64_t pairs = 0;
  auto run = [&](const MubContext& ctx) {
    const VerificationReport r = verify_full_set(ctx);
    for (const auto& e : r.checks) {
      if (e.name != "pairwise_mu" && e.name != "each_U_is_chm") continue;
      pairs += e.checked;
      worst = std::max(worst, e.max_deviation);
      if (!e.passed || e.max_deviation > kInnerProductTolerance)
        out.fail("n=" + std::to_string(ctx.n()) + " " + ctx.field().poly().to_string() + " " + e.name + " " +
                 e.witness);
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) run(MubContext::for_qubits(n));
  run(ctx_of("x^3+x^2+1"));
  if (out.passed) {
    std::ostringstream s;
    s << "n=1..6 plus x^3+x^2+1, " << pairs << " basis-pair checks, max dev " << worst;
    out.detail = s.str();
  }
  return out;
}

Outcome criterion_oracle() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto sweep = kernels::omp::oracle_equivalence(MubContext::for_qubits(n));
    worst = std::max(worst, sweep.max_deviation);
    if (sweep.max_deviation > kExactTolerance)
      out.fail("n=" + std::to_string(n) + " j=" + std::to_string(sweep.worst_j));
  }
  if (out.passed) {
    std::ostringstream s;
    s << "n=1..6 every j, max dev " << worst;
    out.detail = s.str();
  }
  return out;
}

Outcome exhaustive_entry(const std::function<CheckEntry(const MubContext&)>& check, std::size_t lo, std::size_t hi) {
  Outcome out;
  std::uint64_t checked = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    const CheckEntry e = check(MubContext::for_qubits(n));
    checked += e.checked;
    if (!e.passed) out.fail("n=" + std::to_string(n) + " " + e.witness);
  }
  if (out.passed)
    out.detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi) + ", " + std::to_string(checked) + " values";
  return out;
}

Outcome criterion_statistics() {
  Outcome out;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& e : check_gate_statistics(MubContext::for_qubits(n)))
      if (!e.passed) out.fail("n=" + std::to_string(n) + " " + e.name + " " + e.detail);
  if (out.passed) out.detail = "n=1..12 sums exact, max within (n^2+7n)/2";
  return out;
}

Outcome criterion_distribution() {
  Outcome out;
  double snap = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto dist = coefficient_distribution(MubContext::for_qubits(n).field());
    snap = std::max(snap, dist.table.max_snap_error);
    for (const auto& e : dist.checks)
      if (!e.passed) out.fail("n=" + std::to_string(n) + " " + e.name + " " + e.witness);
  }
  if (out.passed) {
    std::ostringstream s;
    s << "n=1..4, max snap error " << snap;
    out.detail = s.str();
  }
  return out;
}

FieldElement random_index(std::size_t n, std::mt19937_64& rng) {
  FieldElement j(n);
  for (auto& l : j.limbs()) l = rng();
  if (n % 64) j.limbs().back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Cold generation: context (polynomial search, tables) plus one circuit.
double cold_generation(std::size_t n, std::mt19937_64& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = MubContext::for_qubits(n);
  const MubCircuit c = build_circuit(ctx, random_index(n, rng));
  const double t = seconds_since(t0);
  if (c.n() != n) std::abort();
  return t;
}

Outcome criterion_performance() {
  Outcome out;
  std::mt19937_64 rng(2024);
  const double single = cold_generation(256, rng);
  if (single >= 1.0) out.fail("single n=256 took " + std::to_string(single) + " s");

  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = MubContext::for_qubits(256);
  std::vector<FieldElement> js;
  for (int i = 0; i < 1000; ++i) js.push_back(random_index(256, rng));
  const auto batch = kernels::serial::build_batch(ctx, js);
  const double batch_t = seconds_since(t0);
  if (batch.size() != 1000 || batch_t >= 10.0) out.fail("batch T=1000 n=256 took " + std::to_string(batch_t) + " s");

  const std::vector<std::size_t> ns{64, 128, 256, 512};
  std::vector<double> xs, ys;
  for (std::size_t n : ns) {
    double best = 1e30;
    for (int rep = 0; rep < 3; ++rep) best = std::min(best, cold_generation(n, rng));
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(best));
  }
  const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4, my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  if (slope > 3.5) out.fail("log-log slope " + std::to_string(slope));

  std::ostringstream s;
  s << "single " << single << " s, batch " << batch_t << " s, slope " << slope;
  if (out.passed) out.detail = s.str();
  else out.detail += " (" + s.str() + ")";
  return out;
}

Outcome criterion_search() {
  Outcome out;
  const auto h1 = MubSet::with_seed(hadamard_seed(1), "hadamard");
  const SearchResult one = search_extend(h1, {SearchStrategy::Exhaustive, 0, 10'000'000, 1000});
  const std::vector<std::vector<DiagonalPhase>> expect{{DiagonalPhase::identity(2), DiagonalPhase{{0, 1}}},
                                                       {DiagonalPhase::identity(2), DiagonalPhase{{0, 3}}}};
  if (one.status != SearchStatus::Exhausted || one.chains != expect) out.fail("n=1 chains differ from {I,H,SH},{I,H,S^3H}");
  for (std::size_t i = 0; i < one.chains.size(); ++i)
    if (!certify_set(one.chain(i)).passed) out.fail("n=1 chain not certified");

  const auto h2 = MubSet::with_seed(hadamard_seed(2), "hadamard");
  const SearchResult two = search_extend(h2, {SearchStrategy::GreedyFirst, 0, 1'000'000, 1});
  if (two.longest() != 5 || !certify_set(two.chain(0)).passed) out.fail("n=2 no certified chain of 5");

  for (std::size_t n = 1; n <= 4; ++n)
    if (!certify_set(galois_fourier_family(MubContext::for_qubits(n))).passed)
      out.fail("Galois-Fourier family n=" + std::to_string(n));
  if (out.passed) out.detail = "n=1 two maximal chains, n=2 five bases, Galois-Fourier n=1..4 certified";
  return out;
}

bool trial_division_irreducible(std::uint64_t p) {
  const int n = 63 - __builtin_clzll(p);
  auto mod = [](std::uint64_t a, std::uint64_t b) {
    const int db = 63 - __builtin_clzll(b);
    while (a != 0 && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
    return a;
  };
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (n / 2 + 1)); ++q) {
    const int dq = 63 - __builtin_clzll(q);
    if (dq >= 1 && 2 * dq <= n && mod(p, q) == 0) return false;
  }
  return n >= 1;
}

Outcome criterion_irreducible() {
  Outcome out;
  for (std::size_t n = 1; n <= 16; ++n) {
    std::uint64_t smallest = 0;
    for (std::uint64_t p = std::uint64_t{1} << n | 1; p < std::uint64_t{2} << n; p += 2)
      if (trial_division_irreducible(p)) {
        smallest = p;
        break;
      }
    if (find_irreducible(n)->poly() != BinaryPolynomial::from_u64(smallest))
      out.fail("n=" + std::to_string(n) + " got " + find_irreducible(n)->poly().to_string());
  }
  for (std::uint64_t p = 2; p < (std::uint64_t{1} << 13); ++p)
    if (is_irreducible(BinaryPolynomial::from_u64(p)) != trial_division_irreducible(p))
      out.fail("is_irreducible disagrees at " + BinaryPolynomial::from_u64(p).to_string());
  const std::string nine = find_irreducible(9)->poly().to_string();
  if (nine != "x^9+x+1") out.fail("n=9 gives " + nine);
  if (out.passed) out.detail = "n=1..16 smallest match, all p < 2^13 agree, n=9 -> " + nine;
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {"figure-exact golden circuits", criterion_figures},
      {"mutual unbiasedness n=1..6", criterion_mu},
      {"oracle equivalence n=1..6", criterion_oracle},
      {"entanglement structure n=2..10", [] { return exhaustive_entry(check_entanglement_structure, 2, 10); }},
      {"generator linear relation n=2..10", [] { return exhaustive_entry(check_linear_relation, 2, 10); }},
      {"exact gate statistics n=1..12", criterion_statistics},
      {"coefficient distributions n=1..4", criterion_distribution},
      {"performance and scaling", criterion_performance},
      {"search reproduction", criterion_search},
      {"irreducibility", criterion_irreducible},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
