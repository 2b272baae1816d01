// mubs: generate, verify and analyse the 2^n + 1 MUB circuits of n qubits.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubs/checks.hpp"
#include "mubs/io.hpp"
#include "mubs/kernels.hpp"
#include "mubs/mub_search.hpp"
#include "mubs/verify_sim.hpp"

namespace fs = std::filesystem;
using namespace mubs;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr std::size_t kAllIndicesCap = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t n = 0;
  std::string poly;
  std::string format = "text";
  std::string out_dir;
};

MubContext make_context(const Common& c) {
  if (!c.poly.empty()) {
    PolyContext p;
    try {
      p = IrreduciblePoly::create(BinaryPolynomial::parse(c.poly));
    } catch (const std::exception& ex) {
      throw UsageError("invalid polynomial '" + c.poly + "': " + ex.what());
    }
    if (c.n != 0 && p->n() != c.n)
      throw UsageError("polynomial has degree " + std::to_string(p->n()) + " but -n is " + std::to_string(c.n));
    return MubContext(p);
  }
  if (c.n == 0) throw UsageError("need -n or --poly");
  return MubContext::for_qubits(c.n);
}

std::optional<fs::path> output_dir(const Common& c) {
  if (!c.out_dir.empty()) return fs::path(c.out_dir);
  if (const char* env = std::getenv("MUBS_OUT_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  std::cerr << "wrote " << path.string() << "\n";
}

void emit(const Common& c, const std::string& file_name, const std::string& content) {
  if (auto dir = output_dir(c))
    write_file(*dir / file_name, content);
  else
    std::cout << content;
}

FieldElement random_element(std::size_t n, std::mt19937_64& rng) {
  FieldElement e(n);
  for (auto& limb : e.limbs()) limb = rng();
  if (n % 64 != 0) e.limbs().back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return e;
}

// "all", "A..B" (inclusive) or a single decimal / 0x index.
std::vector<FieldElement> parse_indices(const MubContext& ctx, const std::string& spec) {
  const std::size_t n = ctx.n();
  auto parse_one = [&](const std::string& s) {
    try {
      return FieldElement::parse(n, s);
    } catch (const std::exception& ex) {
      throw UsageError("bad index '" + s + "': " + ex.what());
    }
  };
  std::vector<FieldElement> out;
  if (spec == "all") {
    if (n > kAllIndicesCap) throw UsageError("-j all is limited to n <= " + std::to_string(kAllIndicesCap));
    for (std::uint64_t j = 0; j < ctx.basis_count(); ++j) out.push_back(ctx.index(j));
    return out;
  }
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    const FieldElement lo = parse_one(spec.substr(0, dots));
    const FieldElement hi = parse_one(spec.substr(dots + 2));
    if (!lo.fits_u64() || !hi.fits_u64() || hi < lo) throw UsageError("bad range '" + spec + "'");
    if (hi.to_u64() - lo.to_u64() >= (std::uint64_t{1} << kAllIndicesCap)) throw UsageError("range too long");
    for (std::uint64_t j = lo.to_u64();; ++j) {
      out.push_back(FieldElement::from_u64(n, j));
      if (j == hi.to_u64()) break;
    }
    return out;
  }
  out.push_back(parse_one(spec));
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

// ---------------------------------------------------------------------- gen

struct GenArgs {
  Common common;
  std::string j = "all";
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
  require_format(a.common.format, {"json", "qasm", "text"});
  const MubContext ctx = make_context(a.common);
  std::vector<FieldElement> js;
  if (a.samples > 0) {
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.samples; ++i) js.push_back(random_element(ctx.n(), rng));
  } else {
    js = parse_indices(ctx, a.j);
  }
  const auto circuits = kernels::omp::build_batch(ctx, js);
  const auto& fmt = a.common.format;
  const bool to_files = output_dir(a.common).has_value();

  auto name = [&](const MubCircuit& c, const char* ext) {
    return "mub_n" + std::to_string(c.n()) + "_j" + (c.j().fits_u64() ? c.j().to_decimal() : c.j().to_hex()) + ext;
  };

  if (fmt == "json" && !to_files) {
    if (circuits.size() == 1) {
      std::cout << io::circuit_to_json(circuits.front()).dump(2) << "\n";
    } else {
      io::Json arr = io::Json::array();
      for (const auto& c : circuits) arr.push_back(io::circuit_to_json(c));
      std::cout << arr.dump(2) << "\n";
    }
    return kOk;
  }
  for (const auto& c : circuits) {
    if (fmt == "json")
      emit(a.common, name(c, ".json"), io::circuit_to_json(c).dump(2) + "\n");
    else if (fmt == "qasm")
      emit(a.common, name(c, ".qasm"), io::circuit_to_qasm(c));
    else
      emit(a.common, name(c, ".txt"), io::circuit_to_text(c));
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const Common& c) {
  require_format(c.format, {"json", "text"});
  const MubContext ctx = make_context(c);
  if (ctx.n() > kUnitaryQubitCap)
    throw UsageError("verify: n=" + std::to_string(ctx.n()) + " exceeds the dense simulator cap of " +
                     std::to_string(kUnitaryQubitCap) + " qubits");
  VerificationReport report = verify_full_set(ctx);
  report.append(coefficient_distribution(ctx.field()).checks);
  report.checks.push_back(check_entanglement_structure(ctx));
  report.checks.push_back(check_linear_relation(ctx));
  report.append(check_gate_statistics(ctx));
  const std::string file = "verify_n" + std::to_string(ctx.n()) + (c.format == "json" ? ".json" : ".txt");
  emit(c, file, c.format == "json" ? io::report_to_json(report).dump(2) + "\n" : report.to_text());
  return report.passed() ? kOk : kFailed;
}

// -------------------------------------------------------------------- stats

struct StatsArgs {
  Common common;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

int cmd_stats(const StatsArgs& a) {
  require_format(a.common.format, {"json", "text"});
  const MubContext ctx = make_context(a.common);
  const std::size_t n = ctx.n();
  StatsRecord rec;
  if (a.samples == 0 && n <= kAllIndicesCap) {
    rec.n = n;
    rec.totals = kernels::omp::gate_totals_all(ctx);
  } else {
    std::mt19937_64 rng(a.seed);
    std::vector<FieldElement> js;
    const std::size_t k = a.samples == 0 ? 1000 : a.samples;
    for (std::size_t i = 0; i < k; ++i) js.push_back(random_element(n, rng));
    rec = gate_stats(ctx, js);
  }
  const std::string file = "stats_n" + std::to_string(n) + (a.common.format == "json" ? ".json" : ".txt");
  const io::Json j = io::stats_to_json(rec);
  emit(a.common, file, a.common.format == "json" ? j.dump(2) + "\n" : io::stats_to_text(rec));
  bool ok = j["max_within_bound"].get<bool>();
  if (j.contains("s_total_match")) ok = ok && j["s_total_match"].get<bool>() && j["cz_total_match"].get<bool>();
  for (const auto& row : j["cz_by_distance"])
    if (row.contains("total_match")) ok = ok && row["total_match"].get<bool>();
  return ok ? kOk : kFailed;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  Common common;
  std::string strategy;
  std::string seed_matrix = "hadamard";
  std::string roots = "4";
  std::size_t limit = 0;
  std::uint64_t budget = 1'000'000;
  std::size_t keep = 1000;
  std::string resume;
};

int cmd_search(const SearchArgs& a) {
  require_format(a.common.format, {"json", "text"});
  MubSet set;
  if (!a.resume.empty()) {
    std::ifstream f(a.resume);
    if (!f) throw UsageError("cannot read resume file " + a.resume);
    try {
      set = io::set_from_json(io::Json::parse(f));
    } catch (const std::exception& ex) {
      throw UsageError(std::string("bad resume file: ") + ex.what());
    }
  } else {
    if (a.common.n == 0 || a.common.n > 6) throw UsageError("search needs 1 <= n <= 6");
    const std::size_t d = std::size_t{1} << a.common.n;
    ComplexMatrix seed;
    if (a.seed_matrix == "hadamard")
      seed = hadamard_seed(a.common.n);
    else if (a.seed_matrix == "fourier")
      seed = fourier_seed(d);
    else
      throw UsageError("unknown --seed-matrix '" + a.seed_matrix + "'");
    PhaseSet phases = PhaseSet::fourth_roots();
    if (a.roots == "2d")
      phases = PhaseSet::general(d);
    else if (a.roots != "4")
      throw UsageError("--roots must be 4 or 2d");
    set = MubSet::with_seed(std::move(seed), a.seed_matrix, phases);
  }

  SearchOptions opt;
  opt.limit = a.limit;
  opt.node_budget = a.budget;
  opt.keep_chains = a.keep;
  const double space = std::pow(static_cast<double>(set.phases.order()), static_cast<double>(set.dim() - 1));
  if (a.strategy.empty())
    opt.strategy = space <= static_cast<double>(kExhaustiveCandidateCap) ? SearchStrategy::Exhaustive
                                                                          : SearchStrategy::GreedyFirst;
  else if (a.strategy == "exhaustive")
    opt.strategy = SearchStrategy::Exhaustive;
  else if (a.strategy == "greedy" || a.strategy == "greedy-first")
    opt.strategy = SearchStrategy::GreedyFirst;
  else
    throw UsageError("--strategy must be exhaustive or greedy");

  SearchResult result;
  try {
    result = search_extend(set, opt);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  io::Json j = io::search_to_json(result, true);
  j["strategy"] = to_string(opt.strategy);
  bool certified = true;
  for (const auto& c : j["chains"]) certified = certified && c["certificate"]["passed"].get<bool>();

  std::string text;
  if (a.common.format == "text") {
    std::ostringstream out;
    out << "dim=" << result.base.dim() << " seed=" << result.base.seed_label << " strategy=" << to_string(opt.strategy)
        << " status=" << to_string(result.status) << " chains=" << result.chains_found << " longest=" << result.longest()
        << " nodes=" << result.nodes << "\n";
    for (std::size_t i = 0; i < result.chains.size(); ++i) {
      out << "chain " << i << " (" << result.chains[i].size() + 1 << " bases, "
          << (j["chains"][i]["certificate"]["passed"].get<bool>() ? "certified" : "NOT certified") << "):";
      for (const auto& dg : result.chains[i]) {
        out << " [";
        for (std::size_t l = 0; l < dg.index.size(); ++l) out << (l ? "," : "") << dg.index[l];
        out << "]";
      }
      out << "\n";
    }
    text = out.str();
  }
  const std::string file = "search_d" + std::to_string(result.base.dim()) + (a.common.format == "json" ? ".json" : ".txt");
  emit(a.common, file, a.common.format == "json" ? j.dump(2) + "\n" : text);
  return certified ? kOk : kFailed;
}

// ----------------------------------------------------------- export-subparts

int cmd_subparts(const Common& c) {
  require_format(c.format, {"json", "text"});
  if (c.n < 2) throw UsageError("export-subparts needs n >= 2");
  const std::string file = "subparts_n" + std::to_string(c.n) + (c.format == "json" ? ".json" : ".txt");
  emit(c, file, c.format == "json" ? io::subparts_to_json(c.n).dump(2) + "\n" : io::subparts_to_text(c.n));
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_poly = true) {
  sub->add_option("-n,--qubits", c.n, "Number of qubits")->check(CLI::PositiveNumber);
  if (with_poly) sub->add_option("--poly", c.poly, "Irreducible polynomial, hex (0xb) or human form (x^3+x+1)");
  sub->add_option("--format", c.format, "Output format");
  sub->add_option("--out-dir", c.out_dir, "Write files here instead of stdout (default: $MUBS_OUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutually unbiased basis circuits over GF(2^n)"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Emit circuits U(j)");
  add_common(g, gen.common);
  gen.common.format = "qasm";
  g->add_option("-j", gen.j, "Index: decimal, 0x hex, A..B or all")->capture_default_str();
  g->add_option("--samples", gen.samples, "Emit this many uniformly random indices instead of -j");
  g->add_option("--seed", gen.seed, "Seed for --samples");

  Common verify;
  auto* v = app.add_subcommand("verify", "Brute-force verification of all 2^n + 1 bases");
  add_common(v, verify);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Gate statistics against their closed forms");
  add_common(s, stats.common);
  s->add_option("--samples", stats.samples, "Sample this many random indices instead of all j");
  s->add_option("--seed", stats.seed, "Seed for --samples");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "Method-1 diagonal search");
  add_common(se, search.common, false);
  se->add_option("--strategy", search.strategy, "exhaustive or greedy (default: exhaustive when feasible)");
  se->add_option("--seed-matrix", search.seed_matrix, "hadamard or fourier")->capture_default_str();
  se->add_option("--roots", search.roots, "Phase set: 4 or 2d")->capture_default_str();
  se->add_option("--limit", search.limit, "Stop after appending this many diagonals (0: no limit)");
  se->add_option("--budget", search.budget, "Compatibility tests allowed (greedy: 0 disables backtracking)")
      ->capture_default_str();
  se->add_option("--keep", search.keep, "Chains kept in the output")->capture_default_str();
  se->add_option("--resume", search.resume, "Continue from an earlier search JSON");

  Common subparts;
  auto* sp = app.add_subcommand("export-subparts", "CZ(m) sub-part catalog");
  add_common(sp, subparts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen);
    if (v->parsed()) return cmd_verify(verify);
    if (s->parsed()) return cmd_stats(stats);
    if (se->parsed()) return cmd_search(search);
    if (sp->parsed()) return cmd_subparts(subparts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
