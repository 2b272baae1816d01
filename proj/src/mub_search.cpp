#include "mubs/mub_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mubs {

PhaseSet::PhaseSet(std::uint32_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("phase set order must be positive");
  roots_.reserve(order);
  for (std::uint32_t e = 0; e < order; ++e) {
    // Exact values at the quarter turns keep 4th-root arithmetic free of rounding.
    if (4 * e % order == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots_.push_back(quarter[4 * e / order]);
    } else {
      roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * e / order));
    }
  }
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exhausted: return "search_exhausted";
    case SearchStatus::LimitReached: return "limit_reached";
    case SearchStatus::UpperBoundReached: return "upper_bound_reached";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string to_string(SearchStrategy s) {
  return s == SearchStrategy::Exhaustive ? "exhaustive" : "greedy-first";
}

MubSet MubSet::with_seed(ComplexMatrix seed, std::string label, PhaseSet phases) {
  if (!seed.is_square() || seed.rows() == 0) throw std::invalid_argument("seed must be a non-empty square matrix");
  MubSet set{std::move(seed), std::move(label), std::move(phases), {}};
  set.diagonals.push_back(DiagonalPhase::identity(set.dim()));
  return set;
}

ComplexMatrix MubSet::diagonal_matrix(std::size_t k) const {
  const auto& idx = diagonals.at(k).index;
  std::vector<Complex> entries(idx.size());
  for (std::size_t l = 0; l < idx.size(); ++l) entries[l] = phases.root(idx[l]);
  return ComplexMatrix::diagonal(entries);
}

std::vector<ComplexMatrix> MubSet::members() const {
  std::vector<ComplexMatrix> out;
  out.reserve(diagonals.size());
  for (std::size_t k = 0; k < diagonals.size(); ++k) out.push_back(diagonal_matrix(k) * seed);
  return out;
}

ComplexMatrix hadamard_seed(std::size_t n) {
  if (n >= 16) throw std::invalid_argument("hadamard_seed: n too large for a dense matrix");
  const std::size_t d = std::size_t{1} << n;
  const double h = std::pow(2.0, -0.5 * static_cast<double>(n));
  ComplexMatrix u(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = (std::popcount(r & c) & 1) ? -h : h;
  return u;
}

ComplexMatrix fourier_seed(std::size_t d) {
  if (d == 0) throw std::invalid_argument("fourier_seed: empty dimension");
  const PhaseSet w(static_cast<std::uint32_t>(d));
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix u(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = s * w.root(static_cast<std::uint32_t>((r * c) % d));
  return u;
}

bool diagonals_compatible(const MubSet& set, const DiagonalPhase& a, const DiagonalPhase& b, double tolerance) {
  const std::size_t d = set.dim();
  if (a.dim() != d || b.dim() != d) throw std::invalid_argument("diagonal has the wrong dimension");
  const ComplexMatrix& u = set.seed;
  const std::uint32_t order = set.phases.order();
  const double target = 1.0 / static_cast<double>(d);
  std::vector<Complex> delta(d);
  for (std::size_t l = 0; l < d; ++l) delta[l] = set.phases.root((b.index[l] + order - a.index[l] % order) % order);
  std::vector<Complex> w(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t l = 0; l < d; ++l) w[l] = std::conj(u(l, r)) * delta[l];
    for (std::size_t c = 0; c < d; ++c) {
      Complex g = 0.0;
      for (std::size_t l = 0; l < d; ++l) g += w[l] * u(l, c);
      if (std::abs(std::norm(g) - target) > tolerance) return false;
    }
  }
  return true;
}

namespace {

// Lexicographic successor with entry 0 pinned; false after the last vector.
bool next_candidate(DiagonalPhase& v, std::uint32_t order) {
  for (std::size_t l = v.dim(); l-- > 1;) {
    if (++v.index[l] < order) return true;
    v.index[l] = 0;
  }
  return false;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  bool spend() {
    ++used_;
    return limit_ == 0 || used_ <= limit_;
  }
  bool exceeded() const { return limit_ != 0 && used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

bool contains(const std::vector<DiagonalPhase>& v, const DiagonalPhase& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void validate_input(const MubSet& set) {
  if (set.diagonals.empty() || set.diagonals.front() != DiagonalPhase::identity(set.dim()))
    throw std::invalid_argument("set must start with the identity diagonal");
  for (const auto& dg : set.diagonals) {
    if (dg.dim() != set.dim()) throw std::invalid_argument("diagonal has the wrong dimension");
    if (dg.index[0] != 0) throw std::invalid_argument("diagonal entry 0 must be fixed to phase index 0");
    for (auto e : dg.index)
      if (e >= set.phases.order()) throw std::invalid_argument("phase index outside the phase set");
  }
}

// ---------------------------------------------------------------- exhaustive

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void put_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool any_bits(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

struct Exhaustive {
  const MubSet& base;
  const SearchOptions& opt;
  Budget& budget;
  std::vector<DiagonalPhase> pool;
  std::vector<Bits> adj;
  SearchResult& result;
  std::vector<std::size_t> chain;
  bool stop = false;

  void record() {
    ++result.chains_found;
    if (result.chains.size() >= opt.keep_chains) return;
    std::vector<DiagonalPhase> ds = base.diagonals;
    for (auto i : chain) ds.push_back(pool[i]);
    result.chains.push_back(std::move(ds));
  }

  // common: pool members compatible with the input set and every chosen one.
  void dfs(std::size_t start, const Bits& common) {
    if (stop) return;
    if (opt.limit != 0 && chain.size() == opt.limit) {
      record();
      result.status = SearchStatus::LimitReached;
      stop = true;
      return;
    }
    bool extended = false;
    for (std::size_t i = start; i < pool.size() && !stop; ++i) {
      if (!test_bit(common, i)) continue;
      extended = true;
      if (!budget.spend()) {
        result.status = SearchStatus::BudgetExhausted;
        stop = true;
        return;
      }
      Bits next(common.size());
      for (std::size_t w = 0; w < common.size(); ++w) next[w] = common[w] & adj[i][w];
      chain.push_back(i);
      dfs(i + 1, next);
      chain.pop_back();
    }
    // A leaf is reported only when nothing, earlier or later, extends it.
    if (!extended && !any_bits(common)) record();
  }
};

SearchResult run_exhaustive(const MubSet& set, const SearchOptions& opt) {
  const std::size_t d = set.dim();
  const std::uint32_t order = set.phases.order();
  double total = std::pow(static_cast<double>(order), static_cast<double>(d - 1));
  if (total > static_cast<double>(kExhaustiveCandidateCap))
    throw std::invalid_argument("exhaustive search space of " + std::to_string(order) + "^" + std::to_string(d - 1) +
                                " candidates exceeds the cap; use greedy-first");

  SearchResult result;
  result.base = set;
  Budget budget(opt.node_budget);
  Exhaustive ex{set, opt, budget, {}, {}, result, {}};

  DiagonalPhase cand = DiagonalPhase::identity(d);
  while (next_candidate(cand, order)) {
    ++result.candidates;
    if (contains(set.diagonals, cand)) continue;
    bool ok = true;
    for (const auto& member : set.diagonals) {
      if (!budget.spend()) {
        result.status = SearchStatus::BudgetExhausted;
        result.nodes = budget.used();
        return result;
      }
      if (!diagonals_compatible(set, member, cand)) {
        ok = false;
        break;
      }
    }
    if (ok) ex.pool.push_back(cand);
  }

  const std::size_t m = ex.pool.size();
  const std::size_t words = (m + 63) / 64;
  ex.adj.assign(m, Bits(words));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!budget.spend()) {
        result.status = SearchStatus::BudgetExhausted;
        result.nodes = budget.used();
        return result;
      }
      if (diagonals_compatible(set, ex.pool[a], ex.pool[b])) {
        put_bit(ex.adj[a], b);
        put_bit(ex.adj[b], a);
      }
    }

  Bits all(words);
  for (std::size_t i = 0; i < m; ++i) put_bit(all, i);
  ex.dfs(0, all);
  result.nodes = budget.used();
  return result;
}

// -------------------------------------------------------------- greedy-first

SearchResult run_greedy(const MubSet& set, const SearchOptions& opt) {
  const std::size_t d = set.dim();
  const std::uint32_t order = set.phases.order();
  const bool backtrack = opt.node_budget != 0;
  Budget budget(opt.node_budget);
  SearchResult result;
  result.base = set;

  std::vector<DiagonalPhase> chain = set.diagonals;
  std::vector<DiagonalPhase> best = chain;
  const std::size_t base_size = chain.size();
  // cursor.back() is the last candidate tried at the current depth.
  std::vector<DiagonalPhase> cursor{DiagonalPhase::identity(d)};

  auto finish = [&](SearchStatus status) {
    result.status = status;
    result.nodes = budget.used();
    result.chains.push_back(best);
    result.chains_found = 1;
    return result;
  };

  while (true) {
    if (chain.size() + 1 >= d + 1) return finish(SearchStatus::UpperBoundReached);
    if (opt.limit != 0 && chain.size() - base_size >= opt.limit) return finish(SearchStatus::LimitReached);

    bool found = false;
    DiagonalPhase& cand = cursor.back();
    while (next_candidate(cand, order)) {
      ++result.candidates;
      if (contains(chain, cand)) continue;
      bool ok = true;
      for (const auto& member : chain) {
        if (!budget.spend()) return finish(SearchStatus::BudgetExhausted);
        if (!diagonals_compatible(set, member, cand)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = true;
        break;
      }
    }

    if (found) {
      chain.push_back(cursor.back());
      if (chain.size() > best.size()) best = chain;
      // Later members follow earlier ones in lexicographic order.
      cursor.push_back(cursor.back());
      continue;
    }
    if (!backtrack || chain.size() == base_size) return finish(SearchStatus::Exhausted);
    chain.pop_back();
    cursor.pop_back();
  }
}

}  // namespace

MubSet SearchResult::chain(std::size_t i) const {
  return MubSet{base.seed, base.seed_label, base.phases, chains.at(i)};
}

std::size_t SearchResult::longest() const {
  std::size_t best = 0;
  for (const auto& c : chains) best = std::max(best, c.size() + 1);
  return best;
}

SearchResult search_extend(const MubSet& set, const SearchOptions& options) {
  validate_input(set);
  return options.strategy == SearchStrategy::Exhaustive ? run_exhaustive(set, options) : run_greedy(set, options);
}

SetCertificate certify_set(const MubSet& set) {
  SetCertificate cert;
  std::vector<ComplexMatrix> bases;
  bases.push_back(ComplexMatrix::identity(set.dim()));
  for (auto& m : set.members()) bases.push_back(std::move(m));
  cert.bases = bases.size();

  for (std::size_t a = 0; a < bases.size(); ++a) {
    const ComplexMatrix a_dag = bases[a].adjoint();
    const auto cols_a = bases[a].columns();
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      const Deviation dev = is_chm(a_dag * bases[b]);
      cert.max_deviation = std::max(cert.max_deviation, dev.max_deviation);
      if (!dev.passed) cert.violations.emplace_back(a, b);
      bool mu = false;
      try {
        mu = mu_check(cols_a, bases[b].columns()).passed;
      } catch (const std::invalid_argument&) {
        mu = false;
      }
      if (mu != dev.passed) cert.mu_cross_check = false;
    }
  }
  cert.passed = cert.violations.empty() && cert.mu_cross_check;
  return cert;
}

DiagonalPhase circuit_diagonal(const MubCircuit& c) {
  const std::size_t n = c.n();
  if (n >= 24) throw std::invalid_argument("circuit_diagonal: n too large for a dense diagonal");
  const std::size_t d = std::size_t{1} << n;
  const auto pairs = c.cz_pairs();
  DiagonalPhase out = DiagonalPhase::identity(d);
  for (std::size_t l = 0; l < d; ++l) {
    std::uint32_t e = 0;
    for (std::size_t r = 0; r < n; ++r)
      if ((l >> r) & 1u) e += c.s_exp()[r];
    for (const auto& [s, t] : pairs)
      if (((l >> s) & 1u) && ((l >> t) & 1u)) e += 2;
    out.index[l] = e % 4;
  }
  return out;
}

MubSet galois_fourier_family(const MubContext& ctx) {
  const std::size_t n = ctx.n();
  MubSet set{hadamard_seed(n), "hadamard", PhaseSet::fourth_roots(), {}};
  for (std::uint64_t j = 0; j < ctx.basis_count(); ++j)
    set.diagonals.push_back(circuit_diagonal(build_circuit(ctx, ctx.index(j))));
  return set;
}

}  // namespace mubs
