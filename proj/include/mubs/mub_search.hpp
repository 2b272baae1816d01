#pragma once

// Method-1 search: fix a CHM seed U1 and collect diagonal phase matrices D_k
// such that {I, D_1 U1, D_2 U1, ...} is pairwise mutually unbiased. D_1 = I is
// always a member, so a set with m diagonals describes m + 1 bases.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mubs/mub_core.hpp"
#include "mubs/verify_sim.hpp"

namespace mubs {

/// Roots of unity exp(2 pi i e / order), e = 0..order-1.
class PhaseSet {
 public:
  explicit PhaseSet(std::uint32_t order = 4);
  /// {+-1, +-i}.
  static PhaseSet fourth_roots() { return PhaseSet(4); }
  /// 2d-th roots for dimension d.
  static PhaseSet general(std::size_t d) { return PhaseSet(static_cast<std::uint32_t>(2 * d)); }

  std::uint32_t order() const { return order_; }
  const Complex& root(std::uint32_t e) const { return roots_[e % order_]; }

 private:
  std::uint32_t order_;
  std::vector<Complex> roots_;
};

/// Phase indices of a diagonal matrix; entry 0 is held at 0 (global phase).
struct DiagonalPhase {
  std::vector<std::uint32_t> index;

  static DiagonalPhase identity(std::size_t d) { return {std::vector<std::uint32_t>(d, 0)}; }
  std::size_t dim() const { return index.size(); }
  friend bool operator==(const DiagonalPhase&, const DiagonalPhase&) = default;
  friend auto operator<=>(const DiagonalPhase&, const DiagonalPhase&) = default;
};

struct MubSet {
  ComplexMatrix seed;
  std::string seed_label;
  PhaseSet phases;
  /// First entry is the identity.
  std::vector<DiagonalPhase> diagonals;

  /// {I, U1}.
  static MubSet with_seed(ComplexMatrix seed, std::string label, PhaseSet phases = PhaseSet::fourth_roots());

  std::size_t dim() const { return seed.rows(); }
  /// Bases in the set: the computational basis plus one per diagonal.
  std::size_t basis_count() const { return diagonals.size() + 1; }
  ComplexMatrix diagonal_matrix(std::size_t k) const;
  /// D_k U1 for every diagonal.
  std::vector<ComplexMatrix> members() const;
};

/// H^(x)n (Sylvester order).
ComplexMatrix hadamard_seed(std::size_t n);
/// Normalised DFT of dimension d.
ComplexMatrix fourier_seed(std::size_t d);

/// True iff U1^dag D_a^dag D_b U1 is a CHM; rows are evaluated in order and
/// the test stops at the first violating entry.
bool diagonals_compatible(const MubSet& set, const DiagonalPhase& a, const DiagonalPhase& b,
                          double tolerance = kInnerProductTolerance);

enum class SearchStrategy { Exhaustive, GreedyFirst };

enum class SearchStatus {
  /// Every candidate was examined; no reported chain can be extended.
  Exhausted,
  /// A chain reached the requested number of appended diagonals.
  LimitReached,
  /// A chain reached d + 1 bases.
  UpperBoundReached,
  /// The candidate-test budget ran out first.
  BudgetExhausted,
};

std::string to_string(SearchStatus s);
std::string to_string(SearchStrategy s);

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  /// Maximum diagonals appended to the input set; 0 means no limit.
  std::size_t limit = 0;
  /// Maximum pairwise compatibility tests. For GreedyFirst a budget of 0
  /// disables backtracking: the first compatible candidate is always taken.
  std::uint64_t node_budget = 1'000'000;
  /// Exhaustive only: chains stored in the result; all are still counted.
  std::size_t keep_chains = 1000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  /// Input set; every chain starts with its diagonals.
  MubSet base;
  /// Exhaustive: maximal extensions in lexicographic order (first
  /// keep_chains of them). GreedyFirst: the single longest chain found.
  std::vector<std::vector<DiagonalPhase>> chains;
  std::uint64_t chains_found = 0;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;

  MubSet chain(std::size_t i) const;
  /// Bases in the largest stored chain.
  std::size_t longest() const;
};

/// Exhaustive search enumerates at most this many candidate diagonals
/// (order^(d-1)); 4^7 at d = 8 fits, d = 16 does not.
inline constexpr std::uint64_t kExhaustiveCandidateCap = std::uint64_t{1} << 20;

SearchResult search_extend(const MubSet& set, const SearchOptions& options);

struct SetCertificate {
  bool passed = true;
  std::size_t bases = 0;
  double max_deviation = 0.0;
  /// Member indices (0 = computational basis, k >= 1 = D_k U1).
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  /// Result of the independent mu_check cross-check.
  bool mu_cross_check = true;
};

SetCertificate certify_set(const MubSet& set);

/// Diagonals of U_CZ(j) U_S(j) for j = 0..2^n-1 with seed H^(x)n.
MubSet galois_fourier_family(const MubContext& ctx);

/// Phase-index vector of U_CZ(j) U_S(j).
DiagonalPhase circuit_diagonal(const MubCircuit& c);

}  // namespace mubs
