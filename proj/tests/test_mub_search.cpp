#include <gtest/gtest.h>

#include <set>

#include "mubs/mub_search.hpp"

using namespace mubs;

namespace {

MubSet hadamard_set(std::size_t n) { return MubSet::with_seed(hadamard_seed(n), "hadamard"); }

SearchOptions exhaustive(std::size_t limit = 0) { return {SearchStrategy::Exhaustive, limit, 10'000'000, 1000}; }
SearchOptions greedy(std::uint64_t budget = 1'000'000) { return {SearchStrategy::GreedyFirst, 0, budget, 1}; }

}  // namespace

TEST(PhaseSet, roots) {
  const PhaseSet four;
  EXPECT_EQ(four.order(), 4u);
  EXPECT_EQ(four.root(1), Complex(0, 1));
  EXPECT_EQ(four.root(6), Complex(-1, 0));
  const PhaseSet eight = PhaseSet::general(4);
  EXPECT_EQ(eight.order(), 8u);
  EXPECT_NEAR(std::abs(eight.root(1) - std::polar(1.0, M_PI / 4)), 0, 1e-15);
  EXPECT_EQ(eight.root(2), Complex(0, 1));
}

TEST(Seeds, are_chm_and_unitary) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(is_chm(hadamard_seed(n)).passed);
    EXPECT_LT(unitarity_error(hadamard_seed(n)), 1e-12);
  }
  for (std::size_t d : {2, 3, 5, 6}) {
    EXPECT_TRUE(is_chm(fourier_seed(d)).passed);
    EXPECT_LT(unitarity_error(fourier_seed(d)), 1e-12);
  }
}

TEST(Compatible, matches_dense_product) {
  const MubSet set = hadamard_set(2);
  DiagonalPhase a{{0, 1, 2, 3}}, b{{0, 0, 1, 3}};
  for (const auto& [x, y] : std::vector<std::pair<DiagonalPhase, DiagonalPhase>>{{a, b}, {b, a}, {a, a}}) {
    MubSet tmp = set;
    tmp.diagonals = {x, y};
    const auto m = tmp.members();
    EXPECT_EQ(diagonals_compatible(set, x, y), is_chm(m[0].adjoint() * m[1]).passed);
  }
}

TEST(Search, one_qubit_finds_exactly_two_maximal_chains) {
  const SearchResult r = search_extend(hadamard_set(1), exhaustive());
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  ASSERT_EQ(r.chains.size(), 2u);
  EXPECT_EQ(r.chains_found, 2u);
  // {I, H, SH} and {I, H, S^3 H}
  EXPECT_EQ(r.chains[0][1], DiagonalPhase({{0, 1}}));
  EXPECT_EQ(r.chains[1][1], DiagonalPhase({{0, 3}}));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(r.chains[i].size() + 1, 3u);
    EXPECT_TRUE(certify_set(r.chain(i)).passed);
  }
}

TEST(Search, limit_stops_after_first_extension) {
  const SearchResult r = search_extend(hadamard_set(1), exhaustive(1));
  EXPECT_EQ(r.status, SearchStatus::LimitReached);
  ASSERT_EQ(r.chains.size(), 1u);
  EXPECT_EQ(r.chains[0].size(), 2u);
  const SearchResult g = search_extend(hadamard_set(2), {SearchStrategy::GreedyFirst, 1, 1000, 1});
  EXPECT_EQ(g.status, SearchStatus::LimitReached);
  EXPECT_EQ(g.chains[0].size(), 2u);
}

TEST(Search, two_qubits_reaches_five_bases) {
  const SearchResult g = search_extend(hadamard_set(2), greedy());
  EXPECT_EQ(g.status, SearchStatus::UpperBoundReached);
  EXPECT_EQ(g.longest(), 5u);
  const SetCertificate c = certify_set(g.chain(0));
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.max_deviation, kInnerProductTolerance);

  const SearchResult e = search_extend(hadamard_set(2), exhaustive());
  EXPECT_EQ(e.status, SearchStatus::Exhausted);
  EXPECT_EQ(e.longest(), 5u);
  for (std::size_t i = 0; i < e.chains.size(); ++i) EXPECT_TRUE(certify_set(e.chain(i)).passed);
  // chains are distinct sets
  std::set<std::vector<DiagonalPhase>> unique(e.chains.begin(), e.chains.end());
  EXPECT_EQ(unique.size(), e.chains.size());
}

TEST(Search, pure_greedy_can_stall) {
  const SearchResult g = search_extend(hadamard_set(2), greedy(0));
  EXPECT_EQ(g.status, SearchStatus::Exhausted);
  EXPECT_LT(g.longest(), 5u);
  EXPECT_TRUE(certify_set(g.chain(0)).passed);
}

TEST(Search, three_qubits_greedy_reaches_nine_bases) {
  const SearchResult g = search_extend(hadamard_set(3), greedy());
  EXPECT_EQ(g.status, SearchStatus::UpperBoundReached);
  EXPECT_EQ(g.longest(), 9u);
  EXPECT_TRUE(certify_set(g.chain(0)).passed);
}

TEST(Search, budget_is_reported) {
  const SearchResult r = search_extend(hadamard_set(3), {SearchStrategy::Exhaustive, 0, 1000, 10});
  EXPECT_EQ(r.status, SearchStatus::BudgetExhausted);
  EXPECT_GT(r.nodes, 1000u);
}

TEST(Search, exhaustive_refuses_huge_spaces) {
  EXPECT_THROW(search_extend(hadamard_set(4), exhaustive()), std::invalid_argument);
}

TEST(Search, resume_extends_an_existing_set) {
  const SearchResult first = search_extend(hadamard_set(2), {SearchStrategy::GreedyFirst, 2, 100000, 1});
  ASSERT_EQ(first.status, SearchStatus::LimitReached);
  const SearchResult second = search_extend(first.chain(0), greedy());
  EXPECT_EQ(second.longest(), 5u);
  for (std::size_t i = 0; i < first.chains[0].size(); ++i) EXPECT_EQ(second.chains[0][i], first.chains[0][i]);
}

TEST(Search, validates_input) {
  MubSet bad = hadamard_set(1);
  bad.diagonals.front().index[0] = 1;
  EXPECT_THROW(search_extend(bad, exhaustive()), std::invalid_argument);
}

TEST(Certify, trivial_sets) {
  const SetCertificate two = certify_set(hadamard_set(3));
  EXPECT_TRUE(two.passed);
  EXPECT_EQ(two.bases, 2u);
  const SetCertificate ii = certify_set(MubSet::with_seed(ComplexMatrix::identity(2), "identity"));
  EXPECT_FALSE(ii.passed);
  ASSERT_EQ(ii.violations.size(), 1u);
  EXPECT_EQ(ii.violations[0], std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Certify, galois_fourier_family_up_to_four_qubits) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const MubSet set = galois_fourier_family(MubContext::for_qubits(n));
    EXPECT_EQ(set.diagonals.size(), std::size_t{1} << n);
    EXPECT_EQ(set.diagonals.front(), DiagonalPhase::identity(std::size_t{1} << n));
    const SetCertificate c = certify_set(set);
    EXPECT_TRUE(c.passed) << "n=" << n;
    EXPECT_EQ(c.bases, (std::size_t{1} << n) + 1);
  }
  const auto alt = MubContext(IrreduciblePoly::create(BinaryPolynomial::parse("x^3+x^2+1")));
  EXPECT_TRUE(certify_set(galois_fourier_family(alt)).passed);
}

TEST(Certify, galois_family_members_equal_circuit_unitaries) {
  const auto ctx = MubContext::for_qubits(3);
  const auto members = galois_fourier_family(ctx).members();
  for (std::uint64_t j = 0; j < 8; ++j) {
    const auto u = apply_gatelist(emit_gates(build_circuit(ctx, ctx.index(j))), 3);
    EXPECT_LT(max_abs_diff(members[j], u), 1e-12);
  }
}

TEST(Certify, detects_a_corrupted_member) {
  MubSet set = galois_fourier_family(MubContext::for_qubits(2));
  set.diagonals[2] = set.diagonals[1];
  const SetCertificate c = certify_set(set);
  EXPECT_FALSE(c.passed);
  EXPECT_FALSE(c.violations.empty());
  EXPECT_TRUE(c.mu_cross_check);
}
