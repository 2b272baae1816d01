#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "mubs/gf2n.hpp"

using namespace mubs;

namespace {

// Independent arithmetic on raw 64-bit masks.

int deg(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t slow_mod(std::uint64_t a, std::uint64_t p) {
  while (deg(a) >= deg(p)) a ^= p << (deg(a) - deg(p));
  return a;
}

// Schoolbook product one bit at a time, reducing as it goes.
std::uint64_t slow_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (int i = deg(b); i >= 0; --i) {
    acc = slow_mod(acc << 1, p);
    if ((b >> i) & 1) acc ^= a;
  }
  return slow_mod(acc, p);
}

bool trial_division_irreducible(std::uint64_t p) {
  const int n = deg(p);
  for (std::uint64_t q = 2; deg(q) <= n / 2; ++q)
    if (slow_mod(p, q) == 0) return false;
  return true;
}

std::uint64_t smallest_by_trial(int n) {
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
    const std::uint64_t p = (std::uint64_t{1} << n) | low;
    if (trial_division_irreducible(p)) return p;
  }
  return 0;
}

PolyContext ctx_of(std::uint64_t p) { return IrreduciblePoly::create(BinaryPolynomial::from_u64(p)); }

}  // namespace

TEST(FieldElement, three_views_round_trip) {
  for (std::uint64_t v = 0; v < 64; ++v) {
    const FieldElement e = FieldElement::from_u64(6, v);
    EXPECT_EQ(e.to_u64(), v);
    EXPECT_EQ(BinaryPolynomial::from_element(e).to_element(6), e);
    for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(e.bit(t), ((v >> t) & 1) != 0);
  }
}

TEST(FieldElement, parse_and_print) {
  EXPECT_EQ(FieldElement::parse(8, "200").to_u64(), 200u);
  EXPECT_EQ(FieldElement::parse(8, "0xff").to_u64(), 255u);
  EXPECT_THROW(FieldElement::parse(8, "256"), std::out_of_range);
  EXPECT_THROW(FieldElement::parse(8, "0x100"), std::out_of_range);
  EXPECT_THROW(FieldElement::parse(8, "12a"), std::invalid_argument);
  const FieldElement big = FieldElement::parse(130, "0x3" + std::string(32, '0'));
  EXPECT_TRUE(big.bit(128));
  EXPECT_TRUE(big.bit(129));
  EXPECT_EQ(big.popcount(), 2u);
  EXPECT_EQ(FieldElement::parse(130, big.to_decimal()), big);
  EXPECT_EQ(FieldElement::parse(130, big.to_hex()), big);
}

TEST(BinaryPolynomial, degree_and_xor) {
  EXPECT_EQ(BinaryPolynomial().degree(), BinaryPolynomial::kZeroDegree);
  EXPECT_EQ(BinaryPolynomial::from_u64(0xb).degree(), 3);
  EXPECT_EQ(BinaryPolynomial::monomial(200).degree(), 200);
  const auto p = BinaryPolynomial::from_u64(0x1234);
  EXPECT_TRUE((p ^ p).is_zero());
}

TEST(BinaryPolynomial, parse_forms) {
  EXPECT_EQ(BinaryPolynomial::parse("x^2+x+1"), BinaryPolynomial::from_u64(0x7));
  EXPECT_EQ(BinaryPolynomial::parse("0x7"), BinaryPolynomial::from_u64(0x7));
  EXPECT_EQ(BinaryPolynomial::parse("x^9 + x + 1"), BinaryPolynomial::from_u64(0x203));
  EXPECT_EQ(BinaryPolynomial::from_u64(0xd).to_string(), "x^3+x^2+1");
  EXPECT_EQ(BinaryPolynomial::parse(BinaryPolynomial::from_u64(0x11b).to_string()).to_hex(),
            BinaryPolynomial::from_u64(0x11b).to_hex());
  EXPECT_THROW(BinaryPolynomial::parse("x^2+x^2"), std::invalid_argument);
  EXPECT_THROW(BinaryPolynomial::parse("y+1"), std::invalid_argument);
}

TEST(BinaryPolynomial, multiply_and_mod_against_oracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng() & 0xffffffff;
    const std::uint64_t b = rng() & 0xffffffff;
    const std::uint64_t p = (rng() & 0xffff) | 0x10000;
    std::uint64_t prod = 0;
    for (int k = 0; k < 32; ++k)
      if ((b >> k) & 1) prod ^= a << k;
    EXPECT_EQ(BinaryPolynomial::from_u64(a) * BinaryPolynomial::from_u64(b), BinaryPolynomial::from_u64(prod));
    EXPECT_EQ(BinaryPolynomial::from_u64(a).mod(BinaryPolynomial::from_u64(p)),
              BinaryPolynomial::from_u64(slow_mod(a, p)));
  }
}

TEST(IsIrreducible, examples) {
  EXPECT_TRUE(is_irreducible(BinaryPolynomial::parse("x^2+x+1")));
  EXPECT_FALSE(is_irreducible(BinaryPolynomial::parse("x^2+1")));
  EXPECT_TRUE(is_irreducible(BinaryPolynomial::parse("x^4+x^3+x^2+x+1")));
  EXPECT_THROW(is_irreducible(BinaryPolynomial::from_u64(1)), std::invalid_argument);
}

TEST(IsIrreducible, agrees_with_trial_division_up_to_degree_12) {
  for (std::uint64_t p = 2; p < (1u << 13); ++p)
    ASSERT_EQ(is_irreducible(BinaryPolynomial::from_u64(p)), trial_division_irreducible(p)) << std::hex << p;
}

TEST(FindIrreducible, matches_trial_division_oracle) {
  for (int n = 1; n <= 16; ++n)
    EXPECT_EQ(smallest_irreducible(n), BinaryPolynomial::from_u64(smallest_by_trial(n))) << "n=" << n;
}

TEST(FindIrreducible, named_values) {
  EXPECT_EQ(find_irreducible(1)->poly().to_string(), "x+1");
  EXPECT_EQ(find_irreducible(2)->poly().to_string(), "x^2+x+1");
  EXPECT_EQ(find_irreducible(9)->poly().to_string(), "x^9+x+1");
  EXPECT_THROW(find_irreducible(0), std::invalid_argument);
}

TEST(FindIrreducible, large_degrees_are_irreducible_with_unit_constant) {
  for (std::size_t n : {64, 127, 128, 256, 512}) {
    const auto p = find_irreducible(n);
    EXPECT_EQ(p->n(), n);
    EXPECT_TRUE(p->poly().coeff(0));
    EXPECT_TRUE(is_irreducible(p->poly()));
  }
}

TEST(IrreduciblePoly, rejects_bad_input) {
  EXPECT_THROW(IrreduciblePoly::create(BinaryPolynomial::parse("x^2+1")), std::invalid_argument);
  EXPECT_THROW(IrreduciblePoly::create(BinaryPolynomial::parse("x^2+x")), std::invalid_argument);
  EXPECT_THROW(IrreduciblePoly::create(BinaryPolynomial::from_u64(1)), std::invalid_argument);
}

TEST(PowerVector, examples) {
  const auto p = ctx_of(0xb);
  EXPECT_EQ(power_vector(*p, 3).to_u64(), 3u);
  EXPECT_EQ(power_vector(*p, 4).to_u64(), 6u);
  EXPECT_EQ(power_vector(*p, 0).to_u64(), 1u);
  EXPECT_THROW(power_vector(*p, 5), std::out_of_range);
}

TEST(PowerVector, table_matches_long_division) {
  for (int n = 1; n <= 16; ++n) {
    const std::uint64_t pm = smallest_by_trial(n);
    const auto p = ctx_of(pm);
    for (std::size_t m = 0; m <= 2 * static_cast<std::size_t>(n) - 2; ++m) {
      ASSERT_EQ(power_vector(*p, m).to_u64(), slow_mod(std::uint64_t{1} << m, pm)) << "n=" << n << " m=" << m;
      if (m < static_cast<std::size_t>(n)) EXPECT_EQ(power_vector(*p, m), FieldElement::unit(n, m));
    }
    // x^n = the low coefficients (1, a_1, ..., a_{n-1}) of p.
    if (n >= 2) EXPECT_EQ(power_vector(*p, n).to_u64(), pm ^ (std::uint64_t{1} << n));
  }
}

TEST(GfMul, examples) {
  const auto p = ctx_of(0x7);
  EXPECT_EQ(gf_mul(*p, p->element(2), p->element(2)).to_u64(), 3u);
  EXPECT_EQ(gf_mul(*p, p->element(2), p->element(3)).to_u64(), 1u);
  for (std::uint64_t k = 0; k < 4; ++k) EXPECT_EQ(gf_mul(*p, p->element(1), p->element(k)).to_u64(), k);
}

TEST(GfMul, exhaustive_against_oracle_up_to_n8) {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t pm = smallest_by_trial(n);
    const auto p = ctx_of(pm);
    const std::uint64_t d = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < d; ++a)
      for (std::uint64_t b = 0; b < d; ++b)
        ASSERT_EQ(gf_mul(*p, p->element(a), p->element(b)).to_u64(), slow_mulmod(a, b, pm))
            << "n=" << n << " " << a << "*" << b;
  }
}

TEST(GfMul, randomized_against_oracle_up_to_n24) {
  std::mt19937_64 rng(2024);
  for (int n = 9; n <= 24; ++n) {
    const std::uint64_t pm = smallest_irreducible(n).limbs()[0];
    const auto p = ctx_of(pm);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < 300; ++i) {
      const std::uint64_t a = rng() & mask, b = rng() & mask;
      ASSERT_EQ(gf_mul(*p, p->element(a), p->element(b)).to_u64(), slow_mulmod(a, b, pm));
    }
  }
}

TEST(GfMul, field_axioms_randomized) {
  std::mt19937_64 rng(99);
  for (std::size_t n : {3, 17, 64, 100, 256}) {
    const auto p = find_irreducible(n);
    auto rand_el = [&] {
      FieldElement e(n);
      for (auto& l : e.limbs()) l = rng();
      if (n % 64) e.limbs().back() &= (std::uint64_t{1} << (n % 64)) - 1;
      return e;
    };
    const FieldElement one = FieldElement::unit(n, 0);
    for (int i = 0; i < 30; ++i) {
      const FieldElement a = rand_el(), b = rand_el(), c = rand_el();
      EXPECT_EQ(gf_mul(*p, a, b), gf_mul(*p, b, a));
      EXPECT_EQ(gf_mul(*p, gf_mul(*p, a, b), c), gf_mul(*p, a, gf_mul(*p, b, c)));
      EXPECT_EQ(gf_mul(*p, a, b ^ c), gf_mul(*p, a, b) ^ gf_mul(*p, a, c));
      EXPECT_EQ(gf_mul(*p, one, a), a);
    }
  }
}

TEST(GfMul, every_nonzero_element_has_an_inverse) {
  for (int n = 1; n <= 8; ++n) {
    const auto p = find_irreducible(n);
    const std::uint64_t d = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < d; ++a) {
      bool found = false;
      for (std::uint64_t b = 1; b < d && !found; ++b) found = gf_mul(*p, p->element(a), p->element(b)).to_u64() == 1;
      ASSERT_TRUE(found) << "n=" << n << " a=" << a;
    }
  }
}

TEST(BitMatrix, m_r_entries_and_component_form) {
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t pm = smallest_by_trial(n);
    const auto p = ctx_of(pm);
    const std::uint64_t d = std::uint64_t{1} << n;
    std::vector<BitMatrix> ms;
    for (int r = 0; r < n; ++r) ms.push_back(build_m_r(*p, r));
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) EXPECT_EQ(ms[r].get(s, t), ((slow_mod(1ull << (s + t), pm) >> r) & 1) != 0);
    // (j (.) l)_r = j M_r l^T
    for (std::uint64_t j = 0; j < d; ++j)
      for (std::uint64_t l = 0; l < d; ++l) {
        const std::uint64_t prod = slow_mulmod(j, l, pm);
        for (int r = 0; r < n; ++r)
          ASSERT_EQ(bit_form(p->element(j), ms[r], p->element(l)), ((prod >> r) & 1) != 0);
      }
    EXPECT_EQ(build_m_r(*p, 0).rank(), static_cast<std::size_t>(n));
    EXPECT_THROW(build_m_r(*p, n), std::out_of_range);
  }
}

TEST(BitMatrix, m0_m1_invertible) {
  for (std::size_t n = 2; n <= 64; ++n) {
    const auto p = find_irreducible(n);
    EXPECT_EQ(p->m0().rank(), n) << n;
    EXPECT_EQ(p->m1().rank(), n) << n;
  }
  for (auto pm : {0xbull, 0xdull, 0x1full}) {
    const auto p = ctx_of(pm);
    EXPECT_EQ(p->m0().rank(), p->n());
    EXPECT_EQ(p->m1().rank(), p->n());
  }
}

TEST(BitForm, examples) {
  const auto p = ctx_of(0xb);
  const FieldElement x3 = power_vector(*p, 3);
  EXPECT_TRUE(bit_form(p->element(1), p->m0(), x3));
  EXPECT_FALSE(bit_form(p->element(1), p->m0(), power_vector(*p, 1)));
  for (std::uint64_t v = 0; v < 8; ++v) EXPECT_FALSE(bit_form(p->zero(), p->m0(), p->element(v)));
}

TEST(BitForm, half_of_the_indices_give_one) {
  for (int n = 1; n <= 10; ++n) {
    const auto p = find_irreducible(n);
    const std::uint64_t d = std::uint64_t{1} << n;
    for (std::uint64_t v = 1; v < d; ++v) {
      std::uint64_t ones = 0;
      for (std::uint64_t j = 0; j < d; ++j) ones += bit_form(p->element(j), p->m0(), p->element(v));
      ASSERT_EQ(ones, d / 2) << "n=" << n << " v=" << v;
    }
  }
}
