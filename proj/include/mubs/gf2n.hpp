#pragma once

// Arithmetic in GF(2^n) realized as F2[x] / p(x).
//
// Bit order, used everywhere in this project: bit 0 of limb 0 is the
// constant coefficient l_0, so the integer view is l = l_0 + l_1*2 + ...
// and the polynomial view is l_0 + l_1 x + ... + l_{n-1} x^{n-1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mubs {

/// Fixed-width bit vector: an element of F2^n, i.e. a field element in its
/// vector form. Bits at or above width() are always zero.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::size_t width);

  static FieldElement from_u64(std::size_t width, std::uint64_t value);
  static FieldElement unit(std::size_t width, std::size_t index);
  /// Accepts decimal digits or a 0x-prefixed hex string.
  static FieldElement parse(std::size_t width, std::string_view text);

  std::size_t width() const { return width_; }
  bool bit(std::size_t i) const {
    return ((limbs_[i / 64] >> (i % 64)) & 1u) != 0;
  }
  void set_bit(std::size_t i, bool value = true);
  void flip_bit(std::size_t i) { limbs_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool is_zero() const;
  std::size_t popcount() const;
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  std::string to_hex() const;
  std::string to_decimal() const;

  std::span<const std::uint64_t> limbs() const { return limbs_; }
  std::span<std::uint64_t> limbs() { return limbs_; }

  FieldElement& operator^=(const FieldElement& other);
  friend FieldElement operator^(FieldElement a, const FieldElement& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  /// Numeric order of the integer view.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  template <typename F>
  void for_each_set_bit(F&& f) const {
    for (std::size_t w = 0; w < limbs_.size(); ++w) {
      std::uint64_t word = limbs_[w];
      while (word != 0) {
        const int b = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> limbs_;
};

/// Parity of (a AND b): the F2 inner product a . b^T.
bool dot(const FieldElement& a, const FieldElement& b);

/// Polynomial over F2 of arbitrary degree. Trailing zero limbs are trimmed,
/// so equality is structural.
class BinaryPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  BinaryPolynomial() = default;
  static BinaryPolynomial from_u64(std::uint64_t bits);
  static BinaryPolynomial monomial(std::size_t k);
  static BinaryPolynomial from_element(const FieldElement& e);

  /// Either a hex bitmask ("0x7") or a sum of terms ("x^2+x+1").
  static BinaryPolynomial parse(std::string_view text);

  /// Highest set coefficient, or kZeroDegree for the zero polynomial.
  int degree() const;
  bool is_zero() const { return limbs_.empty(); }
  bool coeff(std::size_t k) const;
  void set_coeff(std::size_t k, bool value = true);
  std::size_t weight() const;

  BinaryPolynomial& operator^=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator^(BinaryPolynomial a, const BinaryPolynomial& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  BinaryPolynomial shifted_left(std::size_t k) const;
  /// Drops the k lowest coefficients.
  BinaryPolynomial shifted_right(std::size_t k) const;
  /// Coefficients 0..k-1 only.
  BinaryPolynomial truncated(std::size_t k) const;
  BinaryPolynomial squared() const;
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

  /// Remainder of long division by a nonzero divisor.
  BinaryPolynomial mod(const BinaryPolynomial& divisor) const;
  static BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

  /// Coefficients 0..width-1 as a field element; higher ones must be zero.
  FieldElement to_element(std::size_t width) const;

  std::string to_hex() const;
  /// Descending human form, e.g. "x^3+x+1"; "0" for the zero polynomial.
  std::string to_string() const;

  std::span<const std::uint64_t> limbs() const { return limbs_; }

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

/// Square n x n matrix over F2, stored as row bit vectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool get(std::size_t row, std::size_t col) const { return rows_[row].bit(col); }
  void set(std::size_t row, std::size_t col, bool value) { rows_[row].set_bit(col, value); }
  const FieldElement& row(std::size_t r) const { return rows_[r]; }

  /// M . v^T as a column vector.
  FieldElement apply(const FieldElement& v) const;
  std::size_t rank() const;

 private:
  std::vector<FieldElement> rows_;
};

/// The bilinear form j . M . v^T over F2.
bool bit_form(const FieldElement& j, const BitMatrix& m, const FieldElement& v);

/// Rabin's test: p is irreducible iff x^(2^n) = x mod p and
/// gcd(x^(2^(n/q)) - x, p) = 1 for every prime q dividing n = deg p.
bool is_irreducible(const BinaryPolynomial& p);

/// Degree-n irreducible p(x) with its power table x^0..x^(2n-2) mod p and
/// the matrices M0, M1 with M_r[s][t] = (x^(s+t))_r. Immutable.
class IrreduciblePoly {
 public:
  /// Validates degree >= 1, constant term 1 and irreducibility.
  static std::shared_ptr<const IrreduciblePoly> create(const BinaryPolynomial& p);

  std::size_t n() const { return n_; }
  const BinaryPolynomial& poly() const { return poly_; }
  std::span<const FieldElement> power_table() const { return powers_; }
  const BitMatrix& m0() const { return m0_; }
  const BitMatrix& m1() const { return m1_; }

  FieldElement zero() const { return FieldElement(n_); }
  FieldElement element(std::uint64_t value) const { return FieldElement::from_u64(n_, value); }

 private:
  IrreduciblePoly(BinaryPolynomial p, std::size_t n);

  std::size_t n_;
  BinaryPolynomial poly_;
  std::vector<FieldElement> powers_;
  BitMatrix m0_;
  BitMatrix m1_;
};

using PolyContext = std::shared_ptr<const IrreduciblePoly>;

/// Smallest irreducible bitmask of degree n with constant term 1.
BinaryPolynomial smallest_irreducible(std::size_t n);
PolyContext find_irreducible(std::size_t n);

/// Vector form of x^m mod p for m in [0, 2n-2].
FieldElement power_vector(const IrreduciblePoly& ctx, std::size_t m);

/// j (.) l in GF(2^n).
FieldElement gf_mul(const IrreduciblePoly& ctx, const FieldElement& j, const FieldElement& l);

/// M_r[s][t] = (x^(s+t))_r for any r < n.
BitMatrix build_m_r(const IrreduciblePoly& ctx, std::size_t r);

}  // namespace mubs
