#pragma once

// Brute-force dense oracle. Everything here is built from first principles
// (the literal double product for alpha_l^j, explicit gate matrices) so that
// it can be used to distrust the coefficient formulas in mub_core.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mubs/checks.hpp"
#include "mubs/gf2n.hpp"
#include "mubs/mub_core.hpp"

namespace mubs {

using Complex = std::complex<double>;

inline constexpr std::size_t kStateQubitCap = 12;
inline constexpr std::size_t kUnitaryQubitCap = 8;
/// Entries that are exact in exact arithmetic (roots of unity over sqrt 2^n).
inline constexpr double kExactTolerance = 1e-12;
/// Accumulated inner products.
inline constexpr double kInnerProductTolerance = 1e-10;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

void require_qubit_cap(std::size_t n, std::size_t cap, const char* what);

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  std::size_t size() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }
  double norm() const;

 private:
  std::vector<Complex> amps_;
};

Complex inner(const StateVector& a, const StateVector& b);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  StateVector column(std::size_t c) const;
  std::vector<StateVector> columns() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

using UnitaryMatrix = ComplexMatrix;

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |(U^dag U - I)_ij|
double unitarity_error(const ComplexMatrix& u);

/// (sqrt -1)^v for a field element v is i^(v_0 + 2 v_1); returns that
/// exponent in {0,1,2,3}.
int i_power_exponent(const FieldElement& v);

/// alpha_l^j = i^e, returned as e in {0,1,2,3} for every l < 2^n, from the
/// product over all (s,t) of conj((sqrt -1)^(j (.) (l_s 2^s) (.) (l_t 2^t))).
std::vector<std::uint8_t> alpha_exponents(const IrreduciblePoly& field, std::uint64_t j);

/// |f_k^j> = 2^(-n/2) sum_l (-1)^(k.l) alpha_l^j |l>
StateVector state_fkj(const IrreduciblePoly& field, std::uint64_t j, std::uint64_t k);
/// |e_k^j> = 2^(-n/2) sum_l (-1)^(k (.) l) alpha_l^j |l>
StateVector state_ekj(const IrreduciblePoly& field, std::uint64_t j, std::uint64_t k);
/// sum_k |f_k^j><k|
UnitaryMatrix formula_unitary(const IrreduciblePoly& field, std::uint64_t j);

/// Dense unitary of a gate list (time order), checked unitary on exit.
UnitaryMatrix apply_gatelist(const GateList& gates, std::size_t n);

struct Deviation {
  bool passed = true;
  double max_deviation = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Every |U_jk|^2 = 1/d.
Deviation is_chm(const ComplexMatrix& u, double tolerance = kInnerProductTolerance);

/// Every |<a_j|b_k>|^2 = 1/d; both inputs must be orthonormal bases.
Deviation mu_check(std::span<const StateVector> basis_a, std::span<const StateVector> basis_b,
                   double tolerance = kInnerProductTolerance);

/// U(j) for all j, checked against the formula matrices, the computational
/// basis and each other (all 2^n+1 bases pairwise).
VerificationReport verify_full_set(const MubContext& ctx);

/// c(j,k,l) = 2^(n/2) <l|f_k^j>, snapped to i^e; entries are e.
class CoefficientTable {
 public:
  explicit CoefficientTable(std::size_t n) : n_(n), d_(std::size_t{1} << n), values_(d_ * d_ * d_) {}
  std::size_t n() const { return n_; }
  std::size_t dim() const { return d_; }
  std::uint8_t at(std::size_t j, std::size_t k, std::size_t l) const { return values_[(j * d_ + k) * d_ + l]; }
  void set(std::size_t j, std::size_t k, std::size_t l, std::uint8_t e) { values_[(j * d_ + k) * d_ + l] = e; }
  double max_snap_error = 0.0;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<std::uint8_t> values_;
};

struct CoefficientDistribution {
  CoefficientTable table;
  /// Counts of {+1, +i, -1, -i} pooled over all (j, k) and all l > 0.
  std::uint64_t pooled[4] = {0, 0, 0, 0};
  std::vector<CheckEntry> checks;
  bool passed() const;
};

CoefficientDistribution coefficient_distribution(const IrreduciblePoly& field);

/// Circuit for U(j)^dag U(k): gates of U(k) followed by the inverse of U(j).
GateList overlap_circuit(const GateList& uj, const GateList& uk);

}  // namespace mubs
