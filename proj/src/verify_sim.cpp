#include "mubs/verify_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mubs/kernels.hpp"

namespace mubs {

namespace {

constexpr Complex kIPowers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

double inv_sqrt_dim(std::size_t n) { return std::pow(2.0, -0.5 * static_cast<double>(n)); }

// Keeps the first position attaining the maximum.
void track(Deviation& dev, double value, std::size_t r, std::size_t c) {
  if (value > dev.max_deviation) {
    dev.max_deviation = value;
    dev.row = r;
    dev.col = c;
  }
}

void apply_single(ComplexMatrix& u, std::size_t q, const Complex g[2][2]) {
  const std::size_t d = u.rows();
  const std::size_t mask = std::size_t{1} << q;
  for (std::size_t i = 0; i < d; ++i) {
    if (i & mask) continue;
    for (std::size_t c = 0; c < u.cols(); ++c) {
      const Complex a = u(i, c);
      const Complex b = u(i | mask, c);
      u(i, c) = g[0][0] * a + g[0][1] * b;
      u(i | mask, c) = g[1][0] * a + g[1][1] * b;
    }
  }
}

void apply_phase(ComplexMatrix& u, std::size_t q, Complex phase) {
  const std::size_t mask = std::size_t{1} << q;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    if (!(i & mask)) continue;
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) *= phase;
  }
}

}  // namespace

void require_qubit_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds the dense simulator cap of " +
                      std::to_string(cap) + " qubits");
}

// ------------------------------------------------------------- dense algebra

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of vectors of different dimension");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

StateVector ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return StateVector(std::move(v));
}

std::vector<StateVector> ComplexMatrix::columns() const {
  std::vector<StateVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Complex x = a(i, l);
      if (x == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double unitarity_error(const ComplexMatrix& u) {
  if (!u.is_square()) throw std::invalid_argument("unitarity of a non-square matrix");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

// ------------------------------------------------------------ formula states

int i_power_exponent(const FieldElement& v) {
  int e = v.bit(0) ? 1 : 0;
  if (v.width() > 1 && v.bit(1)) e += 2;
  return e;
}

std::vector<std::uint8_t> alpha_exponents(const IrreduciblePoly& field, std::uint64_t j) {
  const std::size_t n = field.n();
  require_qubit_cap(n, kStateQubitCap, "alpha_exponents");
  const std::size_t d = std::size_t{1} << n;
  const FieldElement jj = field.element(j);
  // j (.) x^s for every s, reused across l.
  std::vector<FieldElement> j_times_unit;
  for (std::size_t s = 0; s < n; ++s) j_times_unit.push_back(gf_mul(field, jj, FieldElement::unit(n, s)));
  const FieldElement zero(n);

  std::vector<std::uint8_t> out(d);
  for (std::size_t l = 0; l < d; ++l) {
    int total = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const bool ls = (l >> s) & 1u;
      for (std::size_t t = 0; t < n; ++t) {
        const bool lt = (l >> t) & 1u;
        // j (.) (l_s 2^s) (.) (l_t 2^t); a zero factor yields the zero element.
        const FieldElement& left = ls ? j_times_unit[s] : zero;
        const FieldElement right = lt ? FieldElement::unit(n, t) : zero;
        total -= i_power_exponent(gf_mul(field, left, right));  // complex conjugate
      }
    }
    out[l] = static_cast<std::uint8_t>(((total % 4) + 4) % 4);
  }
  return out;
}

namespace {

StateVector build_state(const IrreduciblePoly& field, std::span<const std::uint8_t> alpha, std::uint64_t k,
                        bool galois_sign) {
  const std::size_t n = field.n();
  const std::size_t d = std::size_t{1} << n;
  if (k >= d) throw std::out_of_range("state index k out of range");
  const double norm = inv_sqrt_dim(n);
  const FieldElement kk = field.element(k);
  std::vector<Complex> amps(d);
  for (std::size_t l = 0; l < d; ++l) {
    const bool negative = galois_sign ? gf_mul(field, kk, field.element(l)).bit(0)
                                      : (std::popcount(k & l) & 1) != 0;
    int e = alpha[l] + (negative ? 2 : 0);
    amps[l] = norm * kIPowers[e % 4];
  }
  return StateVector(std::move(amps));
}

void check_j(const IrreduciblePoly& field, std::uint64_t j) {
  if (field.n() < 64 && j >= (std::uint64_t{1} << field.n())) throw std::out_of_range("basis index j out of range");
}

}  // namespace

StateVector state_fkj(const IrreduciblePoly& field, std::uint64_t j, std::uint64_t k) {
  require_qubit_cap(field.n(), kStateQubitCap, "state_fkj");
  check_j(field, j);
  const auto alpha = alpha_exponents(field, j);
  return build_state(field, alpha, k, false);
}

StateVector state_ekj(const IrreduciblePoly& field, std::uint64_t j, std::uint64_t k) {
  require_qubit_cap(field.n(), kStateQubitCap, "state_ekj");
  check_j(field, j);
  const auto alpha = alpha_exponents(field, j);
  return build_state(field, alpha, k, true);
}

UnitaryMatrix formula_unitary(const IrreduciblePoly& field, std::uint64_t j) {
  const std::size_t n = field.n();
  require_qubit_cap(n, kUnitaryQubitCap, "formula_unitary");
  check_j(field, j);
  const std::size_t d = std::size_t{1} << n;
  const auto alpha = alpha_exponents(field, j);
  UnitaryMatrix u(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const StateVector f = build_state(field, alpha, k, false);
    for (std::size_t l = 0; l < d; ++l) u(l, k) = f[l];
  }
  return u;
}

// ------------------------------------------------------------------ gates

UnitaryMatrix apply_gatelist(const GateList& gates, std::size_t n) {
  require_qubit_cap(n, kUnitaryQubitCap, "apply_gatelist");
  const std::size_t d = std::size_t{1} << n;
  UnitaryMatrix u = ComplexMatrix::identity(d);
  const double h = 1.0 / std::sqrt(2.0);
  const Complex hadamard[2][2] = {{h, h}, {h, -h}};
  for (const Gate& g : gates) {
    if (g.q0 >= n || (g.kind == GateKind::CZ && g.q1 >= n))
      throw std::out_of_range("gate acts on a qubit outside [0, n-1]");
    switch (g.kind) {
      case GateKind::H: apply_single(u, g.q0, hadamard); break;
      case GateKind::S: apply_phase(u, g.q0, kIPowers[1]); break;
      case GateKind::Z: apply_phase(u, g.q0, kIPowers[2]); break;
      case GateKind::Sdg: apply_phase(u, g.q0, kIPowers[3]); break;
      case GateKind::CZ: {
        if (g.q0 == g.q1) throw std::invalid_argument("CZ on a single qubit");
        const std::size_t mask = (std::size_t{1} << g.q0) | (std::size_t{1} << g.q1);
        for (std::size_t i = 0; i < d; ++i) {
          if ((i & mask) != mask) continue;
          for (std::size_t c = 0; c < d; ++c) u(i, c) = -u(i, c);
        }
        break;
      }
    }
  }
  if (const double err = unitarity_error(u); err > kInnerProductTolerance) {
    std::ostringstream msg;
    msg << "gate list produced a non-unitary matrix (error " << err << ")";
    throw std::logic_error(msg.str());
  }
  return u;
}

GateList overlap_circuit(const GateList& uj, const GateList& uk) {
  GateList out = uk;
  const GateList inv = inverse_gates(uj);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

// ------------------------------------------------------------ CHM / MU tests

Deviation is_chm(const ComplexMatrix& u, double tolerance) {
  if (!u.is_square()) throw std::invalid_argument("CHM test needs a square matrix");
  const double target = 1.0 / static_cast<double>(u.rows());
  Deviation dev;
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c) track(dev, std::abs(std::norm(u(r, c)) - target), r, c);
  dev.passed = dev.max_deviation <= tolerance;
  return dev;
}

namespace {

void require_orthonormal(std::span<const StateVector> basis, std::size_t d, const char* which) {
  if (basis.size() != d) throw std::invalid_argument(std::string(which) + " is not a complete basis");
  for (std::size_t a = 0; a < d; ++a) {
    if (basis[a].size() != d) throw std::invalid_argument("dimension mismatch");
    for (std::size_t b = a; b < d; ++b) {
      const Complex g = inner(basis[a], basis[b]);
      const double expect = a == b ? 1.0 : 0.0;
      if (std::abs(g - expect) > kInnerProductTolerance)
        throw std::invalid_argument(std::string(which) + " is not orthonormal");
    }
  }
}

}  // namespace

Deviation mu_check(std::span<const StateVector> basis_a, std::span<const StateVector> basis_b, double tolerance) {
  if (basis_a.empty() || basis_b.empty()) throw std::invalid_argument("empty basis");
  const std::size_t d = basis_a.front().size();
  if (basis_b.front().size() != d) throw std::invalid_argument("dimension mismatch");
  require_orthonormal(basis_a, d, "first basis");
  require_orthonormal(basis_b, d, "second basis");
  const double target = 1.0 / static_cast<double>(d);
  Deviation dev;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) track(dev, std::abs(std::norm(inner(basis_a[a], basis_b[b])) - target), a, b);
  dev.passed = dev.max_deviation <= tolerance;
  return dev;
}

// ------------------------------------------------------------- full-set run

VerificationReport verify_full_set(const MubContext& ctx) {
  const std::size_t n = ctx.n();
  require_qubit_cap(n, kUnitaryQubitCap, "verify_full_set");
  const std::uint64_t d = ctx.basis_count();

  VerificationReport report;
  report.n = n;
  report.poly = ctx.field().poly().to_string();

  std::vector<ComplexMatrix> unitaries;
  unitaries.reserve(d + 1);
  unitaries.push_back(ComplexMatrix::identity(d));
  for (std::uint64_t j = 0; j < d; ++j)
    unitaries.push_back(apply_gatelist(emit_gates(build_circuit(ctx, ctx.index(j))), n));

  {
    const auto eq = kernels::omp::oracle_equivalence(ctx);
    CheckEntry e{"oracle_equivalence", eq.max_deviation <= kExactTolerance, eq.max_deviation, d, "", ""};
    e.detail = "circuit unitary vs sum_k |f_k^j><k| entrywise, tolerance 1e-12";
    if (!e.passed) e.witness = "j=" + std::to_string(eq.worst_j);
    report.checks.push_back(e);
  }
  {
    CheckEntry e{"each_U_is_chm", true, 0.0, 0, "", "U(j) unbiased to the computational basis, tolerance 1e-10"};
    for (std::uint64_t j = 0; j < d; ++j) {
      const Deviation dev = is_chm(unitaries[j + 1]);
      ++e.checked;
      if (dev.max_deviation > e.max_deviation) e.max_deviation = dev.max_deviation;
      if (!dev.passed && e.passed) {
        e.passed = false;
        e.witness = "j=" + std::to_string(j);
      }
    }
    report.checks.push_back(e);
  }
  {
    const auto sweep = kernels::omp::pairwise_chm(unitaries);
    CheckEntry e{"pairwise_mu", sweep.max_deviation <= kInnerProductTolerance, sweep.max_deviation, sweep.pairs, "",
                 ""};
    e.detail = "U_a^dag U_b is a CHM for all pairs among " + std::to_string(d + 1) + " bases, tolerance 1e-10";
    if (!e.passed) {
      // index 0 is the computational basis; index i >= 1 is U(i-1)
      auto label = [](std::size_t i) { return i == 0 ? std::string("B0") : "U(" + std::to_string(i - 1) + ")"; };
      e.witness = label(sweep.worst_a) + "," + label(sweep.worst_b);
    }
    report.checks.push_back(e);
  }
  return report;
}

// --------------------------------------------------- coefficient statistics

bool CoefficientDistribution::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

CoefficientDistribution coefficient_distribution(const IrreduciblePoly& field) {
  const std::size_t n = field.n();
  require_qubit_cap(n, kUnitaryQubitCap, "coefficient_distribution");
  const std::size_t d = std::size_t{1} << n;
  const double scale = std::pow(2.0, 0.5 * static_cast<double>(n));

  CoefficientDistribution out{CoefficientTable(n), {0, 0, 0, 0}, {}};
  CoefficientTable& table = out.table;
  for (std::size_t j = 0; j < d; ++j) {
    const auto alpha = alpha_exponents(field, j);
    for (std::size_t k = 0; k < d; ++k) {
      const StateVector f = build_state(field, alpha, k, false);
      for (std::size_t l = 0; l < d; ++l) {
        const Complex c = f[l] * scale;
        std::uint8_t best = 0;
        double err = std::abs(c - kIPowers[0]);
        for (std::uint8_t e = 1; e < 4; ++e) {
          const double de = std::abs(c - kIPowers[e]);
          if (de < err) {
            err = de;
            best = e;
          }
        }
        table.max_snap_error = std::max(table.max_snap_error, err);
        table.set(j, k, l, best);
      }
    }
  }

  CheckEntry snap{"coefficient_snap", table.max_snap_error <= kExactTolerance, table.max_snap_error, d * d * d, "",
                  "every c(j,k,l) within 1e-12 of a 4th root of unity"};
  out.checks.push_back(snap);

  CheckEntry first{"c_jk0_is_one", true, 0.0, 0, "", "c(j,k,0) = 1"};
  for (std::size_t j = 0; j < d && first.passed; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      ++first.checked;
      if (table.at(j, k, 0) != 0) {
        first.passed = false;
        first.witness = "j=" + std::to_string(j) + ",k=" + std::to_string(k);
        break;
      }
    }
  out.checks.push_back(first);

  CheckEntry slice{"k_slice_half_split", true, 0.0, 0, "",
                   "for fixed (j, l>0) the values over k split 2^(n-1)/2^(n-1) on {+1,-1} or {+i,-i}"};
  CheckEntry per_l{"per_l_quarters", true, 0.0, 0, "", "for fixed l>0 each 4th root occurs 4^n/4 times over (j,k)"};
  for (std::size_t l = 1; l < d; ++l) {
    std::uint64_t pooled_l[4] = {0, 0, 0, 0};
    for (std::size_t j = 0; j < d; ++j) {
      std::uint64_t counts[4] = {0, 0, 0, 0};
      for (std::size_t k = 0; k < d; ++k) ++counts[table.at(j, k, l)];
      for (int e = 0; e < 4; ++e) pooled_l[e] += counts[e];
      const std::uint64_t half = d / 2;
      const bool real_pair = counts[0] == half && counts[2] == half && counts[1] == 0 && counts[3] == 0;
      const bool imag_pair = counts[1] == half && counts[3] == half && counts[0] == 0 && counts[2] == 0;
      ++slice.checked;
      if (!(real_pair || imag_pair) && slice.passed) {
        slice.passed = false;
        slice.witness = "j=" + std::to_string(j) + ",l=" + std::to_string(l);
      }
    }
    ++per_l.checked;
    for (int e = 0; e < 4; ++e) {
      out.pooled[e] += pooled_l[e];
      if (pooled_l[e] * 4 != d * d && per_l.passed) {
        per_l.passed = false;
        per_l.witness = "l=" + std::to_string(l);
      }
    }
  }
  out.checks.push_back(slice);
  out.checks.push_back(per_l);

  CheckEntry pooled{"pooled_quarters", true, 0.0, 4, "", "over all (j,k) and l>0 each 4th root occurs equally often"};
  const std::uint64_t total = out.pooled[0] + out.pooled[1] + out.pooled[2] + out.pooled[3];
  for (int e = 0; e < 4; ++e)
    if (out.pooled[e] * 4 != total) pooled.passed = false;
  if (!pooled.passed)
    pooled.witness = std::to_string(out.pooled[0]) + "/" + std::to_string(out.pooled[1]) + "/" +
                     std::to_string(out.pooled[2]) + "/" + std::to_string(out.pooled[3]);
  out.checks.push_back(pooled);
  return out;
}

}  // namespace mubs
