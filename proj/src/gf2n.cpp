#include "mubs/gf2n.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace mubs {

namespace {

std::size_t limbs_for(std::size_t bits) { return (bits + 63) / 64; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool has_hex_prefix(std::string_view s) {
  return s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Little-endian limbs from hex digits; throws on junk.
std::vector<std::uint64_t> parse_hex_limbs(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty hex literal");
  std::vector<std::uint64_t> out(limbs_for(digits.size() * 4), 0);
  std::size_t bit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
    const int v = hex_digit(*it);
    if (v < 0) throw std::invalid_argument("bad hex digit in '" + std::string(digits) + "'");
    out[bit / 64] |= static_cast<std::uint64_t>(v) << (bit % 64);
  }
  return out;
}

std::string limbs_to_hex(std::span<const std::uint64_t> limbs) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  bool started = false;
  for (std::size_t w = limbs.size(); w-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const auto v = (limbs[w] >> (nib * 4)) & 0xFu;
      if (v != 0) started = true;
      if (started) out.push_back(kDigits[v]);
    }
  }
  return "0x" + (started ? out : std::string("0"));
}

// Carry-less 64x64 -> 128 product.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t mask = -((b >> i) & 1u);
    lo ^= (a << i) & mask;
    if (i != 0) hi ^= (a >> (64 - i)) & mask;
  }
}

// Interleave zeros: bit k of the input goes to bit 2k.
constexpr std::array<std::uint16_t, 256> kSpread = [] {
  std::array<std::uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    std::uint16_t r = 0;
    for (unsigned k = 0; k < 8; ++k) r |= static_cast<std::uint16_t>(((v >> k) & 1u) << (2 * k));
    t[v] = r;
  }
  return t;
}();

std::uint64_t spread32(std::uint32_t v) {
  std::uint64_t r = 0;
  for (int byte = 0; byte < 4; ++byte)
    r |= static_cast<std::uint64_t>(kSpread[(v >> (8 * byte)) & 0xFFu]) << (16 * byte);
  return r;
}

void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
  const std::size_t word = shift / 64;
  const unsigned bit = shift % 64;
  const std::size_t need = src.size() + word + (bit != 0 ? 1 : 0);
  if (dst.size() < need) dst.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word] ^= src[i] << bit;
    if (bit != 0) dst[i + word + 1] ^= src[i] >> (64 - bit);
  }
}

int top_bit(std::span<const std::uint64_t> limbs) {
  for (std::size_t w = limbs.size(); w-- > 0;) {
    if (limbs[w] != 0) return static_cast<int>(w * 64 + 63 - std::countl_zero(limbs[w]));
  }
  return BinaryPolynomial::kZeroDegree;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Reduction modulo p. Sparse moduli p = x^n + q(x) with deg q <= n/2 fold the
// high half through the few terms of q; anything else uses long division.
class Reducer {
 public:
  explicit Reducer(const BinaryPolynomial& p) : p_(p), n_(static_cast<std::size_t>(p.degree())) {
    for (std::size_t k = 0; k < n_; ++k)
      if (p.coeff(k)) terms_.push_back(k);
    sparse_ = terms_.size() <= 16 && (terms_.empty() || 2 * terms_.back() <= n_);
  }

  BinaryPolynomial reduce(BinaryPolynomial v) const {
    if (!sparse_) return v.mod(p_);
    while (v.degree() >= static_cast<int>(n_)) {
      const BinaryPolynomial high = v.shifted_right(n_);
      v = v.truncated(n_);
      for (std::size_t k : terms_) v ^= high.shifted_left(k);
    }
    return v;
  }

 private:
  BinaryPolynomial p_;
  std::size_t n_;
  std::vector<std::size_t> terms_;
  bool sparse_ = false;
};

// Remainder of p by a small (single limb) polynomial q.
std::uint64_t small_remainder(const BinaryPolynomial& p, std::uint64_t q) {
  const int dq = 63 - std::countl_zero(q);
  std::uint64_t r = 0;
  for (int k = p.degree(); k >= 0; --k) {
    r = (r << 1) | (p.coeff(static_cast<std::size_t>(k)) ? 1u : 0u);
    if ((r >> dq) & 1u) r ^= q;
  }
  return r;
}

const std::vector<std::uint64_t>& sieve_polys() {
  static const std::vector<std::uint64_t> polys = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q < (1u << 9); ++q) {
      if (is_irreducible(BinaryPolynomial::from_u64(q))) out.push_back(q);
    }
    return out;
  }();
  return polys;
}

constexpr std::size_t kSieveDegree = 8;

}  // namespace

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(std::size_t width) : width_(width), limbs_(limbs_for(width), 0) {}

FieldElement FieldElement::from_u64(std::size_t width, std::uint64_t value) {
  if (width < 64 && (value >> width) != 0)
    throw std::out_of_range("value " + std::to_string(value) + " does not fit in " +
                            std::to_string(width) + " bits");
  FieldElement e(width);
  if (width > 0) e.limbs_[0] = value;
  return e;
}

FieldElement FieldElement::unit(std::size_t width, std::size_t index) {
  if (index >= width) throw std::out_of_range("unit vector index out of range");
  FieldElement e(width);
  e.set_bit(index);
  return e;
}

FieldElement FieldElement::parse(std::size_t width, std::string_view text) {
  text = strip(text);
  FieldElement e(width);
  if (has_hex_prefix(text)) {
    auto limbs = parse_hex_limbs(text.substr(2));
    for (std::size_t w = 0; w < limbs.size(); ++w) {
      if (w < e.limbs_.size()) {
        e.limbs_[w] = limbs[w];
      } else if (limbs[w] != 0) {
        throw std::out_of_range("'" + std::string(text) + "' exceeds " + std::to_string(width) +
                                " bits");
      }
    }
  } else {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::vector<std::uint64_t> acc(std::max<std::size_t>(1, e.limbs_.size()) + 1, 0);
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad decimal digit in '" + std::string(text) + "'");
      unsigned __int128 carry = static_cast<unsigned>(c - '0');
      for (auto& limb : acc) {
        const unsigned __int128 v = static_cast<unsigned __int128>(limb) * 10u + carry;
        limb = static_cast<std::uint64_t>(v);
        carry = v >> 64;
      }
      if (carry != 0 || acc.back() != 0)
        throw std::out_of_range("'" + std::string(text) + "' exceeds " + std::to_string(width) +
                                " bits");
    }
    std::copy_n(acc.begin(), e.limbs_.size(), e.limbs_.begin());
    for (std::size_t w = e.limbs_.size(); w < acc.size(); ++w)
      if (acc[w] != 0)
        throw std::out_of_range("'" + std::string(text) + "' exceeds " + std::to_string(width) +
                                " bits");
  }
  if (width % 64 != 0 && !e.limbs_.empty() && (e.limbs_.back() >> (width % 64)) != 0)
    throw std::out_of_range("'" + std::string(text) + "' exceeds " + std::to_string(width) +
                            " bits");
  return e;
}

void FieldElement::set_bit(std::size_t i, bool value) {
  if (i >= width_) throw std::out_of_range("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    limbs_[i / 64] |= mask;
  else
    limbs_[i / 64] &= ~mask;
}

bool FieldElement::is_zero() const {
  return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t FieldElement::popcount() const {
  std::size_t c = 0;
  for (auto w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool FieldElement::fits_u64() const {
  return std::all_of(limbs_.begin() + std::min<std::size_t>(1, limbs_.size()), limbs_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::uint64_t FieldElement::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("field element wider than 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string FieldElement::to_hex() const { return limbs_to_hex(limbs_); }

std::string FieldElement::to_decimal() const {
  std::vector<std::uint64_t> work = limbs_;
  std::string digits;
  auto nonzero = [&] {
    return std::any_of(work.begin(), work.end(), [](std::uint64_t w) { return w != 0; });
  };
  while (nonzero()) {
    unsigned __int128 rem = 0;
    for (std::size_t w = work.size(); w-- > 0;) {
      const unsigned __int128 cur = (rem << 64) | work[w];
      work[w] = static_cast<std::uint64_t>(cur / 10u);
      rem = cur % 10u;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  }
  if (digits.empty()) return "0";
  std::reverse(digits.begin(), digits.end());
  return digits;
}

FieldElement& FieldElement::operator^=(const FieldElement& other) {
  if (other.width_ != width_) throw std::invalid_argument("field element width mismatch");
  for (std::size_t w = 0; w < limbs_.size(); ++w) limbs_[w] ^= other.limbs_[w];
  return *this;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t w = a.limbs_.size(); w-- > 0;) {
    if (auto c = a.limbs_[w] <=> b.limbs_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool dot(const FieldElement& a, const FieldElement& b) {
  if (a.width() != b.width()) throw std::invalid_argument("dot: width mismatch");
  std::uint64_t acc = 0;
  const auto la = a.limbs();
  const auto lb = b.limbs();
  for (std::size_t w = 0; w < la.size(); ++w) acc ^= la[w] & lb[w];
  return (std::popcount(acc) & 1) != 0;
}

// ------------------------------------------------------------ BinaryPolynomial

BinaryPolynomial BinaryPolynomial::from_u64(std::uint64_t bits) {
  BinaryPolynomial p;
  p.limbs_ = {bits};
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t k) {
  BinaryPolynomial p;
  p.set_coeff(k);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_element(const FieldElement& e) {
  BinaryPolynomial p;
  p.limbs_.assign(e.limbs().begin(), e.limbs().end());
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  BinaryPolynomial p;
  if (has_hex_prefix(text)) {
    p.limbs_ = parse_hex_limbs(text.substr(2));
    p.trim();
    return p;
  }
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t plus = std::min(compact.find('+', pos), compact.size());
    const std::string_view term(compact.data() + pos, plus - pos);
    std::size_t exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x" || term == "X") {
      exponent = 1;
    } else if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
      const auto digits = term.substr(2);
      if (!std::all_of(digits.begin(), digits.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad exponent in term '" + std::string(term) + "'");
      exponent = std::stoul(std::string(digits));
    } else {
      throw std::invalid_argument("bad polynomial term '" + std::string(term) + "'");
    }
    if (p.coeff(exponent))
      throw std::invalid_argument("repeated term x^" + std::to_string(exponent));
    p.set_coeff(exponent);
    pos = plus + 1;
  }
  return p;
}

int BinaryPolynomial::degree() const { return top_bit(limbs_); }

bool BinaryPolynomial::coeff(std::size_t k) const {
  if (k / 64 >= limbs_.size()) return false;
  return ((limbs_[k / 64] >> (k % 64)) & 1u) != 0;
}

void BinaryPolynomial::set_coeff(std::size_t k, bool value) {
  if (value) {
    if (limbs_.size() <= k / 64) limbs_.resize(k / 64 + 1, 0);
    limbs_[k / 64] |= std::uint64_t{1} << (k % 64);
  } else if (k / 64 < limbs_.size()) {
    limbs_[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    trim();
  }
}

std::size_t BinaryPolynomial::weight() const {
  std::size_t c = 0;
  for (auto w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BinaryPolynomial& BinaryPolynomial::operator^=(const BinaryPolynomial& other) {
  if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  for (std::size_t w = 0; w < other.limbs_.size(); ++w) limbs_[w] ^= other.limbs_[w];
  trim();
  return *this;
}

BinaryPolynomial BinaryPolynomial::shifted_left(std::size_t k) const {
  BinaryPolynomial out;
  if (is_zero()) return out;
  xor_shifted(out.limbs_, limbs_, k);
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::shifted_right(std::size_t k) const {
  BinaryPolynomial out;
  const std::size_t word = k / 64;
  const unsigned bit = k % 64;
  if (word >= limbs_.size()) return out;
  out.limbs_.resize(limbs_.size() - word, 0);
  for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
    out.limbs_[i] = limbs_[i + word] >> bit;
    if (bit != 0 && i + word + 1 < limbs_.size()) out.limbs_[i] |= limbs_[i + word + 1] << (64 - bit);
  }
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::truncated(std::size_t k) const {
  BinaryPolynomial out;
  out.limbs_.assign(limbs_.begin(), limbs_.begin() + std::min(limbs_.size(), limbs_for(k)));
  if (k % 64 != 0 && out.limbs_.size() == limbs_for(k))
    out.limbs_.back() &= (std::uint64_t{1} << (k % 64)) - 1;
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::squared() const {
  BinaryPolynomial out;
  out.limbs_.resize(2 * limbs_.size(), 0);
  for (std::size_t w = 0; w < limbs_.size(); ++w) {
    out.limbs_[2 * w] = spread32(static_cast<std::uint32_t>(limbs_[w]));
    out.limbs_[2 * w + 1] = spread32(static_cast<std::uint32_t>(limbs_[w] >> 32));
  }
  out.trim();
  return out;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    if (a.limbs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.limbs_.size(); ++k) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      clmul64(a.limbs_[i], b.limbs_[k], lo, hi);
      out.limbs_[i + k] ^= lo;
      out.limbs_[i + k + 1] ^= hi;
    }
  }
  out.trim();
  return out;
}

BinaryPolynomial BinaryPolynomial::mod(const BinaryPolynomial& divisor) const {
  const int dd = divisor.degree();
  if (dd < 0) throw std::domain_error("polynomial division by zero");
  BinaryPolynomial r = *this;
  int dr = r.degree();
  while (dr >= dd) {
    xor_shifted(r.limbs_, divisor.limbs_, static_cast<std::size_t>(dr - dd));
    dr = top_bit(std::span<const std::uint64_t>(r.limbs_).first(static_cast<std::size_t>(dr) / 64 + 1));
  }
  r.trim();
  return r;
}

BinaryPolynomial BinaryPolynomial::gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FieldElement BinaryPolynomial::to_element(std::size_t width) const {
  if (degree() >= static_cast<int>(width))
    throw std::out_of_range("polynomial of degree " + std::to_string(degree()) +
                            " does not fit in " + std::to_string(width) + " bits");
  FieldElement e(width);
  auto out = e.limbs();
  std::copy_n(limbs_.begin(), std::min(limbs_.size(), out.size()), out.begin());
  return e;
}

std::string BinaryPolynomial::to_hex() const { return limbs_to_hex(limbs_); }

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (!coeff(static_cast<std::size_t>(k))) continue;
    if (!out.empty()) out += '+';
    if (k == 0)
      out += '1';
    else if (k == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(k);
  }
  return out;
}

void BinaryPolynomial::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

// ------------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t n) : rows_(n, FieldElement(n)) {}

FieldElement BitMatrix::apply(const FieldElement& v) const {
  FieldElement out(rows_.size());
  for (std::size_t s = 0; s < rows_.size(); ++s)
    if (dot(rows_[s], v)) out.set_bit(s);
  return out;
}

std::size_t BitMatrix::rank() const {
  std::vector<FieldElement> rows = rows_;
  std::size_t rank = 0;
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && !rows[pivot].bit(col)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && rows[r].bit(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool bit_form(const FieldElement& j, const BitMatrix& m, const FieldElement& v) {
  if (j.width() != m.size() || v.width() != m.size())
    throw std::invalid_argument("bit_form: dimension mismatch");
  bool acc = false;
  j.for_each_set_bit([&](std::size_t s) { acc ^= dot(m.row(s), v); });
  return acc;
}

// --------------------------------------------------------------- Irreducibility

bool is_irreducible(const BinaryPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("irreducibility is undefined below degree 1");
  if (deg == 1) return true;
  if (!p.coeff(0)) return false;

  const auto n = static_cast<std::size_t>(deg);
  const auto primes = prime_factors(n);
  std::vector<std::size_t> wanted;
  for (auto q : primes) wanted.push_back(n / q);

  const Reducer reducer(p);
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  std::vector<BinaryPolynomial> saved(wanted.size());
  BinaryPolynomial cur = x;
  for (std::size_t k = 1; k <= n; ++k) {
    cur = reducer.reduce(cur.squared());
    for (std::size_t i = 0; i < wanted.size(); ++i)
      if (wanted[i] == k) saved[i] = cur;
  }
  if (cur != x) return false;
  for (const auto& s : saved) {
    if (BinaryPolynomial::gcd(p, s ^ x).degree() != 0) return false;
  }
  return true;
}

BinaryPolynomial smallest_irreducible(std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree must be at least 1");
  const BinaryPolynomial lead = BinaryPolynomial::monomial(n);
  const bool sieve = n > 2 * kSieveDegree;
  for (std::uint64_t low = 1;; low += 2) {
    if (n < 64 && (low >> n) != 0) break;
    const BinaryPolynomial candidate = lead ^ BinaryPolynomial::from_u64(low);
    if (sieve) {
      const auto& small = sieve_polys();
      if (std::any_of(small.begin(), small.end(),
                      [&](std::uint64_t q) { return small_remainder(candidate, q) == 0; }))
        continue;
    }
    if (is_irreducible(candidate)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// ------------------------------------------------------------- IrreduciblePoly

IrreduciblePoly::IrreduciblePoly(BinaryPolynomial p, std::size_t n)
    : n_(n), poly_(std::move(p)), m0_(n), m1_(n) {
  const FieldElement tail = poly_.truncated(n_).to_element(n_);
  powers_.reserve(2 * n_ - 1);
  powers_.push_back(FieldElement::unit(n_, 0));
  for (std::size_t m = 0; m + 1 < 2 * n_ - 1; ++m) {
    FieldElement next = powers_.back();
    const bool carry = next.bit(n_ - 1);
    auto limbs = next.limbs();
    for (std::size_t w = limbs.size(); w-- > 0;) {
      limbs[w] <<= 1;
      if (w > 0) limbs[w] |= limbs[w - 1] >> 63;
    }
    if (n_ % 64 != 0) limbs.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    if (carry) next ^= tail;
    powers_.push_back(std::move(next));
  }
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t t = 0; t < n_; ++t) {
      m0_.set(s, t, powers_[s + t].bit(0));
      if (n_ > 1) m1_.set(s, t, powers_[s + t].bit(1));
    }
  }
}

std::shared_ptr<const IrreduciblePoly> IrreduciblePoly::create(const BinaryPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("polynomial '" + p.to_string() + "' has degree < 1");
  if (!p.coeff(0))
    throw std::invalid_argument("polynomial '" + p.to_string() + "' must have constant term 1");
  if (!is_irreducible(p))
    throw std::invalid_argument("polynomial '" + p.to_string() + "' is not irreducible over F2");
  return std::shared_ptr<const IrreduciblePoly>(
      new IrreduciblePoly(p, static_cast<std::size_t>(deg)));
}

PolyContext find_irreducible(std::size_t n) {
  return IrreduciblePoly::create(smallest_irreducible(n));
}

FieldElement power_vector(const IrreduciblePoly& ctx, std::size_t m) {
  const auto table = ctx.power_table();
  if (m >= table.size())
    throw std::out_of_range("power index " + std::to_string(m) + " outside [0, 2n-2]");
  return table[m];
}

FieldElement gf_mul(const IrreduciblePoly& ctx, const FieldElement& j, const FieldElement& l) {
  const std::size_t n = ctx.n();
  if (j.width() != n || l.width() != n) throw std::invalid_argument("gf_mul: width mismatch");
  const BinaryPolynomial product =
      BinaryPolynomial::from_element(j) * BinaryPolynomial::from_element(l);
  FieldElement out = product.truncated(n).to_element(n);
  const auto table = ctx.power_table();
  for (int m = product.degree(); m >= static_cast<int>(n); --m)
    if (product.coeff(static_cast<std::size_t>(m))) out ^= table[static_cast<std::size_t>(m)];
  return out;
}

BitMatrix build_m_r(const IrreduciblePoly& ctx, std::size_t r) {
  const std::size_t n = ctx.n();
  if (r >= n) throw std::out_of_range("M_r requires r < n");
  BitMatrix m(n);
  const auto table = ctx.power_table();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) m.set(s, t, table[s + t].bit(r));
  return m;
}

}  // namespace mubs
