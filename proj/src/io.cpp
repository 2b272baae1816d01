#include "mubs/io.hpp"

#include <set>
#include <sstream>

namespace mubs::io {

namespace {

Json element_to_json(const FieldElement& e) {
  if (e.fits_u64()) return e.to_u64();
  return e.to_hex();
}

FieldElement element_from_json(std::size_t n, const Json& j) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (n < 64 && v >> n) throw FormatError("j out of range for n=" + std::to_string(n));
    return FieldElement::from_u64(n, v);
  }
  if (j.is_string()) {
    try {
      return FieldElement::parse(n, j.get<std::string>());
    } catch (const std::exception& ex) {
      throw FormatError(std::string("bad j: ") + ex.what());
    }
  }
  throw FormatError("j must be an unsigned number or a hex string");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string s_exp_string(const MubCircuit& c) {
  std::string out;
  for (auto a : c.s_exp()) out += static_cast<char>('0' + a);
  return out;
}

std::string u64_or_hex(const FieldElement& e) { return e.fits_u64() ? e.to_decimal() : e.to_hex(); }

}  // namespace

// ------------------------------------------------------------------ circuits

Json circuit_to_json(const MubCircuit& c) {
  Json out;
  out["n"] = c.n();
  out["j"] = element_to_json(c.j());
  out["poly"] = c.poly()->poly().to_string();
  out["s_exp"] = Json::array();
  for (auto a : c.s_exp()) out["s_exp"].push_back(a);
  out["cz_pairs"] = Json::array();
  for (const auto& [s, t] : c.cz_pairs()) out["cz_pairs"].push_back({s, t});
  return out;
}

MubCircuit circuit_from_json(const Json& j) {
  const Json& jn = field(j, "n");
  if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0) throw FormatError("n must be a positive integer");
  const auto n = jn.get<std::size_t>();

  const Json& jp = field(j, "poly");
  if (!jp.is_string()) throw FormatError("poly must be a string");
  PolyContext poly;
  try {
    poly = IrreduciblePoly::create(BinaryPolynomial::parse(jp.get<std::string>()));
  } catch (const std::exception& ex) {
    throw FormatError(std::string("bad poly: ") + ex.what());
  }
  if (poly->n() != n) throw FormatError("poly degree does not match n");

  const FieldElement index = element_from_json(n, field(j, "j"));

  const Json& js = field(j, "s_exp");
  if (!js.is_array() || js.size() != n) throw FormatError("s_exp must be an array of n exponents");
  std::vector<std::uint8_t> s_exp;
  for (const auto& a : js) {
    if (!a.is_number_unsigned() || a.get<unsigned>() > 3) throw FormatError("s_exp entries must be in 0..3");
    s_exp.push_back(static_cast<std::uint8_t>(a.get<unsigned>()));
  }

  const Json& jc = field(j, "cz_pairs");
  if (!jc.is_array()) throw FormatError("cz_pairs must be an array");
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : jc) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw FormatError("cz pair must be [s, t]");
    const auto s = p[0].get<std::size_t>();
    const auto t = p[1].get<std::size_t>();
    if (!(s < t && t < n)) throw FormatError("cz pair needs s < t < n");
    if (!pairs.emplace(s, t).second) throw FormatError("duplicate cz pair");
  }
  const std::size_t flag_count = n >= 2 ? 2 * n - 3 : 0;
  std::vector<std::uint8_t> flags(flag_count, 0);
  for (std::size_t m = 1; m <= flag_count; ++m) {
    const CzSubpart part = cz_subpart(n, m);
    std::size_t present = 0;
    for (const auto& pr : part.pairs) present += pairs.count(pr);
    if (present != 0 && present != part.pairs.size())
      throw FormatError("cz pairs with s+t=" + std::to_string(m) + " must appear together");
    flags[m - 1] = present != 0;
  }
  return MubCircuit(std::move(poly), index, std::move(s_exp), std::move(flags));
}

std::string circuit_to_qasm(const MubCircuit& c) {
  std::ostringstream out;
  out << "// mubs n=" << c.n() << " j=" << u64_or_hex(c.j()) << " poly=" << c.poly()->poly().to_string() << "\n";
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.n() << "];\n";
  for (const Gate& g : emit_gates(c)) {
    out << gate_name(g.kind) << " q[" << g.q0 << "]";
    if (g.kind == GateKind::CZ) out << ",q[" << g.q1 << "]";
    out << ";\n";
  }
  return out.str();
}

std::string circuit_to_text(const MubCircuit& c) {
  std::ostringstream out;
  out << "U(" << u64_or_hex(c.j()) << ") n=" << c.n() << " poly=" << c.poly()->poly().to_string() << "\n";
  out << "  S exponents (q0..q" << c.n() - 1 << "): " << s_exp_string(c) << "\n";
  out << "  CZ:";
  const auto pairs = c.cz_pairs();
  if (pairs.empty()) out << " none";
  for (const auto& [s, t] : pairs) out << " (" << s << "," << t << ")";
  out << "\n  gates: " << c.gate_count() << " (H " << c.n() << ", S " << c.s_gate_count() << ", CZ "
      << c.cz_gate_count() << ")\n";
  return out.str();
}

// ------------------------------------------------------------------- reports

Json check_to_json(const CheckEntry& e) {
  Json out;
  out["name"] = e.name;
  out["passed"] = e.passed;
  out["max_deviation"] = e.max_deviation;
  out["checked"] = e.checked;
  if (!e.witness.empty()) out["witness"] = e.witness;
  out["detail"] = e.detail;
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["n"] = r.n;
  out["poly"] = r.poly;
  out["passed"] = r.passed();
  out["failures"] = r.failures();
  out["checks"] = Json::array();
  for (const auto& c : r.checks) out["checks"].push_back(check_to_json(c));
  return out;
}

// --------------------------------------------------------------------- stats

namespace {

struct ClosedForms {
  bool exhaustive;
  double s_avg, cz_avg;
  std::vector<double> cz_dist_avg;
};

ClosedForms closed_forms(const StatsRecord& s) {
  const double n = static_cast<double>(s.n);
  ClosedForms f{s.n < 64 && s.totals.circuits == (std::uint64_t{1} << s.n), 1.5 * n, (n * n - n) / 4.0, {}};
  for (std::size_t u = 0; u < s.n; ++u) f.cz_dist_avg.push_back(u == 0 ? 0.0 : (n - static_cast<double>(u)) / 2.0);
  return f;
}

}  // namespace

Json stats_to_json(const StatsRecord& s) {
  const ClosedForms f = closed_forms(s);
  const std::size_t n = s.n;
  Json out;
  out["n"] = n;
  out["circuits"] = s.totals.circuits;
  out["exhaustive"] = f.exhaustive;
  out["s_total"] = s.totals.s_gates;
  out["cz_total"] = s.totals.cz_gates;
  out["s_average"] = s.average_s();
  out["s_average_expected"] = f.s_avg;
  out["cz_average"] = s.average_cz();
  out["cz_average_expected"] = f.cz_avg;
  if (f.exhaustive) {
    const std::uint64_t d = std::uint64_t{1} << n;
    out["s_total_expected"] = d * 3 * n / 2;
    out["cz_total_expected"] = d * (n * n - n) / 4;
    out["s_total_match"] = 2 * s.totals.s_gates == d * 3 * n;
    out["cz_total_match"] = 4 * s.totals.cz_gates == d * (n * n - n);
  }
  out["cz_by_distance"] = Json::array();
  for (std::size_t u = 1; u < n; ++u) {
    Json row;
    row["u"] = u;
    row["total"] = s.totals.cz_by_distance[u];
    row["average"] = s.average_cz_at_distance(u);
    row["average_expected"] = f.cz_dist_avg[u];
    if (f.exhaustive) row["total_match"] = 2 * s.totals.cz_by_distance[u] == (std::uint64_t{1} << n) * (n - u);
    out["cz_by_distance"].push_back(row);
  }
  out["max_gates"] = s.totals.max_gates;
  out["max_gates_argmax"] = element_to_json(s.totals.argmax);
  out["max_gate_bound"] = max_gate_bound(n);
  out["max_within_bound"] = s.totals.max_gates <= max_gate_bound(n);
  return out;
}

std::string stats_to_text(const StatsRecord& s) {
  const ClosedForms f = closed_forms(s);
  const std::size_t n = s.n;
  std::ostringstream out;
  out << "n=" << n << " circuits=" << s.totals.circuits << (f.exhaustive ? " (all j)" : " (sampled)") << "\n";
  if (f.exhaustive) {
    const std::uint64_t d = std::uint64_t{1} << n;
    out << "S total   " << s.totals.s_gates << "  expected 2^n*3n/2 = " << d * 3 * n / 2 << "\n";
    out << "CZ total  " << s.totals.cz_gates << "  expected 2^n*(n^2-n)/4 = " << d * (n * n - n) / 4 << "\n";
  }
  out << "S avg     " << s.average_s() << "  expected " << f.s_avg << "\n";
  out << "CZ avg    " << s.average_cz() << "  expected " << f.cz_avg << "\n";
  for (std::size_t u = 1; u < n; ++u) {
    out << "CZ u=" << u << "  total " << s.totals.cz_by_distance[u];
    if (f.exhaustive) out << "  expected " << (std::uint64_t{1} << n) * (n - u) / 2;
    out << "  avg " << s.average_cz_at_distance(u) << "\n";
  }
  out << "max gates " << s.totals.max_gates << " at j=" << u64_or_hex(s.totals.argmax) << "  bound (n^2+7n)/2 = "
      << max_gate_bound(n) << "\n";
  return out.str();
}

// ----------------------------------------------------------------- sub-parts

Json subparts_to_json(std::size_t n) {
  Json out;
  out["n"] = n;
  out["subparts"] = Json::array();
  for (const auto& part : cz_subpart_catalog(n)) {
    Json p;
    p["m"] = part.m;
    p["pairs"] = Json::array();
    for (const auto& [s, t] : part.pairs) p["pairs"].push_back({s, t});
    out["subparts"].push_back(p);
  }
  return out;
}

std::string subparts_to_text(std::size_t n) {
  std::ostringstream out;
  for (const auto& part : cz_subpart_catalog(n)) {
    out << "CZ(" << part.m << "):";
    for (const auto& [s, t] : part.pairs) out << " (" << s << "," << t << ")";
    out << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------------- search

Json diagonal_to_json(const DiagonalPhase& d) { return d.index; }

Json certificate_to_json(const SetCertificate& c) {
  Json out;
  out["passed"] = c.passed;
  out["bases"] = c.bases;
  out["max_deviation"] = c.max_deviation;
  out["mu_cross_check"] = c.mu_cross_check;
  out["violations"] = Json::array();
  for (const auto& [a, b] : c.violations) out["violations"].push_back({a, b});
  return out;
}

Json search_to_json(const SearchResult& r, bool certify) {
  Json out;
  out["dim"] = r.base.dim();
  out["seed"] = r.base.seed_label;
  out["phase_order"] = r.base.phases.order();
  out["status"] = to_string(r.status);
  out["nodes"] = r.nodes;
  out["candidates"] = r.candidates;
  out["chains_found"] = r.chains_found;
  out["longest"] = r.longest();
  out["chains"] = Json::array();
  for (std::size_t i = 0; i < r.chains.size(); ++i) {
    Json c;
    c["bases"] = r.chains[i].size() + 1;
    c["diagonals"] = Json::array();
    for (const auto& d : r.chains[i]) c["diagonals"].push_back(diagonal_to_json(d));
    if (certify) c["certificate"] = certificate_to_json(certify_set(r.chain(i)));
    out["chains"].push_back(c);
  }
  return out;
}

MubSet set_from_json(const Json& j) {
  const Json& jd = field(j, "dim");
  if (!jd.is_number_unsigned() || jd.get<std::size_t>() == 0) throw FormatError("dim must be a positive integer");
  const auto d = jd.get<std::size_t>();
  const Json& js = field(j, "seed");
  const Json& jo = field(j, "phase_order");
  if (!js.is_string() || !jo.is_number_unsigned()) throw FormatError("bad seed or phase_order");
  const auto label = js.get<std::string>();

  ComplexMatrix seed;
  if (label == "hadamard") {
    if (d & (d - 1)) throw FormatError("hadamard seed needs a power-of-two dimension");
    seed = hadamard_seed(static_cast<std::size_t>(std::countr_zero(d)));
  } else if (label == "fourier") {
    seed = fourier_seed(d);
  } else {
    throw FormatError("unknown seed \"" + label + "\"");
  }
  MubSet set{std::move(seed), label, PhaseSet(jo.get<std::uint32_t>()), {}};

  const Json& jc = field(j, "chains");
  if (!jc.is_array() || jc.empty()) throw FormatError("chains must be a non-empty array");
  for (const auto& dg : field(jc.front(), "diagonals")) {
    if (!dg.is_array() || dg.size() != d) throw FormatError("diagonal must hold dim phase indices");
    DiagonalPhase p;
    for (const auto& e : dg) {
      if (!e.is_number_unsigned() || e.get<std::uint32_t>() >= set.phases.order())
        throw FormatError("phase index outside the phase set");
      p.index.push_back(e.get<std::uint32_t>());
    }
    set.diagonals.push_back(std::move(p));
  }
  if (set.diagonals.empty() || set.diagonals.front() != DiagonalPhase::identity(d))
    throw FormatError("first diagonal must be the identity");
  return set;
}

}  // namespace mubs::io
