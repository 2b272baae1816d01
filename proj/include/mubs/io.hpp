#pragma once

// Serialisation of circuits, reports, statistics and search results.
//
// Circuit JSON: {"n", "j", "poly", "s_exp", "cz_pairs"}. j is a number when
// it fits in 64 bits and a "0x..." string otherwise; poly is the human form.

#include <string>
#include <string_view>

#include <json.hpp>

#include "mubs/checks.hpp"
#include "mubs/mub_core.hpp"
#include "mubs/mub_search.hpp"

namespace mubs::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json circuit_to_json(const MubCircuit& c);
/// Structural validation only: polynomial irreducible of degree n, s_exp in
/// {0..3}, pairs in range and grouped into whole CZ(m) sub-parts.
MubCircuit circuit_from_json(const Json& j);

/// OpenQASM 2.0 with a leading "// mubs n=.. j=.. poly=.." comment.
std::string circuit_to_qasm(const MubCircuit& c);
std::string circuit_to_text(const MubCircuit& c);

Json check_to_json(const CheckEntry& e);
Json report_to_json(const VerificationReport& r);

/// Totals next to their closed forms.
Json stats_to_json(const StatsRecord& s);
std::string stats_to_text(const StatsRecord& s);

Json subparts_to_json(std::size_t n);
std::string subparts_to_text(std::size_t n);

Json certificate_to_json(const SetCertificate& c);
/// Search output; also the resume format.
Json search_to_json(const SearchResult& r, bool certify);
/// The first chain of a search output (or a bare set) as a MubSet. Seeds
/// are rebuilt from their label: "hadamard" or "fourier".
MubSet set_from_json(const Json& j);

Json diagonal_to_json(const DiagonalPhase& d);

}  // namespace mubs::io
