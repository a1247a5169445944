#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "orbifrob/cocycle.hpp"
#include "orbifrob/frobenius.hpp"
#include "orbifrob/gfrob.hpp"
#include "orbifrob/report.hpp"

namespace orbifrob::io {

using Json = nlohmann::json;

// All loaders throw ParseError on malformed documents, including
// out-of-range indices and tables with inconsistent shapes.

Json to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra frobenius_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, int bound = kDefaultDegreeBound);

Json to_json(const GFrobeniusAlgebra& x);
GFrobeniusAlgebra gfrob_from_json(const Json& j, int bound = kDefaultDegreeBound);

Json to_json(const Cocycle2& alpha);
/// Values missing from the document are 1.
Cocycle2 cocycle_from_json(const Json& j, int bound = kDefaultDegreeBound);

/// One object per check.
Json to_json(const CheckResult& c);
/// One JSON object per line.
std::string report_jsonl(const Report& r);

/// Deterministic text: objects one key per line in key order, arrays of
/// scalars on one line.
std::string dump(const Json& j);

Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// True if the document carries a group, i.e. is a G-algebra document.
bool is_gfrob_document(const Json& j);

/// Group element from its label; for S_n any cycle notation is accepted.
int parse_group_element(const FiniteGroup& g, std::string_view text);

/// Accepted forms, with sector after '@' or in "sector=...":
///   "1@(1 2)"                 basis label, else the generator 1_g for "1";
///   "(1⊗x + x⊗1)@e"           sums with integer or "p/q*" coefficients;
///   "2x@(1 3 2)", "-1/2*x@e";
///   "sector=(1 2 3); coeffs={(x,1): 3/2, (1,1): 1}"  tuples join with ⊗.
SectorElement parse_element(const GFrobeniusAlgebra& x, std::string_view text);

}  // namespace orbifrob::io
