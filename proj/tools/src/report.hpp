#pragma once

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "tautdrg/pipeline.hpp"

namespace tautdrg::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tautdrg-report/1";

// 12 significant digits, -0 folded to 0, non-finite values as strings.
Json number(double v);
std::string format_number(double v);

struct Source {
    std::string kind;   // "family" or "file"
    std::string value;
};

// graph, array, spectrum, vertices, classification, verification
const std::set<std::string>& all_sections();

Json analysis_document(const Analysis& a, const Source& src, const std::set<std::string>& sections);

// One row per check name: identity, count, worst residual, threshold at the
// worst residual, pass when every instance passed.
Json verification_rows(const VerificationReport& r);
Json verify_document(const Analysis& a, const Source& src);

// Indented key/value rendering of a document. Numbers go through
// format_number so both output modes carry the same digits.
std::string render_text(const Json& doc);
std::string render_verify_table(const Json& doc);

}  // namespace tautdrg::cli
