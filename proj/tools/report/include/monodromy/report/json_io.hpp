#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "monodromy/mapping_torus.hpp"
#include "monodromy/polytope.hpp"

namespace monodromy::report {

using json = nlohmann::json;

inline constexpr const char* kCertificateFormat = "monodromy-certificate/1";
inline constexpr const char* kBatchFormat = "monodromy-batch/1";

// Numbers are written as decimal strings; readers also accept JSON integers.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);
std::size_t count_from_json(const json& j);

/// "p/q" or "n"; the result is canonical with a positive denominator.
Rational parse_rational(const std::string& text);
json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);

/// Array of rows of decimal strings.
json matrix_to_json(const IntMatrix& m);
/// Throws ParseError on ragged or non-integer input. An empty array reads as 0x0.
IntMatrix matrix_from_json(const json& j);
/// Same, but an empty array may stand for any matrix with a zero dimension.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json twist_word_to_json(const TwistWord& w);
TwistWord twist_word_from_json(const json& j, std::size_t g);

/// {"rank": g, "images": [...]} or {"matrix": [[...]]}.
using CertifyInput = std::variant<FreeEndomorphism, IntMatrix>;
CertifyInput certify_input_from_json(const json& j);
json certify_input_to_json(const CertifyInput& in);

struct CertificateOptions {
  bool emit_torsion = true;
};
json certificate_to_json(const Certificate& c, const CertificateOptions& options = {});
/// Rebuilds the structured certificate; verify_certificate then re-checks it.
/// A missing "torsion_M" is filled in from the recorded blocks.
Certificate certificate_from_json(const json& j);

/// {"dim": d, "vertices": [["p/q", ...], ...]}.
Polytope polytope_from_json(const json& j);
json polytope_to_json(const Polytope& p);
Covector covector_from_json(const json& j);

}  // namespace monodromy::report
