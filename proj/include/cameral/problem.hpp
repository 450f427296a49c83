#pragma once

// Problem documents and the four report commands, as JSON values. The C
// library wraps these; timing is added there, so everything here is a pure
// function of its inputs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cameral/cubic.hpp"

namespace cameral {

enum class NumberFormat { exact, decimal };

struct ProblemOptions {
    int order = 8;
    NumberFormat format = NumberFormat::exact;
};

struct ProblemDoc {
    LieType lie_type = LieType::A;
    int rank = 0;
    std::vector<ZPoly> invariants;                     // c_2 .. c_n
    std::map<std::string, TangentVector> deformations;  // by name
    ProblemOptions options;
    nlohmann::ordered_json echo;  // the validated input, normalized
};

/// Throws InputError naming the offending field, e.g. "invariants[0][1]".
ProblemDoc parse_problem(const std::string& text);

/// Command-line overrides of the document options.
struct RunOptions {
    std::optional<int> order;
    std::optional<NumberFormat> format;
};

nlohmann::ordered_json analyze_report(const ProblemDoc& doc, const RunOptions& run);

/// evaluator: pantev, ks, symmetric, sl2 or all.
nlohmann::ordered_json eval_report(const ProblemDoc& doc, const std::string& beta, const std::string& gamma,
                           const std::string& delta, const std::string& evaluator, const RunOptions& run);

/// basis: comma-separated deformation names.
nlohmann::ordered_json tensor_report(const ProblemDoc& doc, const std::string& basis, const std::string& evaluator,
                             const RunOptions& run);

/// "passed" in the result mirrors CubicReport::passed().
nlohmann::ordered_json verify_report(const ProblemDoc& doc, int trials, std::uint64_t seed, const RunOptions& run);

/// Ascending coefficient strings -> polynomial in z; field names the source
/// for error messages.
ZPoly parse_coefficients(const nlohmann::ordered_json& list, const std::string& field);

/// "z^2 - 1" style rendering.
std::string pretty(const ZPoly& p);

}  // namespace cameral
