#pragma once

#include "ntor/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ntor {

using json = nlohmann::ordered_json;

// Batch input; see docs/manifest.md for the JSON schema.
struct Manifest {
    FieldPtr field;
    Presentation pres;
    IdentityWord identity;
    std::optional<std::vector<Mat>> images;  // absent: trivial rank-one coefficients
    bool unimodular = false;
    std::optional<BilinearForm> form;        // absent: identity, hermitian
    std::optional<TwoChain> sigma;
    std::optional<Mat> sigma_generator;
    std::vector<std::vector<int>> meridians;
    std::string operation = "dual-refined";
    std::optional<std::string> quotient;
    std::optional<std::string> output;

    static Manifest from_json(const json& j);
    json to_json() const;
    Representation representation() const;
    BilinearForm bilinear_form() const;
};

Manifest parse_manifest(const std::string& text);

struct RunOptions {
    std::optional<std::string> quotient;  // overrides the manifest
};

// Runs the requested operation; ValidationError / PreconditionError propagate.
json run_manifest(const Manifest& m, const RunOptions& opt = {});

json report_json(const TorsionReport& r);
json matrix_json(const Mat& m);

// Output formats: text, json, csv. Numeric payloads are rounded to the digits implied by the precision.
enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_output_format(const std::string& s);
std::string render_report(const json& report, OutputFormat fmt);

// Table with fixed columns; the final row may carry a summary.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
std::string render_table(const Table& t, OutputFormat fmt);

// Decimal rendering at the current numeric precision.
std::string format_number(long double x);

}  // namespace ntor
