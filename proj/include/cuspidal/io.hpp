#pragma once

#include "cuspidal/record.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cusp {

inline constexpr const char* kToolVersion = "cuspidal 0.1.0";

enum class Format { json, csv, md };
Format parse_format(const std::string& s);  // throws ValidationError

struct OutputDocument {
    std::vector<CurveRecord> records;  // canonical order
    std::string command;
    std::string mode;
    double elapsed_ms = 0;
    nlohmann::json extra;  // command-specific payload (stats, counts)
};

// Integers that fit int64 are JSON numbers, larger ones decimal strings.
nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const CurveRecord& r);
CurveRecord record_from_json(const nlohmann::json& j);

std::string to_json(const OutputDocument& doc);
OutputDocument document_from_json(const std::string& text);
std::string to_csv(const OutputDocument& doc);
std::string to_markdown(const OutputDocument& doc);
std::string render(const OutputDocument& doc, Format f);

// Flat text columns shared by CSV and Markdown.
std::vector<std::string> flat_columns();
std::vector<std::string> flat_row(const CurveRecord& r);

std::string format_chain(const std::vector<ReductionStep>& chain);

// JSON Schema (draft 2020-12) for one record.
const nlohmann::json& record_schema();
// Structural check against record_schema; returns the first problem or "".
std::string validate_record_json(const nlohmann::json& j);

}  // namespace cusp
