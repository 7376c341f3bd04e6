#pragma once

#include <filesystem>
#include <string>

#include "aras/pipeline.hpp"
#include "json.hpp"

namespace aras::report {

struct ReportFiles {
    std::filesystem::path events_jsonl;
    std::filesystem::path metrics_csv;
    std::filesystem::path report_json;
};

// Assembles the report document. with_timestamp=false omits the
// generated_at field so two runs of the same scenario compare equal.
nlohmann::json report_to_json(const RunArtifacts& art, bool with_timestamp);

std::string events_to_jsonl(const RunArtifacts& art);
std::string metrics_to_csv(const RunArtifacts& art);

// Writes events.jsonl, metrics.csv and report.json under out_dir,
// creating it first. Throws IoError when a file cannot be written.
ReportFiles emit_run_report(const RunArtifacts& art, const std::filesystem::path& out_dir,
                            bool deterministic);

// Validates the top level shape of a report document. Throws
// SchemaMismatchError naming the first problem found.
void check_report_schema(const nlohmann::json& doc);

}  // namespace aras::report
