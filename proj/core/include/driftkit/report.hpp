#pragma once

#include <string>
#include <vector>

#include "driftkit/experiment.hpp"

namespace driftkit {

enum class ReportFormat { Json, Csv };

// JSON serializes reports losslessly (serialize -> parse is the identity);
// CSV flattens one row per window per experiment with the columns
// experiment_id,window,tpr,tnr,a_mean,retrained,train_size,manual_labels,
// auto_labels for external plotting.
std::string reports_to_json(const std::vector<ExperimentReport>& reports);
std::vector<ExperimentReport> reports_from_json(const std::string& json_text);

std::string reports_to_csv(const std::vector<ExperimentReport>& reports);

void emit_report(const std::vector<ExperimentReport>& reports, const std::string& path,
                 ReportFormat format);

std::vector<ExperimentReport> load_reports(const std::string& path);

}  // namespace driftkit
