#include "driftkit/report.hpp"

#include <fstream>
#include <sstream>

#include "driftkit/errors.hpp"
#include "json_codec.hpp"

namespace driftkit {

namespace {

using nlohmann::json;

json metrics_to_json(const MetricsRecord& m) {
    json j;
    j["tp"] = m.tp;
    j["tn"] = m.tn;
    j["p"] = m.p;
    j["n"] = m.n;
    j["tpr"] = m.tpr;
    j["tnr"] = m.tnr;
    j["a_mean"] = m.a_mean;
    return j;
}

MetricsRecord metrics_from_json(const json& j) {
    MetricsRecord m;
    m.tp = j.at("tp").get<std::int64_t>();
    m.tn = j.at("tn").get<std::int64_t>();
    m.p = j.at("p").get<std::int64_t>();
    m.n = j.at("n").get<std::int64_t>();
    m.tpr = j.at("tpr").get<double>();
    m.tnr = j.at("tnr").get<double>();
    m.a_mean = j.at("a_mean").get<double>();
    return m;
}

json novelty_to_json(const NoveltyReport& n) {
    json j;
    j["known_goodware"] = n.known_goodware;
    j["unknown_goodware"] = n.unknown_goodware;
    j["known_malware"] = n.known_malware;
    j["unknown_malware"] = n.unknown_malware;
    return j;
}

NoveltyReport novelty_from_json(const json& j) {
    NoveltyReport n;
    n.known_goodware = j.at("known_goodware").get<std::int64_t>();
    n.unknown_goodware = j.at("unknown_goodware").get<std::int64_t>();
    n.known_malware = j.at("known_malware").get<std::int64_t>();
    n.unknown_malware = j.at("unknown_malware").get<std::int64_t>();
    return n;
}

json window_to_json(const WindowRecord& w) {
    json j;
    j["window"] = w.window;
    j["metrics"] = metrics_to_json(w.metrics);
    j["retrain_signal"] = w.retrain_signal;
    j["retrained"] = w.retrained;
    j["train_size"] = w.train_size;
    j["manual_labels"] = w.manual_labels;
    j["automatic_labels"] = w.automatic_labels;
    if (w.novelty) j["novelty"] = novelty_to_json(*w.novelty);
    return j;
}

WindowRecord window_from_json(const json& j) {
    WindowRecord w;
    w.window = j.at("window").get<std::size_t>();
    w.metrics = metrics_from_json(j.at("metrics"));
    w.retrain_signal = j.at("retrain_signal").get<bool>();
    w.retrained = j.at("retrained").get<bool>();
    w.train_size = j.at("train_size").get<std::size_t>();
    w.manual_labels = j.at("manual_labels").get<std::int64_t>();
    w.automatic_labels = j.at("automatic_labels").get<std::int64_t>();
    if (j.contains("novelty")) w.novelty = novelty_from_json(j.at("novelty"));
    return w;
}

json totals_to_json(const ExperimentTotals& t) {
    json j;
    j["windows"] = t.windows;
    j["retrain_count"] = t.retrain_count;
    j["skipped_retrains"] = t.skipped_retrains;
    j["initial_manual_labels"] = t.initial_manual_labels;
    j["manual_labels"] = t.manual_labels;
    j["automatic_labels"] = t.automatic_labels;
    j["mean_a_mean"] = t.mean_a_mean;
    j["cluster_count_end"] = t.cluster_count_end;
    return j;
}

ExperimentTotals totals_from_json(const json& j) {
    ExperimentTotals t;
    t.windows = j.at("windows").get<std::size_t>();
    t.retrain_count = j.at("retrain_count").get<std::int64_t>();
    t.skipped_retrains = j.at("skipped_retrains").get<std::int64_t>();
    t.initial_manual_labels = j.at("initial_manual_labels").get<std::int64_t>();
    t.manual_labels = j.at("manual_labels").get<std::int64_t>();
    t.automatic_labels = j.at("automatic_labels").get<std::int64_t>();
    t.mean_a_mean = j.at("mean_a_mean").get<double>();
    t.cluster_count_end = j.at("cluster_count_end").get<std::size_t>();
    return t;
}

json report_to_json(const ExperimentReport& report) {
    json j;
    j["schema_version"] = report.schema_version;
    j["experiment_id"] = report.experiment_id;
    j["config"] = detail::config_to_json(report.config);
    json windows = json::array();
    for (const WindowRecord& w : report.windows) windows.push_back(window_to_json(w));
    j["windows"] = std::move(windows);
    j["totals"] = totals_to_json(report.totals);
    return j;
}

ExperimentReport report_from_json(const json& j) {
    ExperimentReport report;
    report.schema_version = j.at("schema_version").get<int>();
    report.experiment_id = j.at("experiment_id").get<std::string>();
    report.config = detail::config_from_json(j.at("config"));
    for (const json& wj : j.at("windows")) report.windows.push_back(window_from_json(wj));
    report.totals = totals_from_json(j.at("totals"));
    return report;
}

std::string csv_number(double value) {
    return json(value).dump();  // shortest exact representation
}

}  // namespace

std::string reports_to_json(const std::vector<ExperimentReport>& reports) {
    json j = json::array();
    for (const ExperimentReport& r : reports) j.push_back(report_to_json(r));
    return j.dump(2) + "\n";
}

std::vector<ExperimentReport> reports_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what(), 1, 1);
    }
    std::vector<ExperimentReport> reports;
    try {
        if (j.is_array()) {
            for (const json& rj : j) reports.push_back(report_from_json(rj));
        } else {
            reports.push_back(report_from_json(j));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what(), 1, 1);
    }
    return reports;
}

std::string reports_to_csv(const std::vector<ExperimentReport>& reports) {
    std::ostringstream out;
    out << "experiment_id,window,tpr,tnr,a_mean,retrained,train_size,manual_labels,auto_labels\n";
    for (const ExperimentReport& r : reports) {
        for (const WindowRecord& w : r.windows) {
            out << r.experiment_id << ',' << w.window << ',' << csv_number(w.metrics.tpr) << ','
                << csv_number(w.metrics.tnr) << ',' << csv_number(w.metrics.a_mean) << ','
                << (w.retrained ? 1 : 0) << ',' << w.train_size << ',' << w.manual_labels << ','
                << w.automatic_labels << '\n';
        }
    }
    return out.str();
}

void emit_report(const std::vector<ExperimentReport>& reports, const std::string& path,
                 ReportFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << (format == ReportFormat::Json ? reports_to_json(reports) : reports_to_csv(reports));
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<ExperimentReport> load_reports(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return reports_from_json(buffer.str());
}

}  // namespace driftkit
