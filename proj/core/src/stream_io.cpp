#include "driftkit/stream_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "driftkit/errors.hpp"

namespace driftkit {

namespace {

struct Field {
    std::string text;
    std::size_t column;  // 1-based offset of the field start in the line
};

std::vector<Field> split_line(const std::string& line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(Field{line.substr(start), start + 1});
            return fields;
        }
        fields.push_back(Field{line.substr(start, comma - start), start + 1});
        start = comma + 1;
    }
}

std::int64_t parse_timestamp(const Field& field, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(field.text.c_str(), &end, 10);
    if (field.text.empty() || end != field.text.c_str() + field.text.size() || errno == ERANGE) {
        throw ParseError("invalid timestamp '" + field.text + "'", line_no, field.column);
    }
    return value;
}

double parse_feature(const Field& field, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(field.text.c_str(), &end);
    if (field.text.empty() || end != field.text.c_str() + field.text.size() || errno == ERANGE) {
        throw ParseError("invalid feature value '" + field.text + "'", line_no, field.column);
    }
    if (!std::isfinite(value) || value < 0.0) {
        throw ParseError("feature values must be finite and >= 0, got '" + field.text + "'",
                         line_no, field.column);
    }
    return value;
}

}  // namespace

std::vector<Sample> load_stream(const std::string& path,
                                std::optional<std::size_t> expected_dim) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stream file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header row", 1, 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<Field> header = split_line(line);
    if (header.size() < 4 || header[0].text != "id" || header[1].text != "timestamp" ||
        header[2].text != "label") {
        throw ParseError("header must be id,timestamp,label,f0..", 1, 1);
    }
    const std::size_t dim = header.size() - 3;
    for (std::size_t d = 0; d < dim; ++d) {
        if (header[3 + d].text != "f" + std::to_string(d)) {
            throw ParseError("feature column " + std::to_string(d) + " must be named f" +
                             std::to_string(d), 1, header[3 + d].column);
        }
    }
    if (expected_dim && *expected_dim != dim) {
        throw DimensionMismatchError("stream file '" + path + "' has dimension " +
                                     std::to_string(dim) + ", expected " +
                                     std::to_string(*expected_dim));
    }

    std::vector<Sample> stream;
    std::size_t line_no = 1;
    std::int64_t prev_ts = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<Field> fields = split_line(line);
        if (fields.size() != 3 + dim) {
            throw ParseError("expected " + std::to_string(3 + dim) + " fields, got " +
                             std::to_string(fields.size()), line_no, 1);
        }
        Sample s;
        s.id = fields[0].text;
        if (s.id.empty()) throw ParseError("empty sample id", line_no, fields[0].column);
        s.timestamp = parse_timestamp(fields[1], line_no);
        if (fields[2].text == "goodware") {
            s.true_class = ClassLabel::Goodware;
        } else if (fields[2].text == "malware") {
            s.true_class = ClassLabel::Malware;
        } else {
            throw UnknownLabelError("unknown label '" + fields[2].text + "' at line " +
                                    std::to_string(line_no));
        }
        s.features.reserve(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            s.features.push_back(parse_feature(fields[3 + d], line_no));
        }
        if (!first && s.timestamp < prev_ts) {
            throw UnorderedStreamError("timestamps decrease at line " + std::to_string(line_no) +
                                       " (" + std::to_string(s.timestamp) + " after " +
                                       std::to_string(prev_ts) + ")");
        }
        first = false;
        prev_ts = s.timestamp;
        stream.push_back(std::move(s));
    }
    return stream;
}

void save_stream(const std::string& path, const std::vector<Sample>& stream) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    const std::size_t dim = stream.empty() ? 0 : stream.front().features.size();
    out << "id,timestamp,label";
    for (std::size_t d = 0; d < dim; ++d) out << ",f" << d;
    out << '\n';
    for (const Sample& s : stream) {
        out << s.id << ',' << s.timestamp << ',' << to_string(s.true_class);
        for (const double v : s.features) {
            // Shortest exact representation, so save -> load is the identity.
            out << ',' << nlohmann::json(v).dump();
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace driftkit
