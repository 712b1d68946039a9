#pragma once

#include <optional>
#include <string>
#include <vector>

#include "driftkit/types.hpp"

namespace driftkit {

// Delimited-text stream files: a header row `id,timestamp,label,f0..f{d-1}`,
// then one sample per line. Labels are the literal strings goodware/malware,
// timestamps integer month indices. Feature values round-trip exactly.
//
// load_stream validates everything the framework relies on: parseable rows
// (ParseError with line/column), known labels, finite non-negative features,
// one consistent dimension, non-decreasing timestamps.
std::vector<Sample> load_stream(const std::string& path,
                                std::optional<std::size_t> expected_dim = std::nullopt);

void save_stream(const std::string& path, const std::vector<Sample>& stream);

}  // namespace driftkit
