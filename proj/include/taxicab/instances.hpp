#pragma once

// Instance files: one JSON object per line,
//
//   {"label": "fig5", "p": [8, 3], "q": [-8, -3], "r": 16}
//
// Blank lines and lines starting with '#' are skipped. Labels are unique.

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "taxicab/cassini.hpp"

namespace taxicab {

struct Instance {
  std::string label;
  CassiniSpec spec;
};

/// Malformed content; the message names the offending line.
struct InstanceFileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The file could not be opened or read.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Instance> parse_instances(std::istream& in);
std::vector<Instance> load_instances(const std::filesystem::path& path);

std::string to_jsonl(const Instance& instance);

}  // namespace taxicab
