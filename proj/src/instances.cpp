#include "taxicab/instances.hpp"

#include <fmt/format.h>

#include <fstream>
#include <json.hpp>
#include <set>

namespace taxicab {

namespace {

using nlohmann::json;

double number_field(const json& value, std::string_view what, int line) {
  if (!value.is_number()) throw InstanceFileError(fmt::format("line {}: {} must be a number", line, what));
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw InstanceFileError(fmt::format("line {}: {} is not finite", line, what));
  return v;
}

Point point_field(const json& record, const char* key, int line) {
  if (!record.contains(key)) throw InstanceFileError(fmt::format("line {}: missing '{}'", line, key));
  const json& value = record.at(key);
  if (!value.is_array() || value.size() != 2) {
    throw InstanceFileError(fmt::format("line {}: '{}' must be [x1, x2]", line, key));
  }
  return {number_field(value[0], key, line), number_field(value[1], key, line)};
}

}  // namespace

std::vector<Instance> parse_instances(std::istream& in) {
  std::vector<Instance> out;
  std::set<std::string> labels;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;

    json record;
    try {
      record = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InstanceFileError(fmt::format("line {}: {}", line, e.what()));
    }
    if (!record.is_object()) throw InstanceFileError(fmt::format("line {}: expected an object", line));

    Instance inst;
    inst.spec.p = point_field(record, "p", line);
    inst.spec.q = point_field(record, "q", line);
    if (!record.contains("r")) throw InstanceFileError(fmt::format("line {}: missing 'r'", line));
    inst.spec.r = number_field(record.at("r"), "r", line);
    if (inst.spec.r < 0.0) throw InstanceFileError(fmt::format("line {}: r must be >= 0", line));
    if (!record.contains("label") || !record.at("label").is_string()) {
      throw InstanceFileError(fmt::format("line {}: 'label' must be a string", line));
    }
    inst.label = record.at("label").get<std::string>();
    if (!labels.insert(inst.label).second) {
      throw InstanceFileError(fmt::format("line {}: duplicate label '{}'", line, inst.label));
    }
    out.push_back(std::move(inst));
  }
  if (in.bad()) throw IoError("read failed");
  return out;
}

std::vector<Instance> load_instances(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open {}", path.string()));
  return parse_instances(in);
}

std::string to_jsonl(const Instance& instance) {
  const json record = {
      {"label", instance.label},
      {"p", {instance.spec.p.x1, instance.spec.p.x2}},
      {"q", {instance.spec.q.x1, instance.spec.q.x2}},
      {"r", instance.spec.r},
  };
  return record.dump();
}

}  // namespace taxicab
