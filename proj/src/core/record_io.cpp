#include "harness/core/record_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "harness/util/errors.hpp"

namespace harness::core {

namespace {
using nlohmann::json;
}

std::string record_to_line(const ViolationRecord& record) {
  json j;
  j["check"] = to_string(record.check);
  j["case_id"] = record.case_id;
  j["inputs"] = record.inputs;
  j["value"] = record.value;
  j["detail"] = record.detail;
  return j.dump();
}

ViolationRecord record_from_line(const std::string& line, std::size_t lineno) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("record file line " + std::to_string(lineno) +
                     ": not a JSON object");
  }
  try {
    ViolationRecord record;
    record.check = check_kind_from_string(j.at("check").get<std::string>());
    record.case_id = j.at("case_id").get<std::string>();
    record.inputs = j.at("inputs").get<std::vector<std::string>>();
    record.value = j.at("value").get<double>();
    record.detail = j.value("detail", std::string{});
    return record;
  } catch (const json::exception& e) {
    throw ParseError("record file line " + std::to_string(lineno) + ": " +
                     e.what());
  }
}

void persist_records(const std::vector<ViolationRecord>& records,
                     std::ostream& sink) {
  for (const auto& record : records) {
    sink << record_to_line(record) << '\n';
  }
  if (!sink) throw ConfigError("record sink is not writable");
}

void persist_records(const std::vector<ViolationRecord>& records,
                     const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot open record file for writing: " + path);
  persist_records(records, out);
}

std::vector<ViolationRecord> load_records(std::istream& source) {
  std::vector<ViolationRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(source, line)) {
    ++lineno;
    if (line.empty()) continue;
    records.push_back(record_from_line(line, lineno));
  }
  return records;
}

std::vector<ViolationRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open record file: " + path);
  return load_records(in);
}

RecordSink::RecordSink(const std::string& path) : path_(path) {
  std::ofstream probe(path_, std::ios::app);
  if (!probe) throw ConfigError("cannot open record sink: " + path_);
}

void RecordSink::append(const ViolationRecord& record) {
  const std::string line = record_to_line(record);
  std::lock_guard<std::mutex> lock(mutex_);
  // Reopen per append: one write+flush per record keeps lines atomic on
  // crash and lets resumed runs append to prior output.
  std::ofstream out(path_, std::ios::app);
  out << line << '\n';
  out.flush();
  if (!out) throw ConfigError("record sink write failed: " + path_);
  ++count_;
}

void save_sidecar(const std::map<std::string, std::string>& id_to_text,
                  const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot open sidecar file: " + path);
  for (const auto& [id, text] : id_to_text) {
    json j;
    j["id"] = id;
    j["text"] = text;
    out << j.dump() << '\n';
  }
}

std::map<std::string, std::string> load_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sidecar file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw ParseError("sidecar line " + std::to_string(lineno) +
                       ": not a JSON object");
    }
    out[j.at("id").get<std::string>()] = j.at("text").get<std::string>();
  }
  return out;
}

}  // namespace harness::core
