#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "harness/core/violation.hpp"

namespace harness::core {

// Line-delimited persistence: one JSON object per line with fields
// (check, case_id, inputs, value, detail). Sinks accept appends from
// concurrent producers; each append is written and flushed as one line, and
// record order in the file is unspecified.

std::string record_to_line(const ViolationRecord& record);

// Throws ParseError naming the (1-based) line number on malformed lines.
ViolationRecord record_from_line(const std::string& line, std::size_t lineno);

void persist_records(const std::vector<ViolationRecord>& records,
                     std::ostream& sink);
void persist_records(const std::vector<ViolationRecord>& records,
                     const std::string& path);

std::vector<ViolationRecord> load_records(std::istream& source);
std::vector<ViolationRecord> load_records(const std::string& path);

// Thread-safe appending record sink over a file. Opens in append mode so an
// interrupted campaign can resume against the same path.
class RecordSink {
 public:
  explicit RecordSink(const std::string& path);

  void append(const ViolationRecord& record);
  std::size_t appended() const { return count_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::mutex mutex_;
  std::size_t count_ = 0;
};

// Sidecar map from input identifier to full input text (FEN or question).
// Stored as JSONL {"id": ..., "text": ...} beside the record file.
void save_sidecar(const std::map<std::string, std::string>& id_to_text,
                  const std::string& path);
std::map<std::string, std::string> load_sidecar(const std::string& path);

}  // namespace harness::core
