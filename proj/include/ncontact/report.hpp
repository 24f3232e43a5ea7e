#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ncontact {

/// Ordered key/value record. Keys starting with "check." hold "pass" or
/// "fail"; a report passes when every check does.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add_check(const std::string& name, bool passed) { add("check." + name, passed ? "pass" : "fail"); }
  /// Free text shown after the entries in text mode (tables); not part of
  /// the machine form.
  void set_attachment(std::string text) { attachment_ = std::move(text); }
  const std::string& attachment() const noexcept { return attachment_; }
  /// Appends every entry of `other` with `prefix` prepended to its key.
  void merge(const Report& other, const std::string& prefix = {});

  const std::string& title() const noexcept { return title_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  /// Value of the first entry with `key`, or empty.
  std::string get(const std::string& key) const;
  bool passed() const;
  std::vector<std::string> failed_checks() const;

  /// Human-readable block: title, aligned "key = value" lines, verdict line.
  std::string render_text() const;
  /// One "key=value" line per entry, then "result=pass|fail".
  std::string render_machine() const;

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::string attachment_;
};

}  // namespace ncontact
