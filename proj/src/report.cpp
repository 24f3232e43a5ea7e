#include "ncontact/report.hpp"

#include <algorithm>
#include <sstream>

namespace ncontact {

void Report::merge(const Report& other, const std::string& prefix) {
  if (!other.attachment_.empty()) attachment_ += other.attachment_;
  for (const auto& [k, v] : other.entries_) {
    if (k.rfind("check.", 0) == 0)
      add("check." + prefix + k.substr(6), v);
    else
      add(prefix + k, v);
  }
}

std::string Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

bool Report::passed() const { return failed_checks().empty(); }

std::vector<std::string> Report::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (k.rfind("check.", 0) == 0 && v != "pass") out.push_back(k);
  return out;
}

std::string Report::render_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << " ==\n";
  std::size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  for (const auto& [k, v] : entries_) os << k << std::string(width - k.size(), ' ') << " = " << v << "\n";
  if (!attachment_.empty()) os << "\n" << attachment_ << (attachment_.back() == '\n' ? "" : "\n") << "\n";
  os << (passed() ? "all checks pass" : "FAILED: " + std::to_string(failed_checks().size()) + " check(s)") << "\n";
  return os.str();
}

std::string Report::render_machine() const {
  std::ostringstream os;
  if (!title_.empty()) os << "report=" << title_ << "\n";
  for (const auto& [k, v] : entries_) os << k << "=" << v << "\n";
  os << "result=" << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace ncontact
