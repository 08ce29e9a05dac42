#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hgl {

using Json = nlohmann::ordered_json;

enum class Verdict { certified, refuted, inconclusive };

const char* to_string(Verdict v);

struct ReportEntry {
  std::string id;
  Json params = Json::object();
  Verdict verdict = Verdict::certified;
  Json witness = Json::object();
  std::vector<std::string> notes;

  // Downgrades only: certified -> inconclusive -> refuted.
  void demote(Verdict v);
  Json to_json() const;
};

struct Report {
  Json header = Json::object();
  std::vector<std::string> notes;
  std::vector<ReportEntry> entries;

  std::size_t count(Verdict v) const;
  // 0 all certified, 2 some inconclusive, 1 anything refuted.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

// FNV-1a, 16 hex digits.
std::string digest(const std::string& text);

// A long list is reported as its length, its first few items and a digest of
// the whole list.
Json bounded_listing(const std::vector<std::string>& items, std::size_t shown = 6);

}  // namespace hgl
