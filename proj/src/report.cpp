#include "hgl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hgl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive-at-truncation";
  }
  return "?";
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::certified: return 0;
    case Verdict::inconclusive: return 1;
    case Verdict::refuted: return 2;
  }
  return 2;
}

void write_value(std::ostringstream& out, const Json& v, int indent);

void write_object(std::ostringstream& out, const Json& obj, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    out << pad << it.key() << ':';
    if (it->is_object() && !it->empty()) {
      out << '\n';
      write_object(out, *it, indent + 2);
    } else {
      out << ' ';
      write_value(out, *it, indent);
      out << '\n';
    }
  }
}

void write_value(std::ostringstream& out, const Json& v, int) {
  if (v.is_string()) out << v.get<std::string>();
  else out << v.dump();
}

}  // namespace

void ReportEntry::demote(Verdict v) {
  if (severity(v) > severity(verdict)) verdict = v;
}

Json ReportEntry::to_json() const {
  Json j;
  j["id"] = id;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness;
  j["notes"] = notes;
  return j;
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const ReportEntry& e) { return e.verdict == v; }));
}

int Report::exit_code() const {
  if (count(Verdict::refuted) > 0) return 1;
  if (count(Verdict::inconclusive) > 0) return 2;
  return 0;
}

std::string Report::to_text() const {
  std::ostringstream out;
  write_object(out, header, 0);
  for (const auto& n : notes) out << "note: " << n << '\n';
  for (const auto& e : entries) {
    out << '\n' << '[' << to_string(e.verdict) << "] " << e.id << '\n';
    if (!e.params.empty()) {
      out << "  params:\n";
      write_object(out, e.params, 4);
    }
    if (!e.witness.empty()) {
      out << "  witness:\n";
      write_object(out, e.witness, 4);
    }
    for (const auto& n : e.notes) out << "  note: " << n << '\n';
  }
  out << "\nsummary: " << count(Verdict::certified) << " certified, " << count(Verdict::inconclusive)
      << " inconclusive-at-truncation, " << count(Verdict::refuted) << " refuted\n";
  return out.str();
}

std::string Report::to_json() const {
  Json j;
  j["header"] = header;
  j["notes"] = notes;
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(e.to_json());
  j["entries"] = arr;
  j["summary"] = {{"certified", count(Verdict::certified)},
                  {"inconclusive", count(Verdict::inconclusive)},
                  {"refuted", count(Verdict::refuted)}};
  return j.dump(2) + "\n";
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json bounded_listing(const std::vector<std::string>& items, std::size_t shown) {
  Json j;
  j["count"] = items.size();
  Json first = Json::array();
  for (std::size_t i = 0; i < std::min(shown, items.size()); ++i) first.push_back(items[i]);
  j["first"] = first;
  std::string all;
  for (const auto& s : items) all += s + '\n';
  j["digest"] = digest(all);
  return j;
}

}  // namespace hgl
