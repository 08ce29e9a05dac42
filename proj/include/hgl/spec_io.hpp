#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgl/group.hpp"

namespace hgl {

// Malformed spec text. Line and column are 1-based; 0 means unknown.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct LoadedSpec {
  GroupSpec spec;
  std::optional<std::pair<int, int>> surface;
};

// {"generators": n, "relations": [[...]], "form": [[...]], "names": [...]}
// or {"surface": {"genus": g, "boundary": r}}.
LoadedSpec parse_spec(const std::string& text);
LoadedSpec load_spec_file(const std::string& path);

// "g,r" as given on the command line.
std::pair<int, int> parse_surface_pair(const std::string& text);

// One grading: either integer coordinates in the generators ("1,0,0,2") or a
// generator expression ("2*C1-A1", "0").
GroupElement parse_grading(const GroupSpec& spec, const std::string& text);
// ';'-separated list of gradings.
std::vector<GroupElement> parse_gradings(const GroupSpec& spec, const std::string& text);

}  // namespace hgl
