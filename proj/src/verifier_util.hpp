#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hgl/complex.hpp"
#include "hgl/report.hpp"
#include "hgl/verifier.hpp"

namespace hgl::detail {

// Independent stream per check so that entries do not depend on run order.
inline std::mt19937_64 rng_for(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
  return std::mt19937_64(seed ^ h);
}

inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

struct Box {
  std::int64_t requested = 0;
  std::int64_t effective = 0;
  Support support;
};

inline Box make_box(const GroupSpec& spec, std::int64_t requested, std::uint64_t budget) {
  Box b;
  b.requested = std::max<std::int64_t>(requested, 1);
  b.effective = radius_within_budget(spec, b.requested, budget);
  b.support = box_support(spec, b.effective);
  return b;
}

inline Json radius_json(const Box& b) { return Json{{"requested", b.requested}, {"effective", b.effective}}; }

inline std::string fmt(const GroupSpec& spec, const GroupElement& x) { return spec.format(x); }

inline std::int64_t max_norm(const WedgeChain& c) {
  std::int64_t n = 0;
  for (const auto& [w, v] : c.terms())
    for (const auto& x : w.factors()) n = std::max(n, x.free_norm());
  return n;
}

// Elements of the support sorted by free norm (stable in canonical order).
inline std::vector<GroupElement> by_norm(const Support& s) {
  std::vector<GroupElement> out(s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const GroupElement& a, const GroupElement& b) { return a.free_norm() < b.free_norm(); });
  return out;
}

inline std::string grading_tag(const GroupSpec& spec, const GroupElement& z) { return "[z=" + fmt(spec, z) + "]"; }

}  // namespace hgl::detail
