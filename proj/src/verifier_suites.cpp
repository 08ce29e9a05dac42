#include <algorithm>
#include <functional>

#include "hgl/kernels.hpp"
#include "verifier_util.hpp"

namespace hgl {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bracket", "complex", "h1",    "inner",  "outer", "homology",
                                                 "gk",      "surface", "omega", "linear", "all"};
  return names;
}

std::vector<GroupElement> default_gradings(const GroupSpec& spec) {
  std::vector<GroupElement> out{spec.zero()};
  auto push = [&](const GroupElement& x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& k : spec.kernel_mu_basis()) push(k);
  for (std::size_t i = 0; i < spec.n_generators(); ++i)
    if (is_derived_element(spec.generator(i))) push(spec.generator(i));
  return out;
}

Report run_suite(const GroupSpec& spec, const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end())
    throw std::invalid_argument("unknown suite: " + config.suite);
  const VerifyOptions& opt = config.options;
  const auto gradings = config.gradings.empty() ? default_gradings(spec) : config.gradings;
  std::vector<GroupElement> inner, outer;
  for (const auto& z : gradings) (in_kernel_mu(z) ? inner : outer).push_back(z);

  Report report;
  Json glist = Json::array();
  for (const auto& z : gradings) glist.push_back(spec.format(z));
  report.header = {{"group", spec.describe()},
                   {"generators", spec.names()},
                   {"suite", config.suite},
                   {"box", opt.box},
                   {"enlarge", opt.enlarge},
                   {"seed", opt.seed},
                   {"gradings", glist}};
  if (config.surface)
    report.header["surface"] = {{"genus", config.surface->first}, {"boundary", config.surface->second}};

  std::vector<std::function<ReportEntry()>> tasks;
  auto wants = [&](const std::string& s) { return config.suite == "all" || config.suite == s; };
  const std::int64_t big = opt.enlarge * opt.box;

  if (wants("bracket")) tasks.emplace_back([&] { return check_bracket_axioms(spec, opt); });
  if (wants("complex")) tasks.emplace_back([&] { return check_complex(spec, opt); });
  if (wants("h1"))
    for (const auto& z : gradings) tasks.emplace_back([&, z] { return h1_check(spec, z, opt); });
  if (wants("inner"))
    for (const auto& z : inner) tasks.emplace_back([&, z] { return inner_h2_certify(spec, z, opt.box, big, opt); });
  if (wants("outer"))
    for (const auto& z : outer) tasks.emplace_back([&, z] { return outer_h2_certify(spec, z, opt.box, opt); });
  if (wants("homology"))
    for (const auto& z : gradings) tasks.emplace_back([&, z] { return main_theorem_check(spec, z, opt.box, big, opt); });
  if (wants("gk")) {
    if (outer.empty() || inner.empty()) {
      report.notes.push_back("gk: needs one grading in ker mu and one outside; skipped");
    } else {
      const GroupElement u = outer.front();
      for (const auto& z : inner) tasks.emplace_back([&, u, z] { return gk_cycle_check(spec, u, z, opt); });
    }
  }
  if (wants("surface")) {
    if (!config.surface || config.surface->first < 1) {
      report.notes.push_back("surface: needs a surface presentation with genus >= 1; skipped");
    } else {
      const auto [g, r] = *config.surface;
      for (const auto& z : inner)
        tasks.emplace_back([&, z, g = g, r = r] { return surface_generator_check(spec, g, r, z, opt); });
    }
  }
  if (wants("omega")) {
    if (spec.form_is_zero())
      report.notes.push_back("omega: form is identically zero, outside the hypothesis; skipped");
    else
      for (const auto& z : inner) tasks.emplace_back([&, z] { return omega_check(spec, z, opt); });
  }
  if (wants("linear")) tasks.emplace_back([&] { return linear_extension_check(spec, opt); });

  std::vector<ReportEntry> entries(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(kernels::thread_count(), 1))
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      entries[i] = tasks[i]();
    } catch (const std::exception& ex) {
      entries[i].id = "task-" + std::to_string(i);
      entries[i].verdict = Verdict::refuted;
      entries[i].notes.push_back(std::string("error: ") + ex.what());
    }
  }
  report.entries = std::move(entries);
  return report;
}

}  // namespace hgl
