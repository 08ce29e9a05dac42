#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hgl/complex.hpp"
#include "hgl/kernels.hpp"
#include "hgl/sparse_matrix.hpp"
#include "hgl/spec_io.hpp"
#include "hgl/verifier.hpp"

namespace {

using namespace hgl;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;

struct Common {
  std::string spec_path;
  std::string surface;
  std::int64_t box = 2;
  std::int64_t enlarge = 3;
  std::string grading;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;
};

LoadedSpec load(const Common& c) {
  if (c.spec_path.empty() == c.surface.empty()) throw std::invalid_argument("give exactly one of --spec or --surface");
  if (!c.spec_path.empty()) return load_spec_file(c.spec_path);
  const auto [g, r] = parse_surface_pair(c.surface);
  return {GroupSpec::surface(g, r), std::pair{g, r}};
}

std::vector<GroupElement> gradings_of(const GroupSpec& spec, const Common& c) {
  if (c.grading.empty()) return default_gradings(spec);
  if (c.grading == "all-in-box") {
    constexpr std::uint64_t limit = 4096;
    if (box_size(spec, c.box) > limit)
      throw std::invalid_argument("all-in-box: the box holds more than " + std::to_string(limit) + " gradings");
    const auto s = box_support(spec, c.box);
    return s.elements();
  }
  return parse_gradings(spec, c.grading);
}

VerifyOptions options_of(const Common& c) {
  VerifyOptions o;
  o.box = c.box;
  o.enlarge = c.enlarge;
  o.seed = c.seed;
  return o;
}

void emit(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << body;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

int cmd_validate(const Common& c) {
  const auto loaded = load(c);
  const auto& spec = loaded.spec;
  std::vector<std::string> kernel;
  for (const auto& k : spec.kernel_mu_basis()) kernel.push_back(spec.format_in_generators(k));
  const std::string form = spec.form_is_zero() ? "zero" : (spec.nondegenerate() ? "nondegenerate" : "degenerate");
  Json j = {{"group", spec.describe()},
            {"generators", spec.names()},
            {"free_rank", spec.free_rank()},
            {"torsion", spec.torsion_coefficients()},
            {"form", form},
            {"kernel_mu", kernel}};
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream o;
    o << spec.describe() << ", form " << form << ", ker mu = " << (kernel.empty() ? "0" : "<" + join(kernel, ", ") + ">")
      << "\n";
    o << "generators: " << join(spec.names(), " ") << "\n";
    o << "free rank: " << spec.free_rank() << "\n";
    std::vector<std::string> tors;
    for (auto t : spec.torsion_coefficients()) tors.push_back(std::to_string(t));
    o << "torsion coefficients: " << (tors.empty() ? "none" : join(tors, " ")) << "\n";
    emit(c, o.str());
  }
  return exit_ok;
}

int cmd_homology(const Common& c) {
  const auto loaded = load(c);
  const auto& spec = loaded.spec;
  const auto opt = options_of(c);
  const auto gradings = gradings_of(spec, c);
  std::vector<ReportEntry> rows(gradings.size());
  const auto n = static_cast<std::int64_t>(gradings.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(kernels::thread_count(), 1))
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      rows[i] = main_theorem_check(spec, gradings[i], c.box, c.enlarge * c.box, opt);
    } catch (const std::exception& ex) {
      rows[i].id = "main_theorem";
      rows[i].verdict = Verdict::refuted;
      rows[i].notes.push_back(std::string("error: ") + ex.what());
    }
  }
  Report report;
  report.header = {{"group", spec.describe()}, {"box", c.box}, {"enlarge", c.enlarge}, {"seed", c.seed}};
  if (spec.form_is_zero()) report.notes.push_back("form is identically zero: outside the hypothesis of the theorem");
  report.entries = rows;

  if (c.format == "json") {
    emit(c, report.to_json());
  } else {
    std::ostringstream o;
    o << spec.describe() << ", box " << c.box << ", boundary box " << c.enlarge * c.box << "\n";
    for (const auto& note : report.notes) o << "note: " << note << "\n";
    auto cell = [](const Json& w, const char* key) {
      return w.contains(key) ? w[key].dump() : std::string("-");
    };
    o << std::left << std::setw(24) << "z" << std::setw(8) << "dim Z2" << std::setw(8) << "dim B2" << std::setw(8)
      << "H2" << std::setw(11) << "predicted" << "verdict\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& w = rows[i].witness;
      o << std::left << std::setw(24) << spec.format(gradings[i]) << std::setw(8) << cell(w, "cycle_dim")
        << std::setw(8) << cell(w, "boundary_dim") << std::setw(8) << cell(w, "h2") << std::setw(11)
        << cell(w, "predicted") << to_string(rows[i].verdict) << "\n";
      for (const auto& note : rows[i].notes) o << "  note: " << note << "\n";
    }
    emit(c, o.str());
  }
  return report.exit_code();
}

int cmd_verify(const Common& c, const std::string& suite) {
  const auto loaded = load(c);
  SuiteConfig config;
  config.suite = suite;
  config.options = options_of(c);
  config.surface = loaded.surface;
  if (!c.grading.empty()) config.gradings = gradings_of(loaded.spec, c);
  const Report report = run_suite(loaded.spec, config);
  emit(c, c.format == "json" ? report.to_json() : report.to_text());
  return report.exit_code();
}

// Writes the chain bases of one grading and the matrices of d2 and d3 as
// triplet files into the directory given by --out.
int cmd_dump(const Common& c) {
  const auto loaded = load(c);
  const auto& spec = loaded.spec;
  if (c.out.empty()) throw std::invalid_argument("dump needs --out <directory>");
  const auto gradings = gradings_of(spec, c);
  if (gradings.size() != 1) throw std::invalid_argument("dump needs exactly one --grading");
  const auto& z = gradings.front();
  const std::int64_t outer = c.enlarge * c.box;
  constexpr std::uint64_t max_elements = 2500;
  if (box_size(spec, outer) > max_elements)
    throw std::invalid_argument("boundary box of radius " + std::to_string(outer) + " holds more than " +
                                std::to_string(max_elements) + " elements; lower --box or --enlarge");

  const auto pairs = enumerate_basis(box_support(spec, c.box), 2, z, Restrict::full);
  const auto triples = enumerate_basis(box_support(spec, outer), 3, z, Restrict::full);
  // codomain of d3: cycle-box pairs first, then every further pair met by a boundary
  std::map<Wedge, std::uint32_t> row_of;
  std::vector<Wedge> rows;
  auto row = [&](const Wedge& w) {
    const auto [it, fresh] = row_of.emplace(w, static_cast<std::uint32_t>(rows.size()));
    if (fresh) rows.push_back(w);
    return it->second;
  };
  for (const auto& w : pairs) row(w);
  std::vector<WedgeChain> images;
  images.reserve(triples.size());
  for (const auto& t : triples) {
    WedgeChain ch(3);
    ch.add(t, 1);
    images.push_back(boundary(ch));
  }
  std::vector<Wedge> extra;
  for (const auto& img : images)
    for (const auto& [w, _] : img.terms())
      if (!row_of.contains(w)) extra.push_back(w);
  std::sort(extra.begin(), extra.end());
  for (const auto& w : extra) row(w);

  SparseRationalMatrix d3(rows.size(), triples.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [w, v] : images[j].terms()) d3.add(row_of.at(w), j, v);
  SparseRationalMatrix d2(1, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    d2.add(0, j, Rational(static_cast<long>(-pairing(rows[j][0], rows[j][1]))));

  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    return f;
  };
  auto write_basis = [&](const char* name, const std::vector<Wedge>& basis) {
    auto f = open(name);
    for (std::size_t i = 0; i < basis.size(); ++i) f << i << ' ' << format(spec, basis[i]) << '\n';
  };
  write_basis("c2.txt", rows);
  write_basis("c3.txt", triples);
  {
    auto f = open("c1.txt");
    f << "0 [" << spec.format(z) << "]\n";
  }
  {
    auto f = open("d2.txt");
    d2.write_triplets(f);
  }
  {
    auto f = open("d3.txt");
    d3.write_triplets(f);
  }
  std::cout << "grading " << spec.format(z) << ": " << pairs.size() << " cycle-box pairs, " << rows.size()
            << " pairs in total, " << triples.size() << " triples written to " << dir.string() << "\n";
  return exit_ok;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--spec", c.spec_path, "JSON group spec file");
  app->add_option("--surface", c.surface, "surface shorthand g,r");
  app->add_option("--box", c.box, "box radius M")->check(CLI::PositiveNumber);
  app->add_option("--enlarge", c.enlarge, "boundary box factor")->check(CLI::PositiveNumber);
  app->add_option("--grading", c.grading, "';'-separated gradings, or all-in-box");
  app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--seed", c.seed, "sampling seed");
  app->add_option("--out", c.out, "write the report here");
  app->add_option("--threads", c.threads, "worker threads, 0 = all")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology of the Goldman Lie algebra of an abelian group"};
  app.require_subcommand(1);
  Common common;
  std::string suite = "all";

  auto* validate = app.add_subcommand("validate", "check a spec and print its canonical structure");
  auto* homology = app.add_subcommand("homology", "truncated H2 per grading against the predicted dimension");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* dump = app.add_subcommand("dump", "write chain bases and boundary matrices of one grading as triplet files");
  for (auto* sub : {validate, homology, verify, dump}) add_common(sub, common);
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (common.threads > 0) kernels::set_thread_count(common.threads);
    if (*validate) return cmd_validate(common);
    if (*homology) return cmd_homology(common);
    if (*dump) return cmd_dump(common);
    return cmd_verify(common, suite);
  } catch (const SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return exit_error;
}
