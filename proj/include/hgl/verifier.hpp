#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgl/complex.hpp"
#include "hgl/homotopy.hpp"
#include "hgl/quotient.hpp"
#include "hgl/report.hpp"
#include "hgl/wedge.hpp"

namespace hgl {

// Truncation and sampling knobs shared by all checks. Radii are shrunk to
// fit the budgets; every entry records requested and effective radii.
struct VerifyOptions {
  std::int64_t box = 2;
  std::int64_t enlarge = 3;
  std::uint64_t seed = 1;
  std::uint64_t element_budget = 2500;   // elements of a box whose triples get enumerated
  std::uint64_t scan_budget = 20000;     // elements of a box that is only scanned linearly
  std::uint64_t triple_budget = 600000;  // 3-wedges per elimination
  std::size_t samples = 500;
  std::size_t functionals = 100;
};

// Parameter errors (a precondition on z, u, y or the presentation).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ReportEntry check_bracket_axioms(const GroupSpec& spec, const VerifyOptions& opt);
ReportEntry check_complex(const GroupSpec& spec, const VerifyOptions& opt);

ReportEntry inner_h2_certify(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                             std::int64_t boundary_box, const VerifyOptions& opt);
ReportEntry outer_h2_certify(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                             const VerifyOptions& opt);
ReportEntry main_theorem_check(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                               std::int64_t boundary_box, const VerifyOptions& opt);
ReportEntry h1_check(const GroupSpec& spec, const GroupElement& z, const VerifyOptions& opt);
ReportEntry gk_cycle_check(const GroupSpec& spec, const GroupElement& u, const GroupElement& z,
                           const VerifyOptions& opt);
// The presentation must be surface(genus, boundary).
ReportEntry surface_generator_check(const GroupSpec& spec, int genus, int boundary, const GroupElement& z,
                                    const VerifyOptions& opt);
ReportEntry linear_extension_check(const GroupSpec& spec, const VerifyOptions& opt);
ReportEntry omega_check(const GroupSpec& spec, const GroupElement& z, const VerifyOptions& opt);

// ([2u] - 2[u]) ^ ([z-2u] - 2[z-u] + [z]), expanded.
WedgeChain gk_cycle(const GroupElement& u, const GroupElement& z);

// omega([u],[v],[z-u-v]) = <u,v>
Cochain omega_cocycle(const GroupSpec& spec, const GroupElement& z);
// eta([u],[z-u]) = f(u) + 1 with f linear, f(z) = -2 (forced by alternation);
// needs z of infinite order.
Cochain omega_primitive(const GroupSpec& spec, const GroupElement& z);

// Chain W of derived 3-wedges with d3 W = c, for a derived 2-chain c of
// inner grading; searched on the box of radius enlarge * (max norm of c) or,
// when that box is too large, on a closure of c's factors under sums.
struct BoundaryWitness {
  std::optional<WedgeChain> chain;
  std::size_t support_size = 0;
  std::size_t triples = 0;
  std::string support_kind;
};
BoundaryWitness find_boundary_witness(const GroupSpec& spec, const WedgeChain& c, const VerifyOptions& opt);

// Witness for rel(u,v) = e_{u+v} - e_u - e_v, e_a = [a]^[z-a], from one
// 3-wedge when <u,v> != 0, else from three wedges using an auxiliary x.
// All factors are derived and, when `within` is given, lie in it.
std::optional<WedgeChain> relation_witness(const GroupElement& u, const GroupElement& v, const GroupElement& z,
                                           std::span<const GroupElement> aux_candidates,
                                           const Support* within = nullptr);
WedgeChain relation_chain(const GroupElement& u, const GroupElement& v, const GroupElement& z);

struct SuiteConfig {
  std::string suite = "all";
  std::vector<GroupElement> gradings;  // empty: defaults
  std::optional<std::pair<int, int>> surface;
  VerifyOptions options;
};

const std::vector<std::string>& suite_names();
// 0, the ker mu basis and the non-central generators, without repeats.
std::vector<GroupElement> default_gradings(const GroupSpec& spec);
// Runs the suite; entries come out in a fixed order whatever the thread count.
Report run_suite(const GroupSpec& spec, const SuiteConfig& config);

}  // namespace hgl
