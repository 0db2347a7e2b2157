#pragma once

#include "holex/bundle.hpp"
#include "holex/lattice.hpp"
#include "holex/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holex {

enum class Answer { yes, no, not_covered };

const char* to_string(Answer a);

/// Outcome of an existence criterion.
///
/// Invariants: filtrable == yes implies holomorphic == yes, and an
/// exceptional verdict is no/no.
struct Verdict {
  Answer holomorphic = Answer::not_covered;
  Answer filtrable = Answer::not_covered;
  std::string clause;
  Integer delta = 0;
  std::optional<Integer> m_value;
  std::vector<LatticeVector> decomposition;
  bool exceptional_case = false;
};

/// Clause identifiers reported in Verdict::clause.
namespace clause {
inline constexpr const char* k3_c1_not_in_ns = "k3.c1_not_in_ns";
inline constexpr const char* k3_exceptional = "k3.exceptional";
inline constexpr const char* k3_filtrable = "k3.filtrable";
inline constexpr const char* k3_nonfiltrable = "k3.nonfiltrable";
inline constexpr const char* k3_obstructed = "k3.obstructed";
inline constexpr const char* vii_c1_not_in_ns = "vii.c1_not_in_ns";
inline constexpr const char* vii_holds = "vii.delta_ge_m";
inline constexpr const char* vii_fails = "vii.delta_lt_m";
inline constexpr const char* vii_not_applicable = "vii.not_applicable";
inline constexpr const char* generic_c1_not_in_ns = "generic.c1_not_in_ns";
inline constexpr const char* generic_filtrable = "generic.filtrable";
inline constexpr const char* generic_not_covered = "generic.not_covered";
}  // namespace clause

/// Rank-2 bundles on a non-algebraic K3 surface. Outside the exceptional
/// case (a(X) = 0, Delta = 4, c_1 in 2 NS) a filtrable structure exists iff
/// Delta >= m(2, c_1) and a holomorphic one iff Delta >= min(6, m(2, c_1)).
/// Throws DomainError for another surface kind or rank.
Verdict decide_k3(const SurfaceModel& surface, const BundleTopology& bundle);

/// Any rank on a class VII surface whose minimal model has b_2 = 0 or a cycle
/// of rational curves: holomorphic <=> filtrable <=> c_1 in NS and
/// Delta >= m(r, c_1). When vii_applicable is false the verdict is
/// not_covered.
Verdict decide_class_vii(const SurfaceModel& surface, const BundleTopology& bundle);

/// Filtrable structures on any non-algebraic surface: c_1 in NS and
/// Delta >= m(r, c_1). Non-filtrable existence is not decided here.
Verdict decide_filtrable_generic(const SurfaceModel& surface, const BundleTopology& bundle);

/// Dispatch on surface.kind.
Verdict decide(const SurfaceModel& surface, const BundleTopology& bundle);

struct PrSample {
  BundleTopology bundle;
  Integer delta = 0;
  std::optional<Integer> m_value;
  bool applicable = false;  // c_1 in NS
  bool consistent = true;   // Delta >= m, or not applicable
};

struct PrReport {
  std::vector<PrSample> samples;
  std::size_t violations = 0;
};

/// Numeric form of property P_r: every sample bundle with c_1 in NS should
/// satisfy Delta >= m(r, c_1). Samples that do not are counted as
/// violations, i.e. candidate witnesses against P_r.
PrReport property_pr_check(const SurfaceModel& surface, const std::vector<BundleTopology>& samples);

}  // namespace holex
