#include "holex/existence.hpp"

#include "holex/errors.hpp"
#include "holex/m_invariant.hpp"

namespace holex {

const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::not_covered: return "not_covered";
  }
  return "?";
}

namespace {

Answer from_bool(bool b) { return b ? Answer::yes : Answer::no; }

Verdict start(const SurfaceModel& surface, const BundleTopology& bundle) {
  surface.validate();
  Verdict v;
  v.delta = discriminant(surface.lattice, bundle);
  return v;
}

void attach_m(Verdict& v, const SurfaceModel& surface, const BundleTopology& bundle) {
  MResult m = m_compute(surface.lattice, bundle.rank, bundle.c1);
  v.m_value = m.integer_value();
  v.decomposition = std::move(m.decomposition);
}

}  // namespace

Verdict decide_k3(const SurfaceModel& surface, const BundleTopology& bundle) {
  if (surface.kind != SurfaceKind::k3_nonalgebraic) throw DomainError("decide_k3 requires a K3 surface model");
  if (bundle.rank != 2) throw DomainError("decide_k3 requires a rank-2 bundle");
  Verdict v = start(surface, bundle);
  if (!bundle.c1_in_ns) {
    v.holomorphic = v.filtrable = Answer::no;
    v.clause = clause::k3_c1_not_in_ns;
    return v;
  }
  attach_m(v, surface, bundle);
  const Integer& m = *v.m_value;

  if (surface.algebraic_dimension == 0 && v.delta == 4 && w2_vanishes(surface.lattice, bundle)) {
    v.holomorphic = v.filtrable = Answer::no;
    v.exceptional_case = true;
    v.clause = clause::k3_exceptional;
    return v;
  }

  const bool filtrable = v.delta >= m;
  const bool holomorphic = v.delta >= (m < 6 ? m : Integer(6));
  v.filtrable = from_bool(filtrable);
  v.holomorphic = from_bool(holomorphic);
  v.clause = filtrable ? clause::k3_filtrable : holomorphic ? clause::k3_nonfiltrable : clause::k3_obstructed;
  return v;
}

Verdict decide_class_vii(const SurfaceModel& surface, const BundleTopology& bundle) {
  if (surface.kind != SurfaceKind::class_vii_known)
    throw DomainError("decide_class_vii requires a class VII surface model");
  Verdict v = start(surface, bundle);
  if (!surface.vii_applicable) {
    v.clause = clause::vii_not_applicable;
    return v;
  }
  if (!bundle.c1_in_ns) {
    v.holomorphic = v.filtrable = Answer::no;
    v.clause = clause::vii_c1_not_in_ns;
    return v;
  }
  attach_m(v, surface, bundle);
  const bool holds = v.delta >= *v.m_value;
  v.holomorphic = v.filtrable = from_bool(holds);
  v.clause = holds ? clause::vii_holds : clause::vii_fails;
  return v;
}

Verdict decide_filtrable_generic(const SurfaceModel& surface, const BundleTopology& bundle) {
  Verdict v = start(surface, bundle);
  if (!bundle.c1_in_ns) {
    // No filtrable structure; non-filtrable ones are outside any criterion here.
    v.filtrable = Answer::no;
    v.holomorphic = Answer::not_covered;
    v.clause = clause::generic_c1_not_in_ns;
    return v;
  }
  attach_m(v, surface, bundle);
  if (v.delta >= *v.m_value) {
    v.holomorphic = v.filtrable = Answer::yes;
    v.clause = clause::generic_filtrable;
  } else {
    v.filtrable = Answer::no;
    v.holomorphic = Answer::not_covered;
    v.clause = clause::generic_not_covered;
  }
  return v;
}

Verdict decide(const SurfaceModel& surface, const BundleTopology& bundle) {
  switch (surface.kind) {
    case SurfaceKind::k3_nonalgebraic: return decide_k3(surface, bundle);
    case SurfaceKind::class_vii_known: return decide_class_vii(surface, bundle);
    case SurfaceKind::generic_nonalgebraic: return decide_filtrable_generic(surface, bundle);
  }
  throw DomainError("unknown surface kind");
}

PrReport property_pr_check(const SurfaceModel& surface, const std::vector<BundleTopology>& samples) {
  surface.validate();
  PrReport report;
  for (const auto& bundle : samples) {
    PrSample s;
    s.bundle = bundle;
    s.delta = discriminant(surface.lattice, bundle);
    s.applicable = bundle.c1_in_ns;
    if (s.applicable) {
      s.m_value = m_compute(surface.lattice, bundle.rank, bundle.c1).integer_value();
      s.consistent = s.delta >= *s.m_value;
    }
    if (!s.consistent) ++report.violations;
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace holex
