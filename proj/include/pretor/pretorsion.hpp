#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pretor/exactness.hpp"
#include "pretor/fincat.hpp"
#include "pretor/ideals.hpp"

namespace pretor {

/// A candidate pretorsion theory: a category with torsion and torsion-free
/// object classes. z and the null ideal (generated by z) are derived at
/// construction and kept consistent by it.
struct PretorsionTheory {
  CatPtr cat;
  ObjSet torsion;
  ObjSet torsionfree;
  ObjSet z;
  Ideal null;

  static PretorsionTheory make(CatPtr cat, ObjSet torsion, ObjSet torsionfree,
                               bool replete_close = false);
};

/// The multi-pointed variant: the ideal is independent input, not derived.
struct MultiPointedTheory {
  CatPtr cat;
  ObjSet torsion;
  ObjSet torsionfree;
  Ideal ideal;

  static MultiPointedTheory make(CatPtr cat, ObjSet torsion, ObjSet torsionfree, Ideal ideal);
};

MultiPointedTheory as_multi_pointed(const PretorsionTheory& pt);

struct TheoryReport {
  bool verdict = false;
  std::vector<Violation> repleteness;        // witnesses of non-repleteness
  std::optional<MorId> t1_witness;           // least non-null torsion->torsion-free morphism
  std::vector<ObjId> t2_failures;            // objects with no admissible SES
  std::map<ObjId, SesCandidate> per_object_ses;  // least SES per object
};

Report check_T1(const PretorsionTheory& pt);
Report check_T2(const PretorsionTheory& pt);
Report check_T1(const MultiPointedTheory& mpt);
Report check_T2(const MultiPointedTheory& mpt);

/// Repleteness of both classes, (T1) and (T2) together.
TheoryReport is_pretorsion_theory(const PretorsionTheory& pt);
TheoryReport is_pretorsion_theory(const MultiPointedTheory& mpt);

/// The torsion functor t and torsion-free functor f derived from the least
/// SES per object, law-checked, targeting the materialized subcategories.
/// Requires a verified theory (NotATheory otherwise); a non-unique internal
/// factorization raises AmbiguousFactorization and is never resolved silently.
struct TorsionFunctors {
  Subcategory torsion_sub;
  Subcategory torsionfree_sub;
  Functor t;  // cat -> torsion_sub.cat
  Functor f;  // cat -> torsionfree_sub.cat
  std::vector<SesCandidate> canonical_ses;  // per object
};

TorsionFunctors torsion_functors(const PretorsionTheory& pt);
Functor torsion_functor(const PretorsionTheory& pt);
Functor torsionfree_functor(const PretorsionTheory& pt);

/// Thinness: X |-> (t(X), f(X)) into the product of the two subcategories
/// is an equivalence. K is rebuilt from the chosen SESs, never supplied.
struct ThinReport {
  bool thin = false;
  EquivalenceReport axes;
  Report functor_laws;  // law-check of K
};

ThinReport is_thin(const PretorsionTheory& pt);

/// (T0): the ideal is closed. (T3): every identity has at least one kernel
/// and one cokernel relative to the ideal; least failing object first.
Report check_T0(const MultiPointedTheory& mpt);
Report check_T3(const MultiPointedTheory& mpt);

struct MptReports {
  std::optional<Report> t0, t1, t2, t3;
};

MptReports check_all(const MultiPointedTheory& mpt);

/// Extensional check that the null objects of the ideal are exactly
/// torsion-and-torsion-free. Requires the four checks to have been run
/// (PreconditionNotChecked) and passed (PreconditionUnmet).
Report null_objects_are_Z(const MultiPointedTheory& mpt, const MptReports& pre);

/// M preserves torsion objects, torsion-free objects, and every SES with
/// torsion source and torsion-free target.
bool is_theory_morphism(const Functor& M, const PretorsionTheory& pt,
                        const PretorsionTheory& target);

}  // namespace pretor
