#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pretor/fincat.hpp"
#include "pretor/pretorsion.hpp"

namespace pretor {

/// Reflection (or coreflection) data: the subcategory and one unit per
/// object. Units need not be identities on members; only uniqueness of
/// factorization is required.
struct ReflectionData {
  ObjSet subcategory;
  std::vector<MorId> units;  // indexed by ObjId
};

/// The theory (Ob(C) x Init(D), Term(C) x Ob(D)) on the product C x D.
/// Throws MissingTerminal / MissingInitial / SizeLimit.
PretorsionTheory theorem_A_theory(CatPtr c, CatPtr d);

/// Every morphism into each terminal of C is epi, and every morphism out
/// of each initial of D is mono; witnesses reported.
Report theorem_A_condition(const FinCategory& c, const FinCategory& d);

/// Extensional agreement of "the morphism 0 -> 1 is mono" with "every
/// morphism out of 0 is mono"; witness reported on divergence.
Report zero_to_one_mono_equiv(const FinCategory& cat);

PretorsionTheory lemma4_theory(CatPtr cat);       // (Ob, terminals)
PretorsionTheory lemma4_dual_theory(CatPtr cat);  // (initials, Ob)

/// Componentwise theory on the product of the factor categories.
PretorsionTheory product_theory(std::span<const PretorsionTheory> factors);

/// Least unit family when S is epireflective (units epi, factorization
/// through them unique); nullopt otherwise. S is expected replete.
std::optional<ReflectionData> is_epireflective(const FinCategory& cat, const ObjSet& s);
std::optional<ReflectionData> is_monocoreflective(const FinCategory& cat, const ObjSet& s);

/// Extensional check of: (C x SD, SC x D) is a pretorsion theory iff SC is
/// epireflective in C and SD is monocoreflective in D. Reports both sides.
Report intermediate_theorem_check(CatPtr c, const ObjSet& sc, CatPtr d, const ObjSet& sd);

// Generators. All outputs pass validate; sizes are guarded.
FinCategory gen_finset(int n);     // skeletal finite sets 0..n, all functions
FinCategory gen_finset_op(int n);  // bit-identical to opposite(gen_finset(n))
FinCategory gen_rel(int n);        // sets 0..n with relations, n <= 2
FinCategory gen_nonepi_terminal();
FinCategory gen_walking_arrow();
FinCategory gen_trivial();
FinCategory gen_discrete(int k);

PretorsionTheory gen_signed_sets(int n);  // n <= 2
PretorsionTheory gen_example_B(int n);    // n <= 2

}  // namespace pretor
