#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pretor/errors.hpp"
#include "pretor/report.hpp"

namespace pretor {

using ObjId = std::int32_t;
using MorId = std::int32_t;
using ObjSet = std::vector<bool>;  // indexed by ObjId
using MorSet = std::vector<bool>;  // indexed by MorId

/// An explicit finite category: objects, morphisms with endpoints, chosen
/// identities and a composition table defined on composable pairs.
///
/// Ids are names; equality of morphisms is id equality, no quotienting.
/// Internally names are interned to dense indices (ObjId, MorId) in the
/// order given at construction; "least witness" and canonical serialization
/// both refer to that order. Instances are immutable after construction and
/// may be shared freely; every operation on them is a pure function.
///
/// Construction only resolves references and rejects duplicate names. The
/// table may still violate the axioms; validate() reports every violation.
class FinCategory {
 public:
  struct Morphism {
    std::string name;
    ObjId src = -1;
    ObjId dst = -1;
    bool operator==(const Morphism&) const = default;
  };

  struct MorphismSpec {
    std::string name, src, dst;
  };
  struct IdentitySpec {
    std::string object, morphism;
  };
  struct CompositionSpec {
    std::string g, f, gf;  // gf = g after f
  };
  using Entry = std::tuple<MorId, MorId, MorId>;  // (g, f, gf)

  static FinCategory make(std::string name, std::vector<std::string> objects,
                          std::vector<MorphismSpec> morphisms,
                          std::vector<IdentitySpec> identities,
                          std::vector<CompositionSpec> composition);

  // Index-based construction for generators and derived categories.
  // identities[i] = -1 marks an object without an identity entry.
  static FinCategory from_parts(std::string name, std::vector<std::string> objects,
                                std::vector<Morphism> morphisms,
                                std::vector<MorId> identities,
                                std::vector<Entry> composition);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjId x) const { return objects_[check_obj(x)]; }
  const Morphism& morphism(MorId f) const { return morphisms_[check_mor(f)]; }
  const std::string& morphism_name(MorId f) const { return morphism(f).name; }
  ObjId src(MorId f) const { return morphism(f).src; }
  ObjId dst(MorId f) const { return morphism(f).dst; }

  /// -1 when the document assigned no identity to x.
  MorId identity(ObjId x) const { return identities_[check_obj(x)]; }

  /// g after f; nullopt when not composable or the table omits the entry.
  std::optional<MorId> compose(MorId g, MorId f) const;

  ObjId object_id(const std::string& name) const;    // throws UnknownId
  MorId morphism_id(const std::string& name) const;  // throws UnknownId
  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  const std::vector<MorId>& into(ObjId x) const { return into_[check_obj(x)]; }
  const std::vector<MorId>& out_of(ObjId x) const { return out_[check_obj(x)]; }
  const std::vector<MorId>& hom(ObjId a, ObjId b) const;

  /// Raw table entries, sorted by (g, f). Includes entries on
  /// non-composable pairs when a document supplied them.
  const std::vector<Entry>& composition_entries() const { return entries_; }

  bool operator==(const FinCategory& other) const;

 private:
  FinCategory() = default;
  void build_indexes();
  ObjId check_obj(ObjId x) const;
  MorId check_mor(MorId f) const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::vector<Entry> entries_;

  // derived
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  std::vector<std::vector<MorId>> into_, out_;
  std::vector<std::vector<MorId>> hom_;       // [a * n + b]
  std::vector<std::int32_t> pos_in_into_;     // f -> position within into(dst(f))
  std::vector<std::vector<MorId>> comp_;      // [g][pos_in_into_[f]] -> gf or -1
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Checks every axiom: identity assignment and laws, totality of the table
/// on composable pairs (and absence of spurious entries), endpoint
/// consistency of composites, associativity. All violations are listed
/// with their witnessing ids, in id order.
Report validate(const FinCategory& cat);

bool is_mono(const FinCategory& cat, MorId f);
bool is_epi(const FinCategory& cat, MorId f);
bool is_iso(const FinCategory& cat, MorId f);
std::optional<MorId> inverse(const FinCategory& cat, MorId f);

std::vector<ObjId> terminal_objects(const FinCategory& cat);
std::vector<ObjId> initial_objects(const FinCategory& cat);

/// Same objects and morphism names, src/dst swapped, table transposed.
/// Involution: opposite(opposite(c)) is bit-identical to c.
FinCategory opposite(const FinCategory& cat);

/// Partition of objects by isomorphism, via union-find over witnessed isos.
/// Representatives are the least member of each class.
class IsoClasses {
 public:
  explicit IsoClasses(const FinCategory& cat);
  ObjId representative(ObjId x) const { return rep_[x]; }
  bool same(ObjId x, ObjId y) const { return rep_[x] == rep_[y]; }

 private:
  std::vector<ObjId> rep_;
};

bool is_replete(const FinCategory& cat, const ObjSet& objects);
ObjSet replete_closure(const FinCategory& cat, ObjSet objects);

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> object_map;    // indexed by source ObjId
  std::vector<MorId> morphism_map;  // indexed by source MorId
};

/// Totality, endpoint preservation, identities and all defined composites.
Report validate_functor(const Functor& F);

Functor identity_functor(CatPtr cat);
Functor compose_functors(const Functor& outer, const Functor& inner);

struct EquivalenceReport {
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  bool is_equivalence() const { return full && faithful && essentially_surjective; }
};

// All four require a law-checked functor and throw IllFormedFunctor otherwise.
bool is_full(const Functor& F);
bool is_faithful(const Functor& F);
bool is_essentially_surjective(const Functor& F);
EquivalenceReport equivalence_report(const Functor& F);
bool is_equivalence(const Functor& F);

/// Full subcategory, by object set; hom-sets are the ambient ones.
struct FullSubcategory {
  CatPtr ambient;
  ObjSet objects;
};

/// Materialized full subcategory with its inclusion functor and the
/// partial reindexing maps from the ambient category (-1 outside).
struct Subcategory {
  CatPtr cat;
  Functor inclusion;  // cat -> ambient
  std::vector<ObjId> object_to_sub;
  std::vector<MorId> morphism_to_sub;
};

Subcategory materialize(const FullSubcategory& sub, std::string name);

/// Finite product: objects and morphisms are tuples ordered
/// lexicographically in factor order, composition componentwise.
struct Product {
  CatPtr cat;
  std::vector<CatPtr> factors;
  std::vector<Functor> projections;  // cat -> factors[i]

  ObjId object_index(std::span<const ObjId> tuple) const;
  MorId morphism_index(std::span<const MorId> tuple) const;
  std::vector<ObjId> object_tuple(ObjId x) const;
  std::vector<MorId> morphism_tuple(MorId f) const;

  std::vector<std::size_t> object_strides, morphism_strides;
};

Product product(std::vector<CatPtr> factors);

/// Pairing functor into a product: components must share a source and map
/// into the respective factors.
Functor tuple_functor(const Product& p, std::span<const Functor> components);

// Object-set helpers.
ObjSet empty_obj_set(const FinCategory& cat);
ObjSet full_obj_set(const FinCategory& cat);
ObjSet obj_set(const FinCategory& cat, std::span<const ObjId> ids);
ObjSet obj_set_by_name(const FinCategory& cat, std::span<const std::string> names);
std::vector<ObjId> obj_set_members(const ObjSet& s);

}  // namespace pretor
