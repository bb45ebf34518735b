#pragma once

#include <vector>

#include "pretor/fincat.hpp"
#include "pretor/report.hpp"

namespace pretor {

/// A class of morphisms closed under composition with arbitrary morphisms
/// on either side; the ambient notion of "null". Represented extensionally;
/// closure is validated, not assumed.
struct Ideal {
  CatPtr ambient;
  MorSet members;

  bool contains(MorId f) const { return members[static_cast<std::size_t>(f)]; }
};

/// Closure check; each violation names the violating composite.
Report validate_ideal(const Ideal& ideal);

/// Morphisms that factor through an object of z: f = q.p with p into z,
/// q out of z. The result always satisfies the closure invariant.
Ideal ideal_generated_by_objects(CatPtr cat, const ObjSet& z);

Ideal empty_ideal(CatPtr cat);
Ideal full_ideal(CatPtr cat);
Ideal ideal_from_morphisms(CatPtr cat, std::span<const MorId> members);

bool is_null(const Ideal& ideal, MorId f);

/// True iff every member factors through an object whose identity is a
/// member (condition (T0) on ideals).
bool is_closed_ideal(const Ideal& ideal);

/// Objects whose identity is a null morphism, ascending.
std::vector<ObjId> null_objects(const Ideal& ideal);

}  // namespace pretor
