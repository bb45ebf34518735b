#include "pretor/ideals.hpp"

namespace pretor {

Report validate_ideal(const Ideal& ideal) {
  const auto& cat = *ideal.ambient;
  Report r;
  r.subject = "ideal in " + cat.name();
  if (ideal.members.size() != cat.morphism_count()) {
    r.fail("size", "member set size differs from the morphism count", {});
    return r;
  }
  std::int64_t members = 0;
  for (MorId f = 0; f < static_cast<MorId>(cat.morphism_count()); ++f) {
    if (!ideal.contains(f)) continue;
    ++members;
    for (MorId g : cat.out_of(cat.dst(f))) {
      auto gf = cat.compose(g, f);
      if (gf && !ideal.contains(*gf))
        r.fail("closure", "post-composite of a member escapes the ideal",
               {cat.morphism_name(g), cat.morphism_name(f), cat.morphism_name(*gf)});
    }
    for (MorId h : cat.into(cat.src(f))) {
      auto fh = cat.compose(f, h);
      if (fh && !ideal.contains(*fh))
        r.fail("closure", "pre-composite of a member escapes the ideal",
               {cat.morphism_name(f), cat.morphism_name(h), cat.morphism_name(*fh)});
    }
  }
  r.counters["members"] = members;
  return r;
}

Ideal ideal_generated_by_objects(CatPtr cat, const ObjSet& z) {
  const auto& c = *cat;
  if (z.size() != c.object_count()) throw Error("object set size mismatch");
  Ideal ideal{std::move(cat), MorSet(c.morphism_count(), false)};
  for (ObjId w = 0; w < static_cast<ObjId>(c.object_count()); ++w) {
    if (!z[w]) continue;
    for (MorId p : c.into(w)) {
      for (MorId q : c.out_of(w)) {
        auto qp = c.compose(q, p);
        if (qp) ideal.members[*qp] = true;
      }
    }
  }
  return ideal;
}

Ideal empty_ideal(CatPtr cat) {
  MorSet members(cat->morphism_count(), false);
  return Ideal{std::move(cat), std::move(members)};
}

Ideal full_ideal(CatPtr cat) {
  MorSet members(cat->morphism_count(), true);
  return Ideal{std::move(cat), std::move(members)};
}

Ideal ideal_from_morphisms(CatPtr cat, std::span<const MorId> members) {
  MorSet set(cat->morphism_count(), false);
  for (MorId f : members) {
    if (f < 0 || static_cast<std::size_t>(f) >= cat->morphism_count())
      throw UnknownId("morphism #" + std::to_string(f));
    set[f] = true;
  }
  return Ideal{std::move(cat), std::move(set)};
}

bool is_null(const Ideal& ideal, MorId f) {
  if (f < 0 || static_cast<std::size_t>(f) >= ideal.ambient->morphism_count())
    throw UnknownId("morphism #" + std::to_string(f));
  return ideal.contains(f);
}

bool is_closed_ideal(const Ideal& ideal) {
  const auto& cat = *ideal.ambient;
  for (MorId f = 0; f < static_cast<MorId>(cat.morphism_count()); ++f) {
    if (!ideal.contains(f)) continue;
    bool factors = false;
    for (ObjId w = 0; w < static_cast<ObjId>(cat.object_count()) && !factors; ++w) {
      MorId id = cat.identity(w);
      if (id < 0 || !ideal.contains(id)) continue;
      for (MorId p : cat.hom(cat.src(f), w)) {
        for (MorId q : cat.hom(w, cat.dst(f))) {
          if (cat.compose(q, p) == std::optional<MorId>(f)) {
            factors = true;
            break;
          }
        }
        if (factors) break;
      }
    }
    if (!factors) return false;
  }
  return true;
}

std::vector<ObjId> null_objects(const Ideal& ideal) {
  const auto& cat = *ideal.ambient;
  std::vector<ObjId> out;
  for (ObjId x = 0; x < static_cast<ObjId>(cat.object_count()); ++x) {
    MorId id = cat.identity(x);
    if (id >= 0 && ideal.contains(id)) out.push_back(x);
  }
  return out;
}

}  // namespace pretor
