#include "pretor/fincat.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

namespace pretor {

namespace {

std::atomic<std::size_t> g_size_limit{20000};

std::string tuple_name(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

}  // namespace

std::size_t size_limit() { return g_size_limit.load(); }

void set_size_limit(std::size_t limit) { g_size_limit.store(limit); }

void guard_size(std::size_t morphisms, const char* what) {
  if (morphisms > size_limit())
    throw SizeLimit(std::string(what) + ": " + std::to_string(morphisms) +
                    " morphisms exceed the size limit of " + std::to_string(size_limit()));
}

// ---------------------------------------------------------------------------
// FinCategory

ObjId FinCategory::check_obj(ObjId x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= objects_.size())
    throw UnknownId("object #" + std::to_string(x));
  return x;
}

MorId FinCategory::check_mor(MorId f) const {
  if (f < 0 || static_cast<std::size_t>(f) >= morphisms_.size())
    throw UnknownId("morphism #" + std::to_string(f));
  return f;
}

FinCategory FinCategory::make(std::string name, std::vector<std::string> objects,
                              std::vector<MorphismSpec> morphisms,
                              std::vector<IdentitySpec> identities,
                              std::vector<CompositionSpec> composition) {
  FinCategory c;
  c.name_ = std::move(name);
  c.objects_ = std::move(objects);
  for (std::size_t i = 0; i < c.objects_.size(); ++i) {
    auto [it, fresh] = c.object_index_.emplace(c.objects_[i], static_cast<ObjId>(i));
    if (!fresh) throw Error("duplicate object id: " + c.objects_[i]);
  }
  c.morphisms_.reserve(morphisms.size());
  for (auto& spec : morphisms) {
    Morphism m;
    m.name = std::move(spec.name);
    m.src = c.object_id(spec.src);
    m.dst = c.object_id(spec.dst);
    auto [it, fresh] =
        c.morphism_index_.emplace(m.name, static_cast<MorId>(c.morphisms_.size()));
    if (!fresh) throw Error("duplicate morphism id: " + m.name);
    c.morphisms_.push_back(std::move(m));
  }
  c.identities_.assign(c.objects_.size(), -1);
  for (const auto& spec : identities) {
    ObjId x = c.object_id(spec.object);
    if (c.identities_[x] != -1)
      throw Error("duplicate identity assignment for object: " + spec.object);
    c.identities_[x] = c.morphism_id(spec.morphism);
  }
  c.entries_.reserve(composition.size());
  for (const auto& spec : composition)
    c.entries_.emplace_back(c.morphism_id(spec.g), c.morphism_id(spec.f),
                            c.morphism_id(spec.gf));
  c.build_indexes();
  return c;
}

FinCategory FinCategory::from_parts(std::string name, std::vector<std::string> objects,
                                    std::vector<Morphism> morphisms,
                                    std::vector<MorId> identities,
                                    std::vector<Entry> composition) {
  FinCategory c;
  c.name_ = std::move(name);
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  c.entries_ = std::move(composition);
  for (std::size_t i = 0; i < c.objects_.size(); ++i) {
    auto [it, fresh] = c.object_index_.emplace(c.objects_[i], static_cast<ObjId>(i));
    if (!fresh) throw Error("duplicate object id: " + c.objects_[i]);
  }
  for (std::size_t i = 0; i < c.morphisms_.size(); ++i) {
    auto [it, fresh] = c.morphism_index_.emplace(c.morphisms_[i].name, static_cast<MorId>(i));
    if (!fresh) throw Error("duplicate morphism id: " + c.morphisms_[i].name);
  }
  c.build_indexes();
  return c;
}

void FinCategory::build_indexes() {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  into_.assign(n, {});
  out_.assign(n, {});
  hom_.assign(n * n, {});
  pos_in_into_.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& mor = morphisms_[i];
    pos_in_into_[i] = static_cast<std::int32_t>(into_[mor.dst].size());
    into_[mor.dst].push_back(static_cast<MorId>(i));
    out_[mor.src].push_back(static_cast<MorId>(i));
    hom_[static_cast<std::size_t>(mor.src) * n + mor.dst].push_back(static_cast<MorId>(i));
  }
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (std::get<0>(entries_[i]) == std::get<0>(entries_[i - 1]) &&
        std::get<1>(entries_[i]) == std::get<1>(entries_[i - 1]))
      throw Error("duplicate composition entry for (" +
                  morphisms_[std::get<0>(entries_[i])].name + ", " +
                  morphisms_[std::get<1>(entries_[i])].name + ")");
  }
  comp_.assign(m, {});
  for (std::size_t g = 0; g < m; ++g)
    comp_[g].assign(into_[morphisms_[g].src].size(), -1);
  for (const auto& [g, f, gf] : entries_) {
    check_mor(g);
    check_mor(f);
    check_mor(gf);
    if (morphisms_[f].dst == morphisms_[g].src)
      comp_[g][pos_in_into_[f]] = gf;
    // entries on non-composable pairs stay in entries_ for validate().
  }
}

std::optional<MorId> FinCategory::compose(MorId g, MorId f) const {
  check_mor(g);
  check_mor(f);
  if (morphisms_[f].dst != morphisms_[g].src) return std::nullopt;
  MorId gf = comp_[g][pos_in_into_[f]];
  if (gf < 0) return std::nullopt;
  return gf;
}

ObjId FinCategory::object_id(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) throw UnknownId(name);
  return it->second;
}

MorId FinCategory::morphism_id(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) throw UnknownId(name);
  return it->second;
}

std::optional<ObjId> FinCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<MorId>& FinCategory::hom(ObjId a, ObjId b) const {
  check_obj(a);
  check_obj(b);
  return hom_[static_cast<std::size_t>(a) * objects_.size() + b];
}

bool FinCategory::operator==(const FinCategory& other) const {
  return name_ == other.name_ && objects_ == other.objects_ &&
         morphisms_ == other.morphisms_ && identities_ == other.identities_ &&
         entries_ == other.entries_;
}

// ---------------------------------------------------------------------------
// validate

Report validate(const FinCategory& cat) {
  guard_size(cat.morphism_count(), "validate");
  Report r;
  r.subject = cat.name();
  const std::size_t n = cat.object_count();
  const std::size_t m = cat.morphism_count();
  r.counters["objects"] = static_cast<std::int64_t>(n);
  r.counters["morphisms"] = static_cast<std::int64_t>(m);

  for (ObjId x = 0; x < static_cast<ObjId>(n); ++x) {
    MorId id = cat.identity(x);
    if (id < 0) {
      r.fail("identity-missing", "object has no identity morphism", {cat.object_name(x)});
      continue;
    }
    if (cat.src(id) != x || cat.dst(id) != x)
      r.fail("identity-endpoints", "identity morphism does not start and end at its object",
             {cat.object_name(x), cat.morphism_name(id)});
  }

  // Identity laws, checked only where the table has the entries; missing
  // entries are totality violations below.
  for (MorId f = 0; f < static_cast<MorId>(m); ++f) {
    MorId left = cat.identity(cat.dst(f));
    if (left >= 0 && cat.src(left) == cat.dst(f) && cat.dst(left) == cat.dst(f)) {
      auto lf = cat.compose(left, f);
      if (lf && *lf != f)
        r.fail("identity-law", "id . f differs from f",
               {cat.morphism_name(left), cat.morphism_name(f), cat.morphism_name(*lf)});
    }
    MorId right = cat.identity(cat.src(f));
    if (right >= 0 && cat.src(right) == cat.src(f) && cat.dst(right) == cat.src(f)) {
      auto fr = cat.compose(f, right);
      if (fr && *fr != f)
        r.fail("identity-law", "f . id differs from f",
               {cat.morphism_name(f), cat.morphism_name(right), cat.morphism_name(*fr)});
    }
  }

  std::int64_t pairs = 0;
  for (MorId g = 0; g < static_cast<MorId>(m); ++g) {
    for (MorId f : cat.into(cat.src(g))) {
      ++pairs;
      auto gf = cat.compose(g, f);
      if (!gf) {
        r.fail("totality", "composable pair has no composition entry",
               {cat.morphism_name(g), cat.morphism_name(f)});
        continue;
      }
      if (cat.src(*gf) != cat.src(f) || cat.dst(*gf) != cat.dst(g))
        r.fail("composition-endpoints", "composite has wrong endpoints",
               {cat.morphism_name(g), cat.morphism_name(f), cat.morphism_name(*gf)});
    }
  }
  r.counters["composable_pairs"] = pairs;

  for (const auto& [g, f, gf] : cat.composition_entries()) {
    if (cat.dst(f) != cat.src(g))
      r.fail("spurious-composition", "entry on a non-composable pair",
             {cat.morphism_name(g), cat.morphism_name(f)});
  }

  std::int64_t triples = 0;
  for (MorId h = 0; h < static_cast<MorId>(m); ++h) {
    for (MorId g : cat.into(cat.src(h))) {
      auto hg = cat.compose(h, g);
      for (MorId f : cat.into(cat.src(g))) {
        ++triples;
        auto gf = cat.compose(g, f);
        if (!hg || !gf) continue;  // already reported under totality
        auto left = cat.compose(*hg, f);
        auto right = cat.compose(h, *gf);
        if (!left || !right) continue;
        if (*left != *right)
          r.fail("associativity", "(h.g).f differs from h.(g.f)",
                 {cat.morphism_name(h), cat.morphism_name(g), cat.morphism_name(f)});
      }
    }
  }
  r.counters["associativity_triples"] = triples;
  return r;
}

// ---------------------------------------------------------------------------
// elementary predicates

bool is_mono(const FinCategory& cat, MorId f) {
  ObjId a = cat.src(f);
  const auto& in = cat.into(a);
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      MorId u = in[i], v = in[j];
      if (cat.src(u) != cat.src(v)) continue;
      if (cat.compose(f, u) == cat.compose(f, v)) return false;
    }
  }
  return true;
}

bool is_epi(const FinCategory& cat, MorId f) {
  ObjId b = cat.dst(f);
  const auto& out = cat.out_of(b);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      MorId u = out[i], v = out[j];
      if (cat.dst(u) != cat.dst(v)) continue;
      if (cat.compose(u, f) == cat.compose(v, f)) return false;
    }
  }
  return true;
}

std::optional<MorId> inverse(const FinCategory& cat, MorId f) {
  MorId id_src = cat.identity(cat.src(f));
  MorId id_dst = cat.identity(cat.dst(f));
  for (MorId g : cat.hom(cat.dst(f), cat.src(f))) {
    if (cat.compose(g, f) == std::optional<MorId>(id_src) &&
        cat.compose(f, g) == std::optional<MorId>(id_dst))
      return g;
  }
  return std::nullopt;
}

bool is_iso(const FinCategory& cat, MorId f) { return inverse(cat, f).has_value(); }

std::vector<ObjId> terminal_objects(const FinCategory& cat) {
  std::vector<ObjId> out;
  const ObjId n = static_cast<ObjId>(cat.object_count());
  for (ObjId t = 0; t < n; ++t) {
    bool ok = true;
    for (ObjId x = 0; x < n && ok; ++x) ok = cat.hom(x, t).size() == 1;
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<ObjId> initial_objects(const FinCategory& cat) {
  std::vector<ObjId> out;
  const ObjId n = static_cast<ObjId>(cat.object_count());
  for (ObjId i = 0; i < n; ++i) {
    bool ok = true;
    for (ObjId x = 0; x < n && ok; ++x) ok = cat.hom(i, x).size() == 1;
    if (ok) out.push_back(i);
  }
  return out;
}

FinCategory opposite(const FinCategory& cat) {
  std::string name = cat.name();
  if (name.size() >= 3 && name.ends_with("^op"))
    name.resize(name.size() - 3);
  else
    name += "^op";

  std::vector<std::string> objects;
  objects.reserve(cat.object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(cat.object_count()); ++x)
    objects.push_back(cat.object_name(x));

  std::vector<FinCategory::Morphism> morphisms;
  morphisms.reserve(cat.morphism_count());
  for (MorId f = 0; f < static_cast<MorId>(cat.morphism_count()); ++f)
    morphisms.push_back({cat.morphism_name(f), cat.dst(f), cat.src(f)});

  std::vector<MorId> identities;
  identities.reserve(cat.object_count());
  for (ObjId x = 0; x < static_cast<ObjId>(cat.object_count()); ++x)
    identities.push_back(cat.identity(x));

  std::vector<FinCategory::Entry> entries;
  entries.reserve(cat.composition_entries().size());
  for (const auto& [g, f, gf] : cat.composition_entries()) entries.emplace_back(f, g, gf);

  return FinCategory::from_parts(std::move(name), std::move(objects), std::move(morphisms),
                                 std::move(identities), std::move(entries));
}

// ---------------------------------------------------------------------------
// isomorphism classes, repleteness

IsoClasses::IsoClasses(const FinCategory& cat) {
  const std::size_t n = cat.object_count();
  std::vector<ObjId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorId f = 0; f < static_cast<MorId>(cat.morphism_count()); ++f) {
    if (cat.src(f) == cat.dst(f)) continue;
    if (is_iso(cat, f)) {
      ObjId a = find(cat.src(f)), b = find(cat.dst(f));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  rep_.resize(n);
  for (std::size_t x = 0; x < n; ++x) rep_[x] = find(static_cast<ObjId>(x));
}

bool is_replete(const FinCategory& cat, const ObjSet& objects) {
  IsoClasses iso(cat);
  const ObjId n = static_cast<ObjId>(cat.object_count());
  for (ObjId x = 0; x < n; ++x) {
    if (!objects[x]) continue;
    for (ObjId y = 0; y < n; ++y)
      if (!objects[y] && iso.same(x, y)) return false;
  }
  return true;
}

ObjSet replete_closure(const FinCategory& cat, ObjSet objects) {
  IsoClasses iso(cat);
  const ObjId n = static_cast<ObjId>(cat.object_count());
  ObjSet out = objects;
  for (ObjId x = 0; x < n; ++x) {
    if (!objects[x]) continue;
    for (ObjId y = 0; y < n; ++y)
      if (iso.same(x, y)) out[y] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// functors

Report validate_functor(const Functor& F) {
  Report r;
  r.subject = "functor " + F.source->name() + " -> " + F.target->name();
  const auto& src = *F.source;
  const auto& dst = *F.target;
  if (F.object_map.size() != src.object_count() ||
      F.morphism_map.size() != src.morphism_count()) {
    r.fail("totality", "object or morphism map has the wrong size", {});
    return r;
  }
  for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x) {
    if (F.object_map[x] < 0 || F.object_map[x] >= static_cast<ObjId>(dst.object_count())) {
      r.fail("totality", "object map out of range", {src.object_name(x)});
      return r;
    }
  }
  for (MorId f = 0; f < static_cast<MorId>(src.morphism_count()); ++f) {
    MorId ff = F.morphism_map[f];
    if (ff < 0 || ff >= static_cast<MorId>(dst.morphism_count())) {
      r.fail("totality", "morphism map out of range", {src.morphism_name(f)});
      return r;
    }
    if (dst.src(ff) != F.object_map[src.src(f)] || dst.dst(ff) != F.object_map[src.dst(f)])
      r.fail("endpoints", "image morphism has wrong endpoints",
             {src.morphism_name(f), dst.morphism_name(ff)});
  }
  for (ObjId x = 0; x < static_cast<ObjId>(src.object_count()); ++x) {
    MorId id = src.identity(x);
    if (id < 0) continue;
    MorId want = dst.identity(F.object_map[x]);
    if (want < 0 || F.morphism_map[id] != want)
      r.fail("identities", "identity not preserved", {src.object_name(x)});
  }
  for (MorId g = 0; g < static_cast<MorId>(src.morphism_count()); ++g) {
    for (MorId f : src.into(src.src(g))) {
      auto gf = src.compose(g, f);
      if (!gf) continue;
      auto image = dst.compose(F.morphism_map[g], F.morphism_map[f]);
      if (!image || *image != F.morphism_map[*gf])
        r.fail("composition", "composite not preserved",
               {src.morphism_name(g), src.morphism_name(f)});
    }
  }
  return r;
}

Functor identity_functor(CatPtr cat) {
  Functor F;
  F.source = cat;
  F.target = cat;
  F.object_map.resize(cat->object_count());
  std::iota(F.object_map.begin(), F.object_map.end(), 0);
  F.morphism_map.resize(cat->morphism_count());
  std::iota(F.morphism_map.begin(), F.morphism_map.end(), 0);
  return F;
}

Functor compose_functors(const Functor& outer, const Functor& inner) {
  if (!(*outer.source == *inner.target))
    throw IllFormedFunctor("compose_functors: middle categories differ");
  Functor F;
  F.source = inner.source;
  F.target = outer.target;
  F.object_map.reserve(inner.object_map.size());
  for (ObjId x : inner.object_map) F.object_map.push_back(outer.object_map[x]);
  F.morphism_map.reserve(inner.morphism_map.size());
  for (MorId f : inner.morphism_map) F.morphism_map.push_back(outer.morphism_map[f]);
  return F;
}

namespace {

void require_laws(const Functor& F) {
  Report r = validate_functor(F);
  if (!r.pass)
    throw IllFormedFunctor("ill-formed functor: " + r.violations.front().rule + " (" +
                           r.violations.front().detail + ")");
}

}  // namespace

bool is_full(const Functor& F) {
  require_laws(F);
  const auto& src = *F.source;
  const auto& dst = *F.target;
  for (ObjId a = 0; a < static_cast<ObjId>(src.object_count()); ++a) {
    for (ObjId b = 0; b < static_cast<ObjId>(src.object_count()); ++b) {
      for (MorId h : dst.hom(F.object_map[a], F.object_map[b])) {
        bool hit = false;
        for (MorId g : src.hom(a, b)) {
          if (F.morphism_map[g] == h) {
            hit = true;
            break;
          }
        }
        if (!hit) return false;
      }
    }
  }
  return true;
}

bool is_faithful(const Functor& F) {
  require_laws(F);
  const auto& src = *F.source;
  for (ObjId a = 0; a < static_cast<ObjId>(src.object_count()); ++a) {
    for (ObjId b = 0; b < static_cast<ObjId>(src.object_count()); ++b) {
      const auto& fs = src.hom(a, b);
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
          if (F.morphism_map[fs[i]] == F.morphism_map[fs[j]]) return false;
    }
  }
  return true;
}

bool is_essentially_surjective(const Functor& F) {
  require_laws(F);
  IsoClasses iso(*F.target);
  std::vector<bool> hit(F.target->object_count(), false);
  for (ObjId x : F.object_map) hit[iso.representative(x)] = true;
  for (ObjId y = 0; y < static_cast<ObjId>(F.target->object_count()); ++y)
    if (!hit[iso.representative(y)]) return false;
  return true;
}

EquivalenceReport equivalence_report(const Functor& F) {
  guard_size(std::max(F.source->morphism_count(), F.target->morphism_count()),
             "equivalence check");
  EquivalenceReport r;
  r.full = is_full(F);
  r.faithful = is_faithful(F);
  r.essentially_surjective = is_essentially_surjective(F);
  return r;
}

bool is_equivalence(const Functor& F) { return equivalence_report(F).is_equivalence(); }

// ---------------------------------------------------------------------------
// full subcategories

Subcategory materialize(const FullSubcategory& sub, std::string name) {
  const auto& amb = *sub.ambient;
  Subcategory out;
  out.object_to_sub.assign(amb.object_count(), -1);
  out.morphism_to_sub.assign(amb.morphism_count(), -1);

  std::vector<std::string> objects;
  std::vector<ObjId> kept_objects;
  for (ObjId x = 0; x < static_cast<ObjId>(amb.object_count()); ++x) {
    if (!sub.objects[x]) continue;
    out.object_to_sub[x] = static_cast<ObjId>(objects.size());
    kept_objects.push_back(x);
    objects.push_back(amb.object_name(x));
  }

  std::vector<FinCategory::Morphism> morphisms;
  std::vector<MorId> kept_morphisms;
  for (MorId f = 0; f < static_cast<MorId>(amb.morphism_count()); ++f) {
    if (!sub.objects[amb.src(f)] || !sub.objects[amb.dst(f)]) continue;
    out.morphism_to_sub[f] = static_cast<MorId>(morphisms.size());
    kept_morphisms.push_back(f);
    morphisms.push_back({amb.morphism_name(f), out.object_to_sub[amb.src(f)],
                         out.object_to_sub[amb.dst(f)]});
  }

  std::vector<MorId> identities;
  identities.reserve(objects.size());
  for (ObjId x : kept_objects) {
    MorId id = amb.identity(x);
    identities.push_back(id < 0 ? -1 : out.morphism_to_sub[id]);
  }

  std::vector<FinCategory::Entry> entries;
  for (const auto& [g, f, gf] : amb.composition_entries()) {
    if (out.morphism_to_sub[g] < 0 || out.morphism_to_sub[f] < 0) continue;
    if (amb.dst(f) != amb.src(g)) continue;
    entries.emplace_back(out.morphism_to_sub[g], out.morphism_to_sub[f],
                         out.morphism_to_sub[gf]);
  }

  out.cat = std::make_shared<FinCategory>(FinCategory::from_parts(
      std::move(name), std::move(objects), std::move(morphisms), std::move(identities),
      std::move(entries)));
  out.inclusion.source = out.cat;
  out.inclusion.target = sub.ambient;
  out.inclusion.object_map = kept_objects;
  out.inclusion.morphism_map = kept_morphisms;
  return out;
}

// ---------------------------------------------------------------------------
// products

ObjId Product::object_index(std::span<const ObjId> tuple) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    idx += static_cast<std::size_t>(tuple[i]) * object_strides[i];
  return static_cast<ObjId>(idx);
}

MorId Product::morphism_index(std::span<const MorId> tuple) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    idx += static_cast<std::size_t>(tuple[i]) * morphism_strides[i];
  return static_cast<MorId>(idx);
}

std::vector<ObjId> Product::object_tuple(ObjId x) const {
  std::vector<ObjId> out(factors.size());
  std::size_t rest = static_cast<std::size_t>(x);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out[i] = static_cast<ObjId>(rest / object_strides[i]);
    rest %= object_strides[i];
  }
  return out;
}

std::vector<MorId> Product::morphism_tuple(MorId f) const {
  std::vector<MorId> out(factors.size());
  std::size_t rest = static_cast<std::size_t>(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out[i] = static_cast<MorId>(rest / morphism_strides[i]);
    rest %= morphism_strides[i];
  }
  return out;
}

Product product(std::vector<CatPtr> factors) {
  if (factors.empty()) throw Error("product: empty factor list");
  const std::size_t k = factors.size();

  std::size_t total_m = 1, total_n = 1;
  for (const auto& c : factors) {
    std::size_t mc = c->morphism_count(), nc = c->object_count();
    if (mc > 0 && total_m > size_limit() / mc)
      throw SizeLimit("product: morphism count exceeds the size limit of " +
                      std::to_string(size_limit()));
    total_m *= mc;
    total_n *= nc;
  }
  guard_size(total_m, "product");

  Product p;
  p.factors = factors;
  p.object_strides.assign(k, 1);
  p.morphism_strides.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) {
    p.object_strides[i - 1] = p.object_strides[i] * factors[i]->object_count();
    p.morphism_strides[i - 1] = p.morphism_strides[i] * factors[i]->morphism_count();
  }

  std::vector<std::string> names;
  names.reserve(k);
  for (const auto& c : factors) names.push_back(c->name());

  std::vector<std::string> objects(total_n);
  {
    std::vector<ObjId> t(k, 0);
    for (std::size_t idx = 0; idx < total_n; ++idx) {
      std::vector<std::string> parts(k);
      for (std::size_t i = 0; i < k; ++i) parts[i] = factors[i]->object_name(t[i]);
      objects[idx] = tuple_name(parts);
      for (std::size_t i = k; i-- > 0;) {
        if (++t[i] < static_cast<ObjId>(factors[i]->object_count())) break;
        t[i] = 0;
      }
    }
  }

  std::vector<FinCategory::Morphism> morphisms(total_m);
  {
    std::vector<MorId> t(k, 0);
    for (std::size_t idx = 0; idx < total_m; ++idx) {
      std::vector<std::string> parts(k);
      std::vector<ObjId> srcs(k), dsts(k);
      for (std::size_t i = 0; i < k; ++i) {
        parts[i] = factors[i]->morphism_name(t[i]);
        srcs[i] = factors[i]->src(t[i]);
        dsts[i] = factors[i]->dst(t[i]);
      }
      morphisms[idx] = {tuple_name(parts), p.object_index(srcs), p.object_index(dsts)};
      for (std::size_t i = k; i-- > 0;) {
        if (++t[i] < static_cast<MorId>(factors[i]->morphism_count())) break;
        t[i] = 0;
      }
    }
  }

  std::vector<MorId> identities(total_n);
  {
    std::vector<ObjId> t(k, 0);
    std::vector<MorId> ids(k);
    for (std::size_t idx = 0; idx < total_n; ++idx) {
      bool complete = true;
      for (std::size_t i = 0; i < k; ++i) {
        ids[i] = factors[i]->identity(t[i]);
        complete = complete && ids[i] >= 0;
      }
      identities[idx] = complete ? p.morphism_index(ids) : -1;
      for (std::size_t i = k; i-- > 0;) {
        if (++t[i] < static_cast<ObjId>(factors[i]->object_count())) break;
        t[i] = 0;
      }
    }
  }

  // Componentwise table: one entry per tuple of composable factor pairs.
  std::vector<FinCategory::Entry> entries;
  {
    std::vector<std::vector<FinCategory::Entry>> factor_entries(k);
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
      factor_entries[i] = factors[i]->composition_entries();
      count *= factor_entries[i].size();
      if (factor_entries[i].empty()) count = 0;
    }
    entries.reserve(count);
    if (count > 0) {
      std::vector<std::size_t> t(k, 0);
      std::vector<MorId> gs(k), fs(k), gfs(k);
      for (std::size_t idx = 0; idx < count; ++idx) {
        for (std::size_t i = 0; i < k; ++i) {
          const auto& [g, f, gf] = factor_entries[i][t[i]];
          gs[i] = g;
          fs[i] = f;
          gfs[i] = gf;
        }
        entries.emplace_back(p.morphism_index(gs), p.morphism_index(fs),
                             p.morphism_index(gfs));
        for (std::size_t i = k; i-- > 0;) {
          if (++t[i] < factor_entries[i].size()) break;
          t[i] = 0;
        }
      }
    }
  }

  p.cat = std::make_shared<FinCategory>(
      FinCategory::from_parts(tuple_name(names), std::move(objects), std::move(morphisms),
                              std::move(identities), std::move(entries)));

  for (std::size_t i = 0; i < k; ++i) {
    Functor proj;
    proj.source = p.cat;
    proj.target = factors[i];
    proj.object_map.resize(total_n);
    for (ObjId x = 0; x < static_cast<ObjId>(total_n); ++x)
      proj.object_map[x] = p.object_tuple(x)[i];
    proj.morphism_map.resize(total_m);
    for (MorId f = 0; f < static_cast<MorId>(total_m); ++f)
      proj.morphism_map[f] = p.morphism_tuple(f)[i];
    p.projections.push_back(std::move(proj));
  }
  return p;
}

Functor tuple_functor(const Product& p, std::span<const Functor> components) {
  if (components.size() != p.factors.size())
    throw IllFormedFunctor("tuple_functor: component count differs from factor count");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(*components[i].source == *components[0].source))
      throw IllFormedFunctor("tuple_functor: components have different sources");
    if (!(*components[i].target == *p.factors[i]))
      throw IllFormedFunctor("tuple_functor: component target is not the factor");
  }
  Functor F;
  F.source = components[0].source;
  F.target = p.cat;
  const std::size_t k = components.size();
  std::vector<ObjId> ot(k);
  for (ObjId x = 0; x < static_cast<ObjId>(F.source->object_count()); ++x) {
    for (std::size_t i = 0; i < k; ++i) ot[i] = components[i].object_map[x];
    F.object_map.push_back(p.object_index(ot));
  }
  std::vector<MorId> mt(k);
  for (MorId f = 0; f < static_cast<MorId>(F.source->morphism_count()); ++f) {
    for (std::size_t i = 0; i < k; ++i) mt[i] = components[i].morphism_map[f];
    F.morphism_map.push_back(p.morphism_index(mt));
  }
  return F;
}

// ---------------------------------------------------------------------------
// object-set helpers

ObjSet empty_obj_set(const FinCategory& cat) { return ObjSet(cat.object_count(), false); }

ObjSet full_obj_set(const FinCategory& cat) { return ObjSet(cat.object_count(), true); }

ObjSet obj_set(const FinCategory& cat, std::span<const ObjId> ids) {
  ObjSet s(cat.object_count(), false);
  for (ObjId x : ids) {
    if (x < 0 || static_cast<std::size_t>(x) >= cat.object_count())
      throw UnknownId("object #" + std::to_string(x));
    s[x] = true;
  }
  return s;
}

ObjSet obj_set_by_name(const FinCategory& cat, std::span<const std::string> names) {
  ObjSet s(cat.object_count(), false);
  for (const auto& n : names) s[cat.object_id(n)] = true;
  return s;
}

std::vector<ObjId> obj_set_members(const ObjSet& s) {
  std::vector<ObjId> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<ObjId>(i));
  return out;
}

}  // namespace pretor
