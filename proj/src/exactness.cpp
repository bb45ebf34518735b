#include "pretor/exactness.hpp"

namespace pretor {

namespace {

void require_composable(const FinCategory& cat, MorId first, MorId second) {
  if (cat.dst(first) != cat.src(second))
    throw NotComposable("morphisms " + cat.morphism_name(second) + " . " +
                        cat.morphism_name(first) + " are not composable");
}

}  // namespace

bool is_kernel(const FinCategory& cat, const Ideal& ideal, MorId k, MorId f) {
  require_composable(cat, k, f);
  auto fk = cat.compose(f, k);
  if (!fk || !ideal.contains(*fk)) return false;
  for (MorId u : cat.into(cat.src(f))) {
    auto fu = cat.compose(f, u);
    if (!fu || !ideal.contains(*fu)) continue;
    int factorizations = 0;
    for (MorId up : cat.hom(cat.src(u), cat.src(k))) {
      if (cat.compose(k, up) == std::optional<MorId>(u)) {
        if (++factorizations > 1) break;
      }
    }
    if (factorizations != 1) return false;
  }
  return true;
}

bool is_cokernel(const FinCategory& cat, const Ideal& ideal, MorId c, MorId f) {
  require_composable(cat, f, c);
  auto cf = cat.compose(c, f);
  if (!cf || !ideal.contains(*cf)) return false;
  for (MorId v : cat.out_of(cat.dst(f))) {
    auto vf = cat.compose(v, f);
    if (!vf || !ideal.contains(*vf)) continue;
    int factorizations = 0;
    for (MorId vp : cat.hom(cat.dst(c), cat.dst(v))) {
      if (cat.compose(vp, c) == std::optional<MorId>(v)) {
        if (++factorizations > 1) break;
      }
    }
    if (factorizations != 1) return false;
  }
  return true;
}

bool is_ses_def(const FinCategory& cat, const Ideal& ideal, const SesCandidate& s) {
  require_composable(cat, s.m, s.e);
  return is_kernel(cat, ideal, s.m, s.e) && is_cokernel(cat, ideal, s.e, s.m);
}

bool is_ses_E(const FinCategory& cat, const Ideal& ideal, const SesCandidate& s) {
  require_composable(cat, s.m, s.e);
  if (!is_mono(cat, s.m)) return false;                       // E1
  if (!is_epi(cat, s.e)) return false;                        // E2
  auto em = cat.compose(s.e, s.m);
  if (!em || !ideal.contains(*em)) return false;              // E3
  for (MorId u : cat.into(cat.dst(s.m))) {                    // E4
    auto eu = cat.compose(s.e, u);
    if (!eu || !ideal.contains(*eu)) continue;
    bool factors = false;
    for (MorId up : cat.hom(cat.src(u), cat.src(s.m))) {
      if (cat.compose(s.m, up) == std::optional<MorId>(u)) {
        factors = true;
        break;
      }
    }
    if (!factors) return false;
  }
  for (MorId v : cat.out_of(cat.dst(s.m))) {                  // E5
    auto vm = cat.compose(v, s.m);
    if (!vm || !ideal.contains(*vm)) continue;
    bool factors = false;
    for (MorId vp : cat.hom(cat.dst(s.e), cat.dst(v))) {
      if (cat.compose(vp, s.e) == std::optional<MorId>(v)) {
        factors = true;
        break;
      }
    }
    if (!factors) return false;
  }
  return true;
}

std::vector<SesCandidate> find_ses(const FinCategory& cat, const Ideal& ideal, ObjId x,
                                   const ObjSet* source_class, const ObjSet* target_class) {
  guard_size(cat.morphism_count(), "find_ses");
  if (x < 0 || static_cast<std::size_t>(x) >= cat.object_count())
    throw UnknownId("object #" + std::to_string(x));
  std::vector<SesCandidate> out;
  for (MorId m : cat.into(x)) {
    if (source_class && !(*source_class)[cat.src(m)]) continue;
    for (MorId e : cat.out_of(x)) {
      if (target_class && !(*target_class)[cat.dst(e)]) continue;
      SesCandidate s{m, e};
      if (is_ses_def(cat, ideal, s)) out.push_back(s);
    }
  }
  return out;
}

}  // namespace pretor
