#pragma once

#include <vector>

#include "pretor/fincat.hpp"
#include "pretor/ideals.hpp"

namespace pretor {

/// A composable pair m, e sharing a middle object: dst(m) == src(e).
struct SesCandidate {
  MorId m = -1;
  MorId e = -1;
  bool operator==(const SesCandidate&) const = default;
};

/// k is a kernel of f relative to the ideal: f.k is null and every u into
/// src(f) with f.u null factors through k by a unique u'.
bool is_kernel(const FinCategory& cat, const Ideal& ideal, MorId k, MorId f);

/// Exact dual: c is a cokernel of f.
bool is_cokernel(const FinCategory& cat, const Ideal& ideal, MorId c, MorId f);

/// Definitional form: m is a kernel of e and e is a cokernel of m.
bool is_ses_def(const FinCategory& cat, const Ideal& ideal, const SesCandidate& s);

/// Independent characterization: (E1) m mono, (E2) e epi, (E3) e.m null,
/// (E4) every u with e.u null factors through m (not necessarily uniquely),
/// (E5) the dual of (E4). Agreement with is_ses_def is a standing property.
bool is_ses_E(const FinCategory& cat, const Ideal& ideal, const SesCandidate& s);

/// All short exact sequences through x, optionally restricted to a source
/// class for src(m) and a target class for dst(e); ordered by (m, e).
std::vector<SesCandidate> find_ses(const FinCategory& cat, const Ideal& ideal, ObjId x,
                                   const ObjSet* source_class = nullptr,
                                   const ObjSet* target_class = nullptr);

}  // namespace pretor
