#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "pretor/fincat.hpp"
#include "pretor/ideals.hpp"
#include "pretor/pretorsion.hpp"

namespace pretor {

// Category documents are JSON with fixed keys:
//   {"name", "objects": [id], "morphisms": [{"id","src","dst"}],
//    "identities": {obj: mor}, "composition": [{"g","f","gf"}]}
// Composition must be explicitly total in the file; nothing is inferred.
// Canonical serialization sorts keys, lists objects and morphisms in id
// order and composition entries by (g, f); parse . serialize is the
// identity on canonical documents, byte for byte.

/// Syntax, structure and reference resolution only; the category may still
/// violate axioms. Throws MalformedDocument / UnresolvedId.
FinCategory parse_category_document(const std::string& text);

/// parse_category_document followed by validate; throws AxiomViolation
/// carrying the first violation.
FinCategory parse_category(const std::string& text);

std::string serialize_category(const FinCategory& cat);

// Theory documents:
//   {"category": <inline category or file name>, "torsion": [obj],
//    "torsionfree": [obj], "ideal": [mor]?, "flags": {...}?}
// An explicit ideal requires the "multi-pointed" flag and is validated for
// closure at parse time.
struct ParsedTheory {
  CatPtr cat;
  ObjSet torsion;
  ObjSet torsionfree;
  std::optional<Ideal> ideal;
  bool replete_closure = false;
  bool multi_pointed = false;

  PretorsionTheory as_pretorsion() const;          // throws Error when multi-pointed
  MultiPointedTheory as_multi_pointed_theory() const;  // throws Error without an ideal
};

ParsedTheory parse_theory(const std::string& text,
                          const std::filesystem::path& base_dir = {});

std::string serialize_theory(const PretorsionTheory& pt);
std::string serialize_theory(const MultiPointedTheory& mpt);

/// Ideal documents: {"ideal": [mor]}; closure validated against cat.
Ideal parse_ideal(const std::string& text, CatPtr cat);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pretor
