// Seeded random generators for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coevo/model.hpp"

namespace testgen {

using Rng = std::mt19937;

struct MetamodelOptions {
  int min_classes = 1;
  int max_classes = 8;
  int max_features = 3;  // per class and kind
  bool with_ids = true;
};

/// Valid metamodel: fresh unique names (classes C<n>, features f<n>),
/// supertypes drawn from earlier classes so inheritance is acyclic.
coevo::Metamodel random_metamodel(Rng& rng, const MetamodelOptions& opt = {});

/// Metamodel plus the editor models, all structurally valid; cross-model
/// names are drawn partly from the domain and partly made up, so links
/// may dangle.
coevo::EditorModelSet random_model_set(Rng& rng);

/// An evolved metamodel together with the diff entries the edits must
/// produce, one label per entry in the form "<EntryKind> <subject>", where
/// the subject is the class name or "Owner.feature" (new-side names for
/// additions, old-side names otherwise).
struct EditedPair {
  coevo::Metamodel old_mm;
  coevo::Metamodel new_mm;
  std::vector<std::string> labels;   // sorted
  std::vector<std::string> script;   // human-readable edit log
};

/// Applies up to `max_edits` random edits, touching every element at most
/// once. With ids, added elements get fresh ids too.
EditedPair random_edit(Rng& rng, const coevo::Metamodel& base, int max_edits);

/// Canonical JSON text written by hand from the model, independent of the
/// library serializer: schema key order, two-space indentation, LF.
std::string canonical_text(const coevo::Metamodel& mm);
std::string canonical_text(const coevo::GraphModel& g);
std::string canonical_text(const coevo::ToolingModel& t);
std::string canonical_text(const coevo::MappingModel& m);
std::string canonical_text(const coevo::EmfGenModel& e);

/// The same document with object keys shuffled and whitespace compacted.
std::string scrambled(const std::string& canonical, Rng& rng);

/// Shuffles class order and each class's feature order.
coevo::Metamodel permuted(const coevo::Metamodel& mm, Rng& rng);

}  // namespace testgen
