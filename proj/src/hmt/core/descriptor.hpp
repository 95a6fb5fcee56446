#pragma once
// Transferable semantic element description: role, salient label, coarse
// position, structural context. Never a raw identifier — construction
// strips any token that string-equals a source uid.

#include <set>
#include <string>
#include <vector>

#include "hmt/core/types.hpp"

namespace hmt {

struct ElementDescriptor {
  Role role = Role::Generic;
  std::string label;
  PositionHint position_hint = PositionHint::Unknown;
  std::vector<std::string> context;

  // Canonical one-line render used for embeddings and history lines.
  std::string render() const;
};

// Builds a descriptor from a target element. `forbidden_uids` is the set of
// raw uids of the source trajectory; any label/context token equal to one of
// them is removed so identifiers cannot leak into memory.
ElementDescriptor make_descriptor(const Element& element, PositionHint position,
                                  const std::set<std::string>& forbidden_uids,
                                  std::size_t max_context = 3);

// Coarse location of the element center relative to the page bounds (the
// union of all element boxes). Vertical bands win over horizontal ones.
PositionHint position_hint_of(const Element& element, const Observation& obs);

}  // namespace hmt
