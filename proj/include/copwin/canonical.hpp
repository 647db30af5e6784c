#pragma once

#include <string>

#include "copwin/graph.hpp"

namespace copwin {

// Total-order key for the isomorphism class: one byte of n followed by the
// packed upper-triangle bits of the adjacency matrix under the canonical
// vertex order.  Two graphs get equal codes iff they are isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace copwin
