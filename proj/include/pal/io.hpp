#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pal/lattice.hpp"
#include "pal/poset.hpp"
#include "pal/stone.hpp"
#include "pal/wqo.hpp"

namespace pal::io {

using Json = nlohmann::json;

/// {"name": str, "elements": [str], "le": [[str, str]]}. Structural problems
/// throw Error{Parse}; order problems keep their own kinds (Cycle, ...).
PosetPtr poset_from_json(const Json& j);
PosetPtr load_poset(const std::string& path);
/// `le` lists the covering pairs only.
Json poset_to_json(const Poset& p);

/// Hasse diagram in DOT, edges from lower to upper element.
std::string hasse_dot(const Poset& p);

/// Sorted list of final segments, each a sorted list of names.
Json clopen_to_json(const StoneSpace& space, const Clopen& c);
Json segment_to_json(const Poset& p, const ElemSet& s);
/// Terms as arrays of element names.
Json lattice_to_json(const Poset& p, const LatticeElem& a);

/// {"k": 2, "N": 12, "labels": {"0,1": "(0,1)", ...}} or, instead of
/// "labels", "generator": "rado-identity".
ArrayLabeling labeling_from_json(const Poset& target, const Json& j);

}  // namespace pal::io
