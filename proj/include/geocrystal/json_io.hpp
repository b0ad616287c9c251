#pragma once

#include <json.hpp>

#include "geocrystal/braid.hpp"
#include "geocrystal/cartan.hpp"
#include "geocrystal/geomcrystal.hpp"
#include "geocrystal/kashiwara.hpp"
#include "geocrystal/sln_oracle.hpp"

namespace geocrystal {

using Json = nlohmann::ordered_json;

// Every reader throws Error{Parse} on malformed input and passes through
// the validation errors of the constructed value.

Json to_json(const CartanMatrix& a);
CartanPtr cartan_from_json(const Json& j);

/// Letters are written as their labels; numeric labels become integers.
Json word_to_json(const CartanMatrix& a, const Word& w);
Word word_from_json(const CartanMatrix& a, const Json& j);
Index index_from_json(const CartanMatrix& a, const Json& j);
Json index_to_json(const CartanMatrix& a, Index i);

/// {"cartan": ..., "word": [...], "coords": ["p/q", ...]}
Json to_json(const GeometricPoint<PosRat>& p);
/// {"cartan": ..., "word": [...], "coords": [int, ...]}
Json to_json(const GeometricPoint<TropInt>& p);
/// `fallback` supplies the Cartan datum when the document has none.
GeometricPoint<PosRat> rat_point_from_json(const Json& j, CartanPtr fallback = nullptr);
GeometricPoint<TropInt> trop_point_from_json(const Json& j, CartanPtr fallback = nullptr);

/// {"cartan": ..., "word": [...], "values": [int, ...]}
Json to_json(const TensorCrystalElement& b);
TensorCrystalElement element_from_json(const Json& j, CartanPtr fallback = nullptr);

/// {"class": "G2", "i": 1, "j": 2, "pos": 0}; pos counts from 0.
Json to_json(const CartanMatrix& a, const BraidMoveSpec& m);
BraidMoveSpec move_from_json(const CartanMatrix& a, const Json& j);

Json to_json(const ExactMatrix& m);

PosRat posrat_from_json(const Json& j);
TropInt tropint_from_json(const Json& j);

Json to_json(const Error& e);

}  // namespace geocrystal
