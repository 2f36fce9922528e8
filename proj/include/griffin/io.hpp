#pragma once

#include <json.hpp>

#include "griffin/container.hpp"
#include "griffin/exponent.hpp"
#include "griffin/ideal.hpp"
#include "griffin/polynomial.hpp"

namespace griffin {

using Json = nlohmann::ordered_json;

// [{"coeff":"p/q","exp":[a1,...,an]},...], terms grevlex-descending.
Json polynomial_to_json(const Polynomial& p);
// The ambient is needed for the zero polynomial and checked otherwise.
Polynomial polynomial_from_json(const Json& j, int ambient);

Json composition_to_json(const WeakComposition& alpha);
WeakComposition composition_from_json(const Json& j);

// {"shape":[lambda'...],"boxes":[[row,col,value],...],"floats":[[value,col],...]}
// Empty boxes are omitted.
Json diagram_to_json(const ContainerDiagram& sigma);
ContainerDiagram diagram_from_json(const Json& j);

// {"d":2,"set":[1,3],"cofactor":[...]}
Json certificate_to_json(const TrackedPolynomial& t);

}  // namespace griffin
