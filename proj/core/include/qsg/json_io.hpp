#pragma once

#include <json.hpp>

#include "qsg/coalgebra.hpp"
#include "qsg/element.hpp"
#include "qsg/report.hpp"

namespace qsg {

/// Ordered JSON keeps object keys in insertion order, so identical values
/// always serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json elem_to_json(const Semigroup& s, const GroupElem& g);
GroupElem elem_from_json(const Semigroup& s, const Json& j);

Json instance_to_json(const Semigroup& s);
Semigroup instance_from_json(const Json& j);

Json ideal_to_json(const Semigroup& s, const GIdeal& x);
GIdeal ideal_from_json(const Semigroup& s, const Json& j);

Json word_to_json(const Semigroup& s, const Word& w);
Word word_from_json(const Semigroup& s, const Json& j);

Json coeff_to_json(const QQi& c);
QQi coeff_from_json(const Json& j);

Json element_to_json(const Semigroup& s, const Element& x);
Element element_from_json(const Semigroup& s, const Json& j);

Json tensor_to_json(const Semigroup& s, const TensorElement& t);
TensorElement tensor_from_json(const Semigroup& s, const Json& j);

Json group_algebra_to_json(const Semigroup& s, const GroupAlgebraElement& u);
GroupAlgebraElement group_algebra_from_json(const Semigroup& s, const Json& j);

Json report_to_json(const Report& r);

}  // namespace qsg
