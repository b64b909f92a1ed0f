#pragma once

#include <json.hpp>

#include "weylpol/bruhat.hpp"
#include "weylpol/pbw.hpp"
#include "weylpol/shift.hpp"
#include "weylpol/symtensor.hpp"
#include "weylpol/verma.hpp"
#include "weylpol/weyl_ops.hpp"

namespace weylpol {

// All coefficients are serialized as decimal "p/q" strings.

nlohmann::json to_json(const ShiftMatrix& s);
ShiftMatrix shift_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DegreeVector& d);
DegreeVector degrees_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymTensor& t);
SymTensor tensor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolarCombo& c);
PolarCombo combo_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ElementaryWord& w);
ElementaryWord word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignatureTable& t);
SignatureTable signature_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VermaTriple& tau);
VermaTriple triple_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UElement& u);
UElement uelement_from_json(const nlohmann::json& j);

}  // namespace weylpol
