#pragma once

#include <json.hpp>

#include "betaring/adams.hpp"
#include "betaring/bring.hpp"
#include "betaring/burnside.hpp"
#include "betaring/report.hpp"
#include "betaring/symfunc.hpp"
#include "betaring/witt.hpp"

namespace betaring::json_io {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
json from_int(const Int& v);
Int to_int(const json& j);
/// Integral rationals as integers, otherwise "p/q".
json from_rat(const Rat& v);
Rat to_rat(const json& j);

/// {"S3:e": 2, ...}, keys are class labels.
json element(const BRing& ring, const BElement& a);
BElement element(const BRing& ring, const json& j);
json element2(const BRing& ring, const B2Element& a);

/// {n, entries: [{K_label, beta_coeffs}]}
json adams_table(const BRing& ring, const AdamsTable& t);
AdamsTable adams_table(const BRing& ring, const json& j);

/// [{identity, status, witness}]
json report(const Report& r);
Report report(const json& j);

/// {precision, coeffs}
json witt(const WittVector& w);
WittVector witt(const json& j);

/// {basis, terms: [{partition, coeff}]}
json symfunc(const SymFunc& f);
SymFunc symfunc(const json& j);
json symtensor(const SymTensor& t);

/// {group, coords: {label: n}}
json burnside(const BurnsideElement& x);

/// {ambient, classes: [...]} as stored in the catalog cache.
json catalog(const Catalog& c);

/// {error: {kind, message}}
json error(const std::string& kind, const std::string& message);

}  // namespace betaring::json_io
