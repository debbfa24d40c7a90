#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcqt/catalog.hpp"
#include "hopfcqt/comodule.hpp"
#include "hopfcqt/cqt.hpp"

// JSON (de)serialization. Group elements are written by name, scalars as
// strings in the Scalar text syntax. Malformed input raises SchemaError whose
// location names the offending field, e.g. "R.entries[2].c".
namespace hopfcqt {

using nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& where);

// {"id", "G", "F", "left": [[f per generator] per g], "right": [[g per generator] per g],
//  "cocycles": {"sigma": [{"g","f","f2","c"}], "tau": [{"g","g2","f","c"}], "sigma_default", "tau_default"}}
json context_to_json(const HopfContext& c);
ContextPtr context_from_json(const json& j, const std::string& where = "context");
bool same_context(const HopfContext& a, const HopfContext& b);

// {"entries": [{"g","f","h","f2","c"}], "window": {"maxlen": L}}; maxlen null for finite F
json rform_to_json(const RForm& R);
RForm rform_from_json(const ContextPtr& ctx, const json& j, const std::string& where = "R");

// {"base", "label", "dim", "coefficients": [{"g", "matrix": [[c]]}]}
json comodule_to_json(const Comodule& V);
Comodule comodule_from_json(const ContextPtr& ctx, const json& j, const std::string& where = "comodule");
bool same_comodule(const Comodule& a, const Comodule& b);

// {"terms": [{"g","f","c"}]}
json element_to_json(const HopfElement& x);
HopfElement element_from_json(const ContextPtr& ctx, const json& j, const std::string& where = "element");

// {"Q": group descriptor, "images": [q per generator of G], "characters": [{"label", "values": [c per Q element]}]}
json quotient_to_json(const QuotientData& q);
QuotientData quotient_from_json(const json& j, const std::string& where = "quotient");

// Input document for the command line tool:
// {"context", "R"?, "comodules"?: [...], "quotients"?: [...], "expected"?: [{"check","status","citation","failing"}]}
CatalogEntry entry_from_json(const json& doc);
json entry_to_json(const CatalogEntry& e, std::size_t maxlen);

json read_json_file(const std::string& path);  // ParseError / SchemaError
void write_json_file(const std::string& path, const json& j);

}  // namespace hopfcqt
