#pragma once

#include <string>

#include <json.hpp>

#include "csurg/front.hpp"
#include "csurg/invariants.hpp"
#include "csurg/kirby.hpp"
#include "csurg/pd.hpp"
#include "csurg/poly.hpp"
#include "csurg/slopes.hpp"
#include "csurg/surgery.hpp"

namespace csurg::io {

using nlohmann::json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

// fronts: {"events": [["lcusp", i] | ["rcusp", i] | ["cross", i], ...],
//          "orientation": [+-1, ...]}
front::LegendrianFront front_from_json(const json& j);
json front_to_json(const front::LegendrianFront& f);

// PD codes: {"crossings": [[a,b,c,d], ...], "unknots": k}
pd::PDCode pd_from_json(const json& j);
json pd_to_json(const pd::PDCode& p);

// diagrams: {"components": [{"front": ... | "abstract": {"tag": ...},
//            "tb": int, "rot": int, "coeff": "p/q"}, ...], "linking": [[...]]}
surgery::SurgeryDiagram diagram_from_json(const json& j);
json diagram_to_json(const surgery::SurgeryDiagram& d);

// move scripts: {"moves": [["cancel", i, j], ["slide", i, j, "+"],
//                          ["rolfsen", i, ["+","-"]], ["introduce", {...}]]}
std::vector<kirby::Move> moves_from_json(const json& j);

// polynomials: sorted term lists [{"l": e, "m": e, "c": "coeff"}, ...] for
// two variables, [{"z"/"t2": e, "c": ...}] for one
json poly_to_json(const poly::LaurentPoly& p, const std::vector<std::string>& names);

// invariant report: {"h1": [...], "euler": [[...]...], "d3": ["p/q"|"nontorsion"...]}
json report_to_json(const surgery::SurgeryDiagram& d);

json obstruction_to_json(const slopes::ObstructionReport& r);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace csurg::io
