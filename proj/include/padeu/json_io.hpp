#pragma once
#include <json.hpp>

#include "padeu/pade.hpp"
#include "padeu/region.hpp"
#include "padeu/universal.hpp"

namespace padeu {

using ojson = nlohmann::ordered_json;

// Doubles round-trip as JSON numbers; non-finite values as "inf"/"-inf"/"nan".
ojson double_to_json(double v);
double double_from_json(const ojson& j);

ojson scalar_to_json(const ComplexScalar& v);
ComplexScalar scalar_from_json(const ojson& j, Mode m);

ojson cd_to_json(Cd z);
Cd cd_from_json(const ojson& j);

ojson poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const ojson& j);

ojson rational_to_json(const RationalFunction& r);
RationalFunction rational_from_json(const ojson& j);

ojson jet_to_json(const TaylorJet& jet);
TaylorJet jet_from_json(const ojson& j);

ojson grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const ojson& j);

ojson sample_to_json(const CompactSample& s);
CompactSample sample_from_json(const ojson& j);

ojson region_to_json(const Region& r);
Region region_from_json(const ojson& j);

ojson hankel_to_json(const HankelReport& h);
ojson pade_to_json(const PadeApproximant& p);
ojson prop22_to_json(const Prop22Report& r);

ojson tol_to_json(const Tolerances& t);
Tolerances tol_from_json(const ojson& j);

ojson fset_to_json(const IndexSetF& f);
IndexSetF fset_from_json(const ojson& j);

ojson problem_to_json(const ConstructionProblem& p);
ConstructionProblem problem_from_json(const ojson& j);

ojson cert_to_json(const Certificate& c);
Certificate cert_from_json(const ojson& j);

ojson witness_to_json(const UniversalWitness& w);
UniversalWitness witness_from_json(const ojson& j);

// Wraps nlohmann parsing so malformed input surfaces as parse_error.
ojson parse_json_text(const std::string& text);
ojson load_json_file(const std::string& path);

}  // namespace padeu
