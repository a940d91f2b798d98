#pragma once

#include "quivalg/birs.hpp"
#include "quivalg/keller.hpp"
#include "quivalg/module.hpp"

#include <json.hpp>

#include <string>

namespace quivalg {

using Json = nlohmann::json;

// All parsers throw SchemaViolation on malformed input.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

struct ParsedQuiver {
    Quiver quiver;
    std::optional<DegreeMap> degrees;  // present iff every arrow has "deg"
};
Json quiver_to_json(const Quiver& q, const DegreeMap* degrees = nullptr);
ParsedQuiver quiver_from_json(const Json& j);

Json frozen_to_json(const FrozenData& f);
VertexSet frozen_from_json(const Json& j);

Json element_to_json(const PathElement& x);
PathElement element_from_json(const Quiver& q, const Json& j);

Json potential_to_json(const Potential& w);
Potential potential_from_json(const Quiver& q, const Json& j);

Json qp_to_json(const FrozenQP& qp);
FrozenQP qp_from_json(const Json& j);

Json presentation_to_json(const AlgebraPresentation& p);
AlgebraPresentation presentation_from_json(const Json& j);

struct WordInput {
    Quiver graph;
    Word letters;
};
Json word_to_json(const WordInput& w);
WordInput word_from_json(const Json& j);
Word parse_word_list(const std::string& text);  // "1,2,3"

Json birs_to_json(const BirsQP& b);

Json module_to_json(const FDModule& m);
FDModule module_from_json(const Quiver& q, const Json& j);

Json hypotheses_to_json(const HypothesisReport& h);
Json keller_report_to_json(const KellerReport& r);
Json algebra_to_json(const FDAlgebra& a);

}  // namespace quivalg
