#pragma once
// JSON schemas. Vectors are always written in the caller's coordinate
// order, i.e. the order of "lambda" as given.
//
//   group:          {"p": 2, "lambda": [1, 2]}
//   element:        [1, 2]
//   subgroup in:    {"generators": [[1, 2]]}   ("howell" rows also accepted)
//   subgroup out:   {"howell": [[...]], "order_exp": e}
//   instance:       {"p": 2, "lambda": [1, 2], "subgroup": {...}}
//   decomposition:  instance fields plus {"mode": "s1", "pickets": [{"n","l","mult"}],
//                    "certificate": {"C": [{"n": 1, "gen": [...]}], "Cprime": [...]}}
//   operator:       {"p": 2, "T": [[...]], "U": [[...]]}

#include "picketlab/certify.hpp"
#include "picketlab/decomp_s1.hpp"
#include "picketlab/operator_view.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace picketlab {

using Json = nlohmann::ordered_json;

/// Malformed input; the message carries line and column.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parses one JSON document. `line_offset` shifts reported line numbers.
Json parse_json(const std::string& text, int line_offset = 0);
/// A whole-document parse if possible, otherwise one document per
/// nonempty line.
std::vector<Json> parse_documents(const std::string& text);

Json to_json(const GroupType& g);
GroupTypePtr group_from_json(const Json& j);

Json to_json(const Element& x);
Element element_from_json(const GroupTypePtr& g, const Json& j);

Json to_json(const SubgroupPresentation& s);
SubgroupPresentation subgroup_from_json(const GroupTypePtr& g, const Json& j);

Json instance_to_json(const SubgroupPresentation& u);
SubgroupPresentation instance_from_json(const Json& j);

Json to_json(const Multiplicities& m);
Multiplicities multiplicities_from_json(const Json& j);

Json to_json(const SubgroupPresentation& u, const PicketDecomposition& d);
PicketDecomposition decomposition_from_json(const GroupTypePtr& g, const Json& j);

Json to_json(const Verdict& v);
Json to_json(const BruteInvariants& b);
Json to_json(const RemarkReport& r);

InstanceSpec instance_spec_from_json(const Json& j, std::uint64_t default_seed);

OperatorPair operator_from_json(const Json& j);
Json to_json(const OperatorPair& op);
Json to_json(const JordanCertificate& c);

}  // namespace picketlab
