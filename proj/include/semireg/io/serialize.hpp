#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "semireg/lazard/lazard.hpp"
#include "semireg/monomial/complex.hpp"
#include "semireg/plane/plane_cones.hpp"
#include "semireg/regularity/regularity.hpp"

namespace semireg {

using Json = nlohmann::ordered_json;

// Strings inside the documents use the input grammars, so they re-parse.
Json to_json(const Point& p);
Json to_json(const ZMatrix& m);
Json to_json(const Verdict& v);
Json to_json(const BettiTable& b);
Json to_json(const RegularityReport& r, const MonomialSequence& s, const std::vector<std::string>& vars);
Json to_json(const ModelType& m);
Json to_json(const NormalizeResult& n);
Json to_json(const RejectionCertificate& c);
Json to_json(const IndependentFamily& f);
Json to_json(const FamilyCheck& c);
Json to_json(const DirectSystem& d);
Json to_json(const SupportPattern& s);

// One "key: value" line per top-level field.
std::string render_text(const Json& doc);

}  // namespace semireg
