#include "semireg/io/serialize.hpp"

#include "semireg/io/parse.hpp"

namespace semireg {

Json to_json(const Point& p) {
  Json out = Json::array();
  for (auto x : p) out.push_back(x);
  return out;
}

Json to_json(const ZMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& z = m(r, c);
      if (z.fits_slong_p())
        row.push_back(z.get_si());
      else
        row.push_back(z.get_str());
    }
    out.push_back(row);
  }
  return out;
}

Json to_json(const Verdict& v) {
  Json out{{"value", v.value}, {"bounded", v.bounded}, {"applicable", v.applicable}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

Json to_json(const BettiTable& b) {
  Json out{{"betti", Json::array()}, {"pd", b.pd}};
  for (auto x : b.total) out["betti"].push_back(x);
  return out;
}

Json to_json(const RegularityReport& r, const MonomialSequence& s, const std::vector<std::string>& vars) {
  Json out{{"oracle_regular", r.oracle_regular},
           {"pd_criterion", r.pd_criterion},
           {"star_condition", r.star_condition},
           {"discrepancy", r.discrepancy}};
  if (r.witness)
    out["witness"] = Json{{"index", r.witness->index},
                          {"monomial", to_string(r.witness->monomial, vars)},
                          {"verified", verify_witness(s, *r.witness)}};
  else
    out["witness"] = nullptr;
  Json pds = Json::array();
  for (const auto& sp : r.subset_pds) pds.push_back(Json{{"indices", sp.indices}, {"pd", sp.pd}});
  out["subset_pds"] = pds;
  out["weak_proregularity"] = r.weak_proregularity;
  return out;
}

Json to_json(const ModelType& m) {
  return Json{{"tag", tag_name(m.tag)}, {"map", to_json(m.map)}, {"scale", m.scale}};
}

Json to_json(const NormalizeResult& n) {
  return Json{{"t", n.t}, {"phi", to_json(n.phi)}, {"checks", to_json(n.checks)}};
}

Json to_json(const RejectionCertificate& c) {
  const char* kind = c.kind == RejectionCertificate::Kind::Canonical ? "canonical"
                     : c.kind == RejectionCertificate::Kind::First   ? "first"
                                                                     : "second";
  return Json{{"h", to_json(c.h)},
              {"kind", kind},
              {"power_f", c.power_f},
              {"power_g", c.power_g},
              {"power_h", c.power_h}};
}

Json to_json(const SupportPattern& s) {
  return Json{{"threshold", s.threshold}, {"exceptions", s.exceptions}};
}

Json to_json(const IndependentFamily& f) {
  Json members = Json::array();
  for (const auto& m : f.members) members.push_back(to_string(m));
  return Json{{"members", members}, {"support", to_json(f.support)}};
}

Json to_json(const FamilyCheck& c) {
  return Json{{"independent", c.independent},
              {"supported", c.supported},
              {"almost_nonneg", c.almost_nonneg},
              {"nonneg", c.nonneg},
              {"recovered", c.recovered}};
}

Json to_json(const DirectSystem& d) {
  Json fams = Json::array(), trans = Json::array();
  for (const auto& f : d.families) fams.push_back(to_json(f)["members"]);
  for (const auto& t : d.transitions) trans.push_back(to_json(t));
  return Json{{"families", fams}, {"transitions", trans}};
}

std::string render_text(const Json& doc) {
  std::string out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const Json& v = it.value();
    std::string value;
    if (v.is_string())
      value = v.get<std::string>();
    else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) value += ", ";
        value += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
      }
    } else
      value = v.dump();
    out += it.key() + ": " + value + "\n";
  }
  return out;
}

}  // namespace semireg
