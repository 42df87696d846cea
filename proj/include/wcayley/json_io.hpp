#ifndef WCAYLEY_JSON_IO_HPP
#define WCAYLEY_JSON_IO_HPP

#include <json.hpp>

#include "wcayley/acylindricity.hpp"
#include "wcayley/geometry.hpp"
#include "wcayley/ydist.hpp"

// JSON views of the report types; words are always serialized in the
// a..C text format.
namespace wcayley {

inline void to_json(nlohmann::json& j, const Rational& r) {
  j = {{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

inline void to_json(nlohmann::json& j, const WFactorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& z : f.factors) factors.push_back(z.str());
  j = {{"count", f.count()},
       {"method", f.method == FactorizationMethod::dp ? "dp" : "greedy"},
       {"factors", factors}};
}

inline void to_json(nlohmann::json& j, const TranslationLengthEstimate& est) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : est.samples)
    samples.push_back({{"n", s.n}, {"y_len", s.y_len}});
  j = {{"g", est.g.str()},
       {"samples", samples},
       {"upper", est.upper},
       {"lower", est.lower},
       {"lower_bound_applies", est.lower_bound_applies}};
}

inline void to_json(nlohmann::json& j, const GeometryReport& r) {
  j = {{"delta_estimate", r.delta_estimate},
       {"c_estimate", r.c_estimate},
       {"sample_count", r.sample_count},
       {"max_defect_witness", r.max_defect_witness},
       {"seed", r.seed},
       {"band_low_max", r.band_low_max},
       {"band_high_max", r.band_high_max},
       {"rows", r.rows}};
}

inline void to_json(nlohmann::json& j, const AcylParams& p) {
  j = {{"radius", p.radius},
       {"c_hat", p.c_hat},
       {"L", p.separation},
       {"M", p.max_members},
       {"exponent_cap", p.exponent_cap}};
}

inline void to_json(nlohmann::json& j, const CensusMember& m) {
  j = {{"g", m.g.str()}, {"disp_x", m.disp_x}, {"disp_y", m.disp_y}};
}

inline void to_json(nlohmann::json& j, const CensusReport& r) {
  j = {{"x", r.x.str()},
       {"y", r.y.str()},
       {"params", r.params},
       {"cap", r.cap},
       {"y_dist_xy", r.y_dist_xy},
       {"separation_ok", r.separation_ok},
       {"complete", r.complete},
       {"identity_member", true},
       {"nontrivial_member_count", r.members.size()},
       {"members", r.members}};
}

}  // namespace wcayley

#endif
