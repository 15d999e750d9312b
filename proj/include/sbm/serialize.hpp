#ifndef SBM_SERIALIZE_HPP
#define SBM_SERIALIZE_HPP

#include <json.hpp>

#include "sbm/bkl.hpp"
#include "sbm/conjugacy.hpp"
#include "sbm/garside.hpp"
#include "sbm/word.hpp"

namespace sbm {

// Insertion-ordered JSON keeps the documented key order stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const NormalForm& nf) {
  return Json{{"n", nf.base.ctx().n}, {"power", nf.power}, {"base", format(nf.base)}};
}

inline Json to_json(const GreedyForm& gf) {
  Json blocks = Json::array();
  for (const GreedyBlock& b : gf.blocks) {
    Json frags = Json::array();
    for (const PositiveWord& f : b.fragments) frags.push_back(format(f));
    blocks.push_back(Json{{"fragments", std::move(frags)}, {"xs", b.xs}});
  }
  return Json{{"n", gf.ctx.n}, {"power", gf.power}, {"blocks", std::move(blocks)}};
}

inline Json to_json(const SummitSet& ss) {
  Json members = Json::array();
  for (const NormalForm& nf : ss.members) members.push_back(to_json(nf));
  return Json{{"n", ss.ctx.n}, {"summit_power", ss.summit_power}, {"members", std::move(members)}};
}

inline Json to_json(const PresentationReport& r) {
  Json families = Json::array();
  for (const RelationFamilyReport& f : r.families)
    families.push_back(Json{{"name", f.name}, {"instances", f.instances}, {"failures", f.failures}});
  return Json{{"n", r.n}, {"families", std::move(families)}};
}

} // namespace sbm

#endif
