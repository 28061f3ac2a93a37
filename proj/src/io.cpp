#include "matchroid/io.hpp"

#include <string>

namespace matchroid {

using nlohmann::json;

namespace {

std::int64_t parse_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    raise(ErrorKind::Parse, std::string(what) + ": expected a 64-bit integer");
  }
  return j.get<std::int64_t>();
}

std::int64_t field_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    raise(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  }
  return parse_int(j.at(key), key);
}

GroupCtx field_ctx(const json& j) {
  if (!j.is_object() || !j.contains("ctx")) raise(ErrorKind::Parse, "missing field \"ctx\"");
  return ctx_from_json(j.at("ctx"));
}

std::vector<GroupElement> elements_from_json(const GroupCtx& ctx, const json& j,
                                             const char* what) {
  if (!j.is_array()) raise(ErrorKind::Parse, std::string(what) + ": expected an array");
  std::vector<GroupElement> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(element_from_json(ctx, e));
  return out;
}

}  // namespace

json ctx_to_json(const GroupCtx& ctx) {
  if (ctx.torsion_free()) {
    return json{{"kind", "free"}, {"rank", ctx.rank()}};
  }
  return json{{"kind", "finite"}, {"moduli", ctx.moduli()}};
}

GroupCtx ctx_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    raise(ErrorKind::Parse, "ctx: expected {\"kind\": ...}");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "free") {
    std::int64_t rank = field_int(j, "rank");
    if (rank < 1) raise(ErrorKind::Parse, "ctx: rank must be >= 1");
    return GroupCtx::free_abelian(static_cast<std::size_t>(rank));
  }
  if (kind == "finite") {
    if (!j.contains("moduli") || !j.at("moduli").is_array()) {
      raise(ErrorKind::Parse, "ctx: finite kind needs \"moduli\"");
    }
    std::vector<std::int64_t> moduli;
    for (const auto& m : j.at("moduli")) moduli.push_back(parse_int(m, "moduli"));
    return GroupCtx::finite_product(std::move(moduli));
  }
  raise(ErrorKind::Parse, "ctx: kind must be \"free\" or \"finite\"");
}

json element_to_json(const GroupElement& x) { return json(x.coords); }

GroupElement element_from_json(const GroupCtx& ctx, const json& j) {
  if (j.is_number_integer()) {
    return element(ctx, {j.get<std::int64_t>()});
  }
  if (!j.is_array()) raise(ErrorKind::Parse, "element: expected an integer array");
  std::vector<std::int64_t> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(parse_int(c, "element"));
  return element(ctx, std::move(coords));
}

json matroid_to_json(const Matroid& m) {
  json ground = json::array();
  for (const auto& x : m.ground()) ground.push_back(element_to_json(x));
  json bases = json::array();
  for (BasisMask b : m.bases()) bases.push_back(mask_to_indices(b));
  return json{{"ctx", ctx_to_json(m.ctx())},
              {"ground", std::move(ground)},
              {"bases", std::move(bases)},
              {"rank", m.rank()}};
}

namespace {

Matroid document_from_json(const json& j) {
  GroupCtx ctx = field_ctx(j);
  if (!j.contains("ground")) raise(ErrorKind::Parse, "matroid: missing \"ground\"");
  std::vector<GroupElement> ground = elements_from_json(ctx, j.at("ground"), "ground");
  if (!j.contains("bases") || !j.at("bases").is_array()) {
    raise(ErrorKind::Parse, "matroid: missing \"bases\"");
  }
  std::vector<std::vector<std::size_t>> bases;
  for (const auto& b : j.at("bases")) {
    if (!b.is_array()) raise(ErrorKind::Parse, "matroid: each basis must be an index array");
    std::vector<std::size_t> idx;
    for (const auto& i : b) {
      std::int64_t v = parse_int(i, "basis index");
      if (v < 0) raise(ErrorKind::Parse, "matroid: negative basis index");
      idx.push_back(static_cast<std::size_t>(v));
    }
    bases.push_back(std::move(idx));
  }
  Matroid m = make_from_bases(ctx, std::move(ground), bases);
  if (j.contains("rank") && parse_int(j.at("rank"), "rank") != m.rank()) {
    raise(ErrorKind::Parse, "matroid: declared rank disagrees with the basis system");
  }
  return m;
}

}  // namespace

Matroid matroid_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorKind::Parse, "matroid: expected an object");
  if (j.contains("uniform")) {
    const json& u = j.at("uniform");
    GroupCtx ctx = field_ctx(u);
    if (!u.contains("ground")) raise(ErrorKind::Parse, "uniform: missing \"ground\"");
    return make_uniform(ctx, elements_from_json(ctx, u.at("ground"), "ground"),
                        field_int(u, "n"));
  }
  if (j.contains("panhandle")) {
    const json& p = j.at("panhandle");
    GroupCtx ctx = field_ctx(p);
    if (!p.contains("a")) raise(ErrorKind::Parse, "panhandle: missing \"a\"");
    PanhandleParams params{field_int(p, "n"), field_int(p, "s"), field_int(p, "m"),
                           element_from_json(ctx, p.at("a"))};
    return make_panhandle(ctx, params);
  }
  if (j.contains("schubert")) {
    const json& s = j.at("schubert");
    GroupCtx ctx = field_ctx(s);
    if (!s.contains("a")) raise(ErrorKind::Parse, "schubert: missing \"a\"");
    if (!s.contains("S")) raise(ErrorKind::Parse, "schubert: missing \"S\"");
    SchubertParams params;
    params.m = field_int(s, "m");
    params.generator = element_from_json(ctx, s.at("a"));
    for (const auto& x : elements_from_json(ctx, s.at("S"), "S")) params.bound.insert(x);
    return make_schubert(ctx, params);
  }
  if (j.contains("from_bases")) return document_from_json(j.at("from_bases"));
  if (j.contains("dual")) return dual(matroid_from_json(j.at("dual")));
  if (j.contains("direct_sum")) {
    const json& parts = j.at("direct_sum");
    if (!parts.is_array() || parts.size() != 2) {
      raise(ErrorKind::Parse, "direct_sum: expected an array of two matroids");
    }
    return direct_sum(matroid_from_json(parts.at(0)), matroid_from_json(parts.at(1)));
  }
  return document_from_json(j);
}

json report_to_json(const MatchReport& report) {
  json witnesses = json::array();
  for (const auto& outcome : report.per_basis) {
    if (!outcome.witness) continue;
    json pairs = json::array();
    for (auto [i, k] : outcome.witness->pairs) pairs.push_back(json::array({i, k}));
    witnesses.push_back(json{{"source", mask_to_indices(outcome.witness->source_basis)},
                             {"target", mask_to_indices(outcome.witness->target_basis)},
                             {"pairs", std::move(pairs)}});
  }
  json counterexample;
  if (report.counterexample) counterexample = mask_to_indices(*report.counterexample);
  return json{{"matched", report.matched},
              {"counterexample", std::move(counterexample)},
              {"witnesses", std::move(witnesses)}};
}

json result_to_json(const CampaignResult& result) {
  return json{{"campaign", result.campaign}, {"instances", result.instances},
              {"failures", result.failures}, {"notes", result.notes},
              {"instance_digest", result.instance_digest}, {"elapsed_ms", result.elapsed_ms},
              {"passed", result.passed()}};
}

}  // namespace matchroid
