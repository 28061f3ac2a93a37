#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "matchroid/campaigns.hpp"
#include "matchroid/io.hpp"

namespace py = pybind11;
using namespace matchroid;

namespace {

using Coords = std::vector<std::int64_t>;

GroupElement as_element(const GroupCtx& ctx, const Coords& coords) {
  return element(ctx, coords);
}

ElementSet as_element_set(const GroupCtx& ctx, const std::vector<Coords>& members) {
  ElementSet out;
  for (const auto& c : members) out.insert(element(ctx, c));
  return out;
}

std::vector<Coords> coords_of(const std::vector<GroupElement>& elems) {
  std::vector<Coords> out;
  out.reserve(elems.size());
  for (const auto& x : elems) out.push_back(x.coords);
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<std::vector<std::size_t>> bases_as_lists(const Matroid& m) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(m.bases().size());
  for (BasisMask b : m.bases()) out.push_back(mask_to_indices(b));
  return out;
}

MatchOptions options_from(const std::string& engine) {
  MatchOptions options;
  if (engine == "brute") options.engine = MatchEngine::BruteForce;
  else if (engine == "intersection") options.engine = MatchEngine::Intersection;
  else if (engine != "auto") raise(ErrorKind::Domain, "engine must be auto|brute|intersection");
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matroids over abelian groups: construction and matchability checking";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "MatchroidError");

  py::class_<GroupCtx>(m, "GroupCtx")
      .def_static("free_abelian", &GroupCtx::free_abelian, py::arg("rank"))
      .def_static("finite_product", &GroupCtx::finite_product, py::arg("moduli"))
      .def_property_readonly("torsion_free", &GroupCtx::torsion_free)
      .def_property_readonly("arity", &GroupCtx::arity)
      .def("__eq__", [](const GroupCtx& a, const GroupCtx& b) { return a == b; })
      .def("__repr__", [](const GroupCtx& ctx) {
        if (ctx.torsion_free()) return std::string("GroupCtx(Z^") + std::to_string(ctx.rank()) + ")";
        std::string s = "GroupCtx(";
        for (std::size_t i = 0; i < ctx.moduli().size(); ++i) {
          if (i) s += " x ";
          s += "Z/" + std::to_string(ctx.moduli()[i]);
        }
        return s + ")";
      });

  m.def("add", [](const GroupCtx& ctx, const Coords& x, const Coords& y) {
    return add(ctx, as_element(ctx, x), as_element(ctx, y)).coords;
  });
  m.def("negate", [](const GroupCtx& ctx, const Coords& x) {
    return negate(ctx, as_element(ctx, x)).coords;
  });
  m.def("scalar_mul", [](const GroupCtx& ctx, std::int64_t k, const Coords& x) {
    return scalar_mul(ctx, k, as_element(ctx, x)).coords;
  });
  m.def("sumset", [](const GroupCtx& ctx, const std::vector<Coords>& a,
                     const std::vector<Coords>& b) {
    std::vector<Coords> out;
    for (const auto& x : sumset(ctx, as_element_set(ctx, a), as_element_set(ctx, b))) {
      out.push_back(x.coords);
    }
    return out;
  });
  m.def("min_subgroup_size", [](const GroupCtx& ctx) -> py::object {
    MinSubgroupSize p = min_subgroup_size(ctx);
    if (!p.is_finite()) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(p.value());
  });
  m.def("sufficiently_small", &sufficiently_small, py::arg("ctx"), py::arg("m"));
  m.def("total_small_condition",
        [](const GroupCtx& ctx, const std::vector<Coords>& em, const std::vector<Coords>& en,
           std::int64_t n) {
          return total_small_condition(ctx, as_element_set(ctx, em), as_element_set(ctx, en), n);
        });
  m.def("multiples_of", [](const GroupCtx& ctx, const Coords& a, std::int64_t k) {
    return coords_of(multiples_of(ctx, as_element(ctx, a), k).elements());
  });
  m.def("find_compatible_order",
        [](const GroupCtx& ctx, const std::vector<Coords>& a) -> py::object {
          auto order = find_compatible_order(ctx, as_element_set(ctx, a));
          if (!order) return py::none();
          return py::cast(coords_of(order->elements()));
        });

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("ctx", &Matroid::ctx)
      .def_property_readonly("rank", &Matroid::rank)
      .def("ground", [](const Matroid& mat) { return coords_of(mat.ground()); })
      .def("bases", &bases_as_lists)
      .def("loops", [](const Matroid& mat) { return mat.loops(); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& mat) {
        return "Matroid(rank=" + std::to_string(mat.rank()) +
               ", ground=" + std::to_string(mat.ground_size()) +
               ", bases=" + std::to_string(mat.bases().size()) + ")";
      });

  m.def("make_uniform", [](const GroupCtx& ctx, const std::vector<Coords>& ground,
                           std::int64_t n) {
    std::vector<GroupElement> g;
    for (const auto& c : ground) g.push_back(as_element(ctx, c));
    return make_uniform(ctx, std::move(g), n);
  });
  m.def("make_from_bases", [](const GroupCtx& ctx, const std::vector<Coords>& ground,
                              const std::vector<std::vector<std::size_t>>& bases) {
    std::vector<GroupElement> g;
    for (const auto& c : ground) g.push_back(as_element(ctx, c));
    return make_from_bases(ctx, std::move(g), bases);
  });
  m.def("make_panhandle",
        [](const GroupCtx& ctx, std::int64_t n, std::int64_t s, std::int64_t k, const Coords& a) {
          return make_panhandle(ctx, PanhandleParams{n, s, k, as_element(ctx, a)});
        },
        py::arg("ctx"), py::arg("n"), py::arg("s"), py::arg("m"), py::arg("a"));
  m.def("make_schubert",
        [](const GroupCtx& ctx, std::int64_t k, const Coords& a,
           const std::vector<Coords>& bound) {
          return make_schubert(ctx, SchubertParams{k, as_element(ctx, a),
                                                   as_element_set(ctx, bound)});
        },
        py::arg("ctx"), py::arg("m"), py::arg("a"), py::arg("bound"));
  m.def("is_uniform_schubert",
        [](const GroupCtx& ctx, std::int64_t k, const Coords& a,
           const std::vector<Coords>& bound) {
          return is_uniform_schubert(ctx, SchubertParams{k, as_element(ctx, a),
                                                         as_element_set(ctx, bound)});
        },
        py::arg("ctx"), py::arg("m"), py::arg("a"), py::arg("bound"));
  m.def("dual", &dual);
  m.def("direct_sum", &direct_sum);
  m.def("is_uniform", &is_uniform);
  m.def("is_paving", &is_paving);
  m.def("is_sparse_paving", &is_sparse_paving);
  m.def("check_d_partition", &check_d_partition);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("validate_basis_exchange", &validate_basis_exchange);
  m.def("rank_of", [](const Matroid& mat, const std::vector<std::size_t>& subset) {
    return mat.rank_of(indices_to_mask(subset, mat.ground_size()));
  });
  m.def("circuits", [](const Matroid& mat) {
    std::vector<std::vector<std::size_t>> out;
    for (BasisMask c : circuits(mat)) out.push_back(mask_to_indices(c));
    return out;
  });
  m.def("hyperplanes", [](const Matroid& mat) {
    std::vector<std::vector<std::size_t>> out;
    for (BasisMask h : hyperplanes(mat)) out.push_back(mask_to_indices(h));
    return out;
  });

  py::class_<MatchWitness>(m, "MatchWitness")
      .def_property_readonly("source",
                             [](const MatchWitness& w) { return mask_to_indices(w.source_basis); })
      .def_property_readonly("target",
                             [](const MatchWitness& w) { return mask_to_indices(w.target_basis); })
      .def_property_readonly("pairs", [](const MatchWitness& w) { return w.pairs; });

  py::class_<MatchReport>(m, "MatchReport")
      .def_property_readonly("matched", [](const MatchReport& r) { return r.matched; })
      .def_property_readonly("counterexample",
                             [](const MatchReport& r) -> py::object {
                               if (!r.counterexample) return py::none();
                               return py::cast(mask_to_indices(*r.counterexample));
                             })
      .def_property_readonly("witnesses", [](const MatchReport& r) {
        std::vector<MatchWitness> out;
        for (const auto& outcome : r.per_basis) {
          if (outcome.witness) out.push_back(*outcome.witness);
        }
        return out;
      })
      .def("__repr__", [](const MatchReport& r) {
        return std::string("MatchReport(matched=") + (r.matched ? "True" : "False") + ")";
      });

  m.def("group_matching",
        [](const GroupCtx& ctx, const std::vector<Coords>& a,
           const std::vector<Coords>& b) -> py::object {
          auto f = group_matching(ctx, as_element_set(ctx, a), as_element_set(ctx, b));
          if (!f) return py::none();
          std::vector<std::pair<Coords, Coords>> out;
          for (const auto& [x, y] : *f) out.emplace_back(x.coords, y.coords);
          return py::cast(out);
        });
  m.def("basis_pair_matched",
        [](const Matroid& src, const std::vector<std::size_t>& basis_m, const Matroid& dst,
           const std::vector<std::size_t>& basis_n) -> py::object {
          auto pairs = basis_pair_matched(src, indices_to_mask(basis_m, src.ground_size()), dst,
                                          indices_to_mask(basis_n, dst.ground_size()));
          if (!pairs) return py::none();
          return py::cast(*pairs);
        });
  m.def("basis_matched_into",
        [](const Matroid& src, const std::vector<std::size_t>& basis_m, const Matroid& dst,
           const std::string& engine) -> py::object {
          auto w = basis_matched_into(src, indices_to_mask(basis_m, src.ground_size()), dst,
                                      options_from(engine));
          if (!w) return py::none();
          return py::cast(*w);
        },
        py::arg("m"), py::arg("basis"), py::arg("n"), py::arg("engine") = "auto");
  m.def("matroid_matched",
        [](const Matroid& src, const Matroid& dst, const std::string& engine) {
          return matroid_matched(src, dst, options_from(engine));
        },
        py::arg("m"), py::arg("n"), py::arg("engine") = "auto");
  m.def("matroid_intersection",
        [](const Matroid& m1, const Matroid& m2, int k) -> py::object {
          auto common = matroid_intersection(m1, m2, k);
          if (!common) return py::none();
          return py::cast(mask_to_indices(*common));
        });

  m.def("matroid_to_json", [](const Matroid& mat) { return matroid_to_json(mat).dump(); });
  m.def("matroid_from_json", [](const std::string& text) {
    return matroid_from_json(nlohmann::json::parse(text));
  });
  m.def("report_to_json", [](const MatchReport& r) { return report_to_json(r).dump(); });

  py::class_<CampaignResult>(m, "CampaignResult")
      .def_property_readonly("campaign", [](const CampaignResult& r) { return r.campaign; })
      .def_property_readonly("instances", [](const CampaignResult& r) { return r.instances; })
      .def_property_readonly("failures",
                             [](const CampaignResult& r) {
                               py::list out;
                               for (const auto& f : r.failures) out.append(json_to_py(f));
                               return out;
                             })
      .def_property_readonly("notes", [](const CampaignResult& r) { return r.notes; })
      .def_property_readonly("instance_digest",
                             [](const CampaignResult& r) { return r.instance_digest; })
      .def_property_readonly("elapsed_ms", [](const CampaignResult& r) { return r.elapsed_ms; })
      .def_property_readonly("passed", [](const CampaignResult& r) { return r.passed(); })
      .def("__repr__", [](const CampaignResult& r) {
        return "CampaignResult(campaign='" + r.campaign +
               "', instances=" + std::to_string(r.instances) +
               ", failures=" + std::to_string(r.failures.size()) + ")";
      });

  m.def("campaign_ids", &campaign_ids);
  m.def("run_campaign",
        [](const std::string& id, std::uint64_t seed, std::int64_t trials, std::int64_t max_m,
           std::int64_t modulus, std::int64_t window, std::int64_t prime, std::int64_t max_size) {
          CampaignOptions options;
          options.seed = seed;
          options.trials = trials;
          options.max_m = max_m;
          options.modulus = modulus;
          options.window = window;
          options.prime = prime;
          options.max_size = max_size;
          return run_campaign(id, options);
        },
        py::arg("id"), py::arg("seed") = 0, py::arg("trials") = 1000, py::arg("max_m") = -1,
        py::arg("modulus") = -1, py::arg("window") = -1, py::arg("prime") = -1,
        py::arg("max_size") = -1);
  m.def("replay_instance", [](const std::string& id, const std::string& descriptor) {
    return replay_instance(id, nlohmann::json::parse(descriptor));
  });
}
