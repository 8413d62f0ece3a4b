#include "springer/json_io.hpp"

namespace springer {

ordered_json polynomial_to_json(const Polynomial& p, const NameMap& names) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : p.terms()) {
    ordered_json mono = ordered_json::object();
    for (int v = 0; v < p.space().total(); ++v) {
      if (t.mono.exp(v) > 0) mono[names.rename(p.space(), v)] = t.mono.exp(v);
    }
    terms.push_back({{"coeff", t.coeff.get_str()}, {"monomial", mono}});
  }
  return terms;
}

ordered_json presentation_to_json(const IdealPresentation& I) {
  const NameMap names = display_names(I.flavor);
  ordered_json out = ordered_json::object();
  out["flavor"] = flavor_name(I.flavor);
  if (I.lambda) out["lambda"] = I.lambda->parts();
  out["n"] = I.n;

  ordered_json ambient = ordered_json::object();
  std::string xfam(1, names.x_as);
  ambient[xfam] = I.space.x_arity;
  if (I.space.u_arity > 0) ambient["u"] = I.space.u_arity;
  if (I.space.t_arity > 0) ambient["t"] = I.space.t_arity;
  ambient["invertible"] = I.invertible;
  out["ambient"] = ambient;
  if (!I.specialization.empty()) out["specialization"] = I.specialization;

  ordered_json gens = ordered_json::array();
  for (const Generator& g : I.generators) {
    gens.push_back({{"s", g.index.s},
                    {"subset", g.index.subset},
                    {"d", g.index.d},
                    {"poly", g.poly.to_text(names)},
                    {"terms", polynomial_to_json(g.poly, names)}});
  }
  out["generators"] = gens;

  ordered_json dropped = ordered_json::array();
  for (const GeneratorIndex& ix : I.dropped) {
    dropped.push_back({{"s", ix.s}, {"subset", ix.subset}, {"d", ix.d}});
  }
  out["dropped"] = dropped;
  return out;
}

ordered_json fixed_points_to_json(const Partition& lambda,
                                  const std::vector<Word>& words) {
  ordered_json out = ordered_json::object();
  out["lambda"] = lambda.parts();
  out["count"] = words.size();
  ordered_json arr = ordered_json::array();
  for (const Word& w : words) arr.push_back(w);
  out["fixed_points"] = arr;
  return out;
}

}  // namespace springer
