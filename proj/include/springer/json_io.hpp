#ifndef SPRINGER_JSON_IO_HPP
#define SPRINGER_JSON_IO_HPP

#include <json.hpp>

#include "springer/fixed_points.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"
#include "springer/presentations.hpp"

namespace springer {

using ordered_json = nlohmann::ordered_json;

/* [{"coeff":"-3","monomial":{"u1":2}}, ...]; coefficients as decimal strings,
 * term order matches the text form. */
ordered_json polynomial_to_json(const Polynomial& p, const NameMap& names = {});

ordered_json presentation_to_json(const IdealPresentation& I);

ordered_json fixed_points_to_json(const Partition& lambda,
                                  const std::vector<Word>& words);

}  // namespace springer

#endif
