#ifndef SPRINGER_FIXED_POINTS_HPP
#define SPRINGER_FIXED_POINTS_HPP

#include <string>
#include <vector>

#include "springer/partition.hpp"
#include "springer/polynomial.hpp"

namespace springer {

/* One-line notation: word[i-1] = w(i), a bijection on 1..n. */
using Word = std::vector<int>;

bool is_permutation_word(const Word& w, int n);

/* Composition as functions: (compose(w, v))(i) = w(v(i)). */
Word compose(const Word& w, const Word& v);

/* True iff for every block k the values a_{k-1}+1 .. a_k appear in the
 * one-line notation as an increasing subsequence. */
bool is_fixed_point(const Partition& lambda, const Word& w);

/* All fixed-point words in lexicographic order; count = multinomial. */
std::vector<Word> fixed_points(const Partition& lambda);

/* The unique fixed-point word obtained by rewriting, within each block, that
 * block's values into increasing order along their positions. Constant on
 * left cosets of the Young subgroup acting on values. */
Word coset_representative(const Partition& lambda, const Word& w);

/* Substitutes x_i -> u_{b(w(i))} where b is the block index of the value;
 * u variables are fixed. Result lives in the u-only space. */
Polynomial restrict_at(const Polynomial& p, const Partition& lambda,
                       const Word& w);

/* Tuple of restrictions aligned with fixed_points(lambda). */
std::vector<Polynomial> gkm_image(const Polynomial& p, const Partition& lambda);

/* x_i -> x_{v(i)}, u fixed. */
Polynomial sn_act_polynomial(const Word& v, const Polynomial& p);

/* Component at w of v.f is the component of f at
 * coset_representative(lambda, w o v). */
std::vector<Polynomial> sn_act_tuple(const Partition& lambda, const Word& v,
                                     const std::vector<Polynomial>& f);

struct CheckReport {
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> violations;  // rendered counterexamples
};

/* Every equivariant K-ideal generator restricts to zero at every fixed point. */
CheckReport generators_vanish_check(const Partition& lambda);

/* The S_n action commutes with restriction on every x_i and fixes every u_j;
 * exhaustive over S_n. */
CheckReport equivariance_check(const Partition& lambda);

std::string word_to_string(const Word& w);

}  // namespace springer

#endif
