#include "springer/fixed_points.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "springer/presentations.hpp"

namespace springer {

bool is_permutation_word(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Word compose(const Word& w, const Word& v) {
  if (w.size() != v.size())
    throw std::invalid_argument("compose: length mismatch");
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[v[i] - 1];
  return r;
}

bool is_fixed_point(const Partition& lambda, const Word& w) {
  const int n = lambda.n();
  if (!is_permutation_word(w, n))
    throw std::invalid_argument("is_fixed_point: not a permutation word");
  // values of each block must appear in increasing order; since blocks are
  // consecutive ranges, it suffices that positions of consecutive values
  // within a block increase
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[w[i - 1]] = i;
  int a = 0;
  for (int k = 1; k <= lambda.length(); ++k) {
    int sz = lambda.part(k);
    for (int v = a + 1; v < a + sz; ++v)
      if (pos[v] > pos[v + 1]) return false;
    a += sz;
  }
  return true;
}

std::vector<Word> fixed_points(const Partition& lambda) {
  const int n = lambda.n();
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    if (is_fixed_point(lambda, w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Word coset_representative(const Partition& lambda, const Word& w) {
  const int n = lambda.n();
  if (!is_permutation_word(w, n))
    throw std::invalid_argument("coset_representative: not a permutation word");
  Word r = w;
  int a = 0;
  for (int k = 1; k <= lambda.length(); ++k) {
    int sz = lambda.part(k);
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
      if (w[i] > a && w[i] <= a + sz) positions.push_back(i);
    std::sort(positions.begin(), positions.end());
    for (int j = 0; j < sz; ++j) r[positions[j]] = a + j + 1;
    a += sz;
  }
  return r;
}

Polynomial restrict_at(const Polynomial& p, const Partition& lambda,
                       const Word& w) {
  const int n = lambda.n();
  const int l = lambda.length();
  if (!is_fixed_point(lambda, w))
    throw std::invalid_argument("restrict_at: w is not a fixed point");
  if (p.space().x_arity != n || p.space().u_arity != l ||
      p.space().t_arity != 0)
    throw std::invalid_argument("restrict_at: polynomial space mismatch");
  VariableSpace target{0, l, 0};
  return p.substituted(target, [&](int v) {
    char fam = p.space().family(v);
    int idx = p.space().family_index(v);
    if (fam == 'u') return Polynomial::variable(target, target.u_var(idx));
    return Polynomial::variable(target,
                                target.u_var(lambda.block_of(w[idx - 1])));
  });
}

std::vector<Polynomial> gkm_image(const Polynomial& p, const Partition& lambda) {
  std::vector<Polynomial> out;
  for (const Word& w : fixed_points(lambda))
    out.push_back(restrict_at(p, lambda, w));
  return out;
}

Polynomial sn_act_polynomial(const Word& v, const Polynomial& p) {
  const VariableSpace& space = p.space();
  if (!is_permutation_word(v, space.x_arity))
    throw std::invalid_argument("sn_act_polynomial: bad word");
  return p.substituted(space, [&](int var) {
    if (space.family(var) == 'x')
      return Polynomial::variable(space, space.x_var(v[space.family_index(var) - 1]));
    return Polynomial::variable(space, var);
  });
}

std::vector<Polynomial> sn_act_tuple(const Partition& lambda, const Word& v,
                                     const std::vector<Polynomial>& f) {
  const std::vector<Word> fps = fixed_points(lambda);
  if (f.size() != fps.size())
    throw std::invalid_argument("sn_act_tuple: tuple length != fixed point count");
  // index of each fixed point for representative lookup
  auto locate = [&](const Word& w) {
    auto it = std::lower_bound(fps.begin(), fps.end(), w);
    if (it == fps.end() || *it != w)
      throw std::logic_error("sn_act_tuple: representative not a fixed point");
    return static_cast<std::size_t>(it - fps.begin());
  };
  std::vector<Polynomial> out;
  out.reserve(f.size());
  for (const Word& w : fps)
    out.push_back(f[locate(coset_representative(lambda, compose(w, v)))]);
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

CheckReport generators_vanish_check(const Partition& lambda) {
  CheckReport report;
  const IdealPresentation I = equivariant_k_ideal(lambda);
  const std::vector<Word> fps = fixed_points(lambda);
  for (const Word& w : fps) {
    for (const auto& g : I.generators) {
      ++report.checks;
      Polynomial r = restrict_at(g.poly, lambda, w);
      if (!r.is_zero()) {
        report.pass = false;
        report.violations.push_back(
            "lambda=" + lambda.to_string() + " s=" + std::to_string(g.index.s) +
            " subset=(" + word_to_string(g.index.subset) + ")" +
            " d=" + std::to_string(g.index.d) + " w=(" + word_to_string(w) +
            ") residual=" + r.to_text());
      }
    }
  }
  return report;
}

CheckReport equivariance_check(const Partition& lambda) {
  CheckReport report;
  const int n = lambda.n();
  const int l = lambda.length();
  VariableSpace space{n, l, 0};
  const std::vector<Word> fps = fixed_points(lambda);

  std::vector<std::vector<Polynomial>> x_images;
  for (int i = 1; i <= n; ++i)
    x_images.push_back(
        gkm_image(Polynomial::variable(space, space.x_var(i)), lambda));
  std::vector<std::vector<Polynomial>> u_images;
  for (int j = 1; j <= l; ++j)
    u_images.push_back(
        gkm_image(Polynomial::variable(space, space.u_var(j)), lambda));

  Word v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    for (int i = 1; i <= n; ++i) {
      ++report.checks;
      std::vector<Polynomial> acted = sn_act_tuple(lambda, v, x_images[i - 1]);
      const std::vector<Polynomial>& expected = x_images[v[i - 1] - 1];
      if (acted != expected) {
        report.pass = false;
        std::size_t bad = 0;
        while (bad < acted.size() && acted[bad] == expected[bad]) ++bad;
        report.violations.push_back(
            "lambda=" + lambda.to_string() + " v=(" + word_to_string(v) +
            ") generator=x" + std::to_string(i) + " w=(" +
            word_to_string(fps[bad]) + ") got=" + acted[bad].to_text() +
            " expected=" + expected[bad].to_text());
      }
    }
    for (int j = 1; j <= l; ++j) {
      ++report.checks;
      if (sn_act_tuple(lambda, v, u_images[j - 1]) != u_images[j - 1]) {
        report.pass = false;
        report.violations.push_back("lambda=" + lambda.to_string() + " v=(" +
                                    word_to_string(v) + ") generator=u" +
                                    std::to_string(j) + " not fixed");
      }
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return report;
}

}  // namespace springer
