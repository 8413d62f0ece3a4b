#ifndef SPRINGER_POLYNOMIAL_HPP
#define SPRINGER_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace springer {

/* Three fixed variable families with a fixed enumeration order:
 * x1..x_{x_arity}, then u1..u_{u_arity}, then t1..t_{t_arity}.
 * A dense index over that enumeration identifies a variable. */
struct VariableSpace {
  int x_arity = 0;
  int u_arity = 0;
  int t_arity = 0;

  int total() const { return x_arity + u_arity + t_arity; }
  int x_var(int i) const;  // 1-based within the family
  int u_var(int j) const;
  int t_var(int k) const;
  char family(int v) const;       // 'x', 'u' or 't'
  int family_index(int v) const;  // 1-based within the family
  std::string name(int v) const;  // e.g. "x2"
  std::optional<int> find(const std::string& name) const;

  bool operator==(const VariableSpace&) const = default;
};

/* Exponent vector with cached total degree. */
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int exp(int v) const { return e_[v]; }
  bool is_one() const { return deg_ == 0; }

  void set_exp(int v, int k);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;      // this | o
  Monomial divide_into(const Monomial& o) const;  // o / this; pre: divides(o)
  bool coprime(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

/* Canonical order: graded reverse lexicographic over the enumeration order
 * (x-block before u-block before t-block, ascending family index).
 * Returns negative / 0 / positive as a < b, a == b, a > b. */
int canonical_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpq_class coeff;
};

/* Optional family renames applied only when printing (the cohomology flavors
 * present the x-family as y). */
struct NameMap {
  char x_as = 'x';
  std::string rename(const VariableSpace& s, int v) const;
};

/* Sparse polynomial with exact rational coefficients. Terms are kept sorted
 * strictly descending in the canonical order with no zero coefficients. */
class Polynomial {
 public:
  explicit Polynomial(const VariableSpace& space) : space_(space) {}

  static Polynomial zero(const VariableSpace& space) { return Polynomial(space); }
  static Polynomial constant(const VariableSpace& space, const mpq_class& c);
  static Polynomial variable(const VariableSpace& space, int v);
  static Polynomial from_terms(const VariableSpace& space, std::vector<Term> terms);

  const VariableSpace& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpq_class& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const;

  Polynomial pow(int k) const;

  /* image(v) must yield a polynomial in `target` for every variable that
   * occurs; coefficients are carried over unchanged. */
  Polynomial substituted(const VariableSpace& target,
                         const std::function<Polynomial(int)>& image) const;

  /* Full evaluation; point[v] must be defined for every occurring variable. */
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  std::string to_text(const NameMap& names = {}) const;

 private:
  void check_same_space(const Polynomial& o) const;

  VariableSpace space_;
  std::vector<Term> terms_;
};

std::string monomial_to_text(const VariableSpace& space, const Monomial& m,
                             const NameMap& names = {});

}  // namespace springer

#endif
