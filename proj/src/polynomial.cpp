#include "springer/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

int VariableSpace::x_var(int i) const {
  if (i < 1 || i > x_arity) throw std::out_of_range("x_var: index out of range");
  return i - 1;
}

int VariableSpace::u_var(int j) const {
  if (j < 1 || j > u_arity) throw std::out_of_range("u_var: index out of range");
  return x_arity + j - 1;
}

int VariableSpace::t_var(int k) const {
  if (k < 1 || k > t_arity) throw std::out_of_range("t_var: index out of range");
  return x_arity + u_arity + k - 1;
}

char VariableSpace::family(int v) const {
  if (v < 0 || v >= total()) throw std::out_of_range("family: bad variable");
  if (v < x_arity) return 'x';
  if (v < x_arity + u_arity) return 'u';
  return 't';
}

int VariableSpace::family_index(int v) const {
  if (v < 0 || v >= total()) throw std::out_of_range("family_index: bad variable");
  if (v < x_arity) return v + 1;
  if (v < x_arity + u_arity) return v - x_arity + 1;
  return v - x_arity - u_arity + 1;
}

std::string VariableSpace::name(int v) const {
  return std::string(1, family(v)) + std::to_string(family_index(v));
}

std::optional<int> VariableSpace::find(const std::string& nm) const {
  if (nm.size() < 2) return std::nullopt;
  char fam = nm[0];
  int idx;
  try {
    std::size_t used = 0;
    idx = std::stoi(nm.substr(1), &used);
    if (used + 1 != nm.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (fam == 'x' && idx >= 1 && idx <= x_arity) return x_var(idx);
  if (fam == 'u' && idx >= 1 && idx <= u_arity) return u_var(idx);
  if (fam == 't' && idx >= 1 && idx <= t_arity) return t_var(idx);
  return std::nullopt;
}

void Monomial::set_exp(int v, int k) {
  if (k < 0) throw std::invalid_argument("Monomial: negative exponent");
  deg_ += k - e_[v];
  e_[v] = k;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (int v = 0; v < nvars(); ++v) r.e_[v] += o.e_[v];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int v = 0; v < nvars(); ++v)
    if (e_[v] > o.e_[v]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  Monomial r = o;
  for (int v = 0; v < nvars(); ++v) r.e_[v] -= e_[v];
  r.deg_ -= deg_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int v = 0; v < nvars(); ++v)
    if (e_[v] > 0 && o.e_[v] > 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int v = 0; v < a.nvars(); ++v)
    r.set_exp(v, std::max(a.e_[v], b.e_[v]));
  return r;
}

int canonical_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // grevlex tie-break: the monomial with the smaller exponent at the last
  // differing variable is the larger one
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
  }
  return 0;
}

std::string NameMap::rename(const VariableSpace& s, int v) const {
  char fam = s.family(v);
  if (fam == 'x') fam = x_as;
  return std::string(1, fam) + std::to_string(s.family_index(v));
}

Polynomial Polynomial::constant(const VariableSpace& space, const mpq_class& c) {
  Polynomial p(space);
  if (c != 0) p.terms_.push_back({Monomial(space.total()), c});
  return p;
}

Polynomial Polynomial::variable(const VariableSpace& space, int v) {
  if (v < 0 || v >= space.total())
    throw std::out_of_range("Polynomial::variable: bad variable");
  Monomial m(space.total());
  m.set_exp(v, 1);
  Polynomial p(space);
  p.terms_.push_back({std::move(m), mpq_class(1)});
  return p;
}

Polynomial Polynomial::from_terms(const VariableSpace& space,
                                  std::vector<Term> terms) {
  std::map<Monomial, mpq_class, bool (*)(const Monomial&, const Monomial&)> acc(
      +[](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
  for (auto& t : terms) {
    if (t.mono.nvars() != space.total())
      throw std::invalid_argument("from_terms: monomial arity mismatch");
    auto [it, inserted] = acc.emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Polynomial p(space);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_same_space(const Polynomial& o) const {
  if (!(space_ == o.space_))
    throw std::invalid_argument("Polynomial: mismatched variable spaces");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(space_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_space(o);
  Polynomial r(space_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = canonical_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_space(o);
  std::map<Monomial, mpq_class, bool (*)(const Monomial&, const Monomial&)> acc(
      +[](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      mpq_class c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  }
  Polynomial r(space_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
  Polynomial r(space_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(space_ == o.space_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial r = constant(space_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Polynomial Polynomial::substituted(
    const VariableSpace& target,
    const std::function<Polynomial(int)>& image) const {
  std::vector<std::optional<Polynomial>> cache(space_.total());
  Polynomial out = zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (int v = 0; v < space_.total(); ++v) {
      int e = t.mono.exp(v);
      if (e == 0) continue;
      if (!cache[v]) {
        Polynomial img = image(v);
        if (!(img.space() == target))
          throw std::invalid_argument("substituted: image in wrong space");
        cache[v] = std::move(img);
      }
      prod = prod * cache[v]->pow(e);
    }
    out += prod;
  }
  return out;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
  if (static_cast<int>(point.size()) != space_.total())
    throw std::invalid_argument("evaluate: point arity mismatch");
  mpq_class total = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (int var = 0; var < space_.total(); ++var) {
      for (int e = 0; e < t.mono.exp(var); ++e) v *= point[var];
    }
    total += v;
  }
  return total;
}

std::string monomial_to_text(const VariableSpace& space, const Monomial& m,
                             const NameMap& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int v = 0; v < space.total(); ++v) {
    int e = m.exp(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += names.rename(space, v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Polynomial::to_text(const NameMap& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    mpq_class a = abs(t.coeff);
    bool neg = t.coeff < 0;
    if (i == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (t.mono.is_one()) {
      body = a.get_str();
    } else if (a == 1) {
      body = monomial_to_text(space_, t.mono, names);
    } else {
      body = a.get_str() + "*" + monomial_to_text(space_, t.mono, names);
    }
    out += body;
  }
  return out;
}

}  // namespace springer
