#include "springer/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "springer/numeric.hpp"

namespace springer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::canonicalized(std::vector<int> parts, bool* reordered) {
  std::vector<int> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  if (reordered) *reordered = (sorted != parts);
  return Partition(std::move(sorted));
}

std::vector<int> Partition::parse_parts(const std::string& text) {
  std::string body = text;
  auto strip = [](std::string s) {
    auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  };
  body = strip(body);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw std::invalid_argument("Partition: unbalanced brackets in \"" + text + "\"");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty())
      throw std::invalid_argument("Partition: empty entry in \"" + text + "\"");
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition: bad entry \"" + item + "\"");
    }
    if (used != item.size())
      throw std::invalid_argument("Partition: bad entry \"" + item + "\"");
    parts.push_back(v);
  }
  if (parts.empty())
    throw std::invalid_argument("Partition: no parts in \"" + text + "\"");
  return parts;
}

Partition Partition::parse(const std::string& text) {
  return Partition(parse_parts(text));
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("Partition::part: index must be >= 1");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::dual() const {
  std::vector<int> d;
  int top = parts_.empty() ? 0 : parts_[0];
  d.reserve(top);
  for (int j = 1; j <= top; ++j) {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    d.push_back(c);
  }
  return Partition(std::move(d));
}

int Partition::p_value(int s) const {
  if (s < 0 || s > n_) throw std::out_of_range("Partition::p_value: 0 <= s <= n");
  // padded to length n with zeros; part(i) is 0 beyond length()
  int total = 0;
  for (int i = n_ - s + 1; i <= n_; ++i) total += part(i);
  return total;
}

std::vector<int> Partition::phi_sequence() const {
  std::vector<int> seq;
  seq.reserve(n_);
  for (int r = 1; r <= length(); ++r) {
    int reps = part(r) - part(r + 1);
    for (int rep = 0; rep < reps; ++rep)
      for (int j = 1; j <= r; ++j) seq.push_back(j);
  }
  return seq;
}

int Partition::block_of(int value) const {
  if (value < 1 || value > n_)
    throw std::out_of_range("Partition::block_of: 1 <= value <= n");
  int acc = 0;
  for (int k = 1; k <= length(); ++k) {
    acc += parts_[k - 1];
    if (value <= acc) return k;
  }
  throw std::logic_error("Partition::block_of: unreachable");
}

mpz_class Partition::multinomial() const {
  mpz_class r = factorial(n_);
  for (int p : parts_) r /= factorial(p);
  return r;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int f = std::min(rest, maxp); f >= 1; --f) {
      cur.push_back(f);
      rec(rest - f, f);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace springer
