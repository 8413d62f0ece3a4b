#ifndef SPRINGER_PARTITION_HPP
#define SPRINGER_PARTITION_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace springer {

/* Weakly decreasing positive integer parts. The empty partition (n = 0) is
 * allowed and behaves as the unit for all derived quantities. */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /* Sorts descending before validating; sets *reordered when sorting moved
   * anything. Zero parts are rejected, not stripped. */
  static Partition canonicalized(std::vector<int> parts,
                                 bool* reordered = nullptr);

  /* Accepts "5,4,4,2,2,2,1" or the JSON array form "[5,4,4,2,2,2,1]". */
  static Partition parse(const std::string& text);
  /* The raw entries of "5,4,4,2,2,2,1" or "[5,4,4,2,2,2,1]", unordered. */
  static std::vector<int> parse_parts(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  /* 1-based; 0 beyond length, so p(λ, s) can pad implicitly. */
  int part(int i) const;

  bool operator==(const Partition&) const = default;

  /* Conjugate: part j counts the parts of *this that are >= j. */
  Partition dual() const;

  /* Sum of the last s entries after padding with zeros to length n.
   * Defined for 0 <= s <= n. */
  int p_value(int s) const;

  /* Length-n sequence with values in 1..length(): the concatenation over
   * r = 1..l of the block (1, 2, ..., r) repeated part(r) - part(r+1) times.
   * Value j occurs exactly part(j) times. */
  std::vector<int> phi_sequence() const;

  /* Index k of the consecutive block a_{k-1} < value <= a_k, where
   * a_k = part(1) + ... + part(k). Defined for 1 <= value <= n. */
  int block_of(int value) const;

  /* n! / (part(1)! ... part(l)!) */
  mpz_class multinomial() const;

  std::string to_string() const;  // "5,4,4,2,2,2,1"; "" for the empty partition

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/* All partitions of n in reverse-lexicographic order: (n) first, (1^n) last. */
std::vector<Partition> partitions_of(int n);

}  // namespace springer

#endif
