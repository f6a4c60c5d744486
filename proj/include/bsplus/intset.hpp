#pragma once

#include "bsplus/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bsplus {

/// A finite nonempty set of integers, stored strictly increasing.
///
/// Construction from arbitrary input sorts and deduplicates; an empty
/// input throws std::invalid_argument. Values are immutable afterwards.
class IntSet {
 public:
  explicit IntSet(std::vector<Integer> elements);
  IntSet(std::initializer_list<long> elements);

  /// Skips sorting. Caller guarantees strictly increasing, nonempty input.
  static IntSet from_sorted_unique(std::vector<Integer> elements);

  /// {0, 1, ..., count-1}.
  static IntSet interval(std::size_t count);

  std::size_t size() const { return elems_.size(); }
  const Integer& min() const { return elems_.front(); }
  const Integer& max() const { return elems_.back(); }
  const Integer& operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Integer> elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Integer& x) const;

  /// Lexicographic on the element sequence.
  friend bool operator==(const IntSet& a, const IntSet& b) { return a.elems_ == b.elems_; }
  friend bool operator<(const IntSet& a, const IntSet& b);

 private:
  IntSet() = default;
  std::vector<Integer> elems_;
};

struct SetStats {
  std::size_t size = 0;
  Integer min;
  Integer max;
  Integer length;                 // max - min
  Integer holes;                  // length + 1 - size
  std::optional<Integer> diff_gcd;  // absent when size == 1
};

/// original = scale * normal + offset, elementwise.
struct NormalizationWitness {
  IntSet normal;
  Integer offset;
  Integer scale;
};

/// {start, start + difference, ..., start + (count - 1) * difference}.
struct ApDescription {
  Integer start;
  Integer difference;
  Integer count;

  bool contains(const Integer& x) const;
  friend bool operator==(const ApDescription&, const ApDescription&) = default;
};

struct ApAnalysis {
  bool is_ap = false;
  ApDescription covering;
};

struct ResidueClass {
  Integer residue;
  IntSet members;
};

enum class LssClause { CaseI, CaseII, NotApplicable };

struct LssVerdict {
  int delta = 0;
  LssClause clause = LssClause::NotApplicable;
  Integer bound;
  Integer actual;
};

const char* to_string(LssClause clause);

// Set algebra ---------------------------------------------------------------

/// {a + b : a in A, b in B}, computed as a k-way merge of the translates a + B.
IntSet sumset(const IntSet& a, const IntSet& b);

/// {r x : x in A}. Throws std::invalid_argument for r < 1.
IntSet dilate(const Integer& r, const IntSet& a);

/// r_1 * A + ... + r_s * A. Throws on an empty list or a coefficient < 1.
IntSet dilate_sum(std::span<const Integer> coeffs, const IntSet& a);
IntSet dilate_sum(std::initializer_list<long> coeffs, const IntSet& a);

/// {max(A) - x : x in A}.
IntSet reflect(const IntSet& a);

/// {u x + v : x in A}; u must be nonzero.
IntSet affine_image(const IntSet& a, const Integer& u, const Integer& v);

// Statistics and structure ------------------------------------------------

SetStats stats(const IntSet& a);

/// Translates to min 0 and divides by the difference gcd. Singletons map to
/// ({0}, offset = element, scale = 1).
NormalizationWitness normalize(const IntSet& a);

/// Whether A is exactly an AP, and the smallest AP with difference d(A)
/// anchored at min(A) that contains it.
ApAnalysis ap_analysis(const IntSet& a);

/// Nonempty residue classes mod r (r >= 2), ordered by residue in [0, r).
std::vector<ResidueClass> residue_split(const IntSet& a, const Integer& r);

/// (C - min C) / r for a class C lying in one residue class mod r.
IntSet reduced_class(const IntSet& cls, const Integer& r);

/// Sizes |reduced_i + A| over the residue classes of A mod r; they sum to
/// |A + r*A| because the translates of distinct classes are disjoint.
std::vector<std::size_t> residue_decomposition_sizes(const IntSet& a, const Integer& r);

/// Canonical representative of the class of A under x -> u x + v, u != 0:
/// the lexicographically smaller of normalize(A) and normalize(reflect(A)).
IntSet affine_canonical(const IntSet& a);

/// Classifies and evaluates the Lev-Smelianski / Stanchescu lower bounds for
/// |A + B|. Both sets must be subsets of the naturals containing 0; throws
/// std::invalid_argument otherwise.
LssVerdict lss_check(const IntSet& a, const IntSet& b);

}  // namespace bsplus
