#pragma once

#include "bsplus/intset.hpp"
#include "bsplus/subsets.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsplus {

enum class TheoremId {
  Direct2,          // |A + 2*A| >= 3k - 2, equality iff AP
  ExtendedInverse,  // |A + 2*A| < 4k - 4 forces AP containment
  Classify3,        // |A + 3*A| >= 4k - 4 and its equality families
  DirectR,          // |A + r*A| >= max(4k - 4, 1) for r >= 3
  Dilate4,          // |A + 4*A| >= 5k - 6 for k >= 5
  GroupCoset,       // S = b^m a^A in BS(1,n)
  MainMonoid,       // arbitrary non-abelian S in BS+(1,2)
  Chs,              // p*{0..m} + {0..(p-1)/2} construction record
  Lss,              // Lev-Smelianski / Stanchescu sumset bounds
  Example,          // extremal monoid constructions
};

enum class Verdict {
  BoundHolds,
  EqualityExtremal,
  StructureConfirmed,
  HypothesisNotApplicable,
  Violation,
};

const char* to_string(TheoremId id);
const char* to_string(Verdict v);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

struct ExtremalFamily {
  enum class Tag { F1, F2, F3, NotExtremal };
  Tag tag = Tag::NotExtremal;
  unsigned long m = 0;  // parameter of F3

  std::string name() const;
  friend bool operator==(const ExtremalFamily&, const ExtremalFamily&) = default;
};

struct Witness {
  std::optional<ApDescription> ap;
  std::optional<ExtremalFamily> family;
  std::optional<std::string> failing_instance;  // set whenever the verdict is Violation
  std::vector<std::string> notes;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Direct2;
  std::string instance;
  std::vector<std::pair<std::string, Integer>> computed;
  Verdict verdict = Verdict::BoundHolds;
  Witness witness;

  void record(std::string name, Integer value);
  /// Value recorded under name, if any.
  const Integer* quantity(std::string_view name) const;
  bool violated() const { return verdict == Verdict::Violation; }
};

/// Matches an affine-canonical set against {0,1,3}, {0,1,4} and
/// 3*{0..m} u (3*{0..m} + 1).
ExtremalFamily family_of(const IntSet& canonical);

/// 3*{0..m} u (3*{0..m} + 1).
IntSet family_f3(unsigned long m);

VerificationReport check_direct2(const IntSet& a);

/// Requires |A| >= 3.
VerificationReport check_extended_inverse(const IntSet& a);

struct Dilate3Classification {
  VerificationReport report;
  ExtremalFamily family;
};
Dilate3Classification classify_dilate3(const IntSet& a);

/// Requires r >= 3.
VerificationReport check_direct_r(const IntSet& a, const Integer& r);

/// Requires |A| >= 5.
VerificationReport check_dilate4_bound(const IntSet& a);

/// S = b^m a^A with m >= 1. Computes |S^2| element-wise and through the
/// dilate formula and applies the bound matching (n, m).
VerificationReport check_group_coset(const BSContext& ctx, unsigned long m, const IntSet& a);

/// S must live in BS+(1,2) and be non-abelian; throws std::invalid_argument otherwise.
VerificationReport check_main_monoid(const BSSubset& s);

VerificationReport check_lss(const IntSet& a, const IntSet& b);

/// Extremal monoid constructions in BS+(1,2). param is k for id 1 (even,
/// k >= 4) and t for ids 2..4 (t >= 2).
BSSubset build_example(int id, unsigned long param);
/// Closed-form |S^2| of the construction.
std::size_t example_square_size(int id, unsigned long param);
/// Builds the construction and compares |S^2| with its closed form.
VerificationReport check_example(int id, unsigned long param);

bool is_prime(unsigned long p);

/// p*{0..m} + {0..(p-1)/2} for an odd prime p.
IntSet build_chs(unsigned long p, unsigned long m);

/// Records |A + p*A| for build_chs(p, m) next to the reference value
/// (p+1)k - ceil(p(p+2)/4). Only p = 3 is asserted (as 4k - 4); larger p
/// report HypothesisNotApplicable unless k reaches 3(p-1)^2 (p-1)!.
VerificationReport check_chs(unsigned long p, unsigned long m);

}  // namespace bsplus
