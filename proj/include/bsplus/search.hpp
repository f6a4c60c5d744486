#pragma once

#include "bsplus/subsets.hpp"
#include "bsplus/theorems.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bsplus {

/// Box parameters shared by the integer-set and monoid searches.
struct SearchConfig {
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::int64_t max_length = 0;  // bound on max(A) for normal sets
  unsigned long r = 3;          // dilate for direct_r and find_extremal
  unsigned long n = 2;
  unsigned long m_max = 0;      // monoid ground set: 0 <= m <= m_max
  std::int64_t x_max = 0;       //                    0 <= x <= x_max
  bool nonabelian_only = true;
  unsigned jobs = 1;
};

/// One extremal set (integer searches) or small-doubling subset (monoid search).
struct ExtremalWitness {
  std::size_t k = 0;
  std::optional<IntSet> set;
  std::optional<BSSubset> subset;
  Integer value;
};

struct SearchOutcome {
  std::string check;
  SearchConfig config;
  std::size_t instances_checked = 0;
  std::vector<VerificationReport> violations;
  std::vector<ExtremalWitness> extremal_witnesses;
  /// Monoid search only: every report with verdict StructureConfirmed.
  std::vector<VerificationReport> structure_reports;
  std::map<std::string, std::size_t> verdict_counts;
  std::chrono::milliseconds elapsed{0};
};

/// Streams the normal sets of size k with max <= L (min 0, gcd 1 when
/// k >= 2) in lexicographic order. A shard fixes the second-smallest element.
class NormalSetEnumerator {
 public:
  NormalSetEnumerator(std::size_t k, std::int64_t max_length);
  NormalSetEnumerator(std::size_t k, std::int64_t max_length, std::int64_t second);

  std::optional<IntSet> next();

  /// Admissible second-smallest elements, ascending; empty for k = 1.
  static std::vector<std::int64_t> shard_keys(std::size_t k, std::int64_t max_length);

 private:
  bool advance();

  std::size_t k_;
  std::int64_t max_length_;
  std::optional<std::int64_t> fixed_second_;
  std::vector<std::int64_t> picks_;  // elements after 0, strictly increasing
  bool started_ = false;
  bool done_ = false;
};

/// Streams subsets of {b^m a^x : 0 <= m <= m_max, 0 <= x <= x_max} with size
/// in [k_min, k_max], size-major then lexicographic in (m, x) order.
class BSSubsetEnumerator {
 public:
  explicit BSSubsetEnumerator(const SearchConfig& cfg);
  /// Restricts to subsets of exactly size k whose first element is ground[first].
  BSSubsetEnumerator(const SearchConfig& cfg, std::size_t k, std::size_t first);

  std::optional<BSSubset> next();

  const std::vector<BSElement>& ground() const { return ground_; }

 private:
  bool advance();

  BSContext ctx_;
  bool nonabelian_only_;
  std::vector<BSElement> ground_;
  std::size_t k_;
  std::size_t k_last_;
  std::optional<std::size_t> fixed_first_;
  std::vector<std::size_t> idx_;
  bool started_ = false;
  bool done_ = false;
};

enum class IntegerCheck { Direct2, ExtendedInverse, DirectR, Dilate4, Classify3 };

const char* to_string(IntegerCheck c);
std::optional<IntegerCheck> parse_integer_check(std::string_view name);

/// Runs the matching checker on every normal set in the box. The k range is
/// clipped to the checker's domain (k >= 3 for extended_inverse, k >= 5 for
/// dilate4). Per k, the minimal value and its affine-canonical achievers are
/// kept as extremal witnesses. Output does not depend on cfg.jobs.
SearchOutcome exhaustive_verify_integer(IntegerCheck check, const SearchConfig& cfg);

/// min |A + r*A| over normal sets of size k with max <= L, with all
/// achievers in affine-canonical form.
SearchOutcome find_extremal(std::size_t k, unsigned long r, std::int64_t max_length,
                            unsigned jobs = 1);

/// Runs check_main_monoid on every non-abelian subset of the ground box.
SearchOutcome exhaustive_verify_monoid(const SearchConfig& cfg);

}  // namespace bsplus
