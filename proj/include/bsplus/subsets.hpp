#pragma once

#include "bsplus/bsgroup.hpp"
#include "bsplus/intset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bsplus {

/// A finite nonempty subset of BS+(1,n), kept as its coset decomposition
/// S = union over i of b^{m_i} a^{A_i}, keyed by ascending b-exponent.
class BSSubset {
 public:
  using CosetMap = std::map<unsigned long, IntSet>;

  BSSubset(BSContext ctx, CosetMap cosets);

  /// Groups by b-exponent and deduplicates. Throws on an empty collection.
  static BSSubset from_elements(BSContext ctx, std::span<const BSElement> elems);
  static BSSubset single_coset(BSContext ctx, unsigned long m, IntSet a);

  const BSContext& context() const { return ctx_; }
  const CosetMap& cosets() const { return cosets_; }
  std::size_t size() const { return size_; }
  std::size_t coset_count() const { return cosets_.size(); }
  bool contains(const BSElement& g) const;

  /// All elements ordered by (m, x).
  std::vector<BSElement> elements() const;

  friend bool operator==(const BSSubset& s, const BSSubset& t) {
    return s.ctx_ == t.ctx_ && s.cosets_ == t.cosets_;
  }

 private:
  BSContext ctx_;
  CosetMap cosets_;
  std::size_t size_ = 0;
};

struct CosetSummary {
  std::size_t t = 0;  // number of cosets minus one
  std::vector<std::pair<unsigned long, std::size_t>> entries;  // (m_i, k_i)
};

/// ST by multiplying every pair of elements and grouping the results by
/// b-exponent. Throws std::invalid_argument on a context mismatch.
BSSubset product(const BSSubset& s, const BSSubset& t);

/// ST assembled coset pair by coset pair as b^{m_i + m_j} a^{n^{m_j} * A_i + B_j}.
BSSubset product_via_cosets(const BSSubset& s, const BSSubset& t);

/// |S^2|, always through product().
std::size_t square_size(const BSSubset& s);

/// |n^r * A + A| for a single coset S = b^r a^A; nullopt when S spans
/// several cosets.
std::optional<std::size_t> square_size_single_coset(const BSSubset& s);

CosetSummary decompose(const BSSubset& s);

/// Whether some pair of elements fails to commute, i.e. <S> is non-abelian.
bool is_nonabelian(const BSSubset& s);

/// Sufficient condition for non-abelianness: at least two cosets, one of
/// which holds two or more elements.
bool spans_cosets_with_repeat(const BSSubset& s);

}  // namespace bsplus
