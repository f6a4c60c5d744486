#include "bsplus/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsplus {

namespace {

BSSubset::CosetMap collect(std::map<unsigned long, std::vector<Integer>>&& buckets) {
  BSSubset::CosetMap out;
  for (auto& [m, xs] : buckets) out.emplace(m, IntSet(std::move(xs)));
  return out;
}

void require_same_context(const BSSubset& s, const BSSubset& t) {
  if (!(s.context() == t.context())) {
    throw std::invalid_argument("product: subsets live in different BS(1,n)");
  }
}

}  // namespace

BSSubset::BSSubset(BSContext ctx, CosetMap cosets) : ctx_(ctx), cosets_(std::move(cosets)) {
  if (cosets_.empty()) throw std::invalid_argument("BSSubset: empty subset");
  for (const auto& [m, a] : cosets_) size_ += a.size();
}

BSSubset BSSubset::from_elements(BSContext ctx, std::span<const BSElement> elems) {
  if (elems.empty()) throw std::invalid_argument("BSSubset: empty element collection");
  std::map<unsigned long, std::vector<Integer>> buckets;
  for (const auto& g : elems) buckets[g.m].push_back(g.x);
  return BSSubset(ctx, collect(std::move(buckets)));
}

BSSubset BSSubset::single_coset(BSContext ctx, unsigned long m, IntSet a) {
  CosetMap cosets;
  cosets.emplace(m, std::move(a));
  return BSSubset(ctx, std::move(cosets));
}

bool BSSubset::contains(const BSElement& g) const {
  auto it = cosets_.find(g.m);
  return it != cosets_.end() && it->second.contains(g.x);
}

std::vector<BSElement> BSSubset::elements() const {
  std::vector<BSElement> out;
  out.reserve(size_);
  for (const auto& [m, a] : cosets_) {
    for (const auto& x : a) out.push_back({m, x});
  }
  return out;
}

BSSubset product(const BSSubset& s, const BSSubset& t) {
  require_same_context(s, t);
  const BSContext& ctx = s.context();
  std::map<unsigned long, std::vector<Integer>> buckets;
  for (const auto& g : s.elements()) {
    for (const auto& h : t.elements()) {
      BSElement gh = mul(ctx, g, h);
      buckets[gh.m].push_back(std::move(gh.x));
    }
  }
  return BSSubset(ctx, collect(std::move(buckets)));
}

BSSubset product_via_cosets(const BSSubset& s, const BSSubset& t) {
  require_same_context(s, t);
  const BSContext& ctx = s.context();
  std::map<unsigned long, std::vector<Integer>> buckets;
  for (const auto& [mi, ai] : s.cosets()) {
    for (const auto& [mj, bj] : t.cosets()) {
      IntSet part = sumset(dilate(ctx.power(mj), ai), bj);
      auto& bucket = buckets[mi + mj];
      bucket.insert(bucket.end(), part.begin(), part.end());
    }
  }
  return BSSubset(ctx, collect(std::move(buckets)));
}

std::size_t square_size(const BSSubset& s) { return product(s, s).size(); }

std::optional<std::size_t> square_size_single_coset(const BSSubset& s) {
  if (s.coset_count() != 1) return std::nullopt;
  const auto& [m, a] = *s.cosets().begin();
  const Integer coeffs[] = {s.context().power(m), Integer(1)};
  return dilate_sum(coeffs, a).size();
}

CosetSummary decompose(const BSSubset& s) {
  CosetSummary out;
  out.t = s.coset_count() - 1;
  for (const auto& [m, a] : s.cosets()) out.entries.emplace_back(m, a.size());
  return out;
}

bool is_nonabelian(const BSSubset& s) {
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!commutes(s.context(), elems[i], elems[j])) return true;
    }
  }
  return false;
}

bool spans_cosets_with_repeat(const BSSubset& s) {
  if (s.coset_count() < 2) return false;
  return std::any_of(s.cosets().begin(), s.cosets().end(),
                     [](const auto& entry) { return entry.second.size() >= 2; });
}

}  // namespace bsplus
