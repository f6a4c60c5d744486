#include "bsplus/intset.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace bsplus {

IntSet::IntSet(std::vector<Integer> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("IntSet: empty set");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet::IntSet(std::initializer_list<long> elements)
    : IntSet(std::vector<Integer>(elements.begin(), elements.end())) {}

IntSet IntSet::from_sorted_unique(std::vector<Integer> elements) {
  IntSet out;
  out.elems_ = std::move(elements);
  if (out.elems_.empty()) throw std::invalid_argument("IntSet: empty set");
  return out;
}

IntSet IntSet::interval(std::size_t count) {
  if (count == 0) throw std::invalid_argument("IntSet::interval: count must be positive");
  std::vector<Integer> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.emplace_back(static_cast<unsigned long>(i));
  return from_sorted_unique(std::move(v));
}

bool IntSet::contains(const Integer& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool operator<(const IntSet& a, const IntSet& b) {
  return std::lexicographical_compare(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                      b.elems_.end());
}

bool ApDescription::contains(const Integer& x) const {
  if (difference == 0) return x == start;
  Integer offset = x - start;
  if (offset < 0 || floor_mod(offset, difference) != 0) return false;
  return exact_div(offset, difference) < count;
}

const char* to_string(LssClause clause) {
  switch (clause) {
    case LssClause::CaseI: return "CaseI";
    case LssClause::CaseII: return "CaseII";
    case LssClause::NotApplicable: return "NotApplicable";
  }
  return "?";
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  // Translates outer[i] + inner are each sorted; merge them with a heap.
  const IntSet& outer = a.size() <= b.size() ? a : b;
  const IntSet& inner = a.size() <= b.size() ? b : a;

  struct Cursor {
    Integer value;
    std::size_t row;
    std::size_t col;
  };
  auto later = [](const Cursor& x, const Cursor& y) { return x.value > y.value; };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < outer.size(); ++i) heap.push({outer[i] + inner[0], i, 0});

  std::vector<Integer> out;
  out.reserve(outer.size() + inner.size());
  while (!heap.empty()) {
    Cursor top = heap.top();
    heap.pop();
    if (out.empty() || out.back() != top.value) out.push_back(top.value);
    if (top.col + 1 < inner.size()) {
      heap.push({outer[top.row] + inner[top.col + 1], top.row, top.col + 1});
    }
  }
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet dilate(const Integer& r, const IntSet& a) {
  if (r < 1) throw std::invalid_argument("dilate: coefficient must be positive");
  std::vector<Integer> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(r * x);
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet dilate_sum(std::span<const Integer> coeffs, const IntSet& a) {
  if (coeffs.empty()) throw std::invalid_argument("dilate_sum: empty coefficient list");
  IntSet acc = dilate(coeffs[0], a);
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = sumset(acc, dilate(coeffs[i], a));
  return acc;
}

IntSet dilate_sum(std::initializer_list<long> coeffs, const IntSet& a) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return dilate_sum(std::span<const Integer>(c), a);
}

IntSet reflect(const IntSet& a) {
  std::vector<Integer> out;
  out.reserve(a.size());
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) {
    out.emplace_back(a.max() - *it);
  }
  return IntSet::from_sorted_unique(std::move(out));
}

IntSet affine_image(const IntSet& a, const Integer& u, const Integer& v) {
  if (u == 0) throw std::invalid_argument("affine_image: zero multiplier");
  std::vector<Integer> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(u * x + v);
  if (u < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted_unique(std::move(out));
}

namespace {

Integer difference_gcd(const IntSet& a) {
  Integer g = 0;
  for (std::size_t i = 1; i < a.size(); ++i) g = gcd(g, a[i] - a.min());
  return g;
}

}  // namespace

SetStats stats(const IntSet& a) {
  SetStats s;
  s.size = a.size();
  s.min = a.min();
  s.max = a.max();
  s.length = a.max() - a.min();
  s.holes = s.length + 1 - Integer(static_cast<unsigned long>(a.size()));
  if (a.size() >= 2) s.diff_gcd = difference_gcd(a);
  return s;
}

NormalizationWitness normalize(const IntSet& a) {
  if (a.size() == 1) return {IntSet{0}, a.min(), Integer(1)};
  Integer d = difference_gcd(a);
  std::vector<Integer> out;
  out.reserve(a.size());
  for (const auto& x : a) out.emplace_back(exact_div(x - a.min(), d));
  return {IntSet::from_sorted_unique(std::move(out)), a.min(), d};
}

ApAnalysis ap_analysis(const IntSet& a) {
  if (a.size() == 1) return {true, {a.min(), Integer(0), Integer(1)}};
  Integer d = difference_gcd(a);
  Integer count = exact_div(a.max() - a.min(), d) + 1;
  bool is_ap = count == static_cast<unsigned long>(a.size());
  return {is_ap, {a.min(), d, count}};
}

std::vector<ResidueClass> residue_split(const IntSet& a, const Integer& r) {
  if (r < 2) throw std::invalid_argument("residue_split: modulus must be at least 2");
  std::vector<std::pair<Integer, Integer>> keyed;  // (residue, element)
  keyed.reserve(a.size());
  for (const auto& x : a) keyed.emplace_back(floor_mod(x, r), x);
  // Stable sort keeps elements increasing within each class.
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<ResidueClass> out;
  std::size_t i = 0;
  while (i < keyed.size()) {
    std::size_t j = i;
    std::vector<Integer> members;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) members.push_back(keyed[j++].second);
    out.push_back({keyed[i].first, IntSet::from_sorted_unique(std::move(members))});
    i = j;
  }
  return out;
}

IntSet reduced_class(const IntSet& cls, const Integer& r) {
  std::vector<Integer> out;
  out.reserve(cls.size());
  for (const auto& x : cls) {
    Integer shifted = x - cls.min();
    if (floor_mod(shifted, r) != 0) {
      throw std::invalid_argument("reduced_class: elements lie in different residue classes");
    }
    out.emplace_back(exact_div(shifted, r));
  }
  return IntSet::from_sorted_unique(std::move(out));
}

std::vector<std::size_t> residue_decomposition_sizes(const IntSet& a, const Integer& r) {
  std::vector<std::size_t> sizes;
  for (const auto& cls : residue_split(a, r)) {
    sizes.push_back(sumset(reduced_class(cls.members, r), a).size());
  }
  return sizes;
}

IntSet affine_canonical(const IntSet& a) {
  IntSet direct = normalize(a).normal;
  IntSet mirrored = normalize(reflect(a)).normal;
  return mirrored < direct ? mirrored : direct;
}

LssVerdict lss_check(const IntSet& a, const IntSet& b) {
  if (a.min() != 0 || b.min() != 0) {
    throw std::invalid_argument("lss_check: both sets must be subsets of N containing 0");
  }
  const Integer& len_a = a.max();
  const Integer& len_b = b.max();
  const Integer ka(static_cast<unsigned long>(a.size()));
  const Integer kb(static_cast<unsigned long>(b.size()));

  LssVerdict v;
  v.delta = len_a == len_b ? 1 : 0;
  v.actual = Integer(static_cast<unsigned long>(sumset(a, b).size()));
  const Integer longest = len_a >= len_b ? len_a : len_b;
  const bool gcd_one = a.size() >= 2 && difference_gcd(a) == 1;

  if (len_a == longest && len_a >= ka + kb - 1 - v.delta && gcd_one) {
    v.clause = LssClause::CaseI;
    v.bound = ka + 2 * kb - 2 - v.delta;
  } else if (longest <= ka + kb - 2 - v.delta) {
    v.clause = LssClause::CaseII;
    // The longer summand's length carries the bound. Only on a tie may
    // either side be used, so the larger of the two is taken there.
    Integer via_a = len_a + kb;
    Integer via_b = len_b + ka;
    if (len_a > len_b) {
      v.bound = via_a;
    } else if (len_b > len_a) {
      v.bound = via_b;
    } else {
      v.bound = via_a >= via_b ? via_a : via_b;
    }
  } else {
    v.clause = LssClause::NotApplicable;
    v.bound = ka + kb - 1;
  }
  return v;
}

}  // namespace bsplus
