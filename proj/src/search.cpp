#include "bsplus/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace bsplus {

namespace {

/// Runs fn(0..count-1) on up to `jobs` threads; results come back in shard
/// order so the merge is independent of scheduling.
template <class Result, class Fn>
std::vector<Result> run_shards(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < count;) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1u), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Tally {
  std::size_t checked = 0;
  std::vector<VerificationReport> violations;
  std::optional<Integer> min_value;
  std::set<IntSet> achievers;
  std::vector<VerificationReport> structure;
  std::vector<ExtremalWitness> witnesses;
  std::map<std::string, std::size_t> verdicts;

  void observe_value(const IntSet& a, const Integer& value) {
    if (!min_value || value < *min_value) {
      min_value = value;
      achievers.clear();
    }
    if (value == *min_value) achievers.insert(affine_canonical(a));
  }
};

void merge_extremal(SearchOutcome& out, std::size_t k, std::vector<Tally>& shards) {
  std::optional<Integer> best;
  for (const auto& s : shards) {
    if (s.min_value && (!best || *s.min_value < *best)) best = s.min_value;
  }
  if (!best) return;
  std::set<IntSet> achievers;
  for (auto& s : shards) {
    if (s.min_value && *s.min_value == *best) achievers.insert(s.achievers.begin(), s.achievers.end());
  }
  for (const auto& a : achievers) out.extremal_witnesses.push_back({k, a, std::nullopt, *best});
}

void merge_counts(SearchOutcome& out, std::vector<Tally>& shards) {
  for (auto& s : shards) {
    out.instances_checked += s.checked;
    for (auto& v : s.violations) out.violations.push_back(std::move(v));
    for (auto& r : s.structure) out.structure_reports.push_back(std::move(r));
    for (auto& w : s.witnesses) out.extremal_witnesses.push_back(std::move(w));
    for (const auto& [name, c] : s.verdicts) out.verdict_counts[name] += c;
  }
}

void require_box(std::size_t k, std::int64_t max_length) {
  if (k < 1) throw std::invalid_argument("infeasible box: k must be at least 1");
  if (max_length < static_cast<std::int64_t>(k) - 1) {
    throw std::invalid_argument("infeasible box: max length " + std::to_string(max_length) +
                                " cannot hold a set of size " + std::to_string(k));
  }
}

/// Enumerates one k across all shards, calling visit(tally, set) per set.
template <class Visit>
std::vector<Tally> sweep_normal_sets(std::size_t k, std::int64_t max_length, unsigned jobs,
                                     Visit visit) {
  const auto keys = NormalSetEnumerator::shard_keys(k, max_length);
  const std::size_t shards = keys.empty() ? 1 : keys.size();
  return run_shards<Tally>(shards, jobs, [&](std::size_t i) {
    Tally tally;
    NormalSetEnumerator it = keys.empty() ? NormalSetEnumerator(k, max_length)
                                          : NormalSetEnumerator(k, max_length, keys[i]);
    while (auto a = it.next()) visit(tally, *a);
    return tally;
  });
}

}  // namespace

// NormalSetEnumerator ------------------------------------------------------

NormalSetEnumerator::NormalSetEnumerator(std::size_t k, std::int64_t max_length)
    : k_(k), max_length_(max_length) {
  require_box(k, max_length);
}

NormalSetEnumerator::NormalSetEnumerator(std::size_t k, std::int64_t max_length,
                                         std::int64_t second)
    : NormalSetEnumerator(k, max_length) {
  if (k < 2) throw std::invalid_argument("NormalSetEnumerator: sharding needs k >= 2");
  fixed_second_ = second;
}

std::vector<std::int64_t> NormalSetEnumerator::shard_keys(std::size_t k, std::int64_t max_length) {
  require_box(k, max_length);
  std::vector<std::int64_t> keys;
  if (k < 2) return keys;
  const std::int64_t last = max_length - static_cast<std::int64_t>(k) + 2;
  for (std::int64_t s = 1; s <= last; ++s) keys.push_back(s);
  return keys;
}

bool NormalSetEnumerator::advance() {
  const std::size_t c = k_ - 1;
  if (!started_) {
    started_ = true;
    if (c == 0) return true;
    const std::int64_t first = fixed_second_.value_or(1);
    if (first < 1 || first + static_cast<std::int64_t>(c) - 1 > max_length_) return false;
    picks_.resize(c);
    std::iota(picks_.begin(), picks_.end(), first);
    return true;
  }
  if (c == 0) return false;
  const std::size_t lowest = fixed_second_ ? 1 : 0;
  for (std::size_t i = c; i-- > lowest;) {
    const std::int64_t cap = max_length_ - static_cast<std::int64_t>(c - 1 - i);
    if (picks_[i] < cap) {
      ++picks_[i];
      for (std::size_t j = i + 1; j < c; ++j) picks_[j] = picks_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<IntSet> NormalSetEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    std::int64_t g = 0;
    for (std::int64_t x : picks_) g = std::gcd(g, x);
    if (k_ >= 2 && g != 1) continue;
    std::vector<Integer> elems;
    elems.reserve(k_);
    elems.emplace_back(0);
    for (std::int64_t x : picks_) elems.emplace_back(static_cast<long>(x));
    return IntSet::from_sorted_unique(std::move(elems));
  }
  return std::nullopt;
}

// BSSubsetEnumerator -------------------------------------------------------

namespace {

std::vector<BSElement> ground_box(const SearchConfig& cfg) {
  if (cfg.x_max < 0) throw std::invalid_argument("infeasible configuration: x_max must be >= 0");
  std::vector<BSElement> ground;
  for (unsigned long m = 0; m <= cfg.m_max; ++m) {
    for (std::int64_t x = 0; x <= cfg.x_max; ++x) ground.push_back({m, Integer(static_cast<long>(x))});
  }
  return ground;
}

}  // namespace

BSSubsetEnumerator::BSSubsetEnumerator(const SearchConfig& cfg)
    : ctx_(cfg.n),
      nonabelian_only_(cfg.nonabelian_only),
      ground_(ground_box(cfg)),
      k_(cfg.k_min),
      k_last_(cfg.k_max) {
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max || cfg.k_max > ground_.size()) {
    throw std::invalid_argument("infeasible configuration: need 1 <= k_min <= k_max <= " +
                                std::to_string(ground_.size()));
  }
}

BSSubsetEnumerator::BSSubsetEnumerator(const SearchConfig& cfg, std::size_t k, std::size_t first)
    : BSSubsetEnumerator(cfg) {
  k_ = k;
  k_last_ = k;
  fixed_first_ = first;
}

bool BSSubsetEnumerator::advance() {
  const std::size_t total = ground_.size();
  if (!started_) {
    started_ = true;
    const std::size_t first = fixed_first_.value_or(0);
    if (first + k_ > total) return false;
    idx_.resize(k_);
    std::iota(idx_.begin(), idx_.end(), first);
    return true;
  }
  const std::size_t lowest = fixed_first_ ? 1 : 0;
  for (std::size_t i = k_; i-- > lowest;) {
    if (idx_[i] < total - k_ + i) {
      ++idx_[i];
      for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
      return true;
    }
  }
  if (fixed_first_ || k_ >= k_last_) return false;
  ++k_;
  idx_.resize(k_);
  std::iota(idx_.begin(), idx_.end(), std::size_t{0});
  return true;
}

std::optional<BSSubset> BSSubsetEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    std::vector<BSElement> elems;
    elems.reserve(idx_.size());
    for (std::size_t i : idx_) elems.push_back(ground_[i]);
    BSSubset s = BSSubset::from_elements(ctx_, elems);
    if (nonabelian_only_ && !is_nonabelian(s)) continue;
    return s;
  }
  return std::nullopt;
}

// Searches -----------------------------------------------------------------

const char* to_string(IntegerCheck c) {
  switch (c) {
    case IntegerCheck::Direct2: return "direct2";
    case IntegerCheck::ExtendedInverse: return "extended_inverse";
    case IntegerCheck::DirectR: return "direct_r";
    case IntegerCheck::Dilate4: return "dilate4";
    case IntegerCheck::Classify3: return "classify3";
  }
  return "?";
}

std::optional<IntegerCheck> parse_integer_check(std::string_view name) {
  auto id = parse_theorem_id(name);
  if (!id) return std::nullopt;
  switch (*id) {
    case TheoremId::Direct2: return IntegerCheck::Direct2;
    case TheoremId::ExtendedInverse: return IntegerCheck::ExtendedInverse;
    case TheoremId::DirectR: return IntegerCheck::DirectR;
    case TheoremId::Dilate4: return IntegerCheck::Dilate4;
    case TheoremId::Classify3: return IntegerCheck::Classify3;
    default: return std::nullopt;
  }
}

SearchOutcome exhaustive_verify_integer(IntegerCheck check, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (check == IntegerCheck::DirectR && cfg.r < 3) {
    throw std::invalid_argument("direct_r search needs r >= 3");
  }
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max) {
    throw std::invalid_argument("infeasible box: need 1 <= k_min <= k_max");
  }
  require_box(cfg.k_max, cfg.max_length);

  SearchOutcome out;
  out.check = to_string(check);
  out.config = cfg;
  const Integer r(cfg.r);
  std::size_t k_lo = cfg.k_min;
  if (check == IntegerCheck::ExtendedInverse) k_lo = std::max<std::size_t>(k_lo, 3);
  if (check == IntegerCheck::Dilate4) k_lo = std::max<std::size_t>(k_lo, 5);

  auto run = [&](const IntSet& a) -> std::pair<VerificationReport, Integer> {
    VerificationReport rep;
    const char* key = "";
    switch (check) {
      case IntegerCheck::Direct2: rep = check_direct2(a), key = "|A+2*A|"; break;
      case IntegerCheck::ExtendedInverse: rep = check_extended_inverse(a), key = "|A+2*A|"; break;
      case IntegerCheck::DirectR: rep = check_direct_r(a, r), key = "|A+r*A|"; break;
      case IntegerCheck::Dilate4: rep = check_dilate4_bound(a), key = "|A+4*A|"; break;
      case IntegerCheck::Classify3: rep = classify_dilate3(a).report, key = "|A+3*A|"; break;
    }
    Integer value = *rep.quantity(key);
    return {std::move(rep), std::move(value)};
  };

  for (std::size_t k = k_lo; k <= cfg.k_max; ++k) {
    auto shards = sweep_normal_sets(k, cfg.max_length, cfg.jobs, [&](Tally& t, const IntSet& a) {
      auto [rep, value] = run(a);
      ++t.checked;
      ++t.verdicts[to_string(rep.verdict)];
      t.observe_value(a, value);
      if (rep.violated()) t.violations.push_back(std::move(rep));
    });
    merge_counts(out, shards);
    merge_extremal(out, k, shards);
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

SearchOutcome find_extremal(std::size_t k, unsigned long r, std::int64_t max_length, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  if (r < 2) throw std::invalid_argument("find_extremal: r must be at least 2");
  require_box(k, max_length);

  SearchOutcome out;
  out.check = "extremal";
  out.config.k_min = out.config.k_max = k;
  out.config.r = r;
  out.config.max_length = max_length;
  out.config.jobs = jobs;
  const Integer coeffs[] = {Integer(1), Integer(r)};
  auto shards = sweep_normal_sets(k, max_length, jobs, [&](Tally& t, const IntSet& a) {
    ++t.checked;
    t.observe_value(a, Integer(static_cast<unsigned long>(dilate_sum(coeffs, a).size())));
  });
  merge_counts(out, shards);
  merge_extremal(out, k, shards);
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

SearchOutcome exhaustive_verify_monoid(const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.n != 2) throw std::invalid_argument("monoid verification is defined for n = 2");
  SearchConfig box = cfg;
  box.nonabelian_only = true;
  const std::size_t ground = BSSubsetEnumerator(box).ground().size();

  SearchOutcome out;
  out.check = "main_monoid";
  out.config = box;
  for (std::size_t k = box.k_min; k <= box.k_max; ++k) {
    const std::size_t shards_count = ground - k + 1;
    auto shards = run_shards<Tally>(shards_count, box.jobs, [&](std::size_t first) {
      Tally t;
      BSSubsetEnumerator it(box, k, first);
      while (auto s = it.next()) {
        VerificationReport rep = check_main_monoid(*s);
        ++t.checked;
        ++t.verdicts[to_string(rep.verdict)];
        if (rep.verdict == Verdict::StructureConfirmed) {
          t.witnesses.push_back({k, std::nullopt, *s, *rep.quantity("|S^2|")});
          t.structure.push_back(rep);
        }
        if (rep.violated()) t.violations.push_back(std::move(rep));
      }
      return t;
    });
    merge_counts(out, shards);
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace bsplus
