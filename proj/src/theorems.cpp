#include "bsplus/theorems.hpp"

#include "bsplus/text.hpp"

#include <array>
#include <stdexcept>

namespace bsplus {

namespace {

Integer count(std::size_t n) { return Integer(static_cast<unsigned long>(n)); }

Integer max_of(const Integer& a, const Integer& b) { return a >= b ? a : b; }

VerificationReport& violate(VerificationReport& rep, std::string why) {
  rep.verdict = Verdict::Violation;
  rep.witness.failing_instance = rep.instance;
  rep.witness.notes.push_back(std::move(why));
  return rep;
}

std::size_t dilate_pair_size(const IntSet& a, const Integer& r) {
  const Integer coeffs[] = {Integer(1), r};
  return dilate_sum(coeffs, a).size();
}

/// Lower bound with equality reported as extremal.
void grade_against(VerificationReport& rep, const Integer& value, const Integer& bound,
                   const char* bound_name) {
  if (value < bound) {
    violate(rep, std::string("value below ") + bound_name);
  } else {
    rep.verdict = value == bound ? Verdict::EqualityExtremal : Verdict::BoundHolds;
  }
}

}  // namespace

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Direct2: return "direct2";
    case TheoremId::ExtendedInverse: return "extended_inverse";
    case TheoremId::Classify3: return "classify3";
    case TheoremId::DirectR: return "direct_r";
    case TheoremId::Dilate4: return "dilate4";
    case TheoremId::GroupCoset: return "group_coset";
    case TheoremId::MainMonoid: return "main_monoid";
    case TheoremId::Chs: return "chs";
    case TheoremId::Lss: return "lss";
    case TheoremId::Example: return "example";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::BoundHolds: return "BoundHolds";
    case Verdict::EqualityExtremal: return "EqualityExtremal";
    case Verdict::StructureConfirmed: return "StructureConfirmed";
    case Verdict::HypothesisNotApplicable: return "HypothesisNotApplicable";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  static constexpr std::array ids = {
      TheoremId::Direct2,    TheoremId::ExtendedInverse, TheoremId::Classify3,
      TheoremId::DirectR,    TheoremId::Dilate4,         TheoremId::GroupCoset,
      TheoremId::MainMonoid, TheoremId::Chs,             TheoremId::Lss,
      TheoremId::Example};
  std::string key(name);
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  if (key == "main") return TheoremId::MainMonoid;
  if (key == "coset") return TheoremId::GroupCoset;
  for (TheoremId id : ids) {
    if (key == to_string(id)) return id;
  }
  return std::nullopt;
}

std::string ExtremalFamily::name() const {
  switch (tag) {
    case Tag::F1: return "F1";
    case Tag::F2: return "F2";
    case Tag::F3: return "F3(" + std::to_string(m) + ")";
    case Tag::NotExtremal: return "NotExtremal";
  }
  return "?";
}

void VerificationReport::record(std::string name, Integer value) {
  computed.emplace_back(std::move(name), std::move(value));
}

const Integer* VerificationReport::quantity(std::string_view name) const {
  for (const auto& [key, value] : computed) {
    if (key == name) return &value;
  }
  return nullptr;
}

IntSet family_f3(unsigned long m) {
  std::vector<Integer> elems;
  for (unsigned long j = 0; j <= m; ++j) {
    elems.emplace_back(3 * j);
    elems.emplace_back(3 * j + 1);
  }
  return IntSet(std::move(elems));
}

ExtremalFamily family_of(const IntSet& canonical) {
  using Tag = ExtremalFamily::Tag;
  if (canonical == IntSet{0, 1, 3}) return {Tag::F1, 0};
  if (canonical == IntSet{0, 1, 4}) return {Tag::F2, 0};
  if (canonical.size() % 2 == 0) {
    unsigned long m = canonical.size() / 2 - 1;
    if (canonical == family_f3(m)) return {Tag::F3, m};
  }
  return {};
}

VerificationReport check_direct2(const IntSet& a) {
  VerificationReport rep;
  rep.theorem = TheoremId::Direct2;
  rep.instance = "A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, 2));
  const Integer bound = 3 * k - 2;
  const ApAnalysis ap = ap_analysis(a);
  rep.record("k", k);
  rep.record("|A+2*A|", value);
  rep.record("3k-2", bound);
  rep.record("excess h", value - bound);

  if (value < bound) {
    violate(rep, "|A+2*A| < 3k-2");
  } else if (value == bound) {
    if (ap.is_ap) {
      rep.verdict = Verdict::EqualityExtremal;
      rep.witness.ap = ap.covering;
    } else {
      violate(rep, "equality |A+2*A| = 3k-2 for a set that is not an AP");
    }
  } else if (ap.is_ap) {
    violate(rep, "AP with |A+2*A| > 3k-2");
  } else {
    rep.verdict = Verdict::BoundHolds;
  }
  return rep;
}

VerificationReport check_extended_inverse(const IntSet& a) {
  if (a.size() < 3) throw std::invalid_argument("check_extended_inverse: requires |A| >= 3");
  VerificationReport rep;
  rep.theorem = TheoremId::ExtendedInverse;
  rep.instance = "A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, 2));
  const Integer h = value - (3 * k - 2);
  const ApAnalysis ap = ap_analysis(a);
  rep.record("k", k);
  rep.record("|A+2*A|", value);
  rep.record("3k-2", 3 * k - 2);
  rep.record("4k-4", 4 * k - 4);
  rep.record("excess h", h);
  rep.record("k+h", k + h);
  rep.record("2k-3", 2 * k - 3);
  rep.record("covering AP size", ap.covering.count);

  if (value >= 4 * k - 4) {
    rep.verdict = Verdict::HypothesisNotApplicable;
    return rep;
  }
  rep.witness.ap = ap.covering;
  if (h < 0) return violate(rep, "negative excess h");
  if (ap.covering.count > k + h) return violate(rep, "covering AP larger than k+h");
  if (k + h > 2 * k - 3) return violate(rep, "k+h exceeds 2k-3");
  if (h == 0) {
    if (!ap.is_ap) return violate(rep, "h = 0 but A is not an AP");
    rep.verdict = Verdict::EqualityExtremal;
  } else {
    rep.verdict = Verdict::StructureConfirmed;
  }
  return rep;
}

Dilate3Classification classify_dilate3(const IntSet& a) {
  VerificationReport rep;
  rep.theorem = TheoremId::Classify3;
  rep.instance = "A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, 3));
  const IntSet canonical = affine_canonical(a);
  rep.record("k", k);
  rep.record("|A+3*A|", value);

  if (a.size() == 1) {
    rep.record("max(4k-4,1)", Integer(1));
    if (value != 1) violate(rep, "singleton with |A+3*A| != 1");
    return {std::move(rep), {}};
  }

  const Integer bound = 4 * k - 4;
  rep.record("4k-4", bound);
  rep.record("excess over 4k-4", value - bound);
  const ExtremalFamily shape = family_of(canonical);
  rep.witness.notes.push_back("affine canonical form " + format_set(canonical));

  if (value < bound) {
    violate(rep, "|A+3*A| < 4k-4");
    return {std::move(rep), {}};
  }
  if (value == bound) {
    rep.witness.family = shape;
    if (shape.tag == ExtremalFamily::Tag::NotExtremal) {
      violate(rep, "equality outside the families F1, F2, F3(m)");
      return {std::move(rep), {}};
    }
    rep.verdict = Verdict::EqualityExtremal;
    return {std::move(rep), shape};
  }
  if (shape.tag != ExtremalFamily::Tag::NotExtremal) {
    rep.witness.family = shape;
    violate(rep, "member of " + shape.name() + " without equality");
    return {std::move(rep), {}};
  }
  rep.verdict = Verdict::BoundHolds;
  return {std::move(rep), {}};
}

VerificationReport check_direct_r(const IntSet& a, const Integer& r) {
  if (r < 3) throw std::invalid_argument("check_direct_r: requires r >= 3");
  VerificationReport rep;
  rep.theorem = TheoremId::DirectR;
  rep.instance = "r=" + to_string(r) + ", A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, r));
  const Integer bound = max_of(4 * k - 4, Integer(1));
  rep.record("k", k);
  rep.record("r", r);
  rep.record("|A+r*A|", value);
  rep.record("max(4k-4,1)", bound);
  rep.record("excess over 4k-4", value - (4 * k - 4));
  grade_against(rep, value, bound, "max(4k-4,1)");
  return rep;
}

VerificationReport check_dilate4_bound(const IntSet& a) {
  if (a.size() < 5) throw std::invalid_argument("check_dilate4_bound: requires |A| >= 5");
  VerificationReport rep;
  rep.theorem = TheoremId::Dilate4;
  rep.instance = "A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, 4));
  const Integer bound = 5 * k - 6;
  rep.record("k", k);
  rep.record("|A+4*A|", value);
  rep.record("5k-6", bound);
  grade_against(rep, value, bound, "5k-6");
  return rep;
}

VerificationReport check_group_coset(const BSContext& ctx, unsigned long m, const IntSet& a) {
  if (m == 0) throw std::invalid_argument("check_group_coset: m = 0 gives an abelian coset");
  VerificationReport rep;
  rep.theorem = TheoremId::GroupCoset;
  const BSSubset s = BSSubset::single_coset(ctx, m, a);
  rep.instance = "n=" + std::to_string(ctx.n()) + ", S=" + format_subset(s);

  const Integer k = count(a.size());
  const Integer elementwise = count(square_size(s));
  const Integer via_dilates = count(*square_size_single_coset(s));
  const Integer r = ctx.power(m);
  rep.record("k", k);
  rep.record("n^m", r);
  rep.record("|S^2|", elementwise);
  rep.record("|n^m*A+A|", via_dilates);
  if (elementwise != via_dilates) {
    violate(rep, "element-wise |S^2| disagrees with |n^m*A+A|");
    return rep;
  }
  const Integer& value = elementwise;

  if (r >= 3) {
    const Integer bound = max_of(4 * k - 4, Integer(1));
    rep.record("max(4k-4,1)", bound);
    grade_against(rep, value, bound, "max(4k-4,1)");
    return rep;
  }

  // n = 2, m = 1: S = b a^A.
  const Integer bound = 3 * k - 2;
  const Integer h = value - bound;
  const ApAnalysis ap = ap_analysis(a);
  rep.record("3k-2", bound);
  rep.record("excess h", h);
  rep.record("covering AP size", ap.covering.count);
  rep.witness.ap = ap.covering;
  if (value < bound) return violate(rep, "|S^2| < 3k-2");
  if (k <= 2 || h == 0) {
    if (!ap.is_ap) return violate(rep, "S is not a geometric progression");
    if (h != 0) return violate(rep, "k <= 2 but |S^2| != 3k-2");
    rep.verdict = Verdict::EqualityExtremal;
    return rep;
  }
  if (ap.is_ap) return violate(rep, "geometric progression with |S^2| > 3k-2");
  if (value < 4 * k - 4) {
    if (ap.covering.count > k + h) return violate(rep, "covering progression larger than k+h");
    if (k + h > 2 * k - 3) return violate(rep, "k+h exceeds 2k-3");
    rep.verdict = Verdict::StructureConfirmed;
    return rep;
  }
  rep.verdict = Verdict::BoundHolds;
  return rep;
}

VerificationReport check_main_monoid(const BSSubset& s) {
  if (s.context().n() != 2) throw std::invalid_argument("check_main_monoid: requires n = 2");
  if (!is_nonabelian(s)) throw std::invalid_argument("check_main_monoid: S generates an abelian group");
  VerificationReport rep;
  rep.theorem = TheoremId::MainMonoid;
  rep.instance = "n=2, S=" + format_subset(s);
  const Integer k = count(s.size());
  const Integer value = count(square_size(s));
  const Integer h = value - (3 * k - 2);
  rep.record("k", k);
  rep.record("|S^2|", value);
  rep.record("3k-2", 3 * k - 2);
  rep.record("excess h", h);
  rep.record("cosets", count(s.coset_count()));

  if (h < 0) return violate(rep, "|S^2| < 3k-2");
  // |S^2| < 3.5k - 4, kept integral.
  if (!(2 * value < 7 * k - 8)) {
    rep.verdict = Verdict::HypothesisNotApplicable;
    return rep;
  }
  if (s.coset_count() != 1 || s.cosets().begin()->first != 1) {
    return violate(rep, "small doubling but S is not of the form b a^A");
  }
  const ApAnalysis ap = ap_analysis(s.cosets().begin()->second);
  rep.witness.ap = ap.covering;
  rep.record("covering AP size", ap.covering.count);
  rep.record("k+h", k + h);
  if (ap.covering.count > k + h) return violate(rep, "covering AP larger than k+h");
  if (!(2 * (k + h) < 3 * k - 4)) return violate(rep, "k+h not below 1.5k-2");
  if (h == 0 && !ap.is_ap) return violate(rep, "|S^2| = 3k-2 but A is not an AP");
  rep.verdict = Verdict::StructureConfirmed;
  return rep;
}

VerificationReport check_lss(const IntSet& a, const IntSet& b) {
  VerificationReport rep;
  rep.theorem = TheoremId::Lss;
  rep.instance = "A=" + format_set(a) + ", B=" + format_set(b);
  const LssVerdict v = lss_check(a, b);
  rep.record("delta", Integer(v.delta));
  rep.record("|A+B|", v.actual);
  rep.record("bound", v.bound);
  rep.witness.notes.push_back(std::string("clause ") + to_string(v.clause));
  if (v.clause == LssClause::NotApplicable) {
    rep.verdict = Verdict::HypothesisNotApplicable;
  } else {
    grade_against(rep, v.actual, v.bound, "the applicable clause bound");
  }
  return rep;
}

BSSubset build_example(int id, unsigned long param) {
  const BSContext ctx(2);
  BSSubset::CosetMap cosets;
  switch (id) {
    case 1:  // a^{0..k-2} u {b}
      if (param < 4 || param % 2 != 0) {
        throw std::invalid_argument("build_example(1): k must be even and >= 4");
      }
      cosets.emplace(0, IntSet::interval(param - 1));
      cosets.emplace(1, IntSet{0});
      break;
    case 2:  // {1, a} u {b, ..., b^t}
      if (param < 2) throw std::invalid_argument("build_example(2): t must be >= 2");
      cosets.emplace(0, IntSet{0, 1});
      for (unsigned long j = 1; j <= param; ++j) cosets.emplace(j, IntSet{0});
      break;
    case 3:  // {1, b, ..., b^{t-1}} u {b^t, b^t a}
      if (param < 2) throw std::invalid_argument("build_example(3): t must be >= 2");
      for (unsigned long j = 0; j < param; ++j) cosets.emplace(j, IntSet{0});
      cosets.emplace(param, IntSet{0, 1});
      break;
    case 4:  // {b, ..., b^{t-1}} u {b^t a}
      if (param < 2) throw std::invalid_argument("build_example(4): t must be >= 2");
      for (unsigned long j = 1; j < param; ++j) cosets.emplace(j, IntSet{0});
      cosets.emplace(param, IntSet{1});
      break;
    default:
      throw std::invalid_argument("build_example: id must be 1, 2, 3 or 4");
  }
  return BSSubset(ctx, std::move(cosets));
}

std::size_t example_square_size(int id, unsigned long param) {
  switch (id) {
    case 1: return (7 * param - 8) / 2;       // 3.5k - 4
    case 2:
    case 3: return 4 * (param + 2) - 5;       // k = t + 2
    case 4: return 4 * param - 4;             // k = t
    default: throw std::invalid_argument("example_square_size: id must be 1, 2, 3 or 4");
  }
}

VerificationReport check_example(int id, unsigned long param) {
  const BSSubset s = build_example(id, param);
  VerificationReport rep;
  rep.theorem = TheoremId::Example;
  rep.instance = "example " + std::to_string(id) + (id == 1 ? ", k=" : ", t=") +
                 std::to_string(param) + ", S=" + format_subset(s);
  const Integer k = count(s.size());
  const Integer value = count(square_size(s));
  const Integer expected = count(example_square_size(id, param));
  rep.record("k", k);
  rep.record("|S^2|", value);
  rep.record(id == 1 ? "3.5k-4" : id == 4 ? "4k-4" : "4k-5", expected);
  if (!is_nonabelian(s)) {
    violate(rep, "construction is abelian");
  } else if (value != expected) {
    violate(rep, "|S^2| differs from the closed form");
  } else {
    rep.verdict = Verdict::EqualityExtremal;
  }
  return rep;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

IntSet build_chs(unsigned long p, unsigned long m) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("build_chs: p must be an odd prime");
  std::vector<Integer> elems;
  for (unsigned long j = 0; j <= m; ++j) {
    for (unsigned long i = 0; i <= (p - 1) / 2; ++i) elems.emplace_back(Integer(p) * j + i);
  }
  return IntSet(std::move(elems));
}

VerificationReport check_chs(unsigned long p, unsigned long m) {
  const IntSet a = build_chs(p, m);
  VerificationReport rep;
  rep.theorem = TheoremId::Chs;
  rep.instance = "p=" + std::to_string(p) + ", m=" + std::to_string(m) + ", A=" + format_set(a);
  const Integer k = count(a.size());
  const Integer value = count(dilate_pair_size(a, p));
  const Integer pp(p);
  Integer ceil_term;
  mpz_cdiv_q_ui(ceil_term.get_mpz_t(), Integer(pp * (pp + 2)).get_mpz_t(), 4);
  const Integer reference = (pp + 1) * k - ceil_term;
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), p - 1);
  const Integer threshold = 3 * (pp - 1) * (pp - 1) * factorial;
  rep.record("k", k);
  rep.record("|A+p*A|", value);
  rep.record("reference (p+1)k-ceil(p(p+2)/4)", reference);
  rep.record("hypothesis threshold 3(p-1)^2(p-1)!", threshold);
  rep.witness.notes.push_back(
      "reference term read as ceil(p(p+2)/4); the printed statement uses k in place of p");

  if (p == 3) {
    // Equality family F3(m) for the dilate-3 problem, valid at every size.
    if (value != 4 * k - 4) return violate(rep, "|A+3*A| != 4k-4");
    rep.witness.family = ExtremalFamily{ExtremalFamily::Tag::F3, m};
    rep.verdict = Verdict::EqualityExtremal;
    return rep;
  }
  if (k < threshold) {
    rep.verdict = Verdict::HypothesisNotApplicable;
    return rep;
  }
  if (value != reference) return violate(rep, "|A+p*A| differs from the reference value");
  rep.verdict = Verdict::EqualityExtremal;
  return rep;
}

}  // namespace bsplus
