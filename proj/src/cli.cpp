#include "bsplus/cli.hpp"

#include "bsplus/json.hpp"
#include "bsplus/search.hpp"
#include "bsplus/text.hpp"
#include "bsplus/theorems.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bsplus {

namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> sets;
  std::string subset;
  std::string coeffs;
  std::vector<std::string> elements;
  std::string target;
  unsigned long n = 2;
  unsigned long r = 3;
  unsigned long m = 1;
  unsigned long p = 3;
  int id = 0;
  unsigned long param = 0;
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::int64_t max_length = 12;
  unsigned long m_max = 2;
  std::int64_t x_max = 5;
  unsigned jobs = 1;
  std::size_t limit = 100;
  std::string format = "table";
};

/// What a command produced, before rendering.
struct Emission {
  json config = json::object();
  json result;
  std::string table;
  int code = kExitOk;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

IntSet one_set(const Options& o) {
  if (o.sets.size() != 1) throw UsageError("expected exactly one --set");
  return parse_set(o.sets[0]);
}

std::pair<IntSet, IntSet> two_sets(const Options& o) {
  if (o.sets.size() != 2) throw UsageError("expected exactly two --set options");
  return {parse_set(o.sets[0]), parse_set(o.sets[1])};
}

std::string render_report(const VerificationReport& rep) {
  std::ostringstream os;
  os << to_string(rep.theorem) << ": " << to_string(rep.verdict) << "\n";
  os << "  instance: " << rep.instance << "\n";
  for (const auto& [name, value] : rep.computed) os << "  " << name << " = " << value << "\n";
  const Witness& w = rep.witness;
  if (w.ap) {
    os << "  progression: start " << w.ap->start << ", difference " << w.ap->difference
       << ", size " << w.ap->count << "\n";
  }
  if (w.family) os << "  family: " << w.family->name() << "\n";
  for (const auto& note : w.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string render_outcome(const SearchOutcome& out, std::size_t limit) {
  std::ostringstream os;
  os << "search " << out.check << ": " << out.instances_checked << " instances, "
     << out.violations.size() << " violations, " << out.elapsed.count() << " ms\n";
  for (const auto& [verdict, c] : out.verdict_counts) os << "  " << verdict << ": " << c << "\n";
  for (const auto& v : out.violations) os << render_report(v);
  const std::size_t shown = std::min(limit, out.extremal_witnesses.size());
  os << "witnesses (" << shown << " of " << out.extremal_witnesses.size() << "):\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& w = out.extremal_witnesses[i];
    os << "  k=" << w.k << " value=" << w.value << " "
       << (w.set ? format_set(*w.set) : format_subset(*w.subset)) << "\n";
  }
  return os.str();
}

void emit_report(Emission& e, const VerificationReport& rep) {
  e.result = to_json(rep);
  e.table = render_report(rep);
  if (rep.violated()) e.code = kExitViolation;
}

Emission cmd_sumset(const Options& o) {
  auto [a, b] = two_sets(o);
  IntSet c = sumset(a, b);
  Emission e;
  e.config = {{"sets", o.sets}};
  e.result = {{"set", format_set(c)}, {"size", c.size()}};
  e.table = format_set(c) + "\nsize " + std::to_string(c.size()) + "\n";
  return e;
}

Emission cmd_dilate_sum(const Options& o) {
  if (o.coeffs.empty()) throw UsageError("--coeffs is required");
  const auto coeffs = parse_integer_list(o.coeffs);
  IntSet a = one_set(o);
  IntSet c = dilate_sum(coeffs, a);
  Emission e;
  e.config = {{"coeffs", o.coeffs}, {"set", format_set(a)}};
  e.result = {{"set", format_set(c)}, {"size", c.size()}};
  e.table = format_set(c) + "\nsize " + std::to_string(c.size()) + "\n";
  return e;
}

Emission cmd_bs_mul(const Options& o) {
  if (o.elements.size() != 2) throw UsageError("bs-mul takes exactly two elements");
  const BSContext ctx(o.n);
  BSElement gh = mul(ctx, parse_element(o.elements[0]), parse_element(o.elements[1]));
  Emission e;
  e.config = {{"n", o.n}, {"elements", o.elements}};
  e.result = {{"product", format_element(gh)}};
  e.table = format_element(gh) + "\n";
  return e;
}

Emission cmd_square(const Options& o) {
  if (o.subset.empty()) throw UsageError("--subset is required");
  const BSContext ctx(o.n);
  const BSSubset s = parse_subset(ctx, o.subset);
  const BSSubset sq = product(s, s);
  Emission e;
  e.config = {{"n", o.n}, {"subset", format_subset(s)}};
  json cosets = json::array();
  for (const auto& [m, a] : sq.cosets()) cosets.push_back({{"m", m}, {"size", a.size()}});
  e.result = {{"square", format_subset(sq)}, {"size", sq.size()}, {"cosets", cosets}};
  std::ostringstream os;
  os << "S^2 = " << format_subset(sq) << "\n|S^2| = " << sq.size() << "\n";
  if (auto formula = square_size_single_coset(s)) {
    e.result["single_coset_formula_size"] = *formula;
    os << "|n^m*A+A| = " << *formula << "\n";
    if (*formula != sq.size()) {
      os << "VIOLATION: element-wise and dilate-formula sizes differ\n";
      e.code = kExitViolation;
    }
  }
  e.table = os.str();
  return e;
}

Emission cmd_verify(const Options& o) {
  const auto id = parse_theorem_id(o.target);
  if (!id) throw UsageError("unknown theorem '" + o.target + "'");
  Emission e;
  e.config = {{"theorem", to_string(*id)}};
  switch (*id) {
    case TheoremId::Direct2:
      emit_report(e, check_direct2(one_set(o)));
      break;
    case TheoremId::ExtendedInverse:
      emit_report(e, check_extended_inverse(one_set(o)));
      break;
    case TheoremId::Classify3:
      emit_report(e, classify_dilate3(one_set(o)).report);
      break;
    case TheoremId::DirectR:
      e.config["r"] = o.r;
      emit_report(e, check_direct_r(one_set(o), Integer(o.r)));
      break;
    case TheoremId::Dilate4:
      emit_report(e, check_dilate4_bound(one_set(o)));
      break;
    case TheoremId::GroupCoset:
      e.config["n"] = o.n;
      e.config["m"] = o.m;
      emit_report(e, check_group_coset(BSContext(o.n), o.m, one_set(o)));
      break;
    case TheoremId::MainMonoid: {
      if (o.subset.empty()) throw UsageError("--subset is required");
      e.config["n"] = o.n;
      emit_report(e, check_main_monoid(parse_subset(BSContext(o.n), o.subset)));
      break;
    }
    case TheoremId::Lss: {
      auto [a, b] = two_sets(o);
      emit_report(e, check_lss(a, b));
      break;
    }
    case TheoremId::Chs:
      e.config["p"] = o.p;
      e.config["m"] = o.m;
      emit_report(e, check_chs(o.p, o.m));
      break;
    case TheoremId::Example:
      e.config["id"] = o.id;
      e.config["param"] = o.param;
      emit_report(e, check_example(o.id, o.param));
      break;
  }
  return e;
}

Emission cmd_classify(const Options& o) {
  const IntSet a = one_set(o);
  const auto cls = classify_dilate3(a);
  Emission e;
  e.config = {{"set", format_set(a)}};
  emit_report(e, cls.report);
  e.result["family"] = cls.family.name();
  e.result["canonical"] = format_set(affine_canonical(a));
  e.table += "family: " + cls.family.name() + "\n";
  return e;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.k_min = o.k_min;
  cfg.k_max = std::max(o.k_min, o.k_max);
  cfg.max_length = o.max_length;
  cfg.r = o.r;
  cfg.n = o.n;
  cfg.m_max = o.m_max;
  cfg.x_max = o.x_max;
  cfg.jobs = std::max(o.jobs, 1u);
  return cfg;
}

Emission cmd_search(const Options& o) {
  const SearchConfig cfg = search_config(o);
  Emission e;
  e.config = to_json(cfg);
  e.config["check"] = o.target;
  e.config["limit"] = o.limit;

  std::vector<SearchOutcome> outcomes;
  if (o.target == "main" || o.target == "main-monoid" || o.target == "main_monoid") {
    outcomes.push_back(exhaustive_verify_monoid(cfg));
  } else if (o.target == "extremal") {
    for (std::size_t k = cfg.k_min; k <= cfg.k_max; ++k) {
      outcomes.push_back(find_extremal(k, cfg.r, cfg.max_length, cfg.jobs));
    }
  } else if (auto check = parse_integer_check(o.target)) {
    outcomes.push_back(exhaustive_verify_integer(*check, cfg));
  } else {
    throw UsageError("unknown search '" + o.target +
                     "' (direct2, extended-inverse, direct-r, dilate4, classify3, main, extremal)");
  }

  e.result = json::array();
  for (const auto& out : outcomes) {
    e.result.push_back(to_json(out, o.limit));
    e.table += render_outcome(out, o.limit);
    if (!out.violations.empty()) e.code = kExitViolation;
  }
  if (e.result.size() == 1) e.result = e.result[0];
  return e;
}

Emission cmd_examples(const Options& o) {
  Emission e;
  std::vector<std::pair<int, unsigned long>> runs;
  if (o.id != 0) {
    runs.emplace_back(o.id, o.param);
    e.config = {{"id", o.id}, {"param", o.param}};
  } else {
    for (unsigned long k = 4; k <= 10; k += 2) runs.emplace_back(1, k);
    for (int id = 2; id <= 4; ++id) {
      for (unsigned long t = 2; t <= 6; ++t) runs.emplace_back(id, t);
    }
  }
  e.result = json::array();
  for (const auto& [id, param] : runs) {
    const VerificationReport rep = check_example(id, param);
    e.result.push_back(to_json(rep));
    std::ostringstream os;
    os << "example " << id << (id == 1 ? " k=" : " t=") << param << ": |S^2| = "
       << *rep.quantity("|S^2|") << ", closed form " << rep.computed.back().second << "  "
       << to_string(rep.verdict) << "\n";
    e.table += os.str();
    if (rep.violated()) e.code = kExitViolation;
  }
  return e;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sums of dilates and product sets in the Baumslag-Solitar monoid BS+(1,n)", "bsplus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  auto* sumset_cmd = app.add_subcommand("sumset", "A + B");
  sumset_cmd->add_option("--set", o.sets, "Set literal {x,...}; give two")->required();

  auto* dilate_cmd = app.add_subcommand("dilate-sum", "r_1*A + ... + r_s*A");
  dilate_cmd->add_option("--coeffs", o.coeffs, "Comma-separated positive coefficients")->required();
  dilate_cmd->add_option("--set", o.sets, "Set literal")->required();

  auto* mul_cmd = app.add_subcommand("bs-mul", "Product of two elements b^m a^x");
  mul_cmd->add_option("--n", o.n, "Base n of BS(1,n)");
  mul_cmd->add_option("elements", o.elements, "Two elements")->required();

  auto* square_cmd = app.add_subcommand("square", "S^2 of a subset");
  square_cmd->add_option("--subset", o.subset, "Subset 'm:{x,...}; ...'")->required();
  square_cmd->add_option("--n", o.n, "Base n of BS(1,n)");

  auto* verify_cmd = app.add_subcommand("verify", "Check one theorem on one instance");
  verify_cmd->add_option("theorem", o.target,
                         "direct2 | extended-inverse | classify3 | direct-r | dilate4 | coset | "
                         "main | lss | chs | example")
      ->required();
  verify_cmd->add_option("--set", o.sets, "Set literal (lss takes two)");
  verify_cmd->add_option("--subset", o.subset, "Subset literal");
  verify_cmd->add_option("--n", o.n, "Base n of BS(1,n)");
  verify_cmd->add_option("--r", o.r, "Dilate r");
  verify_cmd->add_option("--m", o.m, "b-exponent of the coset, or m for chs");
  verify_cmd->add_option("--p", o.p, "Odd prime for chs");
  verify_cmd->add_option("--id", o.id, "Example id 1..4");
  verify_cmd->add_option("--param", o.param, "Example parameter (k for 1, t otherwise)");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive verification over a box");
  search_cmd->add_option("check", o.target,
                         "direct2 | extended-inverse | direct-r | dilate4 | classify3 | main | extremal")
      ->required();
  search_cmd->add_option("--k-min", o.k_min, "Smallest size");
  search_cmd->add_option("--k-max", o.k_max, "Largest size");
  search_cmd->add_option("--max-length", o.max_length, "Largest element of a normal set");
  search_cmd->add_option("--r", o.r, "Dilate r");
  search_cmd->add_option("--n", o.n, "Base n (monoid search)");
  search_cmd->add_option("--m-max", o.m_max, "Largest b-exponent of the ground box");
  search_cmd->add_option("--x-max", o.x_max, "Largest a-exponent of the ground box");
  search_cmd->add_option("--jobs", o.jobs, "Worker threads");
  search_cmd->add_option("--limit", o.limit, "Witnesses shown");

  auto* classify_cmd = app.add_subcommand("classify", "Dilate-3 extremal family of a set");
  classify_cmd->add_option("--set", o.sets, "Set literal")->required();

  auto* examples_cmd = app.add_subcommand("examples", "Extremal monoid constructions and their |S^2|");
  examples_cmd->add_option("--id", o.id, "Example id 1..4 (default: all)");
  examples_cmd->add_option("--param", o.param, "k for example 1, t otherwise");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("bsplus");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emission e;
  std::string command;
  try {
    if (*sumset_cmd) command = "sumset", e = cmd_sumset(o);
    else if (*dilate_cmd) command = "dilate-sum", e = cmd_dilate_sum(o);
    else if (*mul_cmd) command = "bs-mul", e = cmd_bs_mul(o);
    else if (*square_cmd) command = "square", e = cmd_square(o);
    else if (*verify_cmd) command = "verify", e = cmd_verify(o);
    else if (*search_cmd) command = "search", e = cmd_search(o);
    else if (*classify_cmd) command = "classify", e = cmd_classify(o);
    else if (*examples_cmd) command = "examples", e = cmd_examples(o);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  if (o.format == "json") {
    json envelope = {{"command", command}, {"config", e.config}, {"result", e.result}};
    out << envelope.dump(2) << "\n";
  } else {
    out << e.table;
  }
  return e.code;
}

}  // namespace bsplus
