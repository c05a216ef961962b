#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nclab/free_transforms.hpp"
#include "nclab/moment_formulas.hpp"
#include "nclab/nc_enumerate.hpp"
#include "nclab/ncl_bijection.hpp"
#include "nclab/text_format.hpp"
#include "nclab/verify.hpp"

using namespace nclab;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecondition = 3, kNormalization = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::optional<int> limit;
};

int size_limit(const Options& o) {
  if (o.limit) return *o.limit;
  if (const char* env = std::getenv("NCLAB_LIMIT")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("NCLAB_LIMIT must be a positive integer, got '") + env + "'");
  }
  return 12;
}

void check_size(const Options& o, long n, const std::string& what) {
  if (n < 1) throw UsageError(what + " must be at least 1, got " + std::to_string(n));
  int lim = size_limit(o);
  if (n > lim) {
    throw UsageError(what + " = " + std::to_string(n) + " exceeds the size limit " + std::to_string(lim) +
                     " (raise it with --limit or NCLAB_LIMIT)");
  }
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
  return out;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::vector<Rational> padded(std::vector<Rational> xs, std::size_t len) {
  if (xs.size() < len) xs.resize(len, Rational(0));
  return xs;
}

// -- subcommands ------------------------------------------------------------

int run_enumerate(const Options& o, const std::string& kind, int n) {
  check_size(o, n, "n");
  std::size_t count = 0;
  auto show = [&](const auto& obj) {
    ++count;
    if (o.json)
      emit(to_json(obj));
    else
      std::cout << to_text(obj) << '\n';
  };
  if (kind == "nc")
    for_each_nc(n, show);
  else
    for_each_ncl(n, show);
  if (o.json)
    emit(Json{{"count", count}});
  else
    std::cout << "count=" << count << '\n';
  return kOk;
}

int run_to_pair(const Options& o, const std::string& text, bool steps) {
  LinkedPartition pi = parse_linked(text);
  check_size(o, static_cast<long>(pi.size()), "n");
  auto pair = to_pair(pi);
  Partition unlinking = unlink(pi);
  Permutation p = perm_of(pair.beta);
  if (o.json) {
    Json j;
    j["alpha"] = to_json(pair.alpha);
    j["beta"] = to_json(pair.beta);
    j["unlinking"] = to_json(unlinking);
    j["perm"] = to_json(p);
    j["cycles"] = cycle_notation(p);
    emit(j);
  } else if (steps) {
    std::cout << "unlinking: " << to_text(unlinking) << '\n'
              << "perm: " << cycle_notation(p) << '\n'
              << "alpha: " << to_text(pair.alpha) << '\n'
              << "beta: " << to_text(pair.beta) << '\n';
  } else {
    std::cout << to_text(pair.alpha) << '\n' << to_text(pair.beta) << '\n';
  }
  return kOk;
}

int run_from_pair(const Options& o, const std::string& a_text, const std::string& b_text, bool steps) {
  Partition alpha = parse_partition(a_text);
  Partition beta = parse_partition(b_text);
  if (alpha.size() != beta.size())
    throw ShapeError("alpha has n = " + std::to_string(alpha.size()) + " but beta has n = " + std::to_string(beta.size()));
  check_size(o, static_cast<long>(alpha.size()), "n");
  for (const auto* p : {&alpha, &beta})
    if (!is_noncrossing(*p)) throw PreconditionError("partition " + to_text(*p) + " is crossing");
  if (auto why = ll_violation(alpha, beta)) throw PreconditionError(*why);
  LinkedPartition pi = from_pair(alpha, beta);
  Permutation p = perm_of(beta);
  Partition unlinking = act(p, alpha);
  if (o.json) {
    Json j;
    j["linked"] = to_json(pi);
    j["unlinking"] = to_json(unlinking);
    j["perm"] = to_json(p);
    j["cycles"] = cycle_notation(p);
    emit(j);
  } else if (steps) {
    std::cout << "perm: " << cycle_notation(p) << '\n'
              << "unlinking: " << to_text(unlinking) << '\n'
              << "linked: " << to_text(pi) << '\n';
  } else {
    std::cout << to_text(pi) << '\n';
  }
  return kOk;
}

int run_count(const Options& o, const std::string& kind, const std::string& arg) {
  Integer result;
  if (kind == "below-ll" || kind == "above-ll") {
    Partition p = parse_partition(arg);
    check_size(o, static_cast<long>(p.size()), "n");
    if (!is_noncrossing(p)) throw PreconditionError("partition " + to_text(p) + " is crossing");
    result = kind == "below-ll" ? count_below_ll(p) : count_above_ll(p);
  } else {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("expected an integer n, got '" + arg + "'");
    }
    check_size(o, n, "n");
    if (kind == "nc")
      result = catalan(static_cast<unsigned>(n));
    else if (kind == "ncl")
      result = ncl_count(n);
    else
      result = coloured_count(n);
  }
  if (o.json)
    emit(Json{{"kind", kind}, {"count", integer_json(result)}});
  else
    std::cout << result.get_str() << '\n';
  return kOk;
}

struct MomentArgs {
  std::string t, cumulants;
  int n = 0;
  int symbolic = 0;
};

int run_moments(const Options& o, const MomentArgs& a) {
  int sources = !a.t.empty() + !a.cumulants.empty() + (a.symbolic != 0);
  if (sources != 1) throw UsageError("give exactly one of --t, --cumulants, --symbolic");
  if (a.symbolic) {
    check_size(o, a.symbolic, "n");
    MomentPolynomial p = moment_poly_via_cumulants(a.symbolic);  // fastest of the equal routes
    if (o.json) {
      Json j;
      j["n"] = a.symbolic;
      j["text"] = to_text(p);
      j["terms"] = to_json(p)["terms"];
      emit(j);
    } else {
      std::cout << to_text(p) << '\n';
    }
    return kOk;
  }
  check_size(o, a.n, "--n");
  auto n = static_cast<std::size_t>(a.n);
  MomentSequence m = [&] {
    // The supplied list is a finite polynomial / finite cumulant list: missing
    // higher terms are zero.
    if (!a.t.empty()) return moments_from_t(padded(parse_rational_list(a.t), n), n);
    return moments_from_cumulants(padded(parse_rational_list(a.cumulants), n), n);
  }();
  std::vector<Rational> mu(m.values().begin(), m.values().end());
  if (o.json)
    emit(Json{{"moments", rational_array(mu)}});
  else
    std::cout << join(mu) << '\n';
  return kOk;
}

int run_transform(const Options& o, const std::string& moments, const std::string& to, std::optional<int> order) {
  MomentSequence m(parse_rational_list(moments));
  check_size(o, static_cast<long>(m.depth()), "number of moments");
  std::vector<Rational> out;
  if (to == "r") {
    out = cumulants_from_moments(m);
    if (order) {
      if (*order < 1 || static_cast<std::size_t>(*order) > out.size())
        throw DepthError("--order " + std::to_string(*order) + " outside 1.." + std::to_string(out.size()));
      out.resize(static_cast<std::size_t>(*order));
    }
    if (o.json)
      emit(Json{{"cumulants", rational_array(out)}});
    else
      std::cout << join(out) << '\n';
    return kOk;
  }
  TruncatedSeries s = to == "s" ? s_transform(m) : t_transform(m);
  if (order) {
    if (*order < 0) throw DepthError("--order must be non-negative");
    if (static_cast<std::size_t>(*order) > s.order())
      throw DepthError("--order " + std::to_string(*order) + " exceeds available order " + std::to_string(s.order()));
    s = s.truncated(static_cast<std::size_t>(*order));
  }
  if (o.json)
    emit(to_json(s));
  else
    std::cout << to_text(s) << '\n';
  return kOk;
}

int run_verify(const Options& o, const std::string& suite, int n_max) {
  check_size(o, n_max, "n_max");
  std::vector<CheckResult> results;
  if (suite == "bijection")
    results = verify_bijection(n_max);
  else if (suite == "counts")
    results = verify_counts(n_max);
  else if (suite == "moments")
    results = verify_moments(n_max);
  else
    results = verify_all(n_max);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.json) {
      emit(Json{{"suite", r.suite}, {"name", r.name}, {"range", r.range}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << " [" << r.range << "]";
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << '\n';
    }
  }
  if (o.json)
    emit(Json{{"passed", ok}, {"checks", results.size()}});
  else
    std::cout << (ok ? "all " : "some ") << results.size() << (ok ? " checks passed" : " checks run, failures above") << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing and linked partitions, and exact moment/transform calculus"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "one JSON object per line");
  app.add_option("--limit", opts.limit, "size guard (default 12, or NCLAB_LIMIT)")->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* en = app.add_subcommand("enumerate", "list NC(n) or NCL(n)")->fallthrough();
  std::string en_kind;
  int en_n = 0;
  en->add_option("kind", en_kind)->required()->check(CLI::IsMember({"nc", "ncl"}));
  en->add_option("n", en_n)->required();
  en->callback([&] { action = [&] { return run_enumerate(opts, en_kind, en_n); }; });

  auto* mp = app.add_subcommand("map", "the bijection between NCL(n) and pairs alpha << beta")->fallthrough();
  mp->require_subcommand(1);
  bool steps = false;
  mp->add_flag("--steps", steps, "also print the unlinking and the permutation");
  auto* tp = mp->add_subcommand("to-pair", "linked partition -> (alpha, beta)")->fallthrough();
  std::string tp_in;
  tp->add_option("pi", tp_in)->required();
  tp->callback([&] { action = [&] { return run_to_pair(opts, tp_in, steps); }; });
  auto* fp = mp->add_subcommand("from-pair", "(alpha, beta) -> linked partition")->fallthrough();
  std::string fp_a, fp_b;
  fp->add_option("alpha", fp_a)->required();
  fp->add_option("beta", fp_b)->required();
  fp->callback([&] { action = [&] { return run_from_pair(opts, fp_a, fp_b, steps); }; });

  auto* ct = app.add_subcommand("count", "exact counts")->fallthrough();
  std::string ct_kind, ct_arg;
  ct->add_option("kind", ct_kind)->required()->check(CLI::IsMember({"nc", "ncl", "below-ll", "above-ll", "coloured"}));
  ct->add_option("arg", ct_arg, "n, or a partition for below-ll / above-ll")->required();
  ct->callback([&] { action = [&] { return run_count(opts, ct_kind, ct_arg); }; });

  auto* mo = app.add_subcommand("moments", "moments from T-coefficients or cumulants, or symbolically")->fallthrough();
  MomentArgs ma;
  mo->add_option("--t", ma.t, "t_0,t_1,... (t_0 must be 1)");
  mo->add_option("--cumulants", ma.cumulants, "kappa_1,kappa_2,... (kappa_1 must be 1)");
  mo->add_option("--n", ma.n, "number of moments");
  mo->add_option("--symbolic", ma.symbolic, "print mu_n as a polynomial in t_1, t_2, ...");
  mo->callback([&] { action = [&] { return run_moments(opts, ma); }; });

  auto* tr = app.add_subcommand("transform", "S-, T- or R-transform coefficients of a moment list")->fallthrough();
  std::string tr_moments, tr_to;
  std::optional<int> tr_order;
  tr->add_option("--moments", tr_moments, "mu_1,mu_2,... (mu_1 must be 1)")->required();
  tr->add_option("--to", tr_to)->required()->check(CLI::IsMember({"s", "t", "r"}));
  tr->add_option("--order", tr_order, "truncate the output");
  tr->callback([&] { action = [&] { return run_transform(opts, tr_moments, tr_to, tr_order); }; });

  auto* ve = app.add_subcommand("verify", "run identity suites up to n_max")->fallthrough();
  std::string ve_suite;
  int ve_n = 0;
  ve->add_option("suite", ve_suite)->required()->check(CLI::IsMember({"bijection", "counts", "moments", "all"}));
  ve->add_option("n_max", ve_n)->required();
  ve->callback([&] { action = [&] { return run_verify(opts, ve_suite, ve_n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const NormalizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNormalization;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    // parse, shape, depth and malformed-partition errors
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
