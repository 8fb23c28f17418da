#include "cli.hpp"

#include "kdunkl/bruhat.hpp"
#include "kdunkl/dunkl.hpp"
#include "kdunkl/quadspec.hpp"
#include "kdunkl/schubert.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace kdunkl::cli {

namespace {

/// Raised for bad argument values that CLI11 cannot check by itself.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Permutation parse_permutation(const std::string& text, const std::string& flag) {
  try {
    return Permutation::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms << " ms";
  return s.str();
}

/// Text: one line per record and a summary. JSON: one object per line.
int emit_report(const Report& report, bool json, std::ostream& out, bool fatal = true) {
  if (json) {
    out << report.json_lines();
  } else {
    for (const auto& r : report.records) {
      out << std::left << std::setw(14) << r.status << ' ' << r.check << ' ' << r.params.dump();
      if (r.certificate_size > 0) out << " certificate=" << r.certificate_size;
      if (!r.ring.empty()) out << " ring=" << r.ring;
      out << ' ' << format_ms(r.elapsed_ms);
      if (!r.detail.empty()) out << " -- " << r.detail;
      out << '\n';
    }
    std::size_t undecided = 0;
    for (const auto& r : report.records) undecided += r.undecided() ? 1 : 0;
    out << report.count_passed() << '/' << report.records.size() << " checks passed";
    if (undecided > 0) out << ", " << undecided << " undecided";
    out << '\n';
  }
  if (!fatal) return kOk;
  for (const auto& r : report.records)
    if (!r.passed() && !r.undecided()) return kFailed;
  return report.any_undecided() ? kUndecided : kOk;
}

GroupAlgebraVector at_common_rank(const PermutationCombination& combination, int rank) {
  for (const auto& [w, c] : combination) rank = std::max(rank, w.rank());
  GroupAlgebraVector v(rank);
  for (const auto& [w, c] : combination) v.add(w, c);
  return v;
}

void print_table(std::ostream& out, const std::string& method, const Permutation& u, const Permutation& v, int n,
                 const GroupAlgebraVector& constants) {
  out << "method " << method << " (u=" << u.to_string() << ", v=" << v.to_string() << ", n=" << n << ")\n";
  std::map<Permutation, Integer, LengthOrder> sorted(constants.coefficients().begin(), constants.coefficients().end());
  if (sorted.empty()) out << "  (no terms)\n";
  for (const auto& [w, c] : sorted) out << "  " << w.to_string() << "  " << c.get_str() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theoretic Dunkl elements: Schubert calculus, quadratic algebra certificates, Bruhat action"};
  app.name("kdunkl");
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string cache_dir;
  std::size_t max_entries = IdealLimits{}.max_entries;
  std::size_t max_dimension = IdealLimits{}.max_dimension;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--cache", cache_dir, "Directory for the on-disk polynomial cache");
  app.add_option("--max-entries", max_entries, "Matrix-entry cap per degree for ideal membership")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dimension", max_dimension, "Word-space cap per degree for ideal membership")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto membership = [&] {
    MembershipOptions options;
    options.limits.max_entries = max_entries;
    options.limits.max_dimension = max_dimension;
    return options;
  };
  auto verify_options = [&](EXRelations relations = EXRelations::all) {
    VerifyOptions options;
    options.membership = membership();
    options.ex_relations = relations;
    return options;
  };
  const std::map<std::string, EXRelations> relation_names{{"all", EXRelations::all},
                                                          {"mixed", EXRelations::mixed_only}};

  // schubert W / grothendieck W
  for (const Basis kind : {Basis::schubert, Basis::grothendieck}) {
    auto* cmd = app.add_subcommand(to_string(kind), "Print the " + to_string(kind) + " polynomial of W");
    auto w = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    cmd->add_option("W", *w, "Permutation, e.g. 2143 or 2,1,4,3")->required();
    cmd->add_option("--n", *n, "Ambient rank (checked against W)")->check(CLI::PositiveNumber);
    cmd->callback([&, kind, w, n] {
      action = [&, kind, w, n] {
        const Permutation perm = parse_permutation(*w, "W");
        if (*n > 0 && !perm.fits_rank(*n)) throw UsageError("--n: " + perm.to_string() + " is not in S_" + std::to_string(*n));
        const SparsePolynomial f = kind == Basis::schubert ? schubert(perm) : grothendieck(perm);
        if (json)
          out << nlohmann::json{{"kind", to_string(kind)}, {"perm", perm.to_string()}, {"poly", f.to_json()}}.dump()
              << '\n';
        else
          out << f.to_string() << '\n';
        return int{kOk};
      };
    });
  }

  // kappa P N / theta P N
  for (const DunklFlavor flavor : {DunklFlavor::kappa, DunklFlavor::theta}) {
    const std::string name = flavor == DunklFlavor::kappa ? "kappa" : "theta";
    auto* cmd = app.add_subcommand(name, "Print the " + name + " element with index P in E_N");
    auto p = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    cmd->add_option("P", *p, "Index 1..N")->required();
    cmd->add_option("N", *n, "Rank")->required()->check(CLI::Range(2, 12));
    cmd->callback([&, flavor, name, p, n] {
      action = [&, flavor, name, p, n] {
        if (*p < 1 || *p > *n) throw UsageError("P: must lie in 1.." + std::to_string(*n));
        const auto spec = spec_En(*n);
        const auto e = flavor == DunklFlavor::kappa ? kappa(*p, *n).element : theta(*p, *n).element;
        if (json)
          out << nlohmann::json{{"flavor", name}, {"p", *p}, {"n", *n}, {"element", spec.to_json(e)}}.dump() << '\n';
        else
          out << spec.format(e) << '\n';
        return int{kOk};
      };
    });
  }

  // monk P V / kmonk P V
  for (const bool k_theory : {false, true}) {
    const std::string name = k_theory ? "kmonk" : "monk";
    auto* cmd = app.add_subcommand(
        name, k_theory ? "Expand x_P G_V in Grothendieck polynomials (chain rule)" : "Expand x_P S_V by Monk's rule");
    auto p = std::make_shared<int>(0);
    auto v = std::make_shared<std::string>();
    cmd->add_option("P", *p, "Variable index")->required()->check(CLI::PositiveNumber);
    cmd->add_option("V", *v, "Permutation")->required();
    cmd->callback([&, k_theory, name, p, v] {
      action = [&, k_theory, name, p, v] {
        const Permutation perm = parse_permutation(*v, "V");
        const auto combination = k_theory ? kmonk_chains(*p, perm) : monk_multiply(*p, perm);
        const auto terms = at_common_rank(combination, perm.rank());
        if (json) {
          auto j = structure_constants_json(perm, perm, terms.rank(), name, terms);
          out << nlohmann::json{{"kind", name}, {"p", *p}, {"v", perm.to_string()}, {"terms", j.at("constants")}}.dump()
              << '\n';
        } else {
          out << terms.to_string() << '\n';
        }
        return int{kOk};
      };
    });
  }

  // constants U V
  {
    auto* cmd = app.add_subcommand("constants", "Structure constants c_{UV}^w of K-theory (or cohomology)");
    auto u = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("both");
    auto n = std::make_shared<int>(0);
    cmd->add_option("U", *u, "Permutation")->required();
    cmd->add_option("V", *v, "Permutation")->required();
    cmd->add_option("--method", *method, "poly | dunkl | both | cohomology")
        ->check(CLI::IsMember({"poly", "dunkl", "both", "cohomology"}));
    cmd->add_option("--n", *n, "Rank (default: the larger rank of U and V)")->check(CLI::Range(1, 7));
    cmd->callback([&, u, v, method, n] {
      action = [&, u, v, method, n] {
        const Permutation pu = parse_permutation(*u, "U"), pv = parse_permutation(*v, "V");
        const int rank = *n > 0 ? *n : std::max(pu.rank(), pv.rank());
        if (!pu.fits_rank(rank) || !pv.fits_rank(rank))
          throw UsageError("--n: U and V must lie in S_" + std::to_string(rank));
        std::vector<std::pair<std::string, GroupAlgebraVector>> routes;
        if (*method == "poly" || *method == "both") {
          GroupAlgebraVector poly(rank);
          for (const auto& [w, c] : restrict_to_rank(structure_constants_poly(pu, pv).coefficients, rank)) poly.add(w, c);
          routes.emplace_back("poly", std::move(poly));
        }
        if (*method == "dunkl" || *method == "both") routes.emplace_back("dunkl", structure_constants_dunkl(pu, pv, rank));
        if (*method == "cohomology") routes.emplace_back("cohomology", structure_constants_cohomology(pu, pv, rank));
        for (const auto& [name, constants] : routes) {
          if (json)
            out << structure_constants_json(pu, pv, rank, name, constants).dump() << '\n';
          else
            print_table(out, name, pu, pv, rank, constants);
        }
        if (routes.size() == 2) {
          const bool agree = routes[0].second == routes[1].second;
          if (json)
            out << nlohmann::json{{"agree", agree}}.dump() << '\n';
          else
            out << (agree ? "AGREE" : "DISAGREE") << '\n';
          return int{agree ? kOk : kFailed};
        }
        return int{kOk};
      };
    });
  }

  // verify ...
  {
    auto* verify = app.add_subcommand("verify", "Certify identities in the quadratic algebras");
    verify->require_subcommand(1);

    auto* commute = verify->add_subcommand("commute", "Commutation of the kappa elements");
    auto commute_n = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>();
    commute->add_option("--n", *commute_n, "Rank")->required()->check(CLI::Range(2, 6));
    commute->add_option("--mode", *mode, "full | restricted (default: full for n <= 4)")
        ->check(CLI::IsMember({"full", "restricted"}));
    commute->callback([&, commute_n, mode] {
      action = [&, commute_n, mode] {
        const bool restricted = mode->empty() ? *commute_n >= 5 : *mode == "restricted";
        Report report = verify_commutation(*commute_n, restricted ? CommutationMode::restricted : CommutationMode::full,
                                           verify_options());
        if (restricted) report.append(verify_rep(*commute_n, RepOptions{*commute_n <= 4}));
        return emit_report(report, json, out);
      };
    });

    auto* sum_zero = verify->add_subcommand("sum-zero", "The kappa elements sum to zero modulo the ideal");
    auto sum_n = std::make_shared<int>(0);
    sum_zero->add_option("--n", *sum_n, "Rank")->required()->check(CLI::Range(2, 6));
    sum_zero->callback([&, sum_n] {
      action = [&, sum_n] { return emit_report(verify_sum_zero(*sum_n, verify_options()), json, out); };
    });

    auto* lemma1 = verify->add_subcommand("lemma1", "Commutator sums in the auxiliary algebra E_X vanish");
    auto X = std::make_shared<std::vector<int>>();
    auto d = std::make_shared<int>(-1);
    auto lemma_relations = std::make_shared<EXRelations>(EXRelations::all);
    lemma1->add_option("--X", *X, "Comma-separated set, e.g. 1,2")->required()->delimiter(',')->check(CLI::PositiveNumber);
    lemma1->add_option("--d", *d, "Degree (default: every degree in range)")->check(CLI::NonNegativeNumber);
    lemma1->add_option("--relations", *lemma_relations, "all | mixed")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));
    lemma1->callback([&, X, d, lemma_relations] {
      action = [&, X, d, lemma_relations] {
        const std::set<int> set(X->begin(), X->end());
        if (set.size() != X->size()) throw UsageError("--X: repeated element");
        const int size = static_cast<int>(set.size());
        if (*d >= 0 && (*d < size || *d > 2 * size + 2))
          throw UsageError("--d: must lie in [" + std::to_string(size) + ", " + std::to_string(2 * size + 2) + "]");
        return emit_report(verify_lemma1(set, *d >= 0 ? std::optional<int>(*d) : std::nullopt,
                                         verify_options(*lemma_relations)),
                           json, out);
      };
    });

    auto* starstar = verify->add_subcommand("starstar", "Starred products *i1 i1' ... is is'* vanish in E_X");
    auto s = std::make_shared<int>(0);
    auto star_relations = std::make_shared<EXRelations>(EXRelations::all);
    starstar->add_option("--s", *s, "Number of indices")->required()->check(CLI::Range(1, 4));
    starstar->add_option("--relations", *star_relations, "all | mixed")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));
    starstar->callback([&, s, star_relations] {
      action = [&, s, star_relations] {
        return emit_report(verify_starstar(*s, verify_options(*star_relations)), json, out);
      };
    });

    auto* rep = verify->add_subcommand("rep", "Bruhat representation checks");
    auto rep_n = std::make_shared<int>(0);
    rep->add_option("--n", *rep_n, "Rank")->required()->check(CLI::Range(2, 6));
    rep->callback([&, rep_n] {
      action = [&, rep_n] { return emit_report(verify_rep(*rep_n, RepOptions{*rep_n <= 4}), json, out); };
    });
  }

  // check nonneg
  {
    auto* check = app.add_subcommand("check", "Positivity checks");
    check->require_subcommand(1);
    auto* nonneg = check->add_subcommand("nonneg", "Sign-corrected pieces of G_w(kappa) or S_w(theta) lie in the cone");
    auto n = std::make_shared<int>(0);
    auto w = std::make_shared<std::string>();
    auto theory = std::make_shared<std::string>("k");
    auto max_words = std::make_shared<std::size_t>(ConeOptions{}.max_words);
    nonneg->add_option("--n", *n, "Rank")->required()->check(CLI::Range(2, 5));
    nonneg->add_option("--w", *w, "One permutation (default: all of S_n)");
    nonneg->add_option("--theory", *theory, "k | cohomology")->check(CLI::IsMember({"k", "cohomology"}));
    nonneg->add_option("--max-words", *max_words, "Largest word space searched exhaustively by the LP")
        ->check(CLI::PositiveNumber);
    nonneg->callback([&, n, w, theory, max_words] {
      action = [&, n, w, theory, max_words] {
        std::optional<Permutation> target;
        if (!w->empty()) {
          target = parse_permutation(*w, "--w");
          if (!target->fits_rank(*n)) throw UsageError("--w: not a permutation of S_" + std::to_string(*n));
        }
        ConeOptions options;
        options.max_words = *max_words;
        options.membership = membership();
        return emit_report(
            check_nonneg(*n, target, *theory == "k" ? Theory::k_theory : Theory::cohomology, options), json, out);
      };
    });
  }

  // probe symmetric
  {
    auto* probe = app.add_subcommand("probe", "Exploratory probes (never fatal)");
    probe->require_subcommand(1);
    auto* symmetric = probe->add_subcommand("symmetric", "e_k(kappa_1, ..., kappa_n) modulo the ideal");
    auto k = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    symmetric->add_option("--k", *k, "Degree of the elementary symmetric polynomial")->required()->check(
        CLI::PositiveNumber);
    symmetric->add_option("--n", *n, "Rank")->required()->check(CLI::Range(2, 5));
    symmetric->callback([&, k, n] {
      action = [&, k, n] {
        if (*k > *n) throw UsageError("--k: must not exceed --n");
        return emit_report(symmetric_probe(*k, *n, verify_options()), json, out, false);
      };
    });
  }

  std::vector<std::string> argv_storage{"kdunkl"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!cache_dir.empty()) set_polynomial_cache_dir(std::filesystem::path(cache_dir));
    const int code = action ? action() : int{kUsage};
    if (!cache_dir.empty()) set_polynomial_cache_dir(std::nullopt);
    return code;
  } catch (const std::invalid_argument& e) {
    if (!cache_dir.empty()) set_polynomial_cache_dir(std::nullopt);
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    if (!cache_dir.empty()) set_polynomial_cache_dir(std::nullopt);
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace kdunkl::cli
