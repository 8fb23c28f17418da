// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time
// against the criterion's budget. Exceeding a budget counts as a failure.

#include "cli.hpp"

#include "kdunkl/bruhat.hpp"
#include "kdunkl/dunkl.hpp"
#include "kdunkl/freealg.hpp"
#include "kdunkl/quadspec.hpp"
#include "kdunkl/schubert.hpp"

#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace kdunkl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> body;
};

std::string describe_failures(const Report& report, std::size_t limit = 3) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& r : report.records) {
    if (r.passed()) continue;
    if (shown++ == limit) {
      out += " ...";
      break;
    }
    out += " [" + r.check + " " + r.params.dump() + " " + r.status + (r.detail.empty() ? "" : ": " + r.detail) + "]";
  }
  return out;
}

Outcome from_report(const Report& report, const std::string& what) {
  Outcome o;
  o.pass = !report.records.empty() && report.all_passed();
  o.detail = what + ": " + std::to_string(report.count_passed()) + "/" + std::to_string(report.records.size()) +
             " checks passed";
  if (!o.pass) o.detail += describe_failures(report);
  return o;
}

std::string rings(const Report& report) {
  std::map<std::string, std::size_t> count;
  for (const auto& r : report.records)
    if (!r.ring.empty()) ++count[r.ring];
  std::string out;
  for (const auto& [ring, k] : count) out += (out.empty() ? "" : ", ") + std::to_string(k) + " " + ring;
  return out.empty() ? "none" : out;
}

// ---- 1 -----------------------------------------------------------------------

Outcome kappa_reproduction() {
  const std::map<std::pair<int, int>, std::string> expected{
      {{1, 3}, "[1,2]+[1,3]-[1,3][1,2]"},
      {{2, 3}, "-[1,2]+[2,3]+[1,2][2,3]"},
      {{3, 3}, "-[1,3]-[2,3]-[2,3][1,3]"},
      {{1, 4}, "[1,2]+[1,3]+[1,4]-[1,3][1,2]-[1,4][1,2]-[1,4][1,3]+[1,4][1,3][1,2]"},
      {{2, 4}, "-[1,2]+[2,3]+[2,4]+[1,2][2,3]+[1,2][2,4]-[2,4][2,3]-[1,2][2,4][2,3]"},
      {{3, 4}, "-[1,3]-[2,3]+[3,4]+[1,3][3,4]-[2,3][1,3]+[2,3][3,4]+[2,3][1,3][3,4]"},
      {{4, 4}, "-[1,4]-[2,4]-[3,4]-[2,4][1,4]-[3,4][1,4]-[3,4][2,4]-[3,4][2,4][1,4]"},
  };
  Outcome o{true, ""};
  for (const auto& [pn, text] : expected) {
    const auto [p, n] = pn;
    std::ostringstream out, err;
    const int code = cli::run({"kappa", std::to_string(p), std::to_string(n)}, out, err);
    std::string line = out.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    const auto spec = spec_En(n);
    if (code != 0 || spec.parse(line) != spec.parse(text) || spec.parse(line) != kappa(p, n).element) {
      o.pass = false;
      o.detail = "kappa " + std::to_string(p) + " " + std::to_string(n) + " printed " + line;
      return o;
    }
  }
  o.detail = "7 elements (n=3, n=4) match term for term via the CLI";
  return o;
}

// ---- 2 -----------------------------------------------------------------------

Outcome term_counts() {
  std::size_t checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      const auto e = kappa(p, n).element;
      const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
      if (e.size() != expected || e.lowest_degree() < 1 || e.degree() > n - 1)
        return {false, "kappa_" + std::to_string(p) + " in E_" + std::to_string(n) + " has " +
                           std::to_string(e.size()) + " terms"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " elements, n = 2..6, 2^(n-1)-1 terms of degree 1..n-1"};
}

// ---- 3 -----------------------------------------------------------------------

Outcome full_commutation() {
  Stopwatch small;
  const Report three = verify_commutation(3, CommutationMode::full);
  const double small_s = small.elapsed_ms() / 1000;
  const Report four = verify_commutation(4, CommutationMode::full);
  Report both = three;
  both.append(four);
  Outcome o = from_report(both, "n=3,4 pairs");
  if (small_s >= 1.0) {
    o.pass = false;
    o.detail += "; n=3 took " + std::to_string(small_s) + " s (budget 1 s)";
  }
  o.detail += "; certificates re-expanded; rings: " + rings(both);
  return o;
}

// ---- 4 -----------------------------------------------------------------------

Outcome restricted_commutation() {
  Report all;
  for (int n = 3; n <= 5; ++n) all.append(verify_commutation(n, CommutationMode::restricted));
  for (const std::set<int>& X : {std::set<int>{1}, std::set<int>{1, 2}, std::set<int>{1, 2, 3}})
    all.append(verify_lemma1(X, std::nullopt));
  std::size_t restricted = 0, lemma = 0;
  for (const auto& r : all.records) {
    restricted += r.check == "restricted-commutator";
    lemma += r.check == "lemma1";
  }
  Outcome o = from_report(all, "n=3..5, all ordered (p,q), X, d");
  o.detail += " (" + std::to_string(restricted) + " restricted commutators in E_n, " + std::to_string(lemma) +
              " sums in E_X)";
  return o;
}

// ---- 5, 6 ---------------------------------------------------------------------

Outcome starstar() {
  Report all;
  for (int s = 1; s <= 3; ++s) all.append(verify_starstar(s));
  return from_report(all, "s=1..3, both forms, all index orders");
}

Outcome sum_zero() {
  Report all;
  for (int n = 2; n <= 4; ++n) all.append(verify_sum_zero(n));
  Outcome o = from_report(all, "n=2,3,4");
  if (all.records.front().detail != "identically zero") {
    o.pass = false;
    o.detail += "; n=2 is not identically zero";
  }
  return o;
}

// ---- 7, 8 ---------------------------------------------------------------------

Report select(const Report& report, std::initializer_list<const char*> checks) {
  Report out;
  for (const auto& r : report.records)
    for (const char* c : checks)
      if (r.check == c) out.add(r);
  return out;
}

Outcome bruhat_rep() {
  Report all;
  for (int n = 2; n <= 5; ++n)
    all.append(select(verify_rep(n, RepOptions{false}), {"rep-relations", "rep-reversal", "rep-commute"}));
  return from_report(all, "n=2..5 relations annihilate S_n, kappa operators commute");
}

Outcome monk_consistency() {
  Report all;
  for (int n = 2; n <= 4; ++n) all.append(select(verify_rep(n, RepOptions{true}), {"rep-kmonk", "rep-monk"}));
  return from_report(all, "n=2..4 action = chain rule = Grothendieck expansion; theta = Monk");
}

// ---- 9, 10 --------------------------------------------------------------------

struct ConstantRecord {
  Permutation u, v;
  GroupAlgebraVector constants;
};
std::vector<ConstantRecord> computed_constants;

Outcome route_agreement() {
  std::size_t pairs = 0, nonzero = 0;
  computed_constants.clear();
  for (int n = 3; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        const auto dunkl = structure_constants_dunkl(u, v, n);
        const auto poly = restrict_to_rank(structure_constants_poly(u, v).coefficients, n);
        if (dunkl.coefficients() != poly)
          return {false, "routes disagree at u=" + u.to_string() + ", v=" + v.to_string()};
        ++pairs;
        nonzero += poly.size();
        computed_constants.push_back({u, v, dunkl});
      }
    }
  }
  const Integer worked =
      structure_constants_dunkl(Permutation::parse("213"), Permutation::parse("132"), 3).coefficient(
          Permutation::parse("321"));
  if (worked != -1) return {false, "c_{213,132}^{321} = " + worked.get_str()};
  return {true, std::to_string(pairs) + " pairs (36 + 576), " + std::to_string(nonzero) +
                    " nonzero constants agree; c_{213,132}^{321} = -1"};
}

Outcome alternating_signs() {
  if (computed_constants.empty()) return {false, "criterion 9 produced no constants"};
  std::size_t checked = 0;
  for (const auto& [u, v, constants] : computed_constants) {
    for (const auto& [w, c] : constants.coefficients()) {
      const int excess = w.length() - u.length() - v.length();
      if (excess < 0 || (excess % 2 == 0 ? c : Integer(-c)) < 0)
        return {false, "sign violated at u=" + u.to_string() + " v=" + v.to_string() + " w=" + w.to_string()};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " constants satisfy (-1)^(l(w)-l(u)-l(v)) c >= 0"};
}

// ---- 11 -----------------------------------------------------------------------

Outcome nonnegativity_s3() {
  Report all = check_nonneg(3, std::nullopt, Theory::k_theory);
  all.append(check_nonneg(3, std::nullopt, Theory::cohomology));
  Outcome o = from_report(all, "S_3, K-theory and cohomology");
  o.detail += "; rings: " + rings(all);
  return o;
}

std::string nonnegativity_s4_summary() {
  std::string out;
  for (const auto theory : {Theory::k_theory, Theory::cohomology}) {
    Stopwatch clock;
    const Report report = check_nonneg(4, std::nullopt, theory);
    std::map<std::string, std::size_t> statuses;
    for (const auto& r : report.records) ++statuses[r.status];
    out += std::string(out.empty() ? "" : "; ") + (theory == Theory::k_theory ? "K-theory" : "cohomology") + ":";
    for (const auto& [status, k] : statuses) out += " " + std::to_string(k) + " " + status;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << clock.elapsed_ms() / 1000 << " s";
    out += " (" + t.str() + ")";
  }
  return out;
}

// ---- 12 -----------------------------------------------------------------------

FreeAlgebraElement random_element(std::mt19937& rng, int letters, int max_degree) {
  std::uniform_int_distribution<int> letter(0, letters - 1), degree(0, max_degree), coeff(-3, 3), count(1, 3);
  FreeAlgebraElement e;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) w.push_back(static_cast<Letter>(letter(rng)));
    e.add_term(w, coeff(rng));
  }
  return e;
}

Outcome inclusion_exclusion_suite() {
  std::mt19937 rng(20241016);
  std::uniform_int_distribution<int> letters(1, 4), factors(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = letters(rng), m = factors(rng);
    std::vector<std::pair<FreeAlgebraElement, FreeAlgebraElement>> pairs;
    std::vector<FreeAlgebraElement> blocks;
    for (int k = 0; k < m; ++k) pairs.emplace_back(random_element(rng, l, 2), random_element(rng, l, 2));
    for (int k = 0; k <= m; ++k) blocks.push_back(random_element(rng, l, 1));
    const auto sides = lemma2_expand(pairs, blocks);
    if (sides.lhs != sides.rhs) return {false, "instance " + std::to_string(trial) + " differs"};
  }
  return {true, "200 random instances, m = 1..4, lhs = rhs"};
}

// ---- 13 -----------------------------------------------------------------------

Outcome subalgebra_probes() {
  std::string statuses;
  bool first_certified = false;
  for (int k = 1; k <= 3; ++k) {
    const Report report = symmetric_probe(k, 3);
    if (report.records.empty()) return {false, "no report for k=" + std::to_string(k)};
    if (k == 1) first_certified = report.records.front().status == "member";
    statuses += (statuses.empty() ? "" : ", ") + std::string("e_") + std::to_string(k) + ": " +
                report.records.front().status;
    if (report.records.size() > 1) statuses += " (order check " + report.records[1].status + ")";
  }
  return {first_certified, statuses};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "kappa reproduction (n=3, n=4)", 1, kappa_reproduction},
      {2, "term counts 2^(n-1)-1, n <= 6", 1, term_counts},
      {3, "commutation, full mode (n=3, n=4)", 300, full_commutation},
      {4, "restricted commutators and sums in E_X", 120, restricted_commutation},
      {5, "starred products vanish (s <= 3)", 10, starstar},
      {6, "kappas sum to zero (n=2,3,4)", 60, sum_zero},
      {7, "Bruhat representation (n <= 5)", 30, bruhat_rep},
      {8, "Monk / K-Monk consistency (n <= 4)", 60, monk_consistency},
      {9, "structure constants: two routes agree (S_3, S_4)", 600, route_agreement},
      {10, "alternating sign pattern of the constants", 600, alternating_signs},
      {11, "nonnegativity at S_3", 120, nonnegativity_s3},
      {12, "inclusion-exclusion expansion (200 instances)", 10, inclusion_exclusion_suite},
      {13, "subalgebra probes (report-only)", 60, subalgebra_probes},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    Stopwatch clock;
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = clock.elapsed_ms() / 1000;
    if (seconds > c.budget_s) {
      o.pass = false;
      o.detail += "; over budget";
    }
    passed += o.pass ? 1 : 0;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.title << " ("
              << std::fixed << std::setprecision(2) << seconds << " s, budget " << std::setprecision(0) << c.budget_s
              << " s) -- " << o.detail << std::endl;
  }

  std::cout << "INFO nonnegativity at S_4 (report-only): " << nonnegativity_s4_summary() << std::endl;
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
