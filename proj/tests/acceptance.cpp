// Acceptance suite: runs each acceptance criterion at its stated size and
// tolerance (all exact) and prints one line per criterion.

#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dyck/birkhoff.hpp"
#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/oracle.hpp"
#include "dyck/paths.hpp"

using namespace dyck;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

// runs the selected verify_family checks for n = from..to and returns the
// first failure message, if any
std::optional<std::string> sweep(family fam, int from, int to, int m,
                                 const std::vector<std::string>& checks) {
  for (int n = from; n <= to; ++n) {
    const auto report = verify_family(fam, {n, m}, checks, false);
    if (report.results.empty()) return "no applicable checks ran";
    for (const auto& r : report.results)
      if (!r.passed)
        return "family " + std::string(family_name(fam)) + " n=" + std::to_string(n) + " " +
               r.check + ": " + r.detail;
  }
  return std::nullopt;
}

std::optional<std::string> criterion_1_cardinalities() {
  const auto start = clock_type::now();
  const std::vector<std::size_t> catalan_a = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto got = enumerate(family::a, {n, 0}).elements.size();
    if (got != catalan_a[n - 1])
      return "type a n=" + std::to_string(n) + " gave " + std::to_string(got);
  }
  const std::vector<std::size_t> catalan_b = {2, 6, 20, 70, 252, 924};
  for (int n = 1; n <= 6; ++n) {
    const auto got = enumerate(family::b, {n, 0}).elements.size();
    if (got != catalan_b[n - 1])
      return "type b n=" + std::to_string(n) + " gave " + std::to_string(got);
  }
  if (enumerate(family::mono, {3, 3}).elements.size() != 20) return "L_{3,3} is not 20";
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) return "took " + std::to_string(elapsed) + " s, budget is 10 s";
  return std::nullopt;
}

std::optional<std::string> criterion_2_worked_examples() {
  const height_seq_a a0({2, 3, 3, 4});
  const auto a1 = pseudo_a(a0);
  if (a1 != height_seq_a({1, 2, 4, 4}))
    return "pseudo_a((2,3,3,4)) = (" + format_heights(a1.heights()) + ")";
  if (pseudo_a(a1) != height_seq_a({3, 3, 3, 4}))
    return "pseudo_a((1,2,4,4)) = (" + format_heights(pseudo_a(a1).heights()) + ")";

  const height_seq_b b0({2, 4}, 3);
  const auto b1 = pseudo_b(b0);
  if (b1 != height_seq_b({1, 2, 3}, 3))
    return "pseudo_b((2,4)) = (" + format_heights(b1.heights()) + ")";
  if (pseudo_b(b1) != height_seq_b({6}, 3))
    return "pseudo_b((1,2,3)) = (" + format_heights(pseudo_b(b1).heights()) + ")";
  return std::nullopt;
}

std::optional<std::string> criterion_3_oracle_equivalence() {
  const auto start = clock_type::now();
  if (auto w = sweep(family::a, 1, 6, 0, {"impl"})) return w;
  if (auto w = sweep(family::b, 1, 5, 0, {"impl"})) return w;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      if (auto w = sweep(family::mono, n, n, m, {"impl"})) return w;
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) return "took " + std::to_string(elapsed) + " s, budget is 120 s";
  return std::nullopt;
}

std::optional<std::string> criterion_4_regular_elements() {
  if (auto w = sweep(family::a, 1, 10, 0, {"regular"})) return w;
  if (auto w = sweep(family::b, 1, 7, 0, {"regular"})) return w;

  const std::set<std::vector<int>> figure_a = {
      {1, 2, 3, 4}, {2, 2, 3, 4}, {1, 3, 3, 4}, {1, 2, 4, 4},
      {2, 2, 4, 4}, {3, 3, 3, 4}, {1, 4, 4, 4}, {4, 4, 4, 4}};
  std::set<std::vector<int>> got_a;
  for (const auto& p : regulars_a(4)) got_a.insert(p.heights());
  if (got_a != figure_a) return "the 8 regular elements of D_4^a differ from the figure";

  const std::set<std::vector<int>> figure_b = {
      {1, 2, 3}, {2, 2, 3}, {1, 3, 3}, {1, 2, 4}, {2, 2, 4}, {3, 3, 3}, {1, 5}, {6}};
  std::set<std::vector<int>> got_b;
  for (const auto& p : regulars_b(3)) got_b.insert(p.heights());
  if (got_b != figure_b) return "the 8 regular elements of D_3^b differ from the figure";
  return std::nullopt;
}

std::optional<std::string> criterion_5_psi() {
  if (auto w = sweep(family::a, 1, 7, 0, {"psi"})) return w;
  const auto image = psi(height_seq_a({3, 5, 7, 7, 7, 8, 10, 11, 11, 11, 11}));
  if (image != height_seq_a({4, 5, 5, 6, 9, 9, 10, 10, 11, 11, 11}))
    return "psi of the figure path gave (" + format_heights(image.heights()) + ")";
  return std::nullopt;
}

std::optional<std::string> criterion_6_embedding() {
  return sweep(family::b, 1, 5, 0, {"embedding"});
}

std::optional<std::string> criterion_7_non_subalgebra() {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& h : enumerate(family::a, {n, 0}).elements) {
      const height_seq_a as_a(h);
      const height_seq_b as_b(h, n);
      if (impl_a(as_a, as_a) != top_a(n))
        return "x -> x within type a missed the top at (" + format_heights(h) + ")";
      if (impl_b(as_b, as_b) != top_b(n))
        return "x -> x within type b missed the top at (" + format_heights(h) + ")";
      const height_seq_b top_of_a(top_a(n).heights(), n);
      if (top_of_a == top_b(n) || !leq(top_of_a, top_b(n)))
        return "the two tops do not differ as required at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_8_birkhoff() {
  for (int n = 1; n <= 6; ++n) {
    const auto report = verify_birkhoff(family::a, n);
    if (!report.passed) return "type a n=" + std::to_string(n) + ": " + report.failures.front();
    if (report.irreducible_count != static_cast<std::size_t>(n) * (n - 1) / 2)
      return "type a n=" + std::to_string(n) + " irreducible count is " +
             std::to_string(report.irreducible_count);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto report = verify_birkhoff(family::b, n);
    if (!report.passed) return "type b n=" + std::to_string(n) + ": " + report.failures.front();
    if (report.irreducible_count != static_cast<std::size_t>(n) * n)
      return "type b n=" + std::to_string(n) + " irreducible count is " +
             std::to_string(report.irreducible_count);
  }
  if (auto w = sweep(family::a, 1, 6, 0, {"irreducible"})) return w;
  if (auto w = sweep(family::b, 1, 5, 0, {"irreducible"})) return w;
  return std::nullopt;
}

std::optional<std::string> criterion_9_distributivity_residuation() {
  if (auto w = sweep(family::a, 1, 5, 0, {"distributive", "impl"})) return w;
  if (auto w = sweep(family::b, 1, 4, 0, {"distributive", "impl"})) return w;
  if (auto w = sweep(family::mono, 3, 3, 3, {"distributive", "impl"})) return w;
  return std::nullopt;
}

std::optional<std::string> criterion_10_intervals() {
  return sweep(family::a, 1, 5, 0, {"interval"});
}

}  // namespace

int main() {
  struct criterion {
    const char* title;
    std::optional<std::string> (*run)();
  };
  const std::vector<criterion> criteria = {
      {"cardinalities for all three families", criterion_1_cardinalities},
      {"pseudocomplement worked examples", criterion_2_worked_examples},
      {"closed-form implication equals the definitional oracle", criterion_3_oracle_equivalence},
      {"regular elements: classifications, counts, Boolean subposet, figures",
       criterion_4_regular_elements},
      {"psi is an involutive order automorphism", criterion_5_psi},
      {"type b embeds as a Heyting subalgebra of doubled type a", criterion_6_embedding},
      {"type a is not a Heyting subalgebra of type b", criterion_7_non_subalgebra},
      {"Birkhoff correspondence with the triangle posets", criterion_8_birkhoff},
      {"distributivity and residuation laws", criterion_9_distributivity_residuation},
      {"interval identifications inside the grid lattice", criterion_10_intervals},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = clock_type::now();
    const auto witness = criteria[i].run();
    const double elapsed = seconds_since(start);
    std::cout << (witness ? "[FAIL] " : "[PASS] ") << "criterion " << (i + 1) << ": "
              << criteria[i].title;
    if (witness) std::cout << " -- " << *witness;
    std::cout << " (" << elapsed << " s)" << std::endl;
    failures += witness.has_value();
  }
  std::cout << (criteria.size() - failures) << " of " << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
