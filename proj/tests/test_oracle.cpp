#include <catch_amalgamated.hpp>

#include "dyck/export.hpp"
#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/oracle.hpp"

using namespace dyck;

TEST_CASE("definitional relative pseudocomplement") {
  const auto a4 = enumerate(family::a, {4, 0});
  CHECK(oracle_impl(a4, std::vector<int>{2, 3, 3, 4}, std::vector<int>{1, 2, 3, 4}) ==
        std::vector<int>{1, 2, 4, 4});
  for (const auto& p : a4.elements)
    CHECK(oracle_impl(a4, p, p) == std::vector<int>{4, 4, 4, 4});

  const auto b3 = enumerate(family::b, {3, 0});
  CHECK(oracle_impl(b3, std::vector<int>{3, 5}, std::vector<int>{1, 2, 4}) ==
        std::vector<int>{1, 2, 4});
}

TEST_CASE("candidate sets are join closed") {
  // the literal closure property behind oracle_impl, spelled out pairwise
  const auto b2 = enumerate(family::b, {2, 0});
  for (const auto& p1 : b2.elements)
    for (const auto& p2 : b2.elements) {
      std::vector<std::vector<int>> candidates;
      for (const auto& z : b2.elements)
        if (detail::leq_b(detail::meet_b(p1, z), p2)) candidates.push_back(z);
      REQUIRE_FALSE(candidates.empty());
      for (const auto& x : candidates)
        for (const auto& y : candidates) {
          const auto joined = detail::join_b(x, y);
          CHECK(detail::leq_b(detail::meet_b(p1, joined), p2));
        }
    }
}

TEST_CASE("join irreducibility from the cover relation") {
  auto a4 = enumerate(family::a, {4, 0});
  a4.covers = compute_covers(a4);
  CHECK_FALSE(oracle_join_irreducible(a4, a4.find(std::vector<int>{1, 2, 3, 4})));
  CHECK(oracle_join_irreducible(a4, a4.find(std::vector<int>{1, 3, 3, 4})));
  CHECK_FALSE(oracle_join_irreducible(a4, a4.find(std::vector<int>{2, 3, 3, 4})));
}

TEST_CASE("verify_family runs every applicable check") {
  const auto report_a = verify_family(family::a, {5, 0});
  CHECK(report_a.results.size() == 8);  // all but embedding and equalizer
  for (const auto& r : report_a.results) {
    INFO(r.check << ": " << r.detail);
    CHECK(r.passed);
  }

  const auto report_b = verify_family(family::b, {4, 0});
  CHECK(report_b.results.size() == 8);  // all but psi and interval
  for (const auto& r : report_b.results) {
    INFO(r.check << ": " << r.detail);
    CHECK(r.passed);
  }

  const auto report_m = verify_family(family::mono, {3, 3});
  CHECK(report_m.results.size() == 5);
  for (const auto& r : report_m.results) {
    INFO(r.check << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("grid lattices have only the two trivial regular elements") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto report = verify_family(family::mono, {n, m}, {"regular"});
      REQUIRE(report.results.size() == 1);
      INFO("n=" << n << " m=" << m << ": " << report.results.front().detail);
      CHECK(report.results.front().passed);
    }
}

TEST_CASE("verify_family selections and errors") {
  const auto counts_only = verify_family(family::mono, {3, 3}, {"counts"});
  REQUIRE(counts_only.results.size() == 1);
  CHECK(counts_only.results.front().check == "counts");
  CHECK(counts_only.results.front().passed);

  // checks inapplicable to the family are skipped silently
  const auto skipped = verify_family(family::a, {3, 0}, {"embedding"});
  CHECK(skipped.results.empty());

  CHECK_THROWS_AS(verify_family(family::a, {3, 0}, {"bogus"}), std::domain_error);
}

TEST_CASE("parallel sweeps agree with serial ones") {
  const auto serial = verify_family(family::a, {5, 0}, {}, false);
  const auto parallel = verify_family(family::a, {5, 0}, {}, true);
  REQUIRE(serial.results.size() == parallel.results.size());
  for (std::size_t i = 0; i < serial.results.size(); ++i) {
    CHECK(serial.results[i].check == parallel.results[i].check);
    CHECK(serial.results[i].passed == parallel.results[i].passed);
    CHECK(serial.results[i].detail == parallel.results[i].detail);
  }
}

TEST_CASE("report rendering") {
  const auto report = verify_family(family::b, {2, 0}, {"counts", "impl"});
  const auto text = report_to_text(report);
  CHECK(text.find("family=b") != std::string::npos);
  CHECK(text.find("counts: PASS") != std::string::npos);
  CHECK(text.find("impl: PASS") != std::string::npos);
  const auto doc = report_to_json(report);
  CHECK(doc["family"] == "b");
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["passed"].get<bool>());
}
