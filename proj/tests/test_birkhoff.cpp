#include <catch_amalgamated.hpp>

#include <set>

#include "dyck/birkhoff.hpp"
#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"

using namespace dyck;

namespace {

height_seq_a a_path(std::vector<int> h) { return height_seq_a(std::move(h)); }
height_seq_b b_path(std::vector<int> h, int n) { return height_seq_b(std::move(h), n); }

}  // namespace

TEST_CASE("triangle posets") {
  CHECK(make_triangle_poset(family::a, 4).elements.size() == 6);
  CHECK(make_triangle_poset(family::b, 3).elements.size() == 9);
  CHECK(make_triangle_poset(family::a, 1).elements.empty());

  const auto poset = make_triangle_poset(family::b, 2);
  for (const auto& x : poset.elements) {
    CHECK(triangle_leq(x, x));
    for (const auto& y : poset.elements) {
      if (triangle_leq(x, y) && triangle_leq(y, x)) CHECK(x == y);
      for (const auto& z : poset.elements)
        if (triangle_leq(x, y) && triangle_leq(y, z)) CHECK(triangle_leq(x, z));
    }
  }
}

TEST_CASE("prime indices") {
  CHECK(prime_index(a_path({1, 3, 3, 4})) == std::pair{2, 3});
  CHECK(prime_index(b_path({5}, 3)) == std::pair{1, 5});
  CHECK_THROWS_AS(prime_index(a_path({2, 3, 3, 4})), std::domain_error);
  CHECK_THROWS_AS(prime_index(bottom_a(4)), std::domain_error);

  CHECK(path_for_prime_a(4, 2, 3) == a_path({1, 3, 3, 4}));
  CHECK(path_for_prime_b(3, 1, 5) == b_path({5}, 3));
  CHECK_THROWS_AS(path_for_prime_a(4, 3, 3), std::domain_error);
  CHECK_THROWS_AS(path_for_prime_b(3, 2, 6), std::domain_error);
}

TEST_CASE("prime index round trips over every irreducible") {
  for (int n = 1; n <= 5; ++n) {
    const auto poset_a = make_triangle_poset(family::a, n);
    for (const auto& [i, j] : poset_a.elements) {
      const auto p = path_for_prime_a(n, i, j);
      CHECK(is_join_irreducible(p));
      CHECK(prime_index(p) == std::pair{i, j});
    }
    const auto poset_b = make_triangle_poset(family::b, n);
    for (const auto& [i, j] : poset_b.elements) {
      const auto p = path_for_prime_b(n, i, j);
      CHECK(is_join_irreducible(p));
      CHECK(prime_index(p) == std::pair{i, j});
    }
  }
}

TEST_CASE("ideals of the triangle poset") {
  const auto poset = make_triangle_poset(family::a, 4);

  const auto bottom_ideal = irreducibles_below(bottom_a(4), poset);
  CHECK(bottom_ideal.size() == 0);
  const auto top_ideal = irreducibles_below(top_a(4), poset);
  CHECK(top_ideal.size() == poset.elements.size());

  CHECK(path_from_ideal_a(bottom_ideal) == bottom_a(4));
  CHECK(path_from_ideal_a(top_ideal) == top_a(4));

  // a non-ideal membership set is rejected
  std::vector<char> bad(poset.elements.size(), 0);
  bad[poset.find({1, 4})] = 1;  // (1,4) needs (1,2) and (1,3) below it
  CHECK_THROWS_AS(make_order_ideal(poset, bad), std::domain_error);

  // all 14 paths map to 14 distinct ideals, which is all of I(T_4^a)
  std::set<std::vector<char>> images;
  for (const auto& h : enumerate(family::a, {4, 0}).elements)
    images.insert(irreducibles_below(height_seq_a(h), poset).member);
  CHECK(images.size() == 14);
  CHECK(all_ideals(poset).size() == 14);

  CHECK(all_ideals(make_triangle_poset(family::b, 3)).size() == 20);
}

TEST_CASE("irreducible counts and the triangle order at n = 6") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t count_a = 0;
    for (const auto& h : enumerate(family::a, {n, 0}).elements)
      count_a += is_join_irreducible(height_seq_a(h));
    CHECK(count_a == static_cast<std::size_t>(n) * (n - 1) / 2);

    std::vector<height_seq_b> irreducibles;
    for (const auto& h : enumerate(family::b, {n, 0}).elements) {
      const height_seq_b p(h, n);
      if (is_join_irreducible(p)) irreducibles.push_back(p);
    }
    CHECK(irreducibles.size() == static_cast<std::size_t>(n) * n);
    for (const auto& p : irreducibles)
      for (const auto& q : irreducibles)
        CHECK(leq(p, q) == triangle_leq(prime_index(p), prime_index(q)));
  }
}

TEST_CASE("birkhoff verification passes at desk scale") {
  for (int n = 1; n <= 6; ++n) {
    const auto report = verify_birkhoff(family::a, n);
    INFO("type a, n = " << n << ": "
                        << (report.failures.empty() ? "" : report.failures.front()));
    CHECK(report.passed);
    CHECK(report.irreducible_count == static_cast<std::size_t>(n) * (n - 1) / 2);
    CHECK(report.ideal_count == report.element_count);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto report = verify_birkhoff(family::b, n);
    INFO("type b, n = " << n << ": "
                        << (report.failures.empty() ? "" : report.failures.front()));
    CHECK(report.passed);
    CHECK(report.irreducible_count == static_cast<std::size_t>(n) * n);
    CHECK(report.ideal_count == report.element_count);
  }
}
