#include <catch_amalgamated.hpp>

#include "dyck/lattice.hpp"
#include "dyck/paths.hpp"

using namespace dyck;

namespace {

height_seq_a a_path(std::vector<int> h) { return height_seq_a(std::move(h)); }
height_seq_b b_path(std::vector<int> h, int n) { return height_seq_b(std::move(h), n); }

}  // namespace

TEST_CASE("dominance comparisons") {
  CHECK(leq(a_path({1, 3, 3, 4}), a_path({2, 3, 3, 4})));
  CHECK_FALSE(leq(a_path({2, 3, 3, 4}), a_path({1, 3, 3, 4})));

  CHECK(leq(b_path({1, 2, 3}, 3), b_path({2, 4}, 3)));
  CHECK_FALSE(leq(b_path({3, 3, 4}, 3), b_path({1, 5}, 3)));
  CHECK_FALSE(leq(b_path({1, 5}, 3), b_path({3, 3, 4}, 3)));

  CHECK(leq(monotone_path({0, 1}, 2), monotone_path({1, 1}, 2)));
  CHECK_THROWS_AS(leq(a_path({1, 2}), a_path({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(leq(b_path({2, 2}, 2), b_path({1, 2, 3}, 3)), std::domain_error);
}

TEST_CASE("meets and joins") {
  CHECK(join(a_path({2, 2, 3, 4}), a_path({1, 3, 3, 4})) == a_path({2, 3, 3, 4}));
  CHECK(meet(a_path({2, 2, 3, 4}), a_path({1, 3, 3, 4})) == a_path({1, 2, 3, 4}));

  CHECK(meet(b_path({1, 3, 3}, 3), b_path({2, 2, 3}, 3)) == b_path({1, 2, 3}, 3));
  CHECK(join(b_path({1, 3, 3}, 3), b_path({2, 2, 3}, 3)) == b_path({2, 3, 3}, 3));
  CHECK(meet(b_path({3, 3, 4}, 3), b_path({1, 5}, 3)) == b_path({1, 3, 4}, 3));
  CHECK(join(b_path({3, 3, 4}, 3), b_path({1, 5}, 3)) == b_path({3, 5}, 3));
  // the argument order must not matter even though the lengths differ
  CHECK(meet(b_path({1, 5}, 3), b_path({3, 3, 4}, 3)) == b_path({1, 3, 4}, 3));
  CHECK(join(b_path({1, 5}, 3), b_path({3, 3, 4}, 3)) == b_path({3, 5}, 3));
}

TEST_CASE("enumeration counts and ordering") {
  CHECK(enumerate(family::a, {4, 0}).elements.size() == 14);
  CHECK(enumerate(family::b, {3, 0}).elements.size() == 20);
  CHECK(enumerate(family::mono, {3, 3}).elements.size() == 20);

  const auto tiny = enumerate(family::b, {1, 0});
  REQUIRE(tiny.elements.size() == 2);
  CHECK(tiny.elements[0] == std::vector<int>{1});
  CHECK(tiny.elements[1] == std::vector<int>{2});

  // type-b ids run over descending k first, lexicographic within each block
  const auto b2 = enumerate(family::b, {2, 0});
  CHECK(b2.elements == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3}, {4}});

  // ids: bottom first, top last
  const auto a4 = enumerate(family::a, {4, 0});
  CHECK(a4.elements.front() == std::vector<int>{1, 2, 3, 4});
  CHECK(a4.elements.back() == std::vector<int>{4, 4, 4, 4});
  const auto b3 = enumerate(family::b, {3, 0});
  CHECK(b3.elements.front() == std::vector<int>{1, 2, 3});
  CHECK(b3.elements.back() == std::vector<int>{6});

  CHECK_THROWS_AS(enumerate(family::a, {13, 0}), std::domain_error);
  CHECK_THROWS_AS(enumerate(family::b, {10, 0}), std::domain_error);
  CHECK_THROWS_AS(enumerate(family::mono, {11, 10}), std::domain_error);
  // a raised guard admits the same size
  CHECK_NOTHROW(enumerate(family::b, {10, 0}, enumeration_guard{12, 10, 20}));
}

TEST_CASE("cover relations") {
  auto a4 = enumerate(family::a, {4, 0});
  a4.covers = compute_covers(a4);
  const int bottom = a4.find(std::vector<int>{1, 2, 3, 4});
  const int top = a4.find(std::vector<int>{4, 4, 4, 4});
  int bottom_up = 0, top_up = 0;
  for (const auto& [lo, hi] : a4.covers) {
    if (lo == bottom) ++bottom_up;
    if (lo == top) ++top_up;
  }
  CHECK(bottom_up == 3);
  CHECK(top_up == 0);

  auto b3 = enumerate(family::b, {3, 0});
  b3.covers = compute_covers(b3);
  const int b_bottom = b3.find(std::vector<int>{1, 2, 3});
  int b_bottom_up = 0;
  for (const auto& [lo, hi] : b3.covers)
    if (lo == b_bottom) ++b_bottom_up;
  CHECK(b_bottom_up == 3);
}

TEST_CASE("word-prefix dominance") {
  const dyck_word staircase("urur", family::a);
  const dyck_word top("uurr", family::a);
  CHECK(word_prefix_leq(staircase, staircase));
  CHECK(word_prefix_leq(staircase, top));
  CHECK_FALSE(word_prefix_leq(top, staircase));
  CHECK_THROWS_AS(word_prefix_leq(staircase, dyck_word("uuurrr", family::a)), std::domain_error);

  for (int n = 1; n <= 6; ++n) {
    const auto snap = enumerate(family::a, {n, 0});
    std::vector<dyck_word> words;
    for (const auto& h : snap.elements) words.push_back(heights_to_word_a(height_seq_a(h)));
    for (std::size_t x = 0; x < snap.elements.size(); ++x)
      for (std::size_t y = 0; y < snap.elements.size(); ++y)
        CHECK(word_prefix_leq(words[x], words[y]) == snap.leq_ids(static_cast<int>(x), static_cast<int>(y)));
  }
}

TEST_CASE("shorter type-b sequences end higher") {
  for (int n = 1; n <= 5; ++n) {
    const auto snap = enumerate(family::b, {n, 0});
    for (const auto& p : snap.elements)
      for (const auto& q : snap.elements) {
        const auto k = p.size(), kp = q.size();
        if (k < kp) CHECK(p[k - 1] > q[k - 1]);
      }
  }
}

TEST_CASE("type-b dominance embeds into the doubled type-a lattice") {
  for (int n = 1; n <= 4; ++n) {
    const auto snap = enumerate(family::b, {n, 0});
    std::vector<height_seq_a> embedded;
    for (const auto& h : snap.elements) embedded.push_back(embed_b_to_a(height_seq_b(h, n)));
    for (std::size_t x = 0; x < snap.elements.size(); ++x)
      for (std::size_t y = 0; y < snap.elements.size(); ++y)
        CHECK(snap.leq_ids(static_cast<int>(x), static_cast<int>(y)) ==
              leq(embedded[x], embedded[y]));
  }
}
