#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/paths.hpp"

namespace dyck {

/// Index poset of the join-irreducible paths.  Elements are pairs (i, j) with
/// 1 <= i < j <= n (type a) or 1 <= i < j <= 2n+1-i (type b), ordered by
/// (a, b) <= (a', b') iff a >= a' and b <= b'.
struct triangle_poset {
  family fam = family::a;
  int n = 0;
  std::vector<std::pair<int, int>> elements;

  int find(std::pair<int, int> e) const {
    for (std::size_t t = 0; t < elements.size(); ++t)
      if (elements[t] == e) return static_cast<int>(t);
    return -1;
  }
};

inline bool triangle_leq(std::pair<int, int> x, std::pair<int, int> y) {
  return x.first >= y.first && x.second <= y.second;
}

inline triangle_poset make_triangle_poset(family fam, int n) {
  if (fam == family::mono)
    throw std::domain_error("triangle poset: family must be a or b");
  if (n < 1) throw std::domain_error("triangle poset: n must be positive");
  triangle_poset poset{fam, n, {}};
  const auto bound = [&](int i) { return fam == family::a ? n : 2 * n + 1 - i; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= bound(i); ++j)
      poset.elements.emplace_back(i, j);
  return poset;
}

namespace detail {

inline std::pair<int, int> prime_index_vec(std::span<const int> h) {
  int found = -1, prev = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] > static_cast<int>(i) + 1 && h[i] > prev) {
      if (found >= 0) throw std::domain_error("prime_index: path is not join-irreducible");
      found = static_cast<int>(i);
    }
    prev = h[i];
  }
  if (found < 0) throw std::domain_error("prime_index: path is not join-irreducible");
  return {found + 1, h[found]};
}

}  // namespace detail

/// The pair (i, h_i) at the unique index with h_i > i and h_i > h_{i-1};
/// an order isomorphism from the join-irreducibles onto the triangle poset.
inline std::pair<int, int> prime_index(const height_seq_a& p) {
  return detail::prime_index_vec(p.heights());
}

inline std::pair<int, int> prime_index(const height_seq_b& p) {
  return detail::prime_index_vec(p.heights());
}

/// Inverse of prime_index: the join-irreducible path indexed by (i, j).
inline height_seq_a path_for_prime_a(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::domain_error("path_for_prime_a: pair outside the triangle poset");
  std::vector<int> h(n);
  for (int s = 1; s <= n; ++s) h[s - 1] = s < i ? s : std::max(j, s);
  return height_seq_a(std::move(h));
}

inline height_seq_b path_for_prime_b(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= 2 * n + 1 - i))
    throw std::domain_error("path_for_prime_b: pair outside the triangle poset");
  std::vector<int> h;
  for (int s = 1; s <= n; ++s) {
    const int v = s < i ? s : std::max(j, s);
    h.push_back(v);
    if (v + s >= 2 * n) break;  // reached the last entry of the sequence
  }
  return height_seq_b(std::move(h), n);
}

/// A downward closed subset of a triangle poset, stored as an explicit
/// membership mask over its elements.
struct order_ideal {
  const triangle_poset* poset = nullptr;
  std::vector<char> member;

  std::size_t size() const {
    std::size_t count = 0;
    for (char c : member) count += c != 0;
    return count;
  }

  friend bool operator==(const order_ideal& x, const order_ideal& y) {
    return x.member == y.member;
  }
};

inline order_ideal make_order_ideal(const triangle_poset& poset, std::vector<char> member) {
  if (member.size() != poset.elements.size())
    throw std::domain_error("order ideal: membership mask has wrong size");
  for (std::size_t x = 0; x < member.size(); ++x) {
    if (!member[x]) continue;
    for (std::size_t y = 0; y < member.size(); ++y)
      if (!member[y] && triangle_leq(poset.elements[y], poset.elements[x]))
        throw std::domain_error("order ideal: set is not downward closed");
  }
  return order_ideal{&poset, std::move(member)};
}

inline order_ideal irreducibles_below(const height_seq_a& p, const triangle_poset& poset) {
  if (poset.fam != family::a || poset.n != p.n())
    throw std::domain_error("irreducibles_below: poset does not match the path");
  std::vector<char> member(poset.elements.size(), 0);
  for (std::size_t t = 0; t < poset.elements.size(); ++t) {
    const auto [i, j] = poset.elements[t];
    member[t] = leq(path_for_prime_a(poset.n, i, j), p) ? 1 : 0;
  }
  return make_order_ideal(poset, std::move(member));
}

inline order_ideal irreducibles_below(const height_seq_b& p, const triangle_poset& poset) {
  if (poset.fam != family::b || poset.n != p.n())
    throw std::domain_error("irreducibles_below: poset does not match the path");
  std::vector<char> member(poset.elements.size(), 0);
  for (std::size_t t = 0; t < poset.elements.size(); ++t) {
    const auto [i, j] = poset.elements[t];
    member[t] = leq(path_for_prime_b(poset.n, i, j), p) ? 1 : 0;
  }
  return make_order_ideal(poset, std::move(member));
}

/// Join of the ideal's irreducibles, taken in id order; the empty ideal gives
/// the bottom element.
inline height_seq_a path_from_ideal_a(const order_ideal& ideal) {
  const triangle_poset& poset = *ideal.poset;
  if (poset.fam != family::a)
    throw std::domain_error("path_from_ideal_a: ideal is not over a type-a poset");
  height_seq_a acc = bottom_a(poset.n);
  for (std::size_t t = 0; t < ideal.member.size(); ++t)
    if (ideal.member[t]) {
      const auto [i, j] = poset.elements[t];
      acc = join(acc, path_for_prime_a(poset.n, i, j));
    }
  return acc;
}

inline height_seq_b path_from_ideal_b(const order_ideal& ideal) {
  const triangle_poset& poset = *ideal.poset;
  if (poset.fam != family::b)
    throw std::domain_error("path_from_ideal_b: ideal is not over a type-b poset");
  height_seq_b acc = bottom_b(poset.n);
  for (std::size_t t = 0; t < ideal.member.size(); ++t)
    if (ideal.member[t]) {
      const auto [i, j] = poset.elements[t];
      acc = join(acc, path_for_prime_b(poset.n, i, j));
    }
  return acc;
}

/// Every order ideal, found by breadth-first closure over addable elements.
inline std::vector<order_ideal> all_ideals(const triangle_poset& poset) {
  const std::size_t count = poset.elements.size();
  if (count > 63) throw std::domain_error("all_ideals: poset too large");
  std::vector<std::uint64_t> masks{0};
  std::unordered_set<std::uint64_t> seen{0};
  for (std::size_t head = 0; head < masks.size(); ++head) {
    const std::uint64_t mask = masks[head];
    for (std::size_t x = 0; x < count; ++x) {
      if (mask & (std::uint64_t{1} << x)) continue;
      bool addable = true;
      for (std::size_t y = 0; y < count; ++y) {
        if ((mask & (std::uint64_t{1} << y)) == 0 && y != x &&
            triangle_leq(poset.elements[y], poset.elements[x])) {
          addable = false;
          break;
        }
      }
      if (!addable) continue;
      const std::uint64_t next = mask | (std::uint64_t{1} << x);
      if (seen.insert(next).second) masks.push_back(next);
    }
  }
  std::sort(masks.begin(), masks.end());
  std::vector<order_ideal> ideals;
  ideals.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    std::vector<char> member(count, 0);
    for (std::size_t x = 0; x < count; ++x)
      if (mask & (std::uint64_t{1} << x)) member[x] = 1;
    ideals.push_back(order_ideal{&poset, std::move(member)});
  }
  return ideals;
}

struct birkhoff_report {
  bool passed = true;
  std::vector<std::string> failures;
  std::size_t element_count = 0;
  std::size_t irreducible_count = 0;
  std::size_t ideal_count = 0;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
};

namespace detail {

template <typename Path, typename PrimePath, typename FromIdeal>
birkhoff_report verify_birkhoff_impl(const triangle_poset& poset, PrimePath&& prime_path,
                                     FromIdeal&& from_ideal, const std::vector<Path>& paths) {
  birkhoff_report report;
  report.element_count = paths.size();

  std::vector<std::size_t> irreducible_ids;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (is_join_irreducible(paths[i])) irreducible_ids.push_back(i);
  report.irreducible_count = irreducible_ids.size();
  if (irreducible_ids.size() != poset.elements.size())
    report.fail("irreducible count " + std::to_string(irreducible_ids.size()) +
                " differs from |T| = " + std::to_string(poset.elements.size()));

  // prime_index is a bijection onto T and an order isomorphism
  std::vector<char> hit(poset.elements.size(), 0);
  for (std::size_t i : irreducible_ids) {
    const auto pair = prime_index(paths[i]);
    const int t = poset.find(pair);
    if (t < 0) {
      report.fail("prime index (" + std::to_string(pair.first) + "," +
                  std::to_string(pair.second) + ") is outside T");
      continue;
    }
    if (hit[t]) report.fail("prime index hit twice");
    hit[t] = 1;
    if (!(prime_path(pair.first, pair.second) == paths[i]))
      report.fail("path_for_prime does not invert prime_index at (" +
                  std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
  }
  for (std::size_t x = 0; x < irreducible_ids.size() && report.passed; ++x)
    for (std::size_t y = 0; y < irreducible_ids.size(); ++y) {
      const auto& p = paths[irreducible_ids[x]];
      const auto& q = paths[irreducible_ids[y]];
      if (leq(p, q) != triangle_leq(prime_index(p), prime_index(q))) {
        report.fail("prime_index is not an order isomorphism at irreducible pair (" +
                    format_heights(p.heights()) + "), (" + format_heights(q.heights()) + ")");
        break;
      }
    }

  // the ideal map is a bijection onto all ideals, preserves order both ways,
  // and sends meet/join to intersection/union
  const auto ideals = all_ideals(poset);
  report.ideal_count = ideals.size();
  if (ideals.size() != paths.size())
    report.fail("ideal count " + std::to_string(ideals.size()) +
                " differs from element count " + std::to_string(paths.size()));

  std::vector<order_ideal> image;
  image.reserve(paths.size());
  for (const auto& p : paths) {
    image.push_back(irreducibles_below(p, poset));
    if (!(from_ideal(image.back()) == p))
      report.fail("path_from_ideal does not invert irreducibles_below at " +
                  format_heights(p.heights()));
  }
  for (const auto& ideal : ideals) {
    bool found = false;
    for (const auto& img : image)
      if (img == ideal) { found = true; break; }
    if (!found) {
      report.fail("an ideal is missed by the correspondence");
      break;
    }
  }

  const auto subset = [](const order_ideal& x, const order_ideal& y) {
    for (std::size_t t = 0; t < x.member.size(); ++t)
      if (x.member[t] && !y.member[t]) return false;
    return true;
  };
  for (std::size_t x = 0; x < paths.size() && report.passed; ++x)
    for (std::size_t y = 0; y < paths.size(); ++y) {
      if (leq(paths[x], paths[y]) != subset(image[x], image[y])) {
        report.fail("order is not preserved at pair (" + format_heights(paths[x].heights()) +
                    "), (" + format_heights(paths[y].heights()) + ")");
        break;
      }
      order_ideal meet_ideal = image[x], join_ideal = image[x];
      for (std::size_t t = 0; t < meet_ideal.member.size(); ++t) {
        meet_ideal.member[t] = image[x].member[t] && image[y].member[t];
        join_ideal.member[t] = image[x].member[t] || image[y].member[t];
      }
      if (!(irreducibles_below(meet(paths[x], paths[y]), poset) == meet_ideal)) {
        report.fail("meet does not map to ideal intersection at pair (" +
                    format_heights(paths[x].heights()) + "), (" +
                    format_heights(paths[y].heights()) + ")");
        break;
      }
      if (!(irreducibles_below(join(paths[x], paths[y]), poset) == join_ideal)) {
        report.fail("join does not map to ideal union at pair (" +
                    format_heights(paths[x].heights()) + "), (" +
                    format_heights(paths[y].heights()) + ")");
        break;
      }
    }

  return report;
}

}  // namespace detail

/// Exhaustive check of the order-ideal correspondence at a given size.
inline birkhoff_report verify_birkhoff(family fam, int n,
                                       const enumeration_guard& guard = {}) {
  if (fam == family::mono)
    throw std::domain_error("verify_birkhoff: family must be a or b");
  const auto snap = enumerate(fam, {n, 0}, guard);
  const auto poset = make_triangle_poset(fam, n);
  if (fam == family::a) {
    std::vector<height_seq_a> paths;
    paths.reserve(snap.elements.size());
    for (const auto& h : snap.elements) paths.emplace_back(h);
    return detail::verify_birkhoff_impl<height_seq_a>(
        poset, [&](int i, int j) { return path_for_prime_a(n, i, j); },
        [&](const order_ideal& ideal) { return path_from_ideal_a(ideal); }, paths);
  }
  std::vector<height_seq_b> paths;
  paths.reserve(snap.elements.size());
  for (const auto& h : snap.elements) paths.emplace_back(h, n);
  return detail::verify_birkhoff_impl<height_seq_b>(
      poset, [&](int i, int j) { return path_for_prime_b(n, i, j); },
      [&](const order_ideal& ideal) { return path_from_ideal_b(ideal); }, paths);
}

}  // namespace dyck
