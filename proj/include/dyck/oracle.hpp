#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/paths.hpp"

namespace dyck {

namespace detail {

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

inline unsigned long long expected_count(family fam, lattice_params params) {
  switch (fam) {
    case family::a: return binomial(2 * params.n, params.n) / (params.n + 1);
    case family::b: return binomial(2 * params.n, params.n);
    default: return binomial(params.n + params.m, params.n);
  }
}

inline std::vector<int> bottom_vec(family fam, lattice_params params) {
  std::vector<int> h(params.n);
  for (int i = 0; i < params.n; ++i) h[i] = fam == family::mono ? 0 : i + 1;
  return h;
}

inline std::vector<int> top_vec(family fam, lattice_params params) {
  switch (fam) {
    case family::a: return std::vector<int>(params.n, params.n);
    case family::b: return {2 * params.n};
    default: return std::vector<int>(params.n, params.m);
  }
}

inline std::vector<int> impl_vec(family fam, std::span<const int> h1, std::span<const int> h2,
                                 lattice_params params) {
  switch (fam) {
    case family::a: return impl_a_vec(h1, h2);
    case family::b: return impl_b_vec(h1, h2, params.n);
    default: return impl_mono_vec(h1, h2, params.m);
  }
}

inline std::vector<int> pseudo_vec(family fam, std::span<const int> h, lattice_params params) {
  switch (fam) {
    case family::a: return pseudo_a_vec(h);
    case family::b: return pseudo_b_vec(h, params.n);
    default: {
      const bool is_bottom = std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
      return is_bottom ? top_vec(fam, params) : bottom_vec(fam, params);
    }
  }
}

inline void check_vec(family fam, std::span<const int> h, lattice_params params) {
  switch (fam) {
    case family::a: check_heights_a(h); break;
    case family::b: check_heights_b(h, params.n); break;
    default: check_heights_mono(h, params.m); break;
  }
}

// runs fn over [0, count) and reports the failure with the smallest index;
// the parallel split is over contiguous ranges, so the winner is the same
// one the serial scan would find
template <typename Fn>
std::optional<std::string> first_failure(std::size_t count, bool parallel, Fn&& fn) {
  if (!parallel || count < 2048) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto witness = fn(i)) return witness;
    return std::nullopt;
  }
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::optional<std::string>> found(workers);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        if (auto witness = fn(i)) {
          found[t] = std::move(witness);
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& witness : found)
    if (witness) return witness;
  return std::nullopt;
}

}  // namespace detail

/// Definitional relative pseudocomplement: scans the whole snapshot for
/// S = {z : p1 /\ z <= p2} and returns its maximum.  The join of S must lie
/// in S again, otherwise the Heyting property itself is violated and a
/// logic_error carrying the witness pair is thrown.
inline std::vector<int> oracle_impl(const lattice_snapshot& snap, std::span<const int> p1,
                                    std::span<const int> p2) {
  std::optional<std::vector<int>> best;
  std::size_t members = 0;
  for (const auto& z : snap.elements) {
    const auto met = detail::meet_family(snap.fam, p1, z);
    if (!detail::leq_family(snap.fam, met, p2)) continue;
    ++members;
    best = best ? detail::join_family(snap.fam, *best, z) : z;
  }
  if (!best)
    throw std::logic_error("oracle_impl: candidate set is empty for p1=" +
                           format_heights(p1) + " p2=" + format_heights(p2));
  const auto met = detail::meet_family(snap.fam, p1, *best);
  if (!detail::leq_family(snap.fam, met, p2))
    throw std::logic_error("oracle_impl: candidate set is not closed under join for p1=" +
                           format_heights(p1) + " p2=" + format_heights(p2) +
                           " (join of " + std::to_string(members) + " candidates escapes)");
  return *best;
}

/// Join-irreducibility read off the Hasse diagram: exactly one lower cover.
inline bool oracle_join_irreducible(const lattice_snapshot& snap, int id) {
  std::size_t lower = 0;
  for (const auto& [lo, hi] : snap.covers)
    if (hi == id) ++lower;
  return lower == 1;
}

struct check_result {
  std::string check;
  bool passed = true;
  std::string detail;  // first counterexample, empty when passed
};

struct verify_report {
  family fam = family::a;
  lattice_params params;
  std::vector<check_result> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "counts",      "distributive", "impl",      "pseudo",    "regular",
      "irreducible", "psi",          "embedding", "equalizer", "interval"};
  return names;
}

namespace detail {

// fixed-width bit rows over the snapshot ids
struct bit_matrix {
  std::size_t n = 0, words = 0;
  std::vector<std::uint64_t> data;

  explicit bit_matrix(std::size_t size)
      : n(size), words((size + 63) / 64), data(size * words, 0) {}

  void set(std::size_t row, std::size_t col) {
    data[row * words + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool get(std::size_t row, std::size_t col) const {
    return (data[row * words + col / 64] >> (col % 64)) & 1;
  }
  bool row_subset(std::size_t x, std::size_t y) const {
    for (std::size_t w = 0; w < words; ++w)
      if (data[x * words + w] & ~data[y * words + w]) return false;
    return true;
  }
  bool row_equals_and(std::size_t r, std::size_t x, std::size_t y) const {
    for (std::size_t w = 0; w < words; ++w)
      if (data[r * words + w] != (data[x * words + w] & data[y * words + w])) return false;
    return true;
  }
};

struct verify_context {
  const lattice_snapshot& snap;
  lattice_params params;
  bool parallel;
  const enumeration_guard& guard;
  std::map<std::vector<int>, int> index;

  explicit verify_context(const lattice_snapshot& s, bool par, const enumeration_guard& g)
      : snap(s), params(s.params), parallel(par), guard(g) {
    for (std::size_t i = 0; i < snap.elements.size(); ++i)
      index[snap.elements[i]] = static_cast<int>(i);
  }

  family fam() const { return snap.fam; }
  std::size_t size() const { return snap.elements.size(); }
  const std::vector<int>& at(std::size_t i) const { return snap.elements[i]; }
  int find(const std::vector<int>& h) const {
    auto it = index.find(h);
    return it == index.end() ? -1 : it->second;
  }
  std::string name(std::size_t i) const { return "(" + format_heights(at(i)) + ")"; }
};

inline check_result check_counts(const verify_context& ctx) {
  check_result result{"counts", true, ""};
  const auto expected = expected_count(ctx.fam(), ctx.params);
  if (ctx.size() != expected) {
    result.passed = false;
    result.detail = "enumerated " + std::to_string(ctx.size()) + " elements, expected " +
                    std::to_string(expected);
    return result;
  }
  std::size_t minimal = 0, maximal = 0;
  for (std::size_t x = 0; x < ctx.size(); ++x) {
    bool has_lower = false, has_upper = false;
    for (std::size_t y = 0; y < ctx.size(); ++y) {
      if (y == x) continue;
      if (leq_family(ctx.fam(), ctx.at(y), ctx.at(x))) has_lower = true;
      if (leq_family(ctx.fam(), ctx.at(x), ctx.at(y))) has_upper = true;
    }
    minimal += !has_lower;
    maximal += !has_upper;
  }
  if (minimal != 1 || maximal != 1) {
    result.passed = false;
    result.detail = std::to_string(minimal) + " minimal and " + std::to_string(maximal) +
                    " maximal elements";
  }
  return result;
}

inline check_result check_distributive(const verify_context& ctx) {
  check_result result{"distributive", true, ""};
  const std::size_t n = ctx.size();
  bit_matrix below(n), above(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq_family(ctx.fam(), ctx.at(x), ctx.at(y))) continue;
      if (x != y && leq_family(ctx.fam(), ctx.at(y), ctx.at(x))) {
        result.passed = false;
        result.detail = "antisymmetry fails at " + ctx.name(x) + ", " + ctx.name(y);
        return result;
      }
      below.set(y, x);
      above.set(x, y);
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (!below.get(x, x)) {
      result.passed = false;
      result.detail = "reflexivity fails at " + ctx.name(x);
      return result;
    }
    for (std::size_t y = 0; y < n; ++y)
      if (below.get(y, x) && !below.row_subset(x, y)) {
        result.passed = false;
        result.detail = "transitivity fails between " + ctx.name(x) + " and " + ctx.name(y);
        return result;
      }
  }
  // meets are definitional glbs and joins definitional lubs
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int m = ctx.find(meet_family(ctx.fam(), ctx.at(x), ctx.at(y)));
      const int j = ctx.find(join_family(ctx.fam(), ctx.at(x), ctx.at(y)));
      if (m < 0 || j < 0) {
        result.passed = false;
        result.detail = "meet or join leaves the family at " + ctx.name(x) + ", " + ctx.name(y);
        return result;
      }
      if (!below.row_equals_and(m, x, y)) {
        result.passed = false;
        result.detail = "meet is not the glb at " + ctx.name(x) + ", " + ctx.name(y);
        return result;
      }
      if (!above.row_equals_and(j, x, y)) {
        result.passed = false;
        result.detail = "join is not the lub at " + ctx.name(x) + ", " + ctx.name(y);
        return result;
      }
    }
  auto witness = first_failure(n * n * n, ctx.parallel, [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t p = t / (n * n), q = (t / n) % n, r = t % n;
    const auto lhs = meet_family(ctx.fam(), ctx.at(p), join_family(ctx.fam(), ctx.at(q), ctx.at(r)));
    const auto rhs = join_family(ctx.fam(), meet_family(ctx.fam(), ctx.at(p), ctx.at(q)),
                                 meet_family(ctx.fam(), ctx.at(p), ctx.at(r)));
    if (lhs != rhs)
      return "distributive law fails at " + ctx.name(p) + ", " + ctx.name(q) + ", " + ctx.name(r);
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline check_result check_impl(const verify_context& ctx) {
  check_result result{"impl", true, ""};
  const std::size_t n = ctx.size();
  const auto top = top_vec(ctx.fam(), ctx.params);
  auto witness = first_failure(n * n, ctx.parallel, [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t x = t / n, y = t % n;
    const auto pair_name = ctx.name(x) + " -> " + ctx.name(y);
    std::vector<int> closed;
    try {
      closed = impl_vec(ctx.fam(), ctx.at(x), ctx.at(y), ctx.params);
      check_vec(ctx.fam(), closed, ctx.params);
    } catch (const std::exception& e) {
      return "closed form is not a valid path at " + pair_name + ": " + e.what();
    }
    if (ctx.fam() != family::b) {
      const auto blocks = ctx.fam() == family::a
                              ? impl_a_blocks_vec(ctx.at(x), ctx.at(y))
                              : impl_mono_blocks_vec(ctx.at(x), ctx.at(y), ctx.params.m);
      if (blocks != closed) return "block form disagrees at " + pair_name;
    }
    std::vector<int> definitional;
    try {
      definitional = oracle_impl(ctx.snap, ctx.at(x), ctx.at(y));
    } catch (const std::logic_error& e) {
      return e.what();
    }
    if (definitional != closed)
      return "closed form (" + format_heights(closed) + ") differs from oracle (" +
             format_heights(definitional) + ") at " + pair_name;
    if (leq_family(ctx.fam(), ctx.at(x), ctx.at(y)) && closed != top)
      return "x <= y but x -> y is not the top at " + pair_name;
    // residuation: p1 /\ z <= p2 iff z <= p1 -> p2
    for (std::size_t z = 0; z < n; ++z) {
      const bool meets_below =
          leq_family(ctx.fam(), meet_family(ctx.fam(), ctx.at(x), ctx.at(z)), ctx.at(y));
      const bool below_impl = leq_family(ctx.fam(), ctx.at(z), closed);
      if (meets_below != below_impl)
        return "residuation fails at " + pair_name + " with z=" + ctx.name(z);
    }
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline check_result check_pseudo(const verify_context& ctx) {
  check_result result{"pseudo", true, ""};
  const auto bottom = bottom_vec(ctx.fam(), ctx.params);
  auto witness = first_failure(ctx.size(), false, [&](std::size_t x) -> std::optional<std::string> {
    std::vector<int> pc;
    try {
      pc = pseudo_vec(ctx.fam(), ctx.at(x), ctx.params);
      check_vec(ctx.fam(), pc, ctx.params);
    } catch (const std::exception& e) {
      return "pseudocomplement is not a valid path at " + ctx.name(x) + ": " + e.what();
    }
    if (pc != impl_vec(ctx.fam(), ctx.at(x), bottom, ctx.params))
      return "pseudocomplement differs from x -> bottom at " + ctx.name(x);
    if (pc != oracle_impl(ctx.snap, ctx.at(x), bottom))
      return "pseudocomplement differs from the oracle at " + ctx.name(x);
    const auto pcc = pseudo_vec(ctx.fam(), pc, ctx.params);
    if (pseudo_vec(ctx.fam(), pcc, ctx.params) != pc)
      return "triple pseudocomplement differs from single at " + ctx.name(x);
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline std::uint64_t boolean_key_a(const height_seq_a& p) {
  // complement of the nontrivial return set in [n-1]
  std::uint64_t key = 0;
  const auto profile = returns_of(p);
  for (int i = 1; i < p.n(); ++i) key |= std::uint64_t{1} << (i - 1);
  for (int r : profile.returns)
    if (r > 0 && r < p.n()) key &= ~(std::uint64_t{1} << (r - 1));
  return key;
}

inline std::uint64_t boolean_key_b(const height_seq_b& p) {
  std::uint64_t key = 0;
  const auto profile = returns_of(p);
  for (int i = 1; i < p.n(); ++i) key |= std::uint64_t{1} << (i - 1);
  for (int r : profile.returns)
    if (r > 0 && r < p.n()) key &= ~(std::uint64_t{1} << (r - 1));
  if (profile.upper_end) key |= std::uint64_t{1} << (p.n() - 1);
  return key;
}

inline check_result check_regular(const verify_context& ctx) {
  check_result result{"regular", true, ""};
  const auto bottom = bottom_vec(ctx.fam(), ctx.params);
  const auto top = top_vec(ctx.fam(), ctx.params);
  const auto double_negation_fixed = [&](std::size_t x) {
    const auto pc = pseudo_vec(ctx.fam(), ctx.at(x), ctx.params);
    return pseudo_vec(ctx.fam(), pc, ctx.params) == ctx.at(x);
  };

  if (ctx.fam() == family::mono) {
    for (std::size_t x = 0; x < ctx.size(); ++x) {
      const bool expected = ctx.at(x) == bottom || ctx.at(x) == top;
      if (double_negation_fixed(x) != expected) {
        result.passed = false;
        result.detail = "regular elements are not exactly bottom and top: " + ctx.name(x);
        return result;
      }
    }
    return result;
  }

  std::vector<std::size_t> regular_ids;
  for (std::size_t x = 0; x < ctx.size(); ++x) {
    bool formula, by_returns;
    if (ctx.fam() == family::a) {
      const height_seq_a p(ctx.at(x));
      formula = is_regular_a(p);
      by_returns = is_regular_a_returns(p);
    } else {
      const height_seq_b p(ctx.at(x), ctx.params.n);
      formula = is_regular_b(p);
      by_returns = is_regular_b_returns(p);
    }
    const bool fixed = double_negation_fixed(x);
    if (formula != by_returns || formula != fixed) {
      result.passed = false;
      result.detail = "classifications disagree at " + ctx.name(x) + " (formula " +
                      std::to_string(formula) + ", returns " + std::to_string(by_returns) +
                      ", double negation " + std::to_string(fixed) + ")";
      return result;
    }
    if (formula) regular_ids.push_back(x);
  }

  const int n = ctx.params.n;
  const std::size_t expected =
      ctx.fam() == family::a ? (std::size_t{1} << (n - 1)) : (std::size_t{1} << n);
  if (regular_ids.size() != expected) {
    result.passed = false;
    result.detail = "found " + std::to_string(regular_ids.size()) + " regular elements, expected " +
                    std::to_string(expected);
    return result;
  }

  // the direct construction from return sets gives exactly the same set
  std::vector<std::vector<int>> constructed;
  if (ctx.fam() == family::a)
    for (const auto& p : regulars_a(n, ctx.guard)) constructed.push_back(p.heights());
  else
    for (const auto& p : regulars_b(n, ctx.guard)) constructed.push_back(p.heights());
  std::vector<std::vector<int>> filtered;
  for (std::size_t x : regular_ids) filtered.push_back(ctx.at(x));
  std::sort(constructed.begin(), constructed.end());
  std::sort(filtered.begin(), filtered.end());
  if (constructed != filtered) {
    result.passed = false;
    result.detail = "construction from return sets differs from the enumeration filter";
    return result;
  }

  // the regular subposet is the Boolean lattice of an (n-1)- resp. n-set
  std::vector<std::uint64_t> keys;
  for (std::size_t x : regular_ids)
    keys.push_back(ctx.fam() == family::a ? boolean_key_a(height_seq_a(ctx.at(x)))
                                          : boolean_key_b(height_seq_b(ctx.at(x), n)));
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < sorted.size(); ++t)
    if (sorted[t] != t) {
      result.passed = false;
      result.detail = "return-set keys do not enumerate all subsets";
      return result;
    }
  for (std::size_t x = 0; x < regular_ids.size(); ++x)
    for (std::size_t y = 0; y < regular_ids.size(); ++y) {
      const bool lattice_leq = leq_family(ctx.fam(), ctx.at(regular_ids[x]), ctx.at(regular_ids[y]));
      const bool subset = (keys[x] & ~keys[y]) == 0;
      if (lattice_leq != subset) {
        result.passed = false;
        result.detail = "regular subposet is not the Boolean lattice at " +
                        ctx.name(regular_ids[x]) + ", " + ctx.name(regular_ids[y]);
        return result;
      }
    }
  return result;
}

inline check_result check_irreducible(const verify_context& ctx) {
  check_result result{"irreducible", true, ""};
  lattice_snapshot with_covers = ctx.snap;
  with_covers.covers = compute_covers(ctx.snap);
  const std::size_t n = ctx.size();
  std::size_t irreducible_count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const bool formula = ctx.fam() == family::a
                             ? is_join_irreducible(height_seq_a(ctx.at(x)))
                             : is_join_irreducible(height_seq_b(ctx.at(x), ctx.params.n));
    if (formula != oracle_join_irreducible(with_covers, static_cast<int>(x))) {
      result.passed = false;
      result.detail = "formula and lower-cover count disagree at " + ctx.name(x);
      return result;
    }
    irreducible_count += formula;
  }
  const int nn = ctx.params.n;
  const std::size_t expected = ctx.fam() == family::a
                                   ? static_cast<std::size_t>(nn) * (nn - 1) / 2
                                   : static_cast<std::size_t>(nn) * nn;
  if (irreducible_count != expected) {
    result.passed = false;
    result.detail = "found " + std::to_string(irreducible_count) +
                    " irreducibles, expected " + std::to_string(expected);
    return result;
  }
  const auto bottom = bottom_vec(ctx.fam(), ctx.params);
  auto witness = first_failure(n, ctx.parallel, [&](std::size_t p) -> std::optional<std::string> {
    bool prime = ctx.at(p) != bottom;
    for (std::size_t x = 0; x < n && prime; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!leq_family(ctx.fam(), ctx.at(p), join_family(ctx.fam(), ctx.at(x), ctx.at(y))))
          continue;
        if (!leq_family(ctx.fam(), ctx.at(p), ctx.at(x)) &&
            !leq_family(ctx.fam(), ctx.at(p), ctx.at(y))) {
          prime = false;
          break;
        }
      }
    const bool formula = ctx.fam() == family::a
                             ? is_join_irreducible(height_seq_a(ctx.at(p)))
                             : is_join_irreducible(height_seq_b(ctx.at(p), ctx.params.n));
    if (prime != formula)
      return "join-prime test and formula disagree at " + ctx.name(p);
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline check_result check_psi(const verify_context& ctx) {
  check_result result{"psi", true, ""};
  const std::size_t n = ctx.size();
  std::vector<height_seq_a> mapped;
  mapped.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const height_seq_a p(ctx.at(x));
    mapped.push_back(psi(p));
    if (psi(mapped.back()) != p) {
      result.passed = false;
      result.detail = "psi is not an involution at " + ctx.name(x);
      return result;
    }
    // the word-level construction: complement every letter, then reverse
    std::string word = heights_to_word_a(p).steps();
    for (char& c : word) c = c == 'u' ? 'r' : 'u';
    std::reverse(word.begin(), word.end());
    if (word_to_heights_a(dyck_word(word, family::a)) != mapped.back()) {
      result.passed = false;
      result.detail = "psi formula disagrees with the word construction at " + ctx.name(x);
      return result;
    }
  }
  auto witness = first_failure(n * n, ctx.parallel, [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t x = t / n, y = t % n;
    if (leq_pointwise(ctx.at(x), ctx.at(y)) != leq(mapped[x], mapped[y]))
      return "psi is not an order automorphism at " + ctx.name(x) + ", " + ctx.name(y);
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline check_result check_embedding(const verify_context& ctx) {
  check_result result{"embedding", true, ""};
  const int n = ctx.params.n;
  const auto host = enumerate(family::a, {2 * n, 0}, ctx.guard);
  const std::size_t count = ctx.size();

  std::vector<height_seq_a> embedded;
  embedded.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    const height_seq_b p(ctx.at(x), n);
    try {
      embedded.push_back(embed_b_to_a(p));
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = "embedding is not a valid path at " + ctx.name(x) + ": " + e.what();
      return result;
    }
    if (psi(embedded.back()) != embedded.back()) {
      result.passed = false;
      result.detail = "embedding is not centrally symmetric at " + ctx.name(x);
      return result;
    }
    if (restrict_a_to_b(embedded.back()) != p) {
      result.passed = false;
      result.detail = "restriction does not invert the embedding at " + ctx.name(x);
      return result;
    }
  }

  std::vector<std::vector<int>> fixed;
  for (const auto& h : host.elements) {
    const height_seq_a q(h);
    if (psi(q) == q) fixed.push_back(h);
  }
  if (fixed.size() != binomial(2 * n, n)) {
    result.passed = false;
    result.detail = "psi-fixed set of the host has size " + std::to_string(fixed.size()) +
                    ", expected " + std::to_string(binomial(2 * n, n));
    return result;
  }
  std::vector<std::vector<int>> image;
  for (const auto& e : embedded) image.push_back(e.heights());
  std::sort(image.begin(), image.end());
  if (image != fixed) {  // host enumeration is lexicographic already
    result.passed = false;
    result.detail = "embedding image differs from the psi-fixed set";
    return result;
  }

  if (embed_b_to_a(bottom_b(n)) != bottom_a(2 * n) || embed_b_to_a(top_b(n)) != top_a(2 * n)) {
    result.passed = false;
    result.detail = "embedding does not preserve bottom or top";
    return result;
  }

  auto witness = first_failure(count * count, ctx.parallel,
                               [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t x = t / count, y = t % count;
    const height_seq_b p(ctx.at(x), n), q(ctx.at(y), n);
    const auto pair_name = ctx.name(x) + ", " + ctx.name(y);
    if (leq(p, q) != leq(embedded[x], embedded[y]))
      return "embedding is not an order embedding at " + pair_name;
    if (embed_b_to_a(meet(p, q)) != meet(embedded[x], embedded[y]))
      return "embedding does not preserve meet at " + pair_name;
    if (embed_b_to_a(join(p, q)) != join(embedded[x], embedded[y]))
      return "embedding does not preserve join at " + pair_name;
    if (embed_b_to_a(impl_b(p, q)) != impl_a(embedded[x], embedded[y]))
      return "embedding does not preserve implication at " + pair_name;
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
    return result;
  }

  // the sublattice D_n^a is not a Heyting subalgebra: both tops are reached
  // by x -> x, and they differ
  for (std::size_t x = 0; x < count; ++x) {
    const std::vector<int>& h = ctx.at(x);
    if (static_cast<int>(h.size()) != n || h.back() != n) continue;
    const height_seq_a as_a(h);
    const height_seq_b as_b(h, n);
    if (impl_a(as_a, as_a) != top_a(n) || impl_b(as_b, as_b) != top_b(n) ||
        top_a(n).heights() == top_b(n).heights() ||
        !leq(height_seq_b(top_a(n).heights(), n), top_b(n))) {
      result.passed = false;
      result.detail = "non-subalgebra witness fails at " + ctx.name(x);
      return result;
    }
  }
  return result;
}

inline check_result check_equalizer(const verify_context& ctx) {
  check_result result{"equalizer", true, ""};
  const int n = ctx.params.n;
  const auto host = enumerate(family::a, {2 * n, 0}, ctx.guard);
  std::vector<height_seq_a> fixed;
  for (const auto& h : host.elements) {
    const height_seq_a q(h);
    if (psi(q) == q) fixed.push_back(q);
  }
  const auto is_fixed = [&](const height_seq_a& q) { return psi(q) == q; };
  if (!is_fixed(bottom_a(2 * n)) || !is_fixed(top_a(2 * n))) {
    result.passed = false;
    result.detail = "bottom or top of the host is not psi-fixed";
    return result;
  }
  const std::size_t count = fixed.size();
  auto witness = first_failure(count * count, ctx.parallel,
                               [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t x = t / count, y = t % count;
    const auto pair_name =
        "(" + format_heights(fixed[x].heights()) + "), (" + format_heights(fixed[y].heights()) + ")";
    if (!is_fixed(meet(fixed[x], fixed[y])))
      return "equalizer is not closed under meet at " + pair_name;
    if (!is_fixed(join(fixed[x], fixed[y])))
      return "equalizer is not closed under join at " + pair_name;
    if (!is_fixed(impl_a(fixed[x], fixed[y])))
      return "equalizer is not closed under implication at " + pair_name;
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

inline check_result check_interval(const verify_context& ctx) {
  check_result result{"interval", true, ""};
  const int n = ctx.params.n;
  const auto grid = enumerate(family::mono, {n, n}, ctx.guard);

  // D_n^a is the interval [(1,...,n), (n,...,n)] of L_{n,n}
  const auto low = bottom_vec(family::a, {n, 0});
  std::vector<std::vector<int>> interval;
  for (const auto& h : grid.elements)
    if (leq_pointwise(low, h)) interval.push_back(h);
  if (interval != ctx.snap.elements) {
    result.passed = false;
    result.detail = "the interval above the staircase is not D_n^a";
    return result;
  }
  for (std::size_t x = 0; x < interval.size(); ++x)
    for (std::size_t y = 0; y < interval.size(); ++y)
      if (leq_family(family::a, ctx.snap.elements[x], ctx.snap.elements[y]) !=
          leq_family(family::mono, interval[x], interval[y])) {
        result.passed = false;
        result.detail = "the inclusion into the grid is not an order isomorphism at (" +
                        format_heights(ctx.snap.elements[x]) + "), (" +
                        format_heights(ctx.snap.elements[y]) + ")";
        return result;
      }

  // D_{n+1}^a maps onto the interval [(0,1,...,n-1), top] by dropping the
  // last entry and shifting down by one
  const auto bigger = enumerate(family::a, {n + 1, 0}, ctx.guard);
  std::vector<int> q(n);
  for (int i = 0; i < n; ++i) q[i] = i;
  std::vector<std::vector<int>> upper;
  for (const auto& h : grid.elements)
    if (leq_pointwise(q, h)) upper.push_back(h);
  std::vector<std::vector<int>> shifted;
  for (const auto& h : bigger.elements) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = h[i] - 1;
    shifted.push_back(std::move(s));
  }
  auto sorted = shifted;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != upper) {
    result.passed = false;
    result.detail = "the shifted image of D_{n+1}^a is not the interval above (0,1,...,n-1)";
    return result;
  }
  const std::size_t count = bigger.elements.size();
  auto witness = first_failure(count * count, ctx.parallel,
                               [&](std::size_t t) -> std::optional<std::string> {
    const std::size_t x = t / count, y = t % count;
    if (leq_pointwise(bigger.elements[x], bigger.elements[y]) !=
        leq_pointwise(shifted[x], shifted[y]))
      return "the shift is not an order isomorphism at (" +
             format_heights(bigger.elements[x]) + "), (" + format_heights(bigger.elements[y]) + ")";
    return std::nullopt;
  });
  if (witness) {
    result.passed = false;
    result.detail = *witness;
  }
  return result;
}

}  // namespace detail

/// Runs the selected exhaustive comparisons over one enumerated family.
/// Checks always execute in the fixed order counts, distributive, impl,
/// pseudo, regular, irreducible, psi, embedding, equalizer, interval;
/// later checks assume the earlier ones.  An empty selection runs all
/// checks applicable to the family.
inline verify_report verify_family(family fam, lattice_params params,
                                   std::vector<std::string> checks = {}, bool parallel = false,
                                   const enumeration_guard& guard = {}) {
  for (const auto& name : checks) {
    if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
        all_check_names().end())
      throw std::domain_error("verify_family: unknown check '" + name + "'");
  }
  const auto selected = [&](const std::string& name) {
    return checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  const auto applicable = [&](const std::string& name) {
    if (name == "irreducible") return fam != family::mono;
    if (name == "psi" || name == "interval") return fam == family::a;
    if (name == "embedding" || name == "equalizer") return fam == family::b;
    return true;
  };

  const auto snap = enumerate(fam, params, guard);
  detail::verify_context ctx(snap, parallel, guard);
  verify_report report;
  report.fam = fam;
  report.params = params;
  for (const auto& name : all_check_names()) {
    if (!selected(name) || !applicable(name)) continue;
    if (name == "counts") report.results.push_back(detail::check_counts(ctx));
    else if (name == "distributive") report.results.push_back(detail::check_distributive(ctx));
    else if (name == "impl") report.results.push_back(detail::check_impl(ctx));
    else if (name == "pseudo") report.results.push_back(detail::check_pseudo(ctx));
    else if (name == "regular") report.results.push_back(detail::check_regular(ctx));
    else if (name == "irreducible") report.results.push_back(detail::check_irreducible(ctx));
    else if (name == "psi") report.results.push_back(detail::check_psi(ctx));
    else if (name == "embedding") report.results.push_back(detail::check_embedding(ctx));
    else if (name == "equalizer") report.results.push_back(detail::check_equalizer(ctx));
    else if (name == "interval") report.results.push_back(detail::check_interval(ctx));
  }
  return report;
}

}  // namespace dyck
