#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dyck/lattice.hpp"
#include "dyck/paths.hpp"

namespace dyck {

namespace detail {

// relative pseudocomplement in L_{n,m}, inductive from the right; must not be
// evaluated left-to-right
inline std::vector<int> impl_mono_vec(std::span<const int> h1, std::span<const int> h2, int m) {
  const int n = static_cast<int>(h1.size());
  std::vector<int> out(n);
  out[n - 1] = h1[n - 1] <= h2[n - 1] ? m : h2[n - 1];
  for (int i = n - 2; i >= 0; --i)
    out[i] = h1[i] <= h2[i] ? out[i + 1] : h2[i];
  return out;
}

// block form: constant on the gaps of the violation set {i : h1_i > h2_i}
inline std::vector<int> impl_mono_blocks_vec(std::span<const int> h1, std::span<const int> h2,
                                             int m) {
  const int n = static_cast<int>(h1.size());
  std::vector<int> out(n);
  int start = 0;
  for (int i = 0; i < n; ++i) {
    if (h1[i] > h2[i]) {
      for (int j = start; j <= i; ++j) out[j] = h2[i];
      start = i + 1;
    }
  }
  for (int j = start; j < n; ++j) out[j] = m;
  return out;
}

inline std::vector<int> impl_a_vec(std::span<const int> h1, std::span<const int> h2) {
  const int n = static_cast<int>(h1.size());
  std::vector<int> out(n);
  out[n - 1] = h2[n - 1];
  for (int i = n - 2; i >= 0; --i)
    out[i] = h1[i] <= h2[i] ? out[i + 1] : h2[i];
  return out;
}

inline std::vector<int> impl_a_blocks_vec(std::span<const int> h1, std::span<const int> h2) {
  const int n = static_cast<int>(h1.size());
  std::vector<int> out(n);
  int start = 0;
  for (int i = 0; i < n; ++i) {
    if (h1[i] > h2[i]) {
      for (int j = start; j <= i; ++j) out[j] = h2[i];
      start = i + 1;
    }
  }
  for (int j = start; j < n; ++j) out[j] = h2[n - 1];  // h2 ends at n
  return out;
}

inline std::vector<int> impl_b_vec(std::span<const int> h1, std::span<const int> h2, int n) {
  const int k1 = static_cast<int>(h1.size());
  const int k2 = static_cast<int>(h2.size());
  if (k1 < k2) {
    std::vector<int> out(k2);
    for (int i = k2 - 1; i >= 0; --i) {
      if (i >= k1 || h1[i] > h2[i]) out[i] = h2[i];
      else out[i] = out[i + 1];
    }
    return out;
  }
  int k;
  if (h1[k2 - 1] > h2[k2 - 1]) {
    k = k2;
  } else {
    k = 1;  // max over the empty violation set is 0
    for (int i = k2 - 1; i >= 1; --i) {
      if (h1[i - 1] > h2[i - 1]) {
        k = i + 1;
        break;
      }
    }
  }
  std::vector<int> out(k);
  out[k - 1] = h1[k - 1] <= h2[k - 1] ? 2 * n - k + 1 : h2[k - 1];
  for (int i = k - 2; i >= 0; --i)
    out[i] = h1[i] <= h2[i] ? out[i + 1] : h2[i];
  return out;
}

inline std::vector<int> pseudo_a_vec(std::span<const int> h) {
  const int n = static_cast<int>(h.size());
  std::vector<int> out(n);
  out[n - 1] = n;
  for (int i = n - 2; i >= 0; --i)
    out[i] = h[i] == i + 1 ? out[i + 1] : i + 1;
  return out;
}

inline std::vector<int> pseudo_b_vec(std::span<const int> h, int n) {
  const int k = static_cast<int>(h.size());
  if (k < n) {
    std::vector<int> out(n);
    for (int i = n - 1; i >= 0; --i) {
      if (i >= k || h[i] > i + 1) out[i] = i + 1;
      else out[i] = out[i + 1];
    }
    return out;
  }
  // k == n
  int kp;
  if (h[n - 1] == n + 1) {
    kp = n;
  } else {
    kp = 1;
    for (int i = n - 1; i >= 1; --i) {
      if (h[i - 1] > i) {
        kp = i + 1;
        break;
      }
    }
  }
  std::vector<int> out(kp);
  for (int i = kp - 1; i >= 0; --i) {
    if (i == kp - 1 && h[i] == i + 1) out[i] = 2 * n - kp + 1;
    else if (h[i] > i + 1) out[i] = i + 1;
    else out[i] = out[i + 1];
  }
  return out;
}

// block rule of the regularity criteria: every i in [limit] (1-based) has
// h_i = i, or h_i = c > i with h_i = h_{i+1} = ... = h_c = c
inline bool regular_blocks_ok(std::span<const int> h, int limit) {
  for (int i = 1; i <= limit; ++i) {
    const int c = h[i - 1];
    if (c == i) continue;
    if (c > static_cast<int>(h.size())) return false;
    for (int j = i; j <= c; ++j)
      if (h[j - 1] != c) return false;
  }
  return true;
}

inline int count_prime_indices(std::span<const int> h) {
  int count = 0, prev = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] > static_cast<int>(i) + 1 && h[i] > prev) ++count;
    prev = h[i];
  }
  return count;
}

}  // namespace detail

inline monotone_path bottom_mono(int n, int m) { return monotone_path(std::vector<int>(n, 0), m); }
inline monotone_path top_mono(int n, int m) { return monotone_path(std::vector<int>(n, m), m); }

inline height_seq_a bottom_a(int n) {
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = i + 1;
  return height_seq_a(std::move(h));
}
inline height_seq_a top_a(int n) { return height_seq_a(std::vector<int>(n, n)); }

inline height_seq_b bottom_b(int n) {
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = i + 1;
  return height_seq_b(std::move(h), n);
}
inline height_seq_b top_b(int n) { return height_seq_b({2 * n}, n); }

/// Greatest z with p1 /\ z <= p2 in L_{n,m}.
inline monotone_path impl_mono(const monotone_path& p1, const monotone_path& p2) {
  detail::require_same_params(p1, p2);
  return monotone_path(detail::impl_mono_vec(p1.heights(), p2.heights(), p1.m()), p1.m());
}

/// Second, structurally different form of impl_mono; kept as a cross-check.
inline monotone_path impl_mono_blocks(const monotone_path& p1, const monotone_path& p2) {
  detail::require_same_params(p1, p2);
  return monotone_path(detail::impl_mono_blocks_vec(p1.heights(), p2.heights(), p1.m()), p1.m());
}

inline height_seq_a impl_a(const height_seq_a& p1, const height_seq_a& p2) {
  detail::require_same_params(p1, p2);
  return height_seq_a(detail::impl_a_vec(p1.heights(), p2.heights()));
}

inline height_seq_a impl_a_blocks(const height_seq_a& p1, const height_seq_a& p2) {
  detail::require_same_params(p1, p2);
  return height_seq_a(detail::impl_a_blocks_vec(p1.heights(), p2.heights()));
}

inline height_seq_b impl_b(const height_seq_b& p1, const height_seq_b& p2) {
  detail::require_same_params(p1, p2);
  return height_seq_b(detail::impl_b_vec(p1.heights(), p2.heights(), p1.n()), p1.n());
}

inline height_seq_a pseudo_a(const height_seq_a& p) {
  return height_seq_a(detail::pseudo_a_vec(p.heights()));
}

inline height_seq_b pseudo_b(const height_seq_b& p) {
  return height_seq_b(detail::pseudo_b_vec(p.heights(), p.n()), p.n());
}

inline monotone_path pseudo_mono(const monotone_path& p) {
  return p == bottom_mono(p.n(), p.m()) ? top_mono(p.n(), p.m()) : bottom_mono(p.n(), p.m());
}

/// Diagonal touch points of a path, plus the upper end (type b only): the
/// abscissa j < n with the path through (j, 2n-j), present iff the word has
/// more than n u's.  Returns at 0 (and n for paths ending on the diagonal)
/// are the trivial ones.
struct return_profile {
  std::vector<int> returns;
  std::optional<int> upper_end;
};

inline return_profile returns_of(const height_seq_a& p) {
  return_profile profile;
  profile.returns.push_back(0);
  for (int i = 1; i <= p.n(); ++i)
    if (p.heights()[i - 1] == i) profile.returns.push_back(i);
  return profile;
}

inline return_profile returns_of(const height_seq_b& p) {
  return_profile profile;
  profile.returns.push_back(0);
  const int k = p.k();
  for (int i = 1; i < k; ++i)
    if (p.heights()[i - 1] == i) profile.returns.push_back(i);
  if (k == p.n() && p.heights()[k - 1] == k) profile.returns.push_back(k);
  else profile.upper_end = p.ends_with_up() ? k - 1 : k;
  return profile;
}

/// Whether the grid point (x, y) lies on the path.
inline bool passes_through(const height_seq_a& p, int x, int y) {
  const int n = p.n();
  if (x < 0 || x > n) return false;
  const int lower = x == 0 ? 0 : p.heights()[x - 1];
  const int upper = x == n ? n : p.heights()[x];
  return lower <= y && y <= upper;
}

inline bool passes_through(const height_seq_b& p, int x, int y) {
  const int k = p.k();
  const int rights = p.ends_with_up() ? k - 1 : k;
  if (x < 0 || x > rights) return false;
  const int lower = x == 0 ? 0 : p.heights()[x - 1];
  const int upper = x < k ? p.heights()[x] : p.heights()[k - 1];
  return lower <= y && y <= upper;
}

/// Height-sequence regularity criterion: h_i = i, or h_i = c > i forces the
/// flat block h_i = ... = h_c = c.
inline bool is_regular_a(const height_seq_a& p) {
  return detail::regular_blocks_ok(p.heights(), p.n());
}

inline bool is_regular_b(const height_seq_b& p) {
  const auto& h = p.heights();
  const int k = p.k();
  const int n = p.n();
  if (h[k - 1] == n)  // forces k = n
    return detail::regular_blocks_ok(h, k - 1);
  if (h[k - 1] == 2 * n - k + 1 && (k == 1 || h[k - 2] == k - 1))
    return detail::regular_blocks_ok(h, k - 2);
  return false;
}

/// Geometric reformulation: between consecutive returns i < j the path must
/// pass through (i, j).
inline bool is_regular_a_returns(const height_seq_a& p) {
  const auto profile = returns_of(p);
  for (std::size_t t = 0; t + 1 < profile.returns.size(); ++t)
    if (!passes_through(p, profile.returns[t], profile.returns[t + 1])) return false;
  return true;
}

/// As above; additionally a return and upper end that are consecutive must
/// sit on the same abscissa.
inline bool is_regular_b_returns(const height_seq_b& p) {
  const auto profile = returns_of(p);
  for (std::size_t t = 0; t + 1 < profile.returns.size(); ++t)
    if (!passes_through(p, profile.returns[t], profile.returns[t + 1])) return false;
  if (profile.upper_end && profile.returns.back() != *profile.upper_end) return false;
  return true;
}

namespace detail {

// the unique path whose nontrivial returns are exactly the given sorted set
inline std::vector<int> heights_from_returns(const std::vector<int>& returns) {
  std::vector<int> h(returns.back());
  for (std::size_t t = 0; t + 1 < returns.size(); ++t)
    for (int i = returns[t] + 1; i <= returns[t + 1]; ++i) h[i - 1] = returns[t + 1];
  return h;
}

inline std::vector<std::vector<int>> return_sets(int n) {
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> returns{0};
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) returns.push_back(i);
    sets.push_back(std::move(returns));
  }
  return sets;
}

}  // namespace detail

/// All 2^{n-1} regular elements, built from subsets of nontrivial returns.
inline std::vector<height_seq_a> regulars_a(int n, const enumeration_guard& guard = {}) {
  if (n < 1) throw std::domain_error("regulars_a: n must be positive");
  if (n > guard.max_n_a)
    throw std::domain_error("regulars_a: n exceeds the type-a guard");
  std::vector<std::vector<int>> all;
  for (auto& returns : detail::return_sets(n)) {
    returns.push_back(n);
    all.push_back(detail::heights_from_returns(returns));
  }
  std::sort(all.begin(), all.end());
  std::vector<height_seq_a> out;
  out.reserve(all.size());
  for (auto& h : all) out.emplace_back(std::move(h));
  return out;
}

/// All 2^n regular elements: the type-a ones, plus for each return set the
/// variant whose final return becomes an upper end.
inline std::vector<height_seq_b> regulars_b(int n, const enumeration_guard& guard = {}) {
  if (n < 1) throw std::domain_error("regulars_b: n must be positive");
  if (n > guard.max_n_b)
    throw std::domain_error("regulars_b: n exceeds the type-b guard");
  std::vector<std::vector<int>> all;
  for (auto& returns : detail::return_sets(n)) {
    auto closed = returns;
    closed.push_back(n);
    all.push_back(detail::heights_from_returns(closed));
    // shoot straight up from the last return
    auto open = detail::heights_from_returns(returns);
    open.push_back(2 * n - returns.back());
    all.push_back(std::move(open));
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  std::vector<height_seq_b> out;
  out.reserve(all.size());
  for (auto& h : all) out.emplace_back(std::move(h), n);
  return out;
}

/// Exactly one index i with h_i > i and h_i > h_{i-1}; equivalent to having a
/// unique lower cover.
inline bool is_join_irreducible(const height_seq_a& p) {
  return detail::count_prime_indices(p.heights()) == 1;
}

inline bool is_join_irreducible(const height_seq_b& p) {
  return detail::count_prime_indices(p.heights()) == 1;
}

}  // namespace dyck
