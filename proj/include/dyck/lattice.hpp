#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dyck/paths.hpp"

namespace dyck {

namespace detail {

// raw-vector dominance ops; the typed overloads below validate parameters and
// element construction, the enumeration sweeps call these directly

inline bool leq_pointwise(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// type b: p <= p' iff k >= k' and h_i <= h'_i on the first k' entries
inline bool leq_b(std::span<const int> a, std::span<const int> b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::vector<int> meet_pointwise(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline std::vector<int> join_pointwise(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// type b meet: componentwise min on the shared prefix, then the tail of the
// longer sequence
inline std::vector<int> meet_b(std::span<const int> a, std::span<const int> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::min(a[i], b[i]);
  for (std::size_t i = b.size(); i < a.size(); ++i) out[i] = a[i];
  return out;
}

// type b join: componentwise max truncated to the shorter length
inline std::vector<int> join_b(std::span<const int> a, std::span<const int> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline bool leq_family(family f, std::span<const int> a, std::span<const int> b) {
  return f == family::b ? leq_b(a, b) : leq_pointwise(a, b);
}

inline std::vector<int> meet_family(family f, std::span<const int> a, std::span<const int> b) {
  return f == family::b ? meet_b(a, b) : meet_pointwise(a, b);
}

inline std::vector<int> join_family(family f, std::span<const int> a, std::span<const int> b) {
  return f == family::b ? join_b(a, b) : join_pointwise(a, b);
}

inline void require_same_params(const height_seq_a& p, const height_seq_a& q) {
  if (p.n() != q.n()) throw std::domain_error("type-a paths have different semilengths");
}

inline void require_same_params(const height_seq_b& p, const height_seq_b& q) {
  if (p.n() != q.n()) throw std::domain_error("type-b paths have different semilengths");
}

inline void require_same_params(const monotone_path& p, const monotone_path& q) {
  if (p.n() != q.n() || p.m() != q.m())
    throw std::domain_error("monotone paths live in different grids");
}

}  // namespace detail

inline bool leq(const height_seq_a& p, const height_seq_a& q) {
  detail::require_same_params(p, q);
  return detail::leq_pointwise(p.heights(), q.heights());
}

inline bool leq(const height_seq_b& p, const height_seq_b& q) {
  detail::require_same_params(p, q);
  return detail::leq_b(p.heights(), q.heights());
}

inline bool leq(const monotone_path& p, const monotone_path& q) {
  detail::require_same_params(p, q);
  return detail::leq_pointwise(p.heights(), q.heights());
}

inline height_seq_a meet(const height_seq_a& p, const height_seq_a& q) {
  detail::require_same_params(p, q);
  return height_seq_a(detail::meet_pointwise(p.heights(), q.heights()));
}

inline height_seq_a join(const height_seq_a& p, const height_seq_a& q) {
  detail::require_same_params(p, q);
  return height_seq_a(detail::join_pointwise(p.heights(), q.heights()));
}

inline height_seq_b meet(const height_seq_b& p, const height_seq_b& q) {
  detail::require_same_params(p, q);
  return height_seq_b(detail::meet_b(p.heights(), q.heights()), p.n());
}

inline height_seq_b join(const height_seq_b& p, const height_seq_b& q) {
  detail::require_same_params(p, q);
  return height_seq_b(detail::join_b(p.heights(), q.heights()), p.n());
}

inline monotone_path meet(const monotone_path& p, const monotone_path& q) {
  detail::require_same_params(p, q);
  return monotone_path(detail::meet_pointwise(p.heights(), q.heights()), p.m());
}

inline monotone_path join(const monotone_path& p, const monotone_path& q) {
  detail::require_same_params(p, q);
  return monotone_path(detail::join_pointwise(p.heights(), q.heights()), p.m());
}

/// Word-level dominance: w <=_D w' iff every prefix of w has at least as many
/// r's as the equal-length prefix of w'.  Coincides with leq on heights.
inline bool word_prefix_leq(const dyck_word& w, const dyck_word& v) {
  if (w.fam() != family::a || v.fam() != family::a)
    throw std::domain_error("word_prefix_leq: both words must be of family a");
  if (w.steps().size() != v.steps().size())
    throw std::domain_error("word_prefix_leq: words have different lengths");
  int rw = 0, rv = 0;
  for (std::size_t i = 0; i < w.steps().size(); ++i) {
    if (w.steps()[i] == 'r') ++rw;
    if (v.steps()[i] == 'r') ++rv;
    if (rw < rv) return false;
  }
  return true;
}

/// Upper bounds on enumeration sizes; exceeding them is an error rather than
/// a long wait.  Configuration, not part of the algebra.
struct enumeration_guard {
  int max_n_a = 12;
  int max_n_b = 9;
  int max_total_mono = 20;  // bound on n + m
};

struct lattice_params {
  int n = 0;
  int m = 0;  // used by family::mono only
};

/// An enumerated family: element ids are positions in the canonical order
/// (lexicographic; family b first by descending k, then lexicographic).
/// covers is filled by compute_covers and holds the transitive reduction.
struct lattice_snapshot {
  family fam = family::a;
  lattice_params params;
  std::vector<std::vector<int>> elements;
  std::vector<std::pair<int, int>> covers;  // (lower id, upper id)

  bool leq_ids(int i, int j) const {
    return detail::leq_family(fam, elements[i], elements[j]);
  }

  int find(std::span<const int> h) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (std::equal(h.begin(), h.end(), elements[i].begin(), elements[i].end()))
        return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const lattice_snapshot& x, const lattice_snapshot& y) {
    return x.fam == y.fam && x.params.n == y.params.n && x.params.m == y.params.m &&
           x.elements == y.elements && x.covers == y.covers;
  }
};

namespace detail {

inline void enumerate_a(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> h(n);
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == n) {
      out.push_back(h);
      return;
    }
    for (int v = std::max(prev, i + 1); v <= n; ++v) {
      h[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 1);
}

inline void enumerate_mono(int n, int m, std::vector<std::vector<int>>& out) {
  std::vector<int> h(n);
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == n) {
      out.push_back(h);
      return;
    }
    for (int v = prev; v <= m; ++v) {
      h[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
}

inline void enumerate_b(int n, std::vector<std::vector<int>>& out) {
  for (int k = n; k >= 1; --k) {
    std::vector<int> h(k);
    std::function<void(int, int)> rec = [&](int i, int prev) {
      if (i == k - 1) {
        for (int last : {2 * n - k, 2 * n - k + 1}) {
          h[i] = last;
          out.push_back(h);
        }
        return;
      }
      for (int v = std::max(prev, i + 1); v <= 2 * n - k; ++v) {
        h[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 1);
  }
}

}  // namespace detail

inline lattice_snapshot enumerate(family fam, lattice_params params,
                                  const enumeration_guard& guard = {}) {
  lattice_snapshot snap;
  snap.fam = fam;
  snap.params = params;
  switch (fam) {
    case family::a:
      if (params.n < 1) throw std::domain_error("enumerate: n must be positive");
      if (params.n > guard.max_n_a)
        throw std::domain_error("enumerate: n exceeds the type-a guard (" +
                                std::to_string(guard.max_n_a) + ")");
      detail::enumerate_a(params.n, snap.elements);
      break;
    case family::b:
      if (params.n < 1) throw std::domain_error("enumerate: n must be positive");
      if (params.n > guard.max_n_b)
        throw std::domain_error("enumerate: n exceeds the type-b guard (" +
                                std::to_string(guard.max_n_b) + ")");
      detail::enumerate_b(params.n, snap.elements);
      break;
    case family::mono:
      if (params.n < 1) throw std::domain_error("enumerate: n must be positive");
      if (params.m < 0) throw std::domain_error("enumerate: m must be nonnegative");
      if (params.n + params.m > guard.max_total_mono)
        throw std::domain_error("enumerate: n+m exceeds the monotone guard (" +
                                std::to_string(guard.max_total_mono) + ")");
      detail::enumerate_mono(params.n, params.m, snap.elements);
      break;
  }
  return snap;
}

/// Transitive reduction of the dominance order: (a, b) is a cover iff a < b
/// and no element lies strictly between.  Pairwise comparison with an
/// intermediate-element sieve; intended for desk-scale snapshots.
inline std::vector<std::pair<int, int>> compute_covers(const lattice_snapshot& snap) {
  const int n = static_cast<int>(snap.elements.size());
  std::vector<std::pair<int, int>> covers;
  std::vector<int> below;
  for (int b = 0; b < n; ++b) {
    below.clear();
    for (int a = 0; a < n; ++a)
      if (a != b && snap.leq_ids(a, b)) below.push_back(a);
    for (int a : below) {
      bool maximal = true;
      for (int c : below) {
        if (c != a && snap.leq_ids(a, c)) {
          maximal = false;
          break;
        }
      }
      if (maximal) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace dyck
