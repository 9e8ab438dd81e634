#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

enum class family { a, b, mono };

inline std::string_view family_name(family f) {
  switch (f) {
    case family::a: return "a";
    case family::b: return "b";
    default: return "mono";
  }
}

inline std::optional<family> family_from_name(std::string_view s) {
  if (s == "a") return family::a;
  if (s == "b") return family::b;
  if (s == "mono") return family::mono;
  return std::nullopt;
}

/// Raised when a word or height sequence violates one of its defining
/// constraints. index() is the 1-based position of the first violation.
class validation_error : public std::invalid_argument {
 public:
  validation_error(const std::string& what, std::size_t index)
      : std::invalid_argument(what + " (at position " + std::to_string(index) + ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// --- textual formats: words are lowercase u/r strings, height sequences are
// --- comma-separated decimal integers with no whitespace.

inline std::string format_heights(std::span<const int> h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(h[i]);
  }
  return out;
}

inline std::vector<int> parse_heights(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok.empty())
      throw validation_error("height sequence: empty entry", out.size() + 1);
    int value = 0;
    bool neg = false;
    std::size_t j = 0;
    if (tok[0] == '-') { neg = true; j = 1; }
    if (j == tok.size())
      throw validation_error("height sequence: not an integer", out.size() + 1);
    for (; j < tok.size(); ++j) {
      if (tok[j] < '0' || tok[j] > '9')
        throw validation_error("height sequence: not an integer", out.size() + 1);
      value = value * 10 + (tok[j] - '0');
    }
    out.push_back(neg ? -value : value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// A word over {u, r} in which every prefix has at least as many u's as r's.
/// Family a additionally requires equally many u's and r's.
class dyck_word {
 public:
  dyck_word(std::string steps, family fam) : steps_(std::move(steps)), fam_(fam) {
    if (fam_ == family::mono)
      throw std::domain_error("dyck word family must be a or b");
    if (steps_.empty() || steps_.size() % 2 != 0)
      throw validation_error("dyck word: length must be even and positive", steps_.size());
    int ups = 0, rights = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i] == 'u') ++ups;
      else if (steps_[i] == 'r') ++rights;
      else throw validation_error("dyck word: letters must be 'u' or 'r'", i + 1);
      if (rights > ups)
        throw validation_error("dyck word: prefix has more r's than u's", i + 1);
    }
    if (fam_ == family::a && ups != rights)
      throw validation_error("dyck word: family a requires equal letter counts", steps_.size());
  }

  const std::string& steps() const noexcept { return steps_; }
  family fam() const noexcept { return fam_; }
  int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }

  friend bool operator==(const dyck_word&, const dyck_word&) = default;

 private:
  std::string steps_;
  family fam_;
};

namespace detail {

// fast constraint checks on raw vectors, shared by the typed constructors
// and the enumeration backtracking

inline void check_heights_a(std::span<const int> h) {
  const int n = static_cast<int>(h.size());
  if (n == 0) throw validation_error("type-a heights: sequence must be nonempty", 0);
  for (int i = 0; i < n; ++i) {
    if (h[i] < i + 1)
      throw validation_error("type-a heights: entry below its index", i + 1);
    if (h[i] > n)
      throw validation_error("type-a heights: entry above the semilength", i + 1);
    if (i > 0 && h[i] < h[i - 1])
      throw validation_error("type-a heights: sequence must be weakly increasing", i + 1);
  }
}

inline void check_heights_b(std::span<const int> h, int n) {
  const int k = static_cast<int>(h.size());
  if (n < 1) throw validation_error("type-b heights: semilength must be positive", 0);
  if (k < 1 || k > n)
    throw validation_error("type-b heights: length must lie in [1, n]", k);
  for (int i = 0; i < k; ++i) {
    if (h[i] < i + 1)
      throw validation_error("type-b heights: entry below its index", i + 1);
    if (i > 0 && h[i] < h[i - 1])
      throw validation_error("type-b heights: sequence must be weakly increasing", i + 1);
    if (i < k - 1 && h[i] > 2 * n - k)
      throw validation_error("type-b heights: entry above 2n-k", i + 1);
  }
  if (h[k - 1] != 2 * n - k && h[k - 1] != 2 * n - k + 1)
    throw validation_error("type-b heights: last entry must be 2n-k or 2n-k+1", k);
}

inline void check_heights_mono(std::span<const int> h, int m) {
  const int n = static_cast<int>(h.size());
  if (n == 0) throw validation_error("monotone heights: sequence must be nonempty", 0);
  if (m < 0) throw validation_error("monotone heights: grid height must be nonnegative", 0);
  for (int i = 0; i < n; ++i) {
    if (h[i] < 0)
      throw validation_error("monotone heights: entry must be nonnegative", i + 1);
    if (h[i] > m)
      throw validation_error("monotone heights: entry above the grid height", i + 1);
    if (i > 0 && h[i] < h[i - 1])
      throw validation_error("monotone heights: sequence must be weakly increasing", i + 1);
  }
}

}  // namespace detail

/// Height sequence of a type-a Dyck path: h_i is the number of u's before the
/// i-th r.  Weakly increasing with i <= h_i <= n, so h_n = n.
class height_seq_a {
 public:
  explicit height_seq_a(std::vector<int> heights) : h_(std::move(heights)) {
    detail::check_heights_a(h_);
  }

  int n() const noexcept { return static_cast<int>(h_.size()); }
  const std::vector<int>& heights() const noexcept { return h_; }

  friend bool operator==(const height_seq_a&, const height_seq_a&) = default;

 private:
  std::vector<int> h_;
};

/// Height sequence of a type-b Dyck path of semilength n.  The length k does
/// not determine n, so n is stored explicitly.  The last entry is 2n-k when
/// the word ends with r and 2n-k+1 when it ends with u.
class height_seq_b {
 public:
  height_seq_b(std::vector<int> heights, int n) : h_(std::move(heights)), n_(n) {
    detail::check_heights_b(h_, n_);
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(h_.size()); }
  const std::vector<int>& heights() const noexcept { return h_; }
  bool ends_with_up() const noexcept { return h_.back() == 2 * n_ - k() + 1; }

  friend bool operator==(const height_seq_b&, const height_seq_b&) = default;

 private:
  std::vector<int> h_;
  int n_;
};

/// Monotone path in the n x m grid: 0 <= h_1 <= ... <= h_n <= m.
class monotone_path {
 public:
  monotone_path(std::vector<int> heights, int m) : h_(std::move(heights)), m_(m) {
    detail::check_heights_mono(h_, m_);
  }

  int n() const noexcept { return static_cast<int>(h_.size()); }
  int m() const noexcept { return m_; }
  const std::vector<int>& heights() const noexcept { return h_; }

  friend bool operator==(const monotone_path&, const monotone_path&) = default;

 private:
  std::vector<int> h_;
  int m_;
};

inline height_seq_a word_to_heights_a(const dyck_word& w) {
  if (w.fam() != family::a)
    throw std::domain_error("word_to_heights_a: word is not of family a");
  std::vector<int> h;
  h.reserve(w.semilength());
  int ups = 0;
  for (char c : w.steps()) {
    if (c == 'u') ++ups;
    else h.push_back(ups);
  }
  return height_seq_a(std::move(h));
}

inline dyck_word heights_to_word_a(const height_seq_a& p) {
  std::string steps;
  steps.reserve(2 * p.n());
  int prev = 0;
  for (int hi : p.heights()) {
    steps.append(hi - prev, 'u');
    steps.push_back('r');
    prev = hi;
  }
  return dyck_word(std::move(steps), family::a);
}

inline height_seq_b word_to_heights_b(const dyck_word& w) {
  const int n = w.semilength();
  std::vector<int> h;
  int ups = 0;
  for (char c : w.steps()) {
    if (c == 'u') ++ups;
    else h.push_back(ups);
  }
  if (w.steps().back() == 'u') h.push_back(ups);  // h_k = total number of u's
  return height_seq_b(std::move(h), n);
}

inline dyck_word heights_to_word_b(const height_seq_b& p) {
  std::string steps;
  steps.reserve(2 * p.n());
  int prev = 0;
  for (int hi : p.heights()) {
    steps.append(hi - prev, 'u');
    steps.push_back('r');
    prev = hi;
  }
  if (p.ends_with_up()) steps.pop_back();  // the k-th r is not part of the word
  return dyck_word(std::move(steps), family::b);
}

namespace detail {

// block formula shared by psi (size = n) and the type-b embedding (size = 2n):
// each increase h_{i-1} -> h_i contributes the block
// out[size-h_i+1 .. size-h_{i-1}] = size-i+1 (1-based), with h_0 = 0.
inline void reflect_blocks(std::span<const int> h, int size, std::vector<int>& out) {
  int prev = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] > prev) {
      for (int pos = size - h[i] + 1; pos <= size - prev; ++pos)
        out[pos - 1] = size - static_cast<int>(i);
    }
    prev = h[i];
  }
}

}  // namespace detail

/// Reflection about the antidiagonal; equals complementing every letter of the
/// word and reversing it.  An involution and a lattice automorphism.
inline height_seq_a psi(const height_seq_a& p) {
  const int n = p.n();
  std::vector<int> out(n, 0);
  detail::reflect_blocks(p.heights(), n, out);
  return height_seq_a(std::move(out));
}

/// The centrally symmetric path of D_{2n}^a whose first 2n steps are p; its
/// word is the word of p followed by the complement-reverse of that word.
inline height_seq_a embed_b_to_a(const height_seq_b& p) {
  const int size = 2 * p.n();
  std::vector<int> out(size, 0);
  std::copy(p.heights().begin(), p.heights().end(), out.begin());
  detail::reflect_blocks(p.heights(), size, out);
  return height_seq_a(std::move(out));
}

/// Inverse of embed_b_to_a on the psi-fixed paths of even semilength.
inline height_seq_b restrict_a_to_b(const height_seq_a& q) {
  if (q.n() % 2 != 0)
    throw std::domain_error("restrict_a_to_b: semilength must be even");
  if (psi(q) != q)
    throw std::domain_error("restrict_a_to_b: path is not centrally symmetric");
  const int n = q.n() / 2;
  const std::string w = heights_to_word_a(q).steps();
  return word_to_heights_b(dyck_word(w.substr(0, 2 * n), family::b));
}

}  // namespace dyck
