#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Largest rank for which group tables are built (9! = 362880 elements).
inline constexpr int kMaxRank = 9;

/// Element of S_N in one-line notation w(1) ... w(N).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) {
    const int n = static_cast<int>(one_line.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : one_line) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw Error("not a permutation of 1..N");
      seen[static_cast<std::size_t>(v)] = true;
    }
    one_line_.assign(one_line.begin(), one_line.end());
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  /// The simple transposition s_k = (k, k+1) in S_n.
  static Permutation simple(int n, int k) {
    if (k < 1 || k >= n) throw IndexOutOfRange("simple transposition index out of range");
    return identity(n).right_mul_simple(k);
  }

  int rank() const noexcept { return static_cast<int>(one_line_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const std::uint8_t> one_line() const noexcept { return one_line_; }

  /// Number of inversions.
  int length() const noexcept {
    int inv = 0;
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
      for (std::size_t j = i + 1; j < one_line_.size(); ++j) inv += one_line_[i] > one_line_[j];
    }
    return inv;
  }

  bool has_right_descent(int k) const { return (*this)(k) > (*this)(k + 1); }

  /// w s_k: swaps positions k and k+1.
  Permutation right_mul_simple(int k) const {
    Permutation p = *this;
    std::swap(p.one_line_[static_cast<std::size_t>(k - 1)], p.one_line_[static_cast<std::size_t>(k)]);
    return p;
  }

  /// s_k w: swaps the values k and k+1.
  Permutation left_mul_simple(int k) const {
    Permutation p = *this;
    for (auto& v : p.one_line_) {
      if (v == k) {
        v = static_cast<std::uint8_t>(k + 1);
      } else if (v == k + 1) {
        v = static_cast<std::uint8_t>(k);
      }
    }
    return p;
  }

  /// Composition (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.rank() != b.rank()) throw RankMismatch("permutation ranks differ");
    Permutation p = b;
    for (auto& v : p.one_line_) v = a.one_line_[v - 1u];
    return p;
  }

  Permutation inverse() const {
    Permutation p = *this;
    for (std::size_t i = 0; i < one_line_.size(); ++i) p.one_line_[one_line_[i] - 1u] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  /// Canonical reduced word: peel off the leftmost right descent repeatedly,
  /// so w = s_{i1} ... s_{il} where i_l is the leftmost descent of w.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
      int k = 1;
      while (k < w.rank() && !w.has_right_descent(k)) ++k;
      if (k >= w.rank()) break;
      word.push_back(k);
      w = w.right_mul_simple(k);
    }
    return {word.rbegin(), word.rend()};
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < one_line_.size(); ++i) os << (i ? " " : "") << int(one_line_[i]);
    os << ']';
    return os.str();
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> one_line_;
};

inline std::string word_to_string(std::span<const int> word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  os << ']';
  return os.str();
}

/// Read-only multiplication tables for S_n, indexed by lexicographic rank.
///
/// Built once per rank and shared; after construction every member is const,
/// so concurrent readers need no synchronization.
class SymmetricGroup {
 public:
  using Index = std::uint32_t;

  static const SymmetricGroup& get(int n) {
    if (n < 1 || n > kMaxRank) throw RankOverflow("rank " + std::to_string(n) + " outside 1.." + std::to_string(kMaxRank));
    static std::array<std::unique_ptr<SymmetricGroup>, kMaxRank + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot.reset(new SymmetricGroup(n));
    return *slot;
  }

  int rank() const noexcept { return n_; }
  Index order() const noexcept { return order_; }
  Index identity_index() const noexcept { return 0; }

  /// Index of w s_k.
  Index right(Index w, int k) const { return right_[static_cast<std::size_t>(k - 1) * order_ + w]; }
  /// Index of s_k w.
  Index left(Index w, int k) const { return left_[static_cast<std::size_t>(k - 1) * order_ + w]; }

  int length(Index w) const { return length_[w]; }
  bool right_ascent(Index w, int k) const { return one_line_[w * n_ + k - 1] < one_line_[w * n_ + k]; }
  bool left_ascent(Index w, int k) const { return length_[left(w, k)] > length_[w]; }

  /// Parent in the canonical-word tree: w = parent * s_letter.
  Index right_parent(Index w) const { return right_parent_[w]; }
  int right_letter(Index w) const { return right_letter_[w]; }
  /// Left-handed tree: w = s_letter * parent with letter the smallest left descent.
  Index left_parent(Index w) const { return left_parent_[w]; }
  int left_letter(Index w) const { return left_letter_[w]; }

  Index inverse(Index w) const { return inverse_[w]; }

  Index index_of(const Permutation& p) const {
    if (p.rank() != n_) throw RankMismatch("permutation rank does not match group rank");
    return rank_of(p.one_line());
  }

  Permutation element(Index w) const {
    std::vector<int> v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = one_line_[w * n_ + i];
    return Permutation(std::move(v));
  }

  /// Canonical reduced word, identical to Permutation::reduced_word().
  std::vector<int> word(Index w) const {
    std::vector<int> out(static_cast<std::size_t>(length_[w]));
    for (std::size_t pos = out.size(); pos-- > 0;) {
      out[pos] = right_letter_[w];
      w = right_parent_[w];
    }
    return out;
  }

 private:
  int n_;
  Index order_;
  std::vector<std::uint8_t> one_line_;
  std::vector<Index> right_, left_, right_parent_, left_parent_, inverse_;
  std::vector<std::uint8_t> length_, right_letter_, left_letter_;

  explicit SymmetricGroup(int n) : n_(n) {
    order_ = 1;
    for (int i = 2; i <= n; ++i) order_ *= static_cast<Index>(i);
    one_line_.resize(static_cast<std::size_t>(order_) * n);
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    // std::next_permutation enumerates in lexicographic order, matching rank_of.
    Index idx = 0;
    do {
      std::copy(cur.begin(), cur.end(), one_line_.begin() + static_cast<std::ptrdiff_t>(idx) * n);
      ++idx;
    } while (std::next_permutation(cur.begin(), cur.end()));

    const auto steps = static_cast<std::size_t>(n > 1 ? n - 1 : 0);
    right_.resize(steps * order_);
    left_.resize(steps * order_);
    length_.resize(order_);
    right_parent_.resize(order_);
    right_letter_.resize(order_);
    left_parent_.resize(order_);
    left_letter_.resize(order_);
    inverse_.resize(order_);
    std::vector<std::uint8_t> tmp(static_cast<std::size_t>(n));
    for (Index w = 0; w < order_; ++w) {
      const std::uint8_t* row = &one_line_[static_cast<std::size_t>(w) * n];
      int inv = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) inv += row[i] > row[j];
      }
      length_[w] = static_cast<std::uint8_t>(inv);
      for (int k = 1; k < n; ++k) {
        std::copy(row, row + n, tmp.begin());
        std::swap(tmp[static_cast<std::size_t>(k - 1)], tmp[static_cast<std::size_t>(k)]);
        right_[static_cast<std::size_t>(k - 1) * order_ + w] = rank_of(tmp);
        std::copy(row, row + n, tmp.begin());
        for (auto& v : tmp) {
          if (v == k) {
            v = static_cast<std::uint8_t>(k + 1);
          } else if (v == k + 1) {
            v = static_cast<std::uint8_t>(k);
          }
        }
        left_[static_cast<std::size_t>(k - 1) * order_ + w] = rank_of(tmp);
      }
      for (int i = 0; i < n; ++i) tmp[row[i] - 1u] = static_cast<std::uint8_t>(i + 1);
      inverse_[w] = rank_of(tmp);
    }
    for (Index w = 0; w < order_; ++w) {
      right_parent_[w] = w;
      right_letter_[w] = 0;
      for (int k = 1; k < n; ++k) {
        if (!right_ascent(w, k)) {
          right_parent_[w] = right(w, k);
          right_letter_[w] = static_cast<std::uint8_t>(k);
          break;
        }
      }
      left_parent_[w] = w;
      left_letter_[w] = 0;
      for (int k = 1; k < n; ++k) {
        if (length_[left(w, k)] < length_[w]) {
          left_parent_[w] = left(w, k);
          left_letter_[w] = static_cast<std::uint8_t>(k);
          break;
        }
      }
    }
  }

  Index rank_of(std::span<const std::uint8_t> p) const {
    // Lehmer code in the factorial number system.
    Index r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j) smaller += p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)];
      r = r * static_cast<Index>(n_ - i) + static_cast<Index>(smaller);
    }
    return r;
  }
};

}  // namespace hecke
