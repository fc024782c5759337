#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Largest TL rank with a diagram table (Catalan(10) = 16796 diagrams).
inline constexpr int kMaxTLRank = 10;

/// Non-crossing perfect matching of N top and N bottom points.
///
/// Point i (0 <= i < N) is top i, point N+i is bottom i. The code reads the
/// boundary circle top 0..N-1 then bottom N-1..0 and sets bit c when the
/// point at circular position c opens its arc.
class TLDiagram {
 public:
  TLDiagram() = default;

  /// Validates a partner array of length 2N.
  TLDiagram(int n, const std::vector<int>& partner) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 1 || n > kMaxTLRank) throw RankOverflow("TL rank outside 1.." + std::to_string(kMaxTLRank));
    if (static_cast<int>(partner.size()) != 2 * n) throw DimensionMismatch("partner array must have 2N entries");
    for (int i = 0; i < 2 * n; ++i) {
      const int p = partner[static_cast<std::size_t>(i)];
      if (p < 0 || p >= 2 * n || p == i || partner[static_cast<std::size_t>(p)] != i) {
        throw Error("not a perfect matching");
      }
      partner_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p);
    }
    if (decode(n, code()).partner_ != partner_) throw Error("matching is not planar");
  }

  static TLDiagram identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(i)] = n + i;
      p[static_cast<std::size_t>(n + i)] = i;
    }
    return TLDiagram(n, p);
  }

  /// Cup-cap on strands k, k+1 (1-based).
  static TLDiagram generator(int n, int k) {
    if (k < 1 || k >= n) throw IndexOutOfRange("TL generator index out of range");
    TLDiagram d = identity(n);
    const auto a = static_cast<std::uint8_t>(k - 1);
    const auto b = static_cast<std::uint8_t>(k);
    d.partner_[a] = b;
    d.partner_[b] = a;
    d.partner_[n + a] = static_cast<std::uint8_t>(n + b);
    d.partner_[n + b] = static_cast<std::uint8_t>(n + a);
    return d;
  }

  int rank() const noexcept { return n_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::uint8_t* partners() const noexcept { return partner_.data(); }

  std::uint32_t code() const {
    std::uint32_t c = 0;
    for (int p = 0; p < 2 * n_; ++p) {
      if (circular(n_, p) < circular(n_, partner_[static_cast<std::size_t>(p)])) c |= 1u << circular(n_, p);
    }
    return c;
  }

  static TLDiagram decode(int n, std::uint32_t code) {
    TLDiagram d;
    d.n_ = static_cast<std::uint8_t>(n);
    std::vector<int> stack;
    for (int c = 0; c < 2 * n; ++c) {
      const int p = point_at(n, c);
      if (code & (1u << c)) {
        stack.push_back(p);
      } else {
        if (stack.empty()) throw Error("unbalanced diagram code");
        const int o = stack.back();
        stack.pop_back();
        d.partner_[static_cast<std::size_t>(o)] = static_cast<std::uint8_t>(p);
        d.partner_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(o);
      }
    }
    if (!stack.empty()) throw Error("unbalanced diagram code");
    return d;
  }

  /// Arc list with 1-based labels, e.g. `t1-t2 b1-b2 t3-b3`.
  std::string to_string() const {
    std::string out;
    auto label = [&](int p) { return (p < n_ ? "t" + std::to_string(p + 1) : "b" + std::to_string(p - n_ + 1)); };
    for (int p = 0; p < 2 * n_; ++p) {
      const int q = partner_[static_cast<std::size_t>(p)];
      if (q < p) continue;
      if (!out.empty()) out += ' ';
      out += label(p) + "-" + label(q);
    }
    return out;
  }

  friend bool operator==(const TLDiagram& a, const TLDiagram& b) { return a.n_ == b.n_ && a.partner_ == b.partner_; }

  static int circular(int n, int p) { return p < n ? p : 3 * n - 1 - p; }
  static int point_at(int n, int c) { return c < n ? c : 3 * n - 1 - c; }

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, 2 * kMaxTLRank> partner_{};
};

/// Stacks a on top of b. Writes the partner array of the result to out and
/// returns the number of closed loops.
inline int compose_partners(int n, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) {
  std::array<bool, kMaxTLRank> seen{};
  for (int r = 0; r < 2 * n; ++r) {
    // Outer point r: top of a (r < n) or bottom of b (r >= n).
    bool in_a = r < n;
    int cur = r;
    for (;;) {
      const int p = in_a ? a[cur] : b[cur];
      if (in_a) {
        if (p < n) {
          out[r] = static_cast<std::uint8_t>(p);
          break;
        }
        seen[static_cast<std::size_t>(p - n)] = true;
        cur = p - n;
        in_a = false;
      } else {
        if (p >= n) {
          out[r] = static_cast<std::uint8_t>(p);
          break;
        }
        seen[static_cast<std::size_t>(p)] = true;
        cur = p + n;
        in_a = true;
      }
    }
  }
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;  // middle point m: bottom of a, top of b
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      const int pa = a[n + cur] - n;  // arc in a from bottom cur ends at a bottom point
      seen[static_cast<std::size_t>(pa)] = true;
      cur = b[pa];  // arc in b from top pa ends at a top point
    } while (cur != m);
  }
  return loops;
}

/// Diagram basis of TL_N, ordered by code; shared read-only tables.
class TLBasis {
 public:
  using Index = std::uint32_t;

  static const TLBasis& get(int n) {
    if (n < 1 || n > kMaxTLRank) throw RankOverflow("TL rank outside 1.." + std::to_string(kMaxTLRank));
    static std::array<std::unique_ptr<TLBasis>, kMaxTLRank + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) slot.reset(new TLBasis(n));
    return *slot;
  }

  int rank() const noexcept { return n_; }
  Index size() const noexcept { return static_cast<Index>(codes_.size()); }
  Index identity_index() const { return index_of(TLDiagram::identity(n_)); }

  const std::uint8_t* partners(Index i) const { return &partners_[static_cast<std::size_t>(i) * 2 * n_]; }
  TLDiagram diagram(Index i) const { return TLDiagram::decode(n_, codes_[i]); }

  Index index_of_code(std::uint32_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) throw Error("diagram code not in basis");
    return static_cast<Index>(it - codes_.begin());
  }
  Index index_of(const TLDiagram& d) const {
    if (d.rank() != n_) throw RankMismatch("diagram rank differs from basis rank");
    return index_of_code(d.code());
  }

  /// Index of x * y and the number of closed loops.
  std::pair<Index, int> compose(Index x, Index y) const {
    std::array<std::uint8_t, 2 * kMaxTLRank> out{};
    const int loops = compose_partners(n_, partners(x), partners(y), out.data());
    std::uint32_t c = 0;
    for (int p = 0; p < 2 * n_; ++p) {
      if (TLDiagram::circular(n_, p) < TLDiagram::circular(n_, out[static_cast<std::size_t>(p)])) {
        c |= 1u << TLDiagram::circular(n_, p);
      }
    }
    return {index_of_code(c), loops};
  }

 private:
  int n_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::uint8_t> partners_;

  explicit TLBasis(int n) : n_(n) {
    // Balanced words of length 2n in increasing numeric order.
    std::vector<std::uint32_t> out;
    auto rec = [&](auto&& self, int pos, int open, int depth, std::uint32_t code) -> void {
      if (pos == 2 * n) {
        out.push_back(code);
        return;
      }
      if (open < n) self(self, pos + 1, open + 1, depth + 1, code | (1u << pos));
      if (depth > 0) self(self, pos + 1, open, depth - 1, code);
    };
    rec(rec, 0, 0, 0, 0u);
    std::sort(out.begin(), out.end());
    codes_ = std::move(out);
    partners_.resize(codes_.size() * 2 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      const TLDiagram d = TLDiagram::decode(n, codes_[i]);
      for (int p = 0; p < 2 * n; ++p) partners_[i * 2 * n + static_cast<std::size_t>(p)] = d.partners()[p];
    }
  }
};

}  // namespace hecke
