#pragma once

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/qint.hpp"

namespace hecke {

enum class RecursionForm { T, R };

/// P_1 .. P_max_n, each embedded in H_{max_n}(q).
struct AntisymmetrizerTower {
  int max_n = 1;
  std::vector<HeckeElement> levels;  // levels[N], N = 1..max_n; levels[0] unused

  const HeckeElement& operator[](int n) const {
    if (n < 1 || n > max_n) throw IndexOutOfRange("tower level out of range");
    return levels[static_cast<std::size_t>(n)];
  }
};

namespace detail {

inline HeckeElement next_projector(const HeckeElement& p, int n, RecursionForm form) {
  // p = P_n in H_n; result is P_{n+1} in H_{n+1}.
  const HeckeElement pe = shift_embed(p, n + 1);
  if (form == RecursionForm::T) {
    const HeckeElement ptp = (pe * generator_T(n + 1, n)) * pe;
    return pe - rho(n) * ptp;
  }
  const HeckeElement mid = HeckeElement::scalar(n + 1, RatFunc::q_power(n)) - quantum(n) * generator_R(n + 1, n);
  return (RatFunc(1) / quantum(n + 1)) * ((pe * mid) * pe);
}

/// P_N in its minimal host H_N, memoized per recursion form.
inline const HeckeElement& minimal_projector(int n, RecursionForm form) {
  if (n < 1 || n > kMaxRank) throw RankOverflow("projector rank outside 1.." + std::to_string(kMaxRank));
  static std::array<std::vector<HeckeElement>, 2> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& levels = cache[form == RecursionForm::T ? 0 : 1];
  if (levels.empty()) levels.push_back(HeckeElement::identity(1));
  while (static_cast<int>(levels.size()) < n) {
    const int m = static_cast<int>(levels.size());
    levels.push_back(next_projector(levels.back(), m, form));
  }
  return levels[static_cast<std::size_t>(n - 1)];
}

inline AntisymmetrizerTower build_tower(int max_n, RecursionForm form) {
  if (max_n < 1) throw PreconditionError("max_n must be at least 1");
  AntisymmetrizerTower t;
  t.max_n = max_n;
  t.levels.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) t.levels[static_cast<std::size_t>(n)] = shift_embed(minimal_projector(n, form), max_n);
  return t;
}

}  // namespace detail

/// P_{N+1} = P_N - rho_N P_N T_N P_N.
inline AntisymmetrizerTower build_tower_T(int max_n) { return detail::build_tower(max_n, RecursionForm::T); }

/// P_{N+1} = (1/[N+1]) P_N (q^N - [N] R_N) P_N.
inline AntisymmetrizerTower build_tower_R(int max_n) { return detail::build_tower(max_n, RecursionForm::R); }

/// P_N embedded in H_{host_rank}.
inline HeckeElement projector(int n, int host_rank) {
  if (host_rank < n) throw RankOverflow("host rank below projector rank");
  return shift_embed(detail::minimal_projector(n, RecursionForm::T), host_rank);
}

/// P'_N, the image of P_N under T_k -> T_{k+1}, inside H_{host_rank}.
inline HeckeElement shifted_projector(int n, int host_rank) {
  if (host_rank < n + 1) throw RankOverflow("P'_N needs host rank at least N+1");
  return shift_embed(detail::minimal_projector(n, RecursionForm::T), host_rank, 1);
}

inline HeckeElement shifted_projector(const AntisymmetrizerTower& tower, int n, int host_rank) {
  if (host_rank < n + 1) throw RankOverflow("P'_N needs host rank at least N+1");
  return shift_embed(restrict_rank(tower[n], n), host_rank, 1);
}

}  // namespace hecke
