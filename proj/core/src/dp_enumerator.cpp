#include "cpap/dp_enumerator.hpp"

#include "cpap/dp_frontier.hpp"
#include "cpap/modular.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <thread>

// Layout.
//
// After t placements the placed values, listed in value order, form a row of
// t cells; the L-1 window elements are "bars", the rest are "stars". A state is
// (window order w, bar positions P_0 < ... < P_{L-2}) with P in [0, t). Bar
// sets are ranked colexicographically: rank = sum_j C(P_j, j+1).
//
// A step appends a new element. Write tau for the order of the L youngest
// elements (old window plus new). The oldest window element tau_1 turns into a
// star, so the new state is (std(tau_2..tau_L), Q) where Q are the surviving
// bar positions among t+1 cells. Pulling backwards from a target (w'', Q) and a
// value q = tau_1 - 1, the dropped element sat at some cell b strictly between
// bars Q_{q-1} and Q_q; deleting the new element's cell gives the source bars.
// As b slides, only source bar p moves, so the sum over b is a difference of
// prefix sums D_p(P) = F(P) + D_p(P with bar p moved one cell down).

namespace cpap::dp {

namespace {

using modular::u64;

constexpr std::size_t kMaxBars = kMaxDpPatternLength - 1;

struct Transition {
  std::uint32_t target_window;
  std::uint32_t source_window;
};

struct Group {
  int q = 0;  // value rank of the dropped element within tau
  int i = 0;  // value rank of the new element within tau
  int p = 0;  // source bar that moves with b
  std::vector<Transition> moves;
};

class Binomials {
 public:
  Binomials(std::size_t max_n, std::size_t max_k) : k_(max_k + 1), table_((max_n + 1) * k_, 0) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t k = 0; k <= max_k && k <= n; ++k) {
        table_[n * k_ + k] = (k == 0 || k == n) ? 1 : at(n - 1, k - 1) + at(n - 1, k);
      }
    }
  }
  [[nodiscard]] u64 at(std::size_t n, std::size_t k) const { return table_[n * k_ + k]; }
  [[nodiscard]] u64 operator()(long n, std::size_t k) const {
    return n < 0 ? (k == 0 ? 1 : 0) : at(static_cast<std::size_t>(n), k);
  }

 private:
  std::size_t k_;
  std::vector<u64> table_;
};

std::size_t window_count(std::size_t L) {
  std::size_t w = 1;
  for (std::size_t a = 2; a < L; ++a) w *= a;
  return w;
}

std::uint32_t rank_of_order(std::span<const int> perm) {
  std::uint32_t rank = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    std::uint32_t smaller = 0;
    for (std::size_t b = a + 1; b < perm.size(); ++b) smaller += perm[b] < perm[a] ? 1 : 0;
    rank = rank * static_cast<std::uint32_t>(perm.size() - a) + smaller;
  }
  return rank;
}

std::vector<Group> build_groups(const Pattern& pat) {
  const int L = static_cast<int>(pat.size());
  std::vector<Group> groups;
  for (int q = 0; q < L; ++q) {
    for (int i = 0; i < L; ++i) {
      if (i != q) groups.push_back(Group{q, i, i > q ? q : q - 1, {}});
    }
  }
  std::vector<int> tau(static_cast<std::size_t>(L));
  std::iota(tau.begin(), tau.end(), 1);
  do {
    if (std::equal(tau.begin(), tau.end(), pat.elems().begin())) continue;
    const int q = tau.front() - 1;
    const int i = tau.back() - 1;
    const Pattern src = standardize(std::span<const int>(tau.data(), tau.size() - 1));
    const Pattern dst = standardize(std::span<const int>(tau.data() + 1, tau.size() - 1));
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.q == q && g.i == i; });
    it->moves.push_back({rank_of_order(dst.elems()), rank_of_order(src.elems())});
  } while (std::next_permutation(tau.begin(), tau.end()));
  std::erase_if(groups, [](const Group& g) { return g.moves.empty(); });
  return groups;
}

// Steps a colex-ordered bar set of size k inside [0, cells); false at the end.
bool next_bars(std::array<long, kMaxBars>& bars, std::size_t k, long cells) {
  for (std::size_t j = 0; j < k; ++j) {
    const long limit = j + 1 < k ? bars[j + 1] : cells;
    if (bars[j] + 1 < limit) {
      ++bars[j];
      for (std::size_t a = 0; a < j; ++a) bars[a] = static_cast<long>(a);
      return true;
    }
  }
  return false;
}

class ModularRun {
 public:
  ModularRun(const Pattern& pat, unsigned N, u64 prime)
      : L_(pat.size()),
        k_(L_ - 1),
        W_(window_count(L_)),
        N_(N),
        p_(prime),
        binom_(N + L_ + 1, L_),
        groups_(build_groups(pat)) {}

  std::vector<u64> run() {
    std::vector<u64> counts(N_ + 1, 0);
    u64 fact = 1 % p_;
    for (unsigned t = 0; t <= N_ && t < k_ + 1; ++t) {
      if (t > 0) fact = modular::mul_mod(fact, t, p_);
      counts[t] = fact;
    }
    if (N_ <= k_) return counts;

    // t = L-1: every window order, all cells are bars.
    std::vector<u64> F(W_, 1 % p_);
    for (unsigned t = static_cast<unsigned>(k_); t < N_; ++t) {
      F = step(F, t);
      u64 total = 0;
      for (u64 v : F) total = modular::add_mod(total, v, p_);
      counts[t + 1] = total;
    }
    return counts;
  }

 private:
  [[nodiscard]] std::size_t bar_sets(unsigned cells) const { return binom_.at(cells, k_); }

  [[nodiscard]] u64 rank(const std::array<long, kMaxBars>& bars) const {
    u64 r = 0;
    for (std::size_t j = 0; j < k_; ++j) r += binom_(bars[j], j + 1);
    return r;
  }

  std::vector<u64> step(const std::vector<u64>& F, unsigned t) {
    const std::size_t src_sets = bar_sets(t);
    const std::size_t dst_sets = bar_sets(t + 1);
    const std::size_t W = W_;

    // Prefix sums along each bar direction.
    std::unique_ptr<u64[]> D(new u64[k_ * src_sets * W]);
    {
      std::array<long, kMaxBars> P{};
      for (std::size_t j = 0; j < k_; ++j) P[j] = static_cast<long>(j);
      std::size_t r = 0;
      do {
        for (std::size_t p = 0; p < k_; ++p) {
          u64* out = &D[(p * src_sets + r) * W];
          const u64* f = &F[r * W];
          const long below = p == 0 ? -1 : P[p - 1];
          if (P[p] - 1 > below) {
            const std::size_t nb = r - binom_(P[p] - 1, p);
            const u64* prev = &D[(p * src_sets + nb) * W];
            for (std::size_t w = 0; w < W; ++w) out[w] = modular::add_mod(f[w], prev[w], p_);
          } else {
            std::copy(f, f + W, out);
          }
        }
        ++r;
      } while (next_bars(P, k_, static_cast<long>(t)));
    }

    // Source ranks split into prefix sums over the target bars: with cells
    // above the removed new element shifted down, source bar j is one of
    // Q_j, Q_{j-1}, Q_{j+1}-1 or Q_j-1, plus the moving bar at b or b-1.
    std::vector<u64> next(dst_sets * W, 0);
    std::array<long, kMaxBars> Q{};
    for (std::size_t j = 0; j < k_; ++j) Q[j] = static_cast<long>(j);
    const long cells = static_cast<long>(t) + 1;
    std::array<u64, kMaxBars + 1> same{};     // sum_{j<m} C(Q_j, j+1)
    std::array<u64, kMaxBars + 1> up{};       // sum_{j<m} C(Q_j, j+2)
    std::array<u64, kMaxBars + 1> down{};     // sum_{j<m} C(Q_j - 1, j)
    std::array<u64, kMaxBars + 1> lowered{};  // sum_{j<m} C(Q_j - 1, j+1)
    std::size_t r = 0;
    do {
      for (std::size_t j = 0; j < k_; ++j) {
        same[j + 1] = same[j] + binom_(Q[j], j + 1);
        up[j + 1] = up[j] + binom_(Q[j], j + 2);
        down[j + 1] = down[j] + binom_(Q[j] - 1, j);
        lowered[j + 1] = lowered[j] + binom_(Q[j] - 1, j + 1);
      }
      u64* out = &next[r * W];
      for (const Group& g : groups_) {
        const auto q = static_cast<std::size_t>(g.q);
        const auto i = static_cast<std::size_t>(g.i);
        const long floor = q == 0 ? -1 : Q[q - 1];
        const long ceil = q == k_ ? cells : Q[q];
        if (ceil - floor < 2) continue;  // no star cell for the dropped element
        const u64* dlo = nullptr;
        std::size_t hi = 0;
        const std::size_t table = static_cast<std::size_t>(g.p) * src_sets;
        if (i > q) {
          hi = same[q] + binom_(ceil - 1, q + 1) + (up[i - 1] - up[q]) + (lowered[k_] - lowered[i]);
        } else {
          const std::size_t base = same[i] + (down[q] - down[i + 1]) + (lowered[k_] - lowered[q]);
          hi = base + binom_(ceil - 2, q);
          // Only when the new element sits directly below the dropped one can
          // the moving bar slide below its lowest position.
          const long prev = q >= 2 ? Q[q - 2] : -1;
          if (i + 1 == q && floor - 1 > prev) dlo = &D[(table + base + binom_(floor - 1, q)) * W];
        }
        const u64* dhi = &D[(table + hi) * W];
        for (const Transition& mv : g.moves) {
          u64 v = dhi[mv.source_window];
          if (dlo != nullptr) v = modular::sub_mod(v, dlo[mv.source_window], p_);
          out[mv.target_window] = modular::add_mod(out[mv.target_window], v, p_);
        }
      }
      ++r;
    } while (next_bars(Q, k_, cells));
    return next;
  }

  std::size_t L_;
  std::size_t k_;
  std::size_t W_;
  unsigned N_;
  u64 p_;
  Binomials binom_;
  std::vector<Group> groups_;
};

void check_pattern(const Pattern& pat) {
  if (pat.size() < 2 || pat.size() > kMaxDpPatternLength) {
    fail(ErrorKind::domain, "dp enumeration supports pattern lengths 2.." + std::to_string(kMaxDpPatternLength));
  }
}

}  // namespace

std::uint64_t state_count(std::size_t L, unsigned t) {
  return window_count(L) * static_cast<std::uint64_t>(binomial(t, static_cast<long>(L) - 1).get_ui());
}

unsigned max_order_within_budget(std::size_t L, unsigned N, std::size_t budget_bytes) {
  if (budget_bytes == 0) return N;
  for (unsigned t = static_cast<unsigned>(L - 1); t < N; ++t) {
    // D tables plus the larger of the old and new weight tables.
    const double words = static_cast<double>(L - 1) * static_cast<double>(state_count(L, t)) +
                         static_cast<double>(state_count(L, t + 1));
    if (words * sizeof(std::uint64_t) > static_cast<double>(budget_bytes)) return t;
  }
  return N;
}

std::vector<std::uint64_t> count_series_mod(const Pattern& pat, unsigned N, std::uint64_t p) {
  check_pattern(pat);
  return ModularRun(pat, N, p).run();
}

CountSeries count_series(const Pattern& pat, unsigned N, const DpOptions& options) {
  check_pattern(pat);
  if (N < 1) fail(ErrorKind::domain, "count_series needs N >= 1");
  const unsigned threads = std::max(1U, options.threads);
  const std::size_t per_worker = options.memory_budget == 0 ? 0 : options.memory_budget / threads;
  const unsigned reach = max_order_within_budget(pat.size(), N, per_worker);

  const auto primes = modular::primes_exceeding(factorial(reach));
  std::vector<std::vector<u64>> residues(primes.size());
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));
  if (workers <= 1) {
    for (std::size_t j = 0; j < primes.size(); ++j) residues[j] = ModularRun(pat, reach, primes[j]).run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < primes.size(); j += workers) residues[j] = ModularRun(pat, reach, primes[j]).run();
      });
    }
    for (auto& th : pool) th.join();
  }

  CountSeries out;
  out.provenance = "dp:" + pat.str();
  out.counts.reserve(reach + 1);
  std::vector<u64> column(primes.size());
  for (unsigned n = 0; n <= reach; ++n) {
    for (std::size_t j = 0; j < primes.size(); ++j) column[j] = residues[j][n];
    out.counts.push_back(modular::crt(column, primes));
  }
  if (reach < N) {
    throw BudgetExceeded("memory budget reached after c_" + std::to_string(reach) + " of c_" + std::to_string(N),
                         std::move(out));
  }
  return out;
}

CountSeries count_series_reference(const Pattern& pat, unsigned N) {
  check_pattern(pat);
  CountSeries out;
  out.provenance = "frontier:" + pat.str();
  for (unsigned n = 0; n <= N; ++n) out.counts.push_back(count_by_frontier(pat, n));
  return out;
}

}  // namespace cpap::dp
