#pragma once

// Cluster-number recurrences for the families of patterns whose clusters
// decompose by "how many leading occurrences overlap maximally", plus the
// Goulden-Jackson passage from signed cluster sums to avoider counts.

#include "cpap/class_registry.hpp"
#include "cpap/numeric.hpp"
#include "cpap/pattern.hpp"
#include "cpap/series.hpp"

#include <iosfwd>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace cpap {

/// s_{n,k}: number of k-clusters of length n. Row 0 is empty; s_{1,0} = 1.
class ClusterTable {
 public:
  ClusterTable(std::string descriptor, std::size_t N);

  [[nodiscard]] const std::string& descriptor() const noexcept { return descriptor_; }
  [[nodiscard]] std::size_t order() const noexcept { return rows_.size() - 1; }
  /// Largest k stored for row n.
  [[nodiscard]] std::size_t k_max(std::size_t n) const { return rows_.at(n).empty() ? 0 : rows_[n].size() - 1; }
  [[nodiscard]] const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }
  /// 0 outside the stored range.
  [[nodiscard]] Integer at(std::size_t n, std::size_t k) const;

  void set_row(std::size_t n, std::vector<Integer> row);

  /// "n,k,s" lines, zero entries omitted.
  void write_csv(std::ostream& out) const;

  friend bool operator==(const ClusterTable& a, const ClusterTable& b) { return a.rows_ == b.rows_; }

 private:
  std::string descriptor_;
  std::vector<std::vector<Integer>> rows_;
};

struct OverlapFamily {
  enum class Kind {
    onem_tail,        // 1 m 2 3 ... (m-1)
    greater_general,  // 1 m tau_3 ... tau_m with tau_m = tau_{m-1}+1, c = m - tau_m - 1
    tree,             // 1 3 4 ... (m-1) 2 m
    pat14523,
    pat15243,
  };
  Kind kind = Kind::onem_tail;
  int m = 4;
  int c = 0;

  static OverlapFamily onem(int m) { return {Kind::onem_tail, m, 0}; }
  static OverlapFamily general(int m, int c) { return {Kind::greater_general, m, c}; }
  static OverlapFamily tree_family(int m) { return {Kind::tree, m, 0}; }
  static OverlapFamily p14523() { return {Kind::pat14523, 5, 0}; }
  static OverlapFamily p15243() { return {Kind::pat15243, 5, 0}; }

  /// "onem:M", "general:M:C", "tree:M", "14523" or "15243".
  static OverlapFamily parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  /// Throws a domain error when m or c is out of range.
  void validate() const;
  /// A concrete pattern whose clusters the family counts.
  [[nodiscard]] Pattern representative() const;

  friend bool operator==(const OverlapFamily&, const OverlapFamily&) = default;
};

/// Family whose recurrence covers a class: 4.IV, 4.V, 5.VII, 5.VIII, 5.XI,
/// 5.XII, 5.XXIII. Nullopt for the others.
std::optional<OverlapFamily> family_for_class(const ClassId& id);

ClusterTable clusters_onem(int m, std::size_t N);
/// Requires 0 <= c <= m-4: with c = m-3 the last two entries would be 2,3 and
/// consecutive occurrences could overlap in three places.
ClusterTable clusters_general(int m, int c, std::size_t N);
ClusterTable clusters_tree(int m, std::size_t N);
ClusterTable clusters_14523(std::size_t N);

/// Which index shift to use in the 15243 recurrence. The leading l occurrences
/// overlapping by three span 2l+3 cells, so the tail cluster has length
/// n-2l-2; the variant with n-3l-2 is kept to document that it disagrees with
/// brute force (it already gives s_{6,1} = 3).
enum class Shift15243 { spanning, triple };
ClusterTable clusters_15243(std::size_t N, Shift15243 shift = Shift15243::spanning);

ClusterTable clusters(const OverlapFamily& family, std::size_t N);

/// t_n = sum_k (-1)^k s_{n,k}; t[0] is 0 and is not part of the sum.
struct SignedClusterSeries {
  std::vector<Integer> t;
  std::string provenance;

  [[nodiscard]] std::size_t order() const noexcept { return t.empty() ? 0 : t.size() - 1; }
  /// T(x) = 1 + sum_{n>=1} t_n x^n.
  [[nodiscard]] TruncatedSeries ogf() const;
  static SignedClusterSeries from_ogf(const TruncatedSeries& T, std::string provenance);

  friend bool operator==(const SignedClusterSeries& a, const SignedClusterSeries& b) { return a.t == b.t; }
};

SignedClusterSeries signed_sum(const ClusterTable& table);

/// c_0 = 1, c_n = sum_{j=1}^n C(n,j) t_j c_{n-j}. Requires t_1 = 1.
CountSeries gj_invert(const SignedClusterSeries& t, std::size_t N);

}  // namespace cpap
