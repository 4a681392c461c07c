#include "cpap/cluster.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace cpap {

ClusterTable::ClusterTable(std::string descriptor, std::size_t N) : descriptor_(std::move(descriptor)), rows_(N + 1) {}

Integer ClusterTable::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size() || k >= rows_[n].size()) return 0;
  return rows_[n][k];
}

void ClusterTable::set_row(std::size_t n, std::vector<Integer> row) {
  while (!row.empty() && row.back() == 0) row.pop_back();
  rows_.at(n) = std::move(row);
}

void ClusterTable::write_csv(std::ostream& out) const {
  out << "n,k,s\n";
  for (std::size_t n = 1; n < rows_.size(); ++n) {
    for (std::size_t k = 0; k < rows_[n].size(); ++k) {
      if (rows_[n][k] != 0) out << n << ',' << k << ',' << rows_[n][k].get_str() << '\n';
    }
  }
}

namespace {

// A leading run of l maximally overlapping occurrences covers span(l) cells;
// the rest of the cluster, restandardized, is a (k-l)-cluster of length
// shift(n, l), and the run can be realized in coef(n, l) ways.
struct Recurrence {
  std::size_t min_length;
  std::function<long(long)> span;
  std::function<long(long, long)> shift;
  std::function<Integer(long, long)> coef;
};

ClusterTable fill(std::string descriptor, std::size_t N, const Recurrence& rec) {
  ClusterTable table(std::move(descriptor), N);
  if (N >= 1) table.set_row(1, {Integer(1)});
  for (std::size_t n = rec.min_length; n <= N; ++n) {
    const long nn = static_cast<long>(n);
    std::vector<Integer> row;
    for (long l = 1; rec.span(l) <= nn; ++l) {
      if (rec.span(l) < static_cast<long>(rec.min_length)) continue;
      const long rest = rec.shift(nn, l);
      if (rest < 1) continue;
      const auto& tail = table.row(static_cast<std::size_t>(rest));
      if (tail.empty()) continue;
      const Integer coef = rec.coef(nn, l);
      if (coef == 0) continue;
      if (row.size() < tail.size() + static_cast<std::size_t>(l)) row.resize(tail.size() + static_cast<std::size_t>(l));
      for (std::size_t j = 0; j < tail.size(); ++j) row[j + static_cast<std::size_t>(l)] += coef * tail[j];
    }
    table.set_row(n, std::move(row));
  }
  return table;
}

Integer double_factorial_odd(long l) {  // (2l-1)!!
  Integer r = 1;
  for (long j = 1; j <= 2 * l - 1; j += 2) r *= j;
  return r;
}

}  // namespace

OverlapFamily OverlapFamily::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_input, "bad family descriptor '" + std::string(text) + "'");
    }
  };
  OverlapFamily f;
  const std::string& head = parts.front();
  if (head == "onem" && parts.size() == 2) {
    f = onem(num(1));
  } else if (head == "general" && parts.size() == 3) {
    f = general(num(1), num(2));
  } else if (head == "tree" && parts.size() == 2) {
    f = tree_family(num(1));
  } else if (head == "14523" && parts.size() == 1) {
    f = p14523();
  } else if (head == "15243" && parts.size() == 1) {
    f = p15243();
  } else {
    fail(ErrorKind::invalid_input, "unknown family descriptor '" + std::string(text) + "'");
  }
  f.validate();
  return f;
}

std::optional<OverlapFamily> family_for_class(const ClassId& id) {
  const std::string s = id.str();
  if (s == "4.IV") return OverlapFamily::tree_family(4);
  if (s == "4.V") return OverlapFamily::onem(4);
  if (s == "5.VII") return OverlapFamily::onem(5);
  if (s == "5.VIII") return OverlapFamily::general(5, 1);
  if (s == "5.XI") return OverlapFamily::tree_family(5);
  if (s == "5.XII") return OverlapFamily::p14523();
  if (s == "5.XXIII") return OverlapFamily::p15243();
  return std::nullopt;
}

std::string OverlapFamily::str() const {
  switch (kind) {
    case Kind::onem_tail:
      return "onem(m=" + std::to_string(m) + ")";
    case Kind::greater_general:
      return "general(m=" + std::to_string(m) + ",c=" + std::to_string(c) + ")";
    case Kind::tree:
      return "tree(m=" + std::to_string(m) + ")";
    case Kind::pat14523:
      return "14523";
    case Kind::pat15243:
      return "15243";
  }
  return "?";
}

void OverlapFamily::validate() const {
  switch (kind) {
    case Kind::onem_tail:
    case Kind::tree:
      if (m < 4) fail(ErrorKind::domain, str() + ": needs m >= 4");
      break;
    case Kind::greater_general:
      if (m < 4 || c < 0 || c > m - 4) fail(ErrorKind::domain, str() + ": needs m >= 4 and 0 <= c <= m-4");
      break;
    case Kind::pat14523:
    case Kind::pat15243:
      if (m != 5) fail(ErrorKind::domain, str() + ": fixed pattern of length 5");
      break;
  }
  if (m > 40) fail(ErrorKind::domain, str() + ": m too large");
}

Pattern OverlapFamily::representative() const {
  validate();
  std::vector<int> e;
  switch (kind) {
    case Kind::onem_tail:
      e.push_back(1);
      e.push_back(m);
      for (int v = 2; v <= m - 1; ++v) e.push_back(v);
      break;
    case Kind::greater_general:
      // Middle entries decreasing, so that no extra overlaps appear.
      e.push_back(1);
      e.push_back(m);
      for (int v = m - 1; v >= 2; --v) {
        if (v != m - c - 2 && v != m - c - 1) e.push_back(v);
      }
      e.push_back(m - c - 2);
      e.push_back(m - c - 1);
      break;
    case Kind::tree:
      e.push_back(1);
      for (int v = 3; v <= m - 1; ++v) e.push_back(v);
      e.push_back(2);
      e.push_back(m);
      break;
    case Kind::pat14523:
      return Pattern::parse("14523");
    case Kind::pat15243:
      return Pattern::parse("15243");
  }
  return Pattern(std::move(e));
}

ClusterTable clusters_general(int m, int c, std::size_t N) {
  const OverlapFamily fam = OverlapFamily::general(m, c);
  fam.validate();
  BinomialTable binom(static_cast<unsigned>(N + 2));
  const long mm = m;
  const long cc = c;
  return fill(fam.str(), N,
              {static_cast<std::size_t>(m), [=](long l) { return (mm - 2) * l + 2; },
               [=](long n, long l) { return n - (mm - 2) * l - 1; },
               [=, &binom](long n, long l) { return binom(n - (mm - cc - 3) * l - 2, (cc + 1) * l); }});
}

ClusterTable clusters_onem(int m, std::size_t N) {
  const OverlapFamily fam = OverlapFamily::onem(m);
  fam.validate();
  BinomialTable binom(static_cast<unsigned>(N + 2));
  const long mm = m;
  return fill(fam.str(), N,
              {static_cast<std::size_t>(m), [=](long l) { return (mm - 2) * l + 2; },
               [=](long n, long l) { return n - (mm - 2) * l - 1; },
               [=, &binom](long n, long l) { return binom(n - (mm - 3) * l - 2, l); }});
}

ClusterTable clusters_tree(int m, std::size_t N) {
  const OverlapFamily fam = OverlapFamily::tree_family(m);
  fam.validate();
  BinomialTable binom(static_cast<unsigned>(N + 2));
  const long mm = m;
  return fill(fam.str(), N,
              {static_cast<std::size_t>(m), [=](long l) { return (mm - 2) * l + 2; },
               [=](long n, long l) { return n - (mm - 2) * l - 1; },
               [=, &binom](long, long l) {
                 const Integer num = binom((mm - 2) * l, l);
                 const long den = (mm - 3) * l + 1;
                 if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den))) {
                   fail(ErrorKind::verification, "tree count is not an integer");
                 }
                 return Integer(num / den);
               }});
}

ClusterTable clusters_14523(std::size_t N) {
  BinomialTable binom(static_cast<unsigned>(N + 2));
  return fill("14523", N,
              {5, [](long l) { return 3 * l + 2; }, [](long n, long l) { return n - 3 * l - 1; },
               [&binom](long n, long l) { return Integer(binom(n - l - 2, 2 * l) * double_factorial_odd(l)); }});
}

ClusterTable clusters_15243(std::size_t N, Shift15243 shift) {
  BinomialTable binom(static_cast<unsigned>(N + 2));
  const long per = shift == Shift15243::spanning ? 2 : 3;
  return fill(shift == Shift15243::spanning ? "15243" : "15243(triple-shift)", N,
              {5, [](long l) { return 2 * l + 3; }, [=](long n, long l) { return n - per * l - 2; },
               [&binom](long n, long l) { return binom(n - l - 2, l + 1); }});
}

ClusterTable clusters(const OverlapFamily& family, std::size_t N) {
  family.validate();
  switch (family.kind) {
    case OverlapFamily::Kind::onem_tail:
      return clusters_onem(family.m, N);
    case OverlapFamily::Kind::greater_general:
      return clusters_general(family.m, family.c, N);
    case OverlapFamily::Kind::tree:
      return clusters_tree(family.m, N);
    case OverlapFamily::Kind::pat14523:
      return clusters_14523(N);
    case OverlapFamily::Kind::pat15243:
      return clusters_15243(N);
  }
  fail(ErrorKind::domain, "unknown family");
}

TruncatedSeries SignedClusterSeries::ogf() const {
  std::vector<Rational> c(t.size());
  c[0] = 1;
  for (std::size_t n = 1; n < t.size(); ++n) c[n] = t[n];
  return TruncatedSeries(std::move(c), order());
}

SignedClusterSeries SignedClusterSeries::from_ogf(const TruncatedSeries& T, std::string provenance) {
  SignedClusterSeries s;
  s.provenance = std::move(provenance);
  s.t.assign(T.order() + 1, 0);
  for (std::size_t n = 1; n <= T.order(); ++n) {
    if (T[n].get_den() != 1) fail(ErrorKind::verification, "non-integral cluster sum at n=" + std::to_string(n));
    s.t[n] = T[n].get_num();
  }
  return s;
}

SignedClusterSeries signed_sum(const ClusterTable& table) {
  SignedClusterSeries s;
  s.provenance = table.descriptor();
  s.t.assign(table.order() + 1, 0);
  for (std::size_t n = 1; n <= table.order(); ++n) {
    const auto& row = table.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k % 2 == 0) {
        s.t[n] += row[k];
      } else {
        s.t[n] -= row[k];
      }
    }
  }
  return s;
}

CountSeries gj_invert(const SignedClusterSeries& t, std::size_t N) {
  if (t.order() < std::min<std::size_t>(N, 1) || (N >= 1 && t.t[1] != 1)) {
    fail(ErrorKind::domain, "gj_invert needs t_1 = 1");
  }
  if (t.order() < N) fail(ErrorKind::domain, "signed cluster series shorter than requested order");
  BinomialTable binom(static_cast<unsigned>(N));
  CountSeries c;
  c.provenance = "gj:" + t.provenance;
  c.counts.assign(N + 1, 0);
  c.counts[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Integer acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (t.t[j] != 0) acc += binom(static_cast<long>(n), static_cast<long>(j)) * t.t[j] * c.counts[n - j];
    }
    c.counts[n] = acc;
  }
  return c;
}

}  // namespace cpap
