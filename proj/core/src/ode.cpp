#include "cpap/ode.hpp"

#include "cpap/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cpap {
namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

std::vector<Rational> ics(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

LinearODE make(std::string name, std::vector<Polynomial> coeffs, std::vector<Rational> init) {
  LinearODE ode{std::move(name), std::move(coeffs), std::move(init)};
  ode.validate();
  return ode;
}

// Falling factorial (j)(j-1)...(j-k+1).
Integer falling(long j, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= j - i;
  return r;
}

struct Term {
  long k;
  long d;
  Rational c;
};

std::vector<Term> terms_of(const LinearODE& ode) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < ode.coeffs.size(); ++k) {
    const auto& cs = ode.coeffs[k].coeffs();
    for (std::size_t d = 0; d < cs.size(); ++d)
      if (sgn(cs[d]) != 0) out.push_back({static_cast<long>(k), static_cast<long>(d), cs[d]});
  }
  return out;
}

long shift_of(const std::vector<Term>& terms) {
  long s = terms.front().k - terms.front().d;
  for (const auto& t : terms) s = std::max(s, t.k - t.d);
  return s;
}

std::string poly_str(const Polynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    const Rational& c = p.coeffs()[d];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    bool unit = a == 1;
    if (!unit || d == 0) os << to_string(a);
    if (d > 0) os << (unit ? "" : "*") << "x" << (d > 1 ? "^" + std::to_string(d) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace

long LinearODE::max_degree() const {
  long d = -1;
  for (const auto& p : coeffs) d = std::max(d, p.degree());
  return d;
}

void LinearODE::validate() const {
  if (coeffs.empty() || coeffs.back().is_zero())
    fail(ErrorKind::invalid_input, "ODE '" + name + "' has no nonzero leading coefficient");
}

LinearODE LinearODE::normalized() const {
  validate();
  Integer den = 1;
  for (const auto& p : coeffs)
    for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  Integer g = 0;
  std::vector<std::vector<Integer>> ints;
  for (const auto& p : coeffs) {
    std::vector<Integer> row;
    for (const auto& c : p.coeffs()) {
      Integer v = c.get_num() * (den / c.get_den());
      g = gcd(g, v);
      row.push_back(v);
    }
    ints.push_back(std::move(row));
  }
  for (const auto& v : ints.back())
    if (sgn(v) != 0) {
      if (sgn(v) < 0) g = -g;
      break;
    }
  LinearODE out{name, {}, initial};
  for (auto& row : ints) {
    std::vector<Rational> r;
    for (auto& v : row) r.emplace_back(Integer(v / g));
    out.coeffs.emplace_back(std::move(r));
  }
  return out;
}

bool LinearODE::same_operator(const LinearODE& other) const {
  auto a = normalized();
  auto b = other.normalized();
  return a.coeffs == b.coeffs;
}

std::string LinearODE::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << poly_str(coeffs[k]) << ")*y";
    if (k > 0) os << (k <= 3 ? std::string(k, '\'') : "^(" + std::to_string(k) + ")");
  }
  return os.str();
}

LinearODE increasing_family_ode(int m) {
  if (m < 3) fail(ErrorKind::domain, "increasing family needs m >= 3");
  std::vector<Polynomial> c(static_cast<std::size_t>(m), poly({1}));
  std::vector<Rational> init = ics({1, -1});
  for (int k = 2; k <= m - 2; ++k) init.emplace_back(0);
  return make("increasing-" + std::to_string(m), std::move(c), std::move(init));
}

Pattern increasing_family_pattern(int m) {
  if (m < 3) fail(ErrorKind::domain, "increasing family needs m >= 3");
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Pattern(v);
}

LinearODE a_family_ode(int m, int a) {
  if (a < 1 || a > m) fail(ErrorKind::domain, "a-family needs 1 <= a <= m");
  int e = m - a + 1;
  // (e)! w^{(a+1)} + x^e w' = 0 keeps the coefficients integral.
  std::vector<Polynomial> c(static_cast<std::size_t>(a + 2));
  c[1] = Polynomial::monomial(Rational(1), static_cast<std::size_t>(e));
  c[static_cast<std::size_t>(a + 1)] = Polynomial::monomial(Rational(factorial(static_cast<unsigned>(e))), 0);
  std::vector<Rational> init = ics({1, -1});
  for (int k = 2; k <= a; ++k) init.emplace_back(0);
  return make("a-family-" + std::to_string(m) + "-" + std::to_string(a), std::move(c), std::move(init));
}

Pattern a_family_pattern(int m, int a) {
  if (a < 1 || a > m) fail(ErrorKind::domain, "a-family needs 1 <= a <= m");
  std::vector<int> v;
  for (int i = 1; i <= a; ++i) v.push_back(i);
  for (int i = a + 2; i <= m + 2; ++i) v.push_back(i);
  v.push_back(a + 1);
  return Pattern(v);
}

std::vector<ClassId> classes_with_ode() {
  std::vector<ClassId> out;
  for (const char* s : {"4.I", "4.IV", "4.VI", "4.VII", "5.I", "5.II", "5.V", "5.VI", "5.XI", "5.XVI",
                        "5.XXII", "5.XXV"})
    out.push_back(ClassId::parse(s));
  return out;
}

LinearODE ode_library(const ClassId& id) {
  const std::string s = id.str();
  if (s == "4.I") {
    auto o = increasing_family_ode(4);
    o.name = s;
    return o;
  }
  if (s == "5.XXV") {
    auto o = increasing_family_ode(5);
    o.name = s;
    return o;
  }
  if (s == "4.VI") return make(s, {poly({}), poly({0, 0, 1}), poly({2})}, ics({1, -1}));
  if (s == "4.VII") return make(s, {poly({}), poly({0, 1}), poly({}), poly({1})}, ics({1, -1, 0}));
  if (s == "4.IV")
    return make(s,
                {poly({0, 4}), poly({3, 8}), poly({6, 5}), poly({3, 6}), poly({3, 1}), poly({0, 1})},
                ics({1, -1, 0, 0, 1}));
  if (s == "5.I") return make(s, {poly({}), poly({0, 1}), poly({}), poly({}), poly({1})}, ics({1, -1, 0, 0}));
  if (s == "5.II") return make(s, {poly({}), poly({0, 0, 1}), poly({}), poly({2})}, ics({1, -1, 0}));
  if (s == "5.V") return make(s, {poly({}), poly({0, 0, 0, 1}), poly({6})}, ics({1, -1}));
  if (s == "5.VI") return make(s, {poly({1}), poly({1}), poly({}), poly({}), poly({1})}, ics({1, -1, 0, 0}));
  if (s == "5.XVI")
    return make(s, {poly({}), poly({0, 1}), poly({0, 1}), poly({}), poly({1})}, ics({1, -1, 0, 0}));
  if (s == "5.XXII")
    return make(s, {poly({}), poly({0, 1}), poly({1}), poly({}), poly({1})}, ics({1, -1, 0, 0}));
  if (s == "5.XI")
    return make(s,
                {poly({0, 3600, 7920, -1620, -3240, 0, -18549}),
                 poly({4480, 10800, 21840, -1020, -4224, 0, -55647}),
                 poly({13440, 13520, 18000, 3540, 6768, -12366, -55647}),
                 poly({13440, 11760, 2480, 540, 12768, -37098, -21297}),
                 poly({4480, 11760, 6960, -7140, 816, -37098, -26793}),
                 poly({4480, 2720, -960, 720, 4056, -12366, -8244}),
                 poly({0, 2720, 320, -3120, -480, -12366, -2748}),
                 poly({0, 0, 320, 0, -480, 0, -2748})},
                ics({1, -1, 0, 0, 0, 1, 0}));
  fail(ErrorKind::no_known_equation, "no known ODE for class " + s);
}

TruncatedSeries ode_series_solve(const LinearODE& ode, std::size_t N) {
  ode.validate();
  const auto terms = terms_of(ode);
  const long shift = shift_of(terms);
  if (shift < 0) fail(ErrorKind::singular, "ODE '" + ode.name + "' never determines a new coefficient");

  std::vector<Rational> a;
  for (std::size_t k = 0; k < ode.initial.size() && k <= N; ++k)
    a.push_back(ode.initial[k] / Rational(factorial(static_cast<unsigned>(k))));
  const std::size_t fixed = ode.initial.size();
  if (static_cast<std::size_t>(shift) > fixed)
    fail(ErrorKind::singular, "ODE '" + ode.name + "' leaves coefficient " + std::to_string(fixed) +
                                  " undetermined (needs " + std::to_string(shift) + " initial values)");

  // Coefficient n of L(y) involves a_{n-d+k}; the new index is n + shift.
  for (long n = 0; n + shift <= static_cast<long>(N); ++n) {
    const auto j = static_cast<std::size_t>(n + shift);
    Rational rest = 0;
    Rational pivot = 0;
    for (const auto& t : terms) {
      long base = n - t.d;
      if (base < 0) continue;
      long idx = base + t.k;
      Rational w = t.c * Rational(falling(idx, t.k));
      if (static_cast<std::size_t>(idx) == j && j >= a.size())
        pivot += w;
      else
        rest += w * a[static_cast<std::size_t>(idx)];
    }
    if (j < a.size()) {
      if (sgn(rest) != 0)
        fail(ErrorKind::verification, "initial values of '" + ode.name + "' violate coefficient equation " +
                                          std::to_string(n));
      continue;
    }
    if (sgn(pivot) == 0)
      fail(ErrorKind::singular, "ODE '" + ode.name + "' has a vanishing pivot at index " + std::to_string(j));
    a.push_back(-rest / pivot);
  }
  a.resize(N + 1);
  return TruncatedSeries(std::move(a), N);
}

TruncatedSeries ode_residual(const LinearODE& ode, const TruncatedSeries& y) {
  ode.validate();
  const auto terms = terms_of(ode);
  const long shift = std::max(0L, shift_of(terms));
  const long N = static_cast<long>(y.order());
  if (N - shift < 0) fail(ErrorKind::domain, "series too short for a residual");
  std::vector<Rational> r(static_cast<std::size_t>(N - shift + 1));
  for (long n = 0; n <= N - shift; ++n)
    for (const auto& t : terms) {
      long base = n - t.d;
      if (base < 0) continue;
      long idx = base + t.k;
      r[static_cast<std::size_t>(n)] += t.c * Rational(falling(idx, t.k)) * y[static_cast<std::size_t>(idx)];
    }
  return TruncatedSeries(std::move(r), static_cast<std::size_t>(N - shift));
}

nlohmann::json to_json(const LinearODE& ode) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& p : ode.coeffs) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p.coeffs()) row.push_back(to_string(c));
    coeffs.push_back(row);
  }
  nlohmann::json init = nlohmann::json::array();
  for (const auto& v : ode.initial) init.push_back(to_string(v));
  return {{"kind", "linear-ode"}, {"name", ode.name}, {"order", ode.order()}, {"coefficients", coeffs},
          {"initial", init}};
}

LinearODE linear_ode_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("kind").get<std::string>() != "linear-ode") fail(ErrorKind::invalid_input, "not a linear-ode document");
    LinearODE ode;
    ode.name = doc.value("name", "");
    for (const auto& row : doc.at("coefficients")) {
      std::vector<Rational> cs;
      for (const auto& c : row) cs.push_back(parse_rational(c.get<std::string>()));
      ode.coeffs.emplace_back(std::move(cs));
    }
    for (const auto& v : doc.at("initial")) ode.initial.push_back(parse_rational(v.get<std::string>()));
    ode.validate();
    return ode;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("malformed ODE document: ") + e.what());
  }
}

}  // namespace cpap
