#include "cpap/asymptotics.hpp"

#include "cpap/errors.hpp"
#include "cpap/linalg.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace cpap {
namespace {

using RootComplex = boost::multiprecision::cpp_complex_100;
using RootReal = boost::multiprecision::cpp_bin_float_100;

int precision_cap(unsigned digits) { return static_cast<int>(digits) - 5; }

// Neville extrapolation to 1/n -> 0 over the last depth+1 samples of seq,
// returning diagonal D_j (built from the last j+1 samples), j = 0..depth.
std::vector<BigFloat> neville_diagonal(const std::vector<BigFloat>& seq, std::size_t last, int depth) {
  std::vector<BigFloat> diag;
  for (int j = 0; j <= depth; ++j) {
    const std::size_t first = last - static_cast<std::size_t>(j);
    std::vector<BigFloat> p(seq.begin() + static_cast<long>(first), seq.begin() + static_cast<long>(last) + 1);
    std::vector<BigFloat> x;
    for (std::size_t n = first; n <= last; ++n) x.push_back(BigFloat(1) / BigFloat(static_cast<long>(n)));
    for (int level = 1; level <= j; ++level)
      for (int i = 0; i + level <= j; ++i)
        p[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i + level)] * p[static_cast<std::size_t>(i)] -
                                          x[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i + 1)]) /
                                         (x[static_cast<std::size_t>(i + level)] - x[static_cast<std::size_t>(i)]);
    diag.push_back(p.front());
  }
  return diag;
}

struct Extrapolated {
  BigFloat value;
  int digits;
};

Extrapolated stable_diagonal(const std::vector<BigFloat>& diag, unsigned precision, const char* what) {
  // Walk while successive differences keep shrinking.
  std::size_t best = 1;
  BigFloat delta = abs(diag[1] - diag[0]);
  for (std::size_t j = 2; j < diag.size(); ++j) {
    BigFloat d = abs(diag[j] - diag[j - 1]);
    if (d > delta) break;
    delta = d;
    best = j;
  }
  const int digits = std::min(agreeing_digits(diag[best], diag[best - 1]), precision_cap(precision));
  if (digits < 1) {
    std::ostringstream os;
    os << what << " extrapolation did not settle; diagonal:";
    for (const auto& v : diag) os << ' ' << format_decimal(v, 12);
    fail(ErrorKind::non_convergence, os.str());
  }
  return {diag[best], digits};
}

// Q_K coefficients (integers, lowest first) of every approximant on the grid,
// keyed by degree. Independent of the floating precision.
std::map<int, std::vector<Integer>> approximant_leaders(const RatioSequence& rs, int K, const std::vector<int>& degrees,
                                                        const ApproximantOptions& opt) {
  const long N = static_cast<long>(rs.order());
  std::map<int, std::vector<Integer>> out;
  for (int d : degrees) {
    const int blocks = K + 1 + (opt.inhomogeneous ? 1 : 0);
    const std::size_t unknowns = static_cast<std::size_t>(blocks * (d + 1));
    const long eqs = N - K + 1;
    if (static_cast<long>(unknowns - 1 + opt.holdout) > eqs)
      fail(ErrorKind::budget, "approximant of order " + std::to_string(K) + " and degree " + std::to_string(d) +
                                  " needs more than " + std::to_string(N + 1) + " terms");
    IntMatrix rows;
    for (long n = 0; n < static_cast<long>(unknowns) - 1; ++n) {
      std::vector<Rational> row(unknowns);
      for (int k = 0; k <= K; ++k)
        for (int j = 0; j <= d && j <= n; ++j) {
          long idx = n - j + k;
          Integer f = 1;
          for (int i = 0; i < k; ++i) f *= idx - i;
          row[static_cast<std::size_t>(k * (d + 1) + j)] = Rational(f) * rs.b[static_cast<std::size_t>(idx)];
        }
      if (opt.inhomogeneous && n <= d) row[static_cast<std::size_t>((K + 1) * (d + 1) + n)] = -1;
      rows.push_back(clear_denominators(row));
    }
    auto basis = nullspace(std::move(rows), unknowns);
    if (basis.size() != 1) continue;
    std::vector<Integer> lead(basis[0].begin() + K * (d + 1), basis[0].begin() + (K + 1) * (d + 1));
    while (!lead.empty() && sgn(lead.back()) == 0) lead.pop_back();
    if (lead.size() < 2) continue;
    out.emplace(d, std::move(lead));
  }
  return out;
}

// All complex roots by Durand-Kerner at ~100 digits.
std::vector<RootComplex> all_roots(const std::vector<Integer>& coeffs) {
  std::size_t shift = 0;
  while (sgn(coeffs[shift]) == 0) ++shift;
  std::vector<RootReal> a;
  for (std::size_t i = shift; i < coeffs.size(); ++i) a.emplace_back(coeffs[i].get_str());
  const std::size_t deg = a.size() - 1;
  std::vector<RootComplex> roots(shift, RootComplex(0));
  if (deg == 0) return roots;
  for (auto& c : a) c /= a.back() == 0 ? RootReal(1) : RootReal(a.back());
  RootReal radius = pow(abs(a.front()), RootReal(1) / RootReal(deg));
  if (radius == 0) radius = 1;
  std::vector<RootComplex> z;
  const RootReal pi = boost::math::constants::pi<RootReal>();
  for (std::size_t k = 0; k < deg; ++k) {
    RootReal ang = 2 * pi * RootReal(k) / RootReal(deg) + RootReal("0.4");
    z.emplace_back(radius * cos(ang), radius * sin(ang));
  }
  auto eval = [&](const RootComplex& x) {
    RootComplex acc(a.back());
    for (std::size_t i = deg; i-- > 0;) acc = acc * x + RootComplex(a[i]);
    return acc;
  };
  const RootReal tol("1e-90");
  for (int it = 0; it < 2000; ++it) {
    RootReal change = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      RootComplex den(1);
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      if (abs(den) == 0) den = RootComplex(tol);
      RootComplex step = eval(z[i]) / den;
      z[i] -= step;
      RootReal rel = abs(step) / (abs(z[i]) + 1);
      if (rel > change) change = rel;
    }
    if (change < tol) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::optional<BigFloat> physical_root(const std::vector<Integer>& q, const ApproximantOptions& opt) {
  std::optional<RootReal> best;
  for (const auto& r : all_roots(q)) {
    RootReal re = r.real();
    if (re <= 0) continue;
    if (abs(r.imag()) > RootReal(opt.max_arg) * re) continue;
    if (re <= RootReal(opt.window_low) || re >= RootReal(opt.window_high)) continue;
    if (!best || re < *best) best = re;
  }
  if (!best) return std::nullopt;
  // Newton on the real polynomial at the working precision.
  BigFloat x(best->str(110));
  std::vector<BigFloat> c;
  for (const auto& v : q) c.push_back(to_bigfloat(v));
  const BigFloat eps = pow(BigFloat(10), -static_cast<long>(BigFloat::default_precision()) + 2);
  for (int it = 0; it < 200; ++it) {
    BigFloat p = 0;
    BigFloat dp = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[i];
    }
    if (dp == 0) break;
    BigFloat step = p / dp;
    x -= step;
    if (abs(step) <= eps * abs(x)) break;
  }
  return x;
}

BigFloat median(std::vector<BigFloat> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : BigFloat((v[m - 1] + v[m]) / 2);
}

struct OrderResult {
  std::vector<BigFloat> kappas;  // ascending degree
  BigFloat median;
  int digits;
};

OrderResult evaluate_order(const std::map<int, std::vector<Integer>>& leaders, const ApproximantOptions& opt,
                           unsigned precision) {
  OrderResult res;
  for (const auto& [d, q] : leaders)
    if (auto root = physical_root(q, opt)) res.kappas.push_back(BigFloat(1) / *root);
  if (res.kappas.empty()) fail(ErrorKind::non_convergence, "no approximant has a singularity in the physical window");
  res.median = median(res.kappas);
  const std::size_t n = res.kappas.size();
  res.digits = n >= 2 ? agreeing_digits(res.kappas[n - 1], res.kappas[n - 2]) : 0;
  res.digits = std::min(res.digits, precision_cap(precision));
  return res;
}

}  // namespace

int agreeing_digits(const BigFloat& a, const BigFloat& b, int cap) {
  if (a == b) return cap;
  BigFloat rel = abs(a - b) / abs(a);
  long d = static_cast<long>(floor(-log10(rel)).convert_to<double>());
  return static_cast<int>(std::clamp(d, 0L, static_cast<long>(cap)));
}

std::string format_decimal(const BigFloat& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

RatioSequence RatioSequence::from_egf(std::vector<Rational> b, unsigned digits) {
  PrecisionScope scope(digits);
  RatioSequence rs;
  rs.digits = digits;
  rs.b = std::move(b);
  rs.r.resize(rs.b.size());
  for (std::size_t n = 1; n < rs.b.size(); ++n) {
    if (sgn(rs.b[n - 1]) == 0) fail(ErrorKind::domain, "ratio with a vanishing term");
    rs.r[n] = to_bigfloat(Rational(rs.b[n] / rs.b[n - 1]));
  }
  return rs;
}

RatioSequence RatioSequence::from_counts(const CountSeries& counts, unsigned digits) {
  return from_egf(counts.egf().coeffs(), digits);
}

AsymptoticEstimate ratio_extrapolate(const RatioSequence& rs, int depth) {
  if (depth < 1) fail(ErrorKind::domain, "extrapolation depth must be positive");
  if (rs.order() < static_cast<std::size_t>(depth) + 5) fail(ErrorKind::domain, "too few ratios for the table depth");
  PrecisionScope scope(rs.digits);
  std::vector<BigFloat> r(rs.r.size());
  for (std::size_t n = 1; n < r.size(); ++n) r[n] = BigFloat(rs.r[n]);
  const auto diag = neville_diagonal(r, rs.order(), depth);
  const auto e = stable_diagonal(diag, rs.digits, "ratio");
  AsymptoticEstimate out;
  out.kappa = e.value;
  out.stable_digits_kappa = e.digits;
  out.method = "ratio-extrapolation";
  out.precision = rs.digits;
  return out;
}

AsymptoticEstimate amplitude(const RatioSequence& rs, const BigFloat& kappa, int depth) {
  if (rs.order() < static_cast<std::size_t>(depth) + 5) fail(ErrorKind::domain, "too few terms for the table depth");
  PrecisionScope scope(rs.digits);
  const BigFloat k(kappa);
  std::vector<BigFloat> a(rs.b.size());
  BigFloat power = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = to_bigfloat(rs.b[n]) / power;
    power *= k;
  }
  const auto e = stable_diagonal(neville_diagonal(a, rs.order(), depth), rs.digits, "amplitude");
  AsymptoticEstimate out;
  out.kappa = k;
  out.amplitude = e.value;
  out.stable_digits_amplitude = e.digits;
  out.method = "richardson";
  out.precision = rs.digits;
  return out;
}

std::vector<int> default_degree_grid(std::size_t order, int K, const ApproximantOptions& options) {
  const long blocks = K + 1 + (options.inhomogeneous ? 1 : 0);
  const long room = static_cast<long>(order) - K + 2 - static_cast<long>(options.holdout);
  const long dmax = room / blocks - 1;
  std::vector<int> grid;
  for (long d = std::max(2L, dmax - 3); d <= dmax; ++d) grid.push_back(static_cast<int>(d));
  if (grid.empty()) fail(ErrorKind::budget, "series too short for differential approximants");
  return grid;
}

AsymptoticEstimate differential_approximant(const RatioSequence& rs, int K, const std::vector<int>& degrees,
                                            const ApproximantOptions& options) {
  if (K < 1) fail(ErrorKind::domain, "approximant order must be positive");
  const auto leaders = approximant_leaders(rs, K, degrees, options);
  PrecisionScope scope(rs.digits);
  const auto res = evaluate_order(leaders, options, rs.digits);
  AsymptoticEstimate out;
  out.kappa = res.median;
  out.stable_digits_kappa = res.digits;
  out.method = "differential-approximant";
  out.precision = rs.digits;
  out.samples = res.kappas.size();
  return out;
}

AsymptoticEstimate estimate_growth(const CountSeries& counts, const AsymptoticsConfig& cfg) {
  const ApproximantOptions opt;
  const auto exact = RatioSequence::from_counts(counts, cfg.digits);
  std::vector<std::map<int, std::vector<Integer>>> leaders;
  for (int K : cfg.orders)
    leaders.push_back(approximant_leaders(exact, K,
                                          cfg.degrees.empty() ? default_degree_grid(exact.order(), K, opt) : cfg.degrees,
                                          opt));

  AsymptoticEstimate best;
  for (unsigned digits = cfg.digits; digits <= cfg.max_digits; digits *= 2) {
    PrecisionScope scope(digits);
    std::vector<BigFloat> pooled;
    std::vector<BigFloat> medians;
    int digits_k = precision_cap(digits);
    for (const auto& l : leaders) {
      const auto res = evaluate_order(l, opt, digits);
      pooled.insert(pooled.end(), res.kappas.begin(), res.kappas.end());
      medians.push_back(res.median);
      digits_k = std::min(digits_k, res.digits);
    }
    for (std::size_t i = 1; i < medians.size(); ++i)
      digits_k = std::min(digits_k, agreeing_digits(medians[0], medians[i]));
    const BigFloat kappa = median(pooled);

    const auto rs = RatioSequence::from_counts(counts, digits);
    const auto amp = amplitude(rs, kappa, cfg.amplitude_depth);

    AsymptoticEstimate cur;
    cur.kappa = kappa;
    cur.amplitude = amp.amplitude;
    cur.stable_digits_kappa = digits_k;
    cur.stable_digits_amplitude = std::min(amp.stable_digits_amplitude, digits_k);
    cur.method = "differential-approximant";
    cur.precision = digits;
    cur.samples = pooled.size();
    const bool settled = best.kappa && cur.stable_digits_kappa == best.stable_digits_kappa &&
                         cur.stable_digits_amplitude == best.stable_digits_amplitude;
    best = cur;
    if (settled || digits_k < precision_cap(digits)) break;
  }
  return best;
}

ReferenceConstants reference_constants(const ClassId& id) {
  static const std::map<std::string, ReferenceConstants> table{
      {"4.I", {"0.9630055289154941756", "1.076344539715227"}},
      {"4.II", {"0.9577180134976572362", "1.137593123292952"}},
      {"4.III", {"0.9561742431150784277", "1.146540529900785"}},
      {"4.IV", {"0.9558503134742499890", "1.100226245067883"}},
      {"4.V", {"0.9548260509498783340", "1.104489004860327"}},
      {"4.VI", {"0.9546118344740519438", "1.103720832998758"}},
      {"4.VII", {"0.9528914233250531974", "1.114556873900595"}},
      {"5.I", {"0.9913880716699268181", "1.0359338947290985"}},
      {"5.II", {"0.9914185408600983479", "1.0356740409503498"}},
      {"5.III", {"0.9914215726255505158", "1.0356482525747201"}},
      {"5.IV", {"0.9914637023566386736", "1.0352912840051055"}},
      {"5.V", {"0.9914787346349870644", "1.0351640090771068"}},
      {"5.VI", {"0.9914031046134865367", "1.0358339838201155"}},
      {"5.VII", {"0.9914152799149738845", "1.0357301469691008"}},
      {"5.VIII", {"0.9914455405535310693", "1.0354727912203914"}},
      {"5.IX", {"0.9914486888810151958", "1.0354456527948576"}},
      {"5.X", {"0.9914905951981662739", "1.0350913714694614"}},
      {"5.XI", {"0.9914573454495660358", "1.0354283564589345"}},
      {"5.XII", {"0.9914991759877895239", "1.0350742999782649"}},
      {"5.XIII", {"0.9915021807789432127", "1.0350488441916296"}},
      {"5.XIV", {"0.9915430268589110657", "1.0347070291236631"}},
      {"5.XV", {"0.9914961218699849309", "1.0351275914657668"}},
      {"5.XVI", {"0.9914962152197285242", "1.0351265076491731"}},
      {"5.XVII", {"0.9915702712612490911", "1.0345028067355504"}},
      {"5.XVIII", {"0.9915374435675450185", "1.0348337036858431"}},
      {"5.XIX", {"0.9915491202315941687", "1.0347354953793692"}},
      {"5.XX", {"0.9915807073163505786", "1.0344726469008412"}},
      {"5.XXI", {"0.9916208625283576837", "1.0341385793668625"}},
      {"5.XXII", {"0.9916009188510841597", "1.0345693190404323"}},
      {"5.XXIII", {"0.9916298962721992117", "1.0343256965190087"}},
      {"5.XXIV", {"0.9918325187738895504", "1.0330524632572689"}},
      {"5.XXV", {"0.9928637443921790385", "1.0280679375675015"}},
  };
  auto it = table.find(id.str());
  if (it == table.end()) fail(ErrorKind::invalid_class, "no reference constants for " + id.str());
  return it->second;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "class,kappa,kappa_digits,amplitude,amplitude_digits,method,precision,samples\n";
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    os << row.id.str() << ',' << (e.kappa ? format_decimal(*e.kappa, std::max(e.stable_digits_kappa, 1) + 2) : "")
       << ',' << e.stable_digits_kappa << ','
       << (e.amplitude ? format_decimal(*e.amplitude, std::max(e.stable_digits_amplitude, 1) + 2) : "") << ','
       << e.stable_digits_amplitude << ',' << e.method << ',' << e.precision << ',' << e.samples << '\n';
  }
  return os.str();
}

nlohmann::json growth_json(const std::vector<GrowthRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    nlohmann::json j{{"class", row.id.str()},
                     {"kappa_digits", e.stable_digits_kappa},
                     {"amplitude_digits", e.stable_digits_amplitude},
                     {"method", e.method},
                     {"precision", e.precision},
                     {"samples", e.samples}};
    j["kappa"] = e.kappa ? format_decimal(*e.kappa, std::max(e.stable_digits_kappa, 1) + 2) : "";
    j["amplitude"] = e.amplitude ? format_decimal(*e.amplitude, std::max(e.stable_digits_amplitude, 1) + 2) : "";
    arr.push_back(std::move(j));
  }
  return {{"kind", "growth-table"}, {"rows", arr}};
}

}  // namespace cpap
