// cpap: command-line front end. Exit codes: 0 success, 2 verification failure,
// 3 budget exhausted, 4 bad input or domain error.

#include "acceptance/acceptance.hpp"

#include "cpap/algebraic.hpp"
#include "cpap/asymptotics.hpp"
#include "cpap/brute.hpp"
#include "cpap/class_registry.hpp"
#include "cpap/cluster.hpp"
#include "cpap/dfinite.hpp"
#include "cpap/dp_cache.hpp"
#include "cpap/errors.hpp"
#include "cpap/map_chain.hpp"
#include "cpap/ode.hpp"
#include "cpap/poles.hpp"
#include "cpap/series_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace cpap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::verification:
      return kExitVerification;
    case ErrorKind::budget:
    case ErrorKind::cap_exceeded:
      return kExitBudget;
    default:
      return kExitInput;
  }
}

struct Common {
  std::string cache_dir;
  bool no_cache = false;
  std::string output = "-";
  std::string format = "json";
};

void emit(const Common& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  const fs::path target(c.output);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) fail(ErrorKind::io, "cannot write " + c.output);
    f << text;
  }
  fs::rename(tmp, target);
}

std::unique_ptr<dp::SeriesCache> open_cache(const Common& c) {
  if (c.no_cache) return nullptr;
  return std::make_unique<dp::SeriesCache>(c.cache_dir,
                                           [](const std::string& w) { std::cerr << "warning: " << w << '\n'; });
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_input, path + ": " + e.what());
  }
}

Pattern resolve_pattern(const std::string& pattern, const std::string& cls) {
  if (pattern.empty() == cls.empty()) fail(ErrorKind::invalid_input, "give exactly one of --pattern and --class");
  return pattern.empty() ? canonical_representative(ClassId::parse(cls)) : Pattern::parse(pattern);
}

std::string counts_provenance(const Pattern& p) { return "avoiders:" + p.str(); }

std::string series_csv(const std::vector<std::string>& values) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << i << ',' << values[i] << '\n';
  return os.str();
}

std::string render(const Common& c, const CountSeries& s) {
  if (c.format == "csv") {
    std::vector<std::string> v;
    for (const auto& x : s.counts) v.push_back(to_string(x));
    return series_csv(v);
  }
  return dump(to_json(s));
}

std::string render(const Common& c, const TruncatedSeries& s, const std::string& provenance) {
  if (c.format == "csv") {
    std::vector<std::string> v;
    for (const auto& x : s.coeffs()) v.push_back(to_string(x));
    return series_csv(v);
  }
  return dump(to_json(s, provenance));
}

unsigned precision_from_env(unsigned fallback) {
  if (const char* p = std::getenv("CPAP_PRECISION")) {
    try {
      const int v = std::stoi(p);
      if (v >= 20 && v <= 2000) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    fail(ErrorKind::invalid_input, "CPAP_PRECISION must be an integer in [20, 2000]");
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consecutive-pattern avoidance: enumeration, clusters and analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  const char* env_cache = std::getenv("CPAP_CACHE_DIR");
  common.cache_dir = env_cache ? env_cache : ".cpap-cache";
  app.add_option("--cache-dir", common.cache_dir, "Series cache directory (env CPAP_CACHE_DIR)");
  app.add_flag("--no-cache", common.no_cache, "Do not read or write the cache");
  app.add_option("-o,--output", common.output, "Output file, '-' for stdout");
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // enumerate
  std::string pattern, cls, algorithm = "dp";
  unsigned n = 20, threads = 1;
  double memory_gib = 3.0;
  auto* enumerate = app.add_subcommand("enumerate", "Count avoiders c_0..c_N");
  enumerate->add_option("--pattern", pattern, "Consecutive pattern, e.g. 1423");
  enumerate->add_option("--class", cls, "Class label, e.g. 4.V (uses its least listed pattern)");
  enumerate->add_option("-n,--n", n, "Largest length N")->required();
  enumerate->add_option("--algorithm", algorithm)->check(CLI::IsMember({"dp", "brute"}));
  enumerate->add_option("--threads", threads, "Worker threads for the dp engine");
  enumerate->add_option("--memory-gib", memory_gib, "Per-worker table budget for the dp engine");

  // clusters
  std::string family, cl_class;
  unsigned cl_n = 20;
  bool cl_signed = false, cl_counts = false;
  auto* clusters_cmd = app.add_subcommand("clusters", "Cluster numbers s(n,k) from a recurrence");
  clusters_cmd->add_option("--family", family, "onem:M, general:M:C, tree:M, 14523 or 15243");
  clusters_cmd->add_option("--class", cl_class, "Class label with a cluster recurrence");
  clusters_cmd->add_option("-n,--n", cl_n)->required();
  clusters_cmd->add_flag("--signed", cl_signed, "Emit the signed sums t_n as a series");
  clusters_cmd->add_flag("--counts", cl_counts, "Emit the avoider counts obtained by inversion");

  // iterate
  int it_m = 4;
  unsigned it_n = 20;
  auto* iterate = app.add_subcommand("iterate", "Cluster series from the iterated map solution");
  iterate->add_option("--m", it_m)->required();
  iterate->add_option("-n,--n", it_n)->required();

  // poles
  int pm = 4, depth = 3;
  bool all_branches = false;
  auto* poles = app.add_subcommand("poles", "Pole chain of the iterated solution (CSV)");
  poles->add_option("--m", pm);
  poles->add_option("--depth", depth)->required();
  poles->add_flag("--all", all_branches, "Every branch instead of the principal chain");

  // v
  unsigned v_digits = 30;
  auto* vcmd = app.add_subcommand("v", "The constant v");
  vcmd->add_option("--digits", v_digits);

  // ode
  auto* ode = app.add_subcommand("ode", "Linear ODEs: solve printed ODEs or fit one to a series");
  ode->require_subcommand(1);
  ode->fallthrough();
  std::string ode_class, ode_family;
  unsigned ode_n = 30;
  auto* solve = ode->add_subcommand("solve", "Series solution of a printed ODE");
  solve->add_option("--class", ode_class);
  solve->add_option("--family", ode_family, "increasing:M or a:M:A");
  solve->add_option("-n,--n", ode_n)->required();
  bool show_ode = false;
  solve->add_flag("--show", show_ode, "Emit the ODE itself instead of its solution");
  std::string fit_input;
  int fit_order = 4, fit_degree = 4;
  std::size_t fit_holdout = 10;
  auto* fit = ode->add_subcommand("fit", "Guess a linear ODE for a series file");
  fit->add_option("--input", fit_input)->required();
  fit->add_option("--max-order", fit_order);
  fit->add_option("--max-degree", fit_degree);
  fit->add_option("--holdout", fit_holdout);

  // reciprocal
  std::string rec_input;
  auto* reciprocal = app.add_subcommand("reciprocal", "Counts n! [x^n] 1/y for a series y");
  reciprocal->add_option("--input", rec_input)->required();

  // algverify
  int av_m = 5;
  std::string av_input, av_source = "clusters";
  unsigned av_n = 60;
  auto* algverify = app.add_subcommand("algverify", "Substitute a T-series into a printed algebraic witness");
  algverify->add_option("--m", av_m);
  algverify->add_option("--input", av_input, "Series file (otherwise built from --source)");
  algverify->add_option("--source", av_source)->check(CLI::IsMember({"clusters", "hypergeometric"}));
  algverify->add_option("-n,--n", av_n);

  // asymptotics
  std::string as_class, as_pattern, method = "da";
  unsigned as_n = 0;
  unsigned as_digits = 50;
  auto* asymptotics = app.add_subcommand("asymptotics", "Growth constant and amplitude estimates");
  asymptotics->add_option("--class", as_class, "Class label, or 'all'");
  asymptotics->add_option("--pattern", as_pattern);
  asymptotics->add_option("-n,--n", as_n, "Series length (default 80 for length 4, 70 otherwise)");
  asymptotics->add_option("--method", method)->check(CLI::IsMember({"da", "ratio"}));
  asymptotics->add_option("--digits", as_digits, "Starting precision (env CPAP_PRECISION)");

  // verify-all
  bool quick = false, verbose = false;
  std::string report_path;
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_flag("--quick", quick, "Reduced sizes");
  verify->add_flag("-v,--verbose", verbose);
  verify->add_option("--report", report_path, "Write a JSON report here");
  verify->add_option("--only", only, "Criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*enumerate) {
      const Pattern p = resolve_pattern(pattern, cls);
      CountSeries s;
      if (algorithm == "brute") {
        for (unsigned k = 0; k <= n; ++k) s.counts.push_back(brute_count(p, k));
      } else {
        dp::DpOptions opt;
        opt.threads = std::max(1u, threads);
        opt.memory_budget = static_cast<std::size_t>(memory_gib * double(std::size_t{1} << 30U));
        auto cache = open_cache(common);
        try {
          s = dp::cached_count_series(p, n, cache.get(), opt);
        } catch (const dp::BudgetExceeded& e) {
          auto partial = e.partial();
          partial.provenance = counts_provenance(p);
          auto doc = to_json(partial);
          doc["partial"] = true;
          doc["requested_order"] = n;
          emit(common, dump(doc));
          std::cerr << "budget: " << e.what() << '\n';
          return kExitBudget;
        }
      }
      s.provenance = counts_provenance(p);
      emit(common, render(common, s));
    } else if (*clusters_cmd) {
      if (family.empty() == cl_class.empty()) fail(ErrorKind::invalid_input, "give exactly one of --family and --class");
      OverlapFamily f;
      if (!family.empty()) {
        f = OverlapFamily::parse(family);
      } else {
        auto found = family_for_class(ClassId::parse(cl_class));
        if (!found) fail(ErrorKind::no_known_equation, "no cluster recurrence for class " + cl_class);
        f = *found;
      }
      const auto table = clusters(f, cl_n);
      if (cl_counts) {
        auto c = gj_invert(signed_sum(table), cl_n);
        c.provenance = counts_provenance(f.representative());
        emit(common, render(common, c));
      } else if (cl_signed) {
        emit(common, render(common, signed_sum(table).ogf(), "clusters:" + f.str()));
      } else {
        std::ostringstream os;
        table.write_csv(os);
        emit(common, os.str());
      }
    } else if (*iterate) {
      emit(common, render(common, iterate_T(it_m, it_n).ogf(), "iterate:m=" + std::to_string(it_m)));
    } else if (*poles) {
      std::ostringstream os;
      pole_chain(pm, depth, all_branches ? PoleMode::all : PoleMode::single).write_csv(os);
      emit(common, os.str());
    } else if (*vcmd) {
      PrecisionScope scope(v_digits + 10);
      emit(common, format_decimal(v_constant(v_digits), static_cast<int>(v_digits)) + "\n");
    } else if (*solve) {
      LinearODE eq;
      if (ode_class.empty() == ode_family.empty()) fail(ErrorKind::invalid_input, "give exactly one of --class and --family");
      if (!ode_class.empty()) {
        eq = ode_library(ClassId::parse(ode_class));
      } else {
        int m = 0, a = 0;
        char sep = 0;
        std::istringstream in(ode_family.substr(ode_family.find(':') + 1));
        if (ode_family.rfind("increasing:", 0) == 0 && (in >> m) && in.eof()) {
          eq = increasing_family_ode(m);
        } else if (ode_family.rfind("a:", 0) == 0 && (in >> m >> sep >> a) && sep == ':' && in.eof()) {
          eq = a_family_ode(m, a);
        } else {
          fail(ErrorKind::invalid_input, "unknown ODE family '" + ode_family + "'");
        }
      }
      if (show_ode)
        emit(common, dump(to_json(eq)));
      else
        emit(common, render(common, ode_series_solve(eq, ode_n), "ode:" + eq.name));
    } else if (*fit) {
      const auto series = truncated_series_from_json(read_json(fit_input));
      FitOptions opt;
      opt.holdout = fit_holdout;
      const auto found = dfinite_fit(series, fit_order, fit_degree, opt);
      if (found)
        emit(common, dump(to_json(*found)));
      else
        emit(common, dump(nlohmann::json{{"kind", "none"},
                                         {"max_order", fit_order},
                                         {"max_degree", fit_degree},
                                         {"order", series.order()}}));
    } else if (*reciprocal) {
      const auto y = truncated_series_from_json(read_json(rec_input));
      emit(common, render(common, counts_from_egf(ps_reciprocal(y), "reciprocal")));
    } else if (*algverify) {
      TruncatedSeries T;
      std::string source;
      if (!av_input.empty()) {
        T = truncated_series_from_json(read_json(av_input));
        source = av_input;
      } else if (av_source == "hypergeometric") {
        T = hypergeometric_T(av_m, av_n);
        source = "hypergeometric";
      } else {
        T = signed_sum(clusters_tree(av_m, av_n)).ogf();
        source = "clusters";
      }
      const auto check = algebraic_verify(tree_witness(av_m), T);
      emit(common, dump(nlohmann::json{{"kind", "algebraic-check"},
                                       {"witness", tree_witness(av_m).name},
                                       {"source", source},
                                       {"order", check.order},
                                       {"valuation", check.valuation},
                                       {"passed", check.passed()}}));
      if (!check.passed()) return kExitVerification;
    } else if (*asymptotics) {
      std::vector<std::pair<ClassId, Pattern>> targets;
      if (!as_pattern.empty() && !as_class.empty()) fail(ErrorKind::invalid_input, "give one of --class and --pattern");
      if (as_class == "all") {
        for (const auto& id : all_classes()) targets.emplace_back(id, canonical_representative(id));
      } else if (!as_class.empty()) {
        const auto id = ClassId::parse(as_class);
        targets.emplace_back(id, canonical_representative(id));
      } else if (!as_pattern.empty()) {
        const auto p = Pattern::parse(as_pattern);
        const auto ids = classes_containing(p);
        if (ids.empty()) fail(ErrorKind::invalid_input, "pattern " + p.str() + " is not in a listed class");
        targets.emplace_back(ids.front(), p);
      } else {
        fail(ErrorKind::invalid_input, "give --class or --pattern");
      }
      auto cache = open_cache(common);
      AsymptoticsConfig cfg;
      cfg.digits = precision_from_env(as_digits);
      cfg.max_digits = std::max(cfg.max_digits, cfg.digits);
      std::vector<GrowthRow> rows;
      for (const auto& [id, p] : targets) {
        const unsigned N = as_n ? as_n : (p.length() == 4 ? 80 : 70);
        const auto counts = dp::cached_count_series(p, N, cache.get());
        AsymptoticEstimate e;
        if (method == "ratio") {
          const auto rs = RatioSequence::from_counts(counts, cfg.digits);
          e = ratio_extrapolate(rs, cfg.ratio_depth);
          const auto amp = amplitude(rs, *e.kappa, cfg.amplitude_depth);
          e.amplitude = amp.amplitude;
          e.stable_digits_amplitude = std::min(amp.stable_digits_amplitude, e.stable_digits_kappa);
        } else {
          e = estimate_growth(counts, cfg);
        }
        rows.push_back({id, e});
      }
      emit(common, common.format == "csv" ? growth_csv(rows) : dump(growth_json(rows)));
    } else if (*verify) {
      acceptance::Settings settings;
      settings.profile = quick ? acceptance::Profile::quick : acceptance::Profile::full;
      if (!common.no_cache) settings.cache_dir = common.cache_dir;
      settings.only.insert(only.begin(), only.end());
      const auto results = acceptance::run(settings, std::cout, verbose);
      const auto doc = acceptance::report(results, settings);
      if (!report_path.empty()) {
        Common out = common;
        out.output = report_path;
        emit(out, dump(doc));
      }
      return doc["passed"].get<bool>() ? kExitOk : kExitVerification;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
