// Command-line front end: constant evaluation, inequality margin checks,
// asymptotics tables, optimal-scale reports and parameter sweeps, all
// emitted as deterministic CSV.
//
// Exit codes: 0 = all checks pass, 1 = an inequality margin violated its
// tolerance, 2 = parameter-domain error (including usage errors).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclog/constants.hpp"
#include "fraclog/csv.hpp"
#include "fraclog/extremals.hpp"
#include "fraclog/functionals.hpp"
#include "fraclog/inequalities.hpp"
#include "fraclog/parallel.hpp"

namespace {

using namespace fraclog;

constexpr int kExitPass = 0;
constexpr int kExitMarginFailure = 1;
constexpr int kExitDomainError = 2;

struct GlobalOpts {
  std::string csv_path;
  std::size_t nodes = 512;
  std::size_t grid_n = 256;
  double half_width = 8.0;
  std::uint64_t seed = 1;
  double tolerance_scale = 1.0;
};

// Buffers every row, then writes stdout and the optional --csv file with
// identical bytes.
class CsvSink {
 public:
  void line(std::string s) { rows_.push_back(std::move(s)); }

  void flush(const std::string& path) const {
    for (const auto& r : rows_) std::cout << r << '\n';
    if (!path.empty()) {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open csv output " + path);
      for (const auto& r : rows_) out << r << '\n';
    }
  }

 private:
  std::vector<std::string> rows_;
};

std::string fd(double v) { return format_double(v); }

// "seed=7,count=20" -> (7, 20)
std::pair<std::uint64_t, int> parse_corpus(const std::string& spec) {
  std::uint64_t seed = 1;
  int count = 1;
  bool saw_seed = false, saw_count = false;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("corpus spec must look like seed=7,count=20");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "seed") {
      seed = std::stoull(val);
      saw_seed = true;
    } else if (key == "count") {
      count = std::stoi(val);
      saw_count = true;
    } else {
      throw std::domain_error("unknown corpus key '" + key + "'");
    }
  }
  if (!saw_seed || !saw_count)
    throw std::domain_error("corpus spec must name both seed and count");
  if (count < 1) throw std::domain_error("corpus count must be >= 1");
  return {seed, count};
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

// One evaluated inequality instance destined for a CSV row.
struct Case {
  std::string params;
  MarginReport report;
};

struct VerifyResult {
  std::vector<Case> cases;
};

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string id;
  bool gaussian = false;
  bool extremal = false;
  std::string corpus;
  int d = 2;
  int n = 3;
  double s = 0.5;
  double a = 1.0;
  double a0 = 0.0;  // 0 = follow a
  double p = 2.0;
  double q = 3.0;
  double eps = 1.0;
  double c = 1.0;
  double x = 2.0;
  double b = M_E;
  int scan = 0;
};

std::string kv(const char* k, const std::string& v) {
  return std::string(k) + "=" + v;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ';';
    out += part;
  }
  return out;
}

VerifyResult run_verify(const GlobalOpts& g, const VerifyOpts& v) {
  VerifyResult res;
  const double field_scale = v.a0 > 0.0 ? v.a0 : v.a;

  if (v.id == "lieb-loss") {
    if (!v.corpus.empty()) {
      const auto [seed, count] = parse_corpus(v.corpus);
      res.cases.resize(static_cast<std::size_t>(count));
      parallel_for(res.cases.size(), [&](std::size_t i) {
        const auto field = random_mixture(seed + i, v.d, 3, g.half_width, g.grid_n);
        res.cases[i] = {join({kv("seed", std::to_string(seed + i)),
                              kv("d", std::to_string(v.d)), kv("a", fd(v.a))}),
                        lieb_loss_margin(field, v.a)};
      });
    } else {
      const auto gauss = gaussian_radial(v.n, field_scale, g.nodes);
      res.cases.push_back({join({kv("n", std::to_string(v.n)), kv("a", fd(v.a)),
                                 kv("a0", fd(field_scale))}),
                           lieb_loss_margin(gauss.profile, v.a)});
    }
    return res;
  }

  if (v.id == "theorem1") {
    std::vector<GridField> fields;
    std::vector<std::string> tags;
    if (!v.corpus.empty()) {
      const auto [seed, count] = parse_corpus(v.corpus);
      for (int i = 0; i < count; ++i) {
        fields.push_back(random_mixture(seed + static_cast<std::uint64_t>(i),
                                        v.d, 3, g.half_width, g.grid_n));
        tags.push_back(kv("seed", std::to_string(seed + i)));
      }
    } else {
      fields.push_back(gaussian_grid(v.d, field_scale, g.half_width, g.grid_n).field);
      tags.push_back(kv("gaussian_a0", fd(field_scale)));
    }
    res.cases.resize(fields.size());
    parallel_for(fields.size(), [&](std::size_t i) {
      res.cases[i] = {join({tags[i], kv("d", std::to_string(v.d)), kv("s", fd(v.s)),
                            kv("a", fd(v.a))}),
                      theorem1_margin(fields[i], v.s, v.a)};
    });
    return res;
  }

  if (v.id == "sobolev") {
    std::vector<GridField> fields;
    std::vector<std::string> tags;
    if (v.extremal) {
      fields.push_back(aubin_talenti_grid(v.d, v.s, v.c, g.half_width, g.grid_n));
      tags.push_back(kv("family", "aubin-talenti"));
    } else if (!v.corpus.empty()) {
      const auto [seed, count] = parse_corpus(v.corpus);
      for (int i = 0; i < count; ++i) {
        fields.push_back(random_mixture(seed + static_cast<std::uint64_t>(i),
                                        v.d, 3, g.half_width, g.grid_n));
        tags.push_back(kv("seed", std::to_string(seed + i)));
      }
    } else {
      fields.push_back(gaussian_grid(v.d, field_scale, g.half_width, g.grid_n).field);
      tags.push_back(kv("family", "gaussian"));
    }
    res.cases.resize(fields.size());
    parallel_for(fields.size(), [&](std::size_t i) {
      res.cases[i] = {join({tags[i], kv("d", std::to_string(v.d)), kv("s", fd(v.s))}),
                      sobolev_margin(fields[i], v.s)};
    });
    return res;
  }

  if (v.id == "sobolev-radial") {
    RadialProfile profile = v.gaussian
        ? gaussian_radial(v.n, field_scale, g.nodes).profile
        : aubin_talenti_radial(v.n, 1.0, v.c, g.nodes);
    res.cases.push_back({join({kv("n", std::to_string(v.n)),
                               kv("family", v.gaussian ? "gaussian" : "aubin-talenti")}),
                         sobolev_margin_radial_s1(profile)});
    return res;
  }

  if (v.id == "gns") {
    std::vector<RadialProfile> profiles;
    std::vector<std::string> tags;
    if (v.gaussian) {
      profiles.push_back(gaussian_radial(v.n, field_scale, g.nodes).profile);
      tags.push_back(kv("family", "gaussian"));
    } else if (!v.corpus.empty()) {
      const auto [seed, count] = parse_corpus(v.corpus);
      for (int i = 0; i < count; ++i) {
        profiles.push_back(random_radial_mixture(seed + static_cast<std::uint64_t>(i),
                                                 v.n, 3, g.nodes));
        tags.push_back(kv("seed", std::to_string(seed + i)));
      }
    } else {
      profiles.push_back(gns_extremal(v.n, v.p, v.q, v.c, g.nodes));
      tags.push_back(kv("family", "extremal"));
    }
    res.cases.resize(profiles.size());
    parallel_for(profiles.size(), [&](std::size_t i) {
      res.cases[i] = {join({tags[i], kv("n", std::to_string(v.n)), kv("p", fd(v.p)),
                            kv("q", fd(v.q))}),
                      gns_margin(profiles[i], v.p, v.q)};
    });
    return res;
  }

  if (v.id == "theorem2") {
    std::vector<RadialProfile> profiles;
    std::vector<std::string> tags;
    if (v.extremal) {
      profiles.push_back(gns_extremal(v.n, v.p, v.q, v.c, g.nodes));
      tags.push_back(kv("family", "extremal"));
    } else {
      const auto [seed, count] = v.corpus.empty()
          ? std::pair<std::uint64_t, int>{g.seed, 1}
          : parse_corpus(v.corpus);
      for (int i = 0; i < count; ++i) {
        profiles.push_back(random_radial_mixture(seed + static_cast<std::uint64_t>(i),
                                                 v.n, 3, g.nodes));
        tags.push_back(kv("seed", std::to_string(seed + i)));
      }
    }
    res.cases.resize(profiles.size());
    parallel_for(profiles.size(), [&](std::size_t i) {
      res.cases[i] = {join({tags[i], kv("n", std::to_string(v.n)), kv("p", fd(v.p)),
                            kv("q", fd(v.q)), kv("a", fd(v.a))}),
                      theorem2_margin(profiles[i], v.p, v.q, v.a)};
    });
    return res;
  }

  if (v.id == "interpolation") {
    const auto [seed, count] = v.corpus.empty()
        ? std::pair<std::uint64_t, int>{g.seed, 1}
        : parse_corpus(v.corpus);
    res.cases.resize(static_cast<std::size_t>(count));
    parallel_for(res.cases.size(), [&](std::size_t i) {
      const auto field = random_mixture(seed + i, v.d, 3, g.half_width, g.grid_n);
      res.cases[i] = {join({kv("seed", std::to_string(seed + i)),
                            kv("d", std::to_string(v.d)), kv("q", fd(v.q)),
                            kv("eps", fd(v.eps))}),
                      entropy_interpolation_check(field, v.q, v.eps)};
    });
    return res;
  }

  if (v.id == "logbound") {
    if (v.scan > 0) {
      const int k = v.scan;
      res.cases.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
      parallel_for(res.cases.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / k + 1;
        const int j = static_cast<int>(idx) % k + 1;
        const double x = 10.0 * i / k;
        const double b = 10.0 * j / k;
        res.cases[idx] = {join({kv("x", fd(x)), kv("b", fd(b))}),
                          log_linear_bound_check(x, b)};
      });
    } else {
      res.cases.push_back({join({kv("x", fd(v.x)), kv("b", fd(v.b))}),
                           log_linear_bound_check(v.x, v.b)});
    }
    return res;
  }

  throw std::domain_error("unknown inequality id '" + v.id + "'");
}

int emit_verify(const GlobalOpts& g, const VerifyOpts& v) {
  const VerifyResult res = run_verify(g, v);
  CsvSink sink;
  sink.line(kMarginCsvHeader);
  bool violated = false;
  for (const auto& c : res.cases) {
    const double tol = v.id == "logbound"
        ? g.tolerance_scale * 1e-12 * std::max(1.0, std::abs(c.report.rhs))
        : margin_tolerance(c.report, g.tolerance_scale);
    if (c.report.margin() < -tol) violated = true;
    sink.line(margin_csv_row(v.id, c.params, c.report));
  }
  sink.flush(g.csv_path);
  return violated ? kExitMarginFailure : kExitPass;
}

// ---------------------------------------------------------------------------
// constants

int emit_constants(const GlobalOpts& g, int n, std::optional<double> s,
                   std::optional<double> p, std::optional<double> q) {
  CsvSink sink;
  if (s.has_value()) {
    sink.line("n,s,constant,asymptotic,ratio");
    const double c = sobolev_constant(n, *s);
    const double asym = asymptotic_constant(n, *s);
    sink.line(std::to_string(n) + "," + fd(*s) + "," + fd(c) + "," + fd(asym) +
              "," + fd(c / asym));
  } else if (p.has_value() && q.has_value()) {
    const GnsParams e = gns_exponents(n, *p, *q);
    sink.line("n,p,q,r,theta,delta,constant");
    sink.line(std::to_string(n) + "," + fd(*p) + "," + fd(*q) + "," + fd(e.r) +
              "," + fd(e.theta) + "," + fd(e.delta) + "," +
              fd(gns_constant(n, *p, *q)));
  } else {
    throw std::domain_error("constants needs either --s or both --p and --q");
  }
  sink.flush(g.csv_path);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// asymptotics

int emit_asymptotics(const GlobalOpts& g, double s, const std::string& n_list) {
  CsvSink sink;
  sink.line("n,constant,asymptotic,ratio,rhs_factor,rhs_factor_times_pi");
  std::vector<long long> ns;
  if (!n_list.empty()) {
    std::stringstream ss(n_list);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoll(item));
  }
  std::vector<std::string> rows(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const long long n = ns[i];
    if (n > std::numeric_limits<int>::max())
      throw std::domain_error("n out of range");
    const double c = sobolev_constant(static_cast<int>(n), s);
    const double asym = asymptotic_constant(static_cast<int>(n), s);
    // RHS factor of the fractional inequality per unit a^2; for s = 1 its
    // product with pi approaches the sharp classical factor 1/pi * pi = 1.
    const double rhs_factor = static_cast<double>(n) * M_E / (2.0 * s) * c;
    std::string row = std::to_string(n) + "," + fd(c) + "," + fd(asym) + "," +
                      fd(c / asym) + "," + fd(rhs_factor) + ",";
    if (s == 1.0) row += fd(rhs_factor * M_PI);
    rows[i] = std::move(row);
  });
  for (auto& r : rows) sink.line(std::move(r));
  sink.flush(g.csv_path);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// optimal-a

struct OptimalAOpts {
  std::string id;
  bool gaussian = true;
  std::string corpus;
  int n = 3;
  int d = 2;
  double s = 0.5;
  double a0 = 2.0;
};

int emit_optimal_a(const GlobalOpts& g, const OptimalAOpts& o) {
  if (o.id != "lieb-loss" && o.id != "theorem1")
    throw std::domain_error("optimal-a supports only lieb-loss and theorem1");

  struct Entry {
    std::string tag;
    int dim;
    double l2sq, energy;  // energy = gradsq (lieb-loss) or fracsq (theorem1)
    std::function<double(double)> margin_at;
  };
  std::vector<Entry> entries;

  auto add_grid = [&](const GridField& field, std::string tag) {
    const double l2 = lp_norm(field, 2.0);
    if (!(l2 > 0.0)) throw std::domain_error("field has zero L^2 norm");
    Entry e;
    e.tag = std::move(tag);
    e.dim = field.dim();
    e.l2sq = l2 * l2;
    if (o.id == "lieb-loss") {
      e.energy = frac_half_norm_sq(field, 1.0);
      e.margin_at = [field](double a) { return lieb_loss_margin(field, a).margin(); };
    } else {
      e.energy = frac_half_norm_sq(field, o.s);
      const double s = o.s;
      e.margin_at = [field, s](double a) { return theorem1_margin(field, s, a).margin(); };
    }
    entries.push_back(std::move(e));
  };

  if (!o.corpus.empty()) {
    const auto [seed, count] = parse_corpus(o.corpus);
    for (int i = 0; i < count; ++i)
      add_grid(random_mixture(seed + static_cast<std::uint64_t>(i), o.d, 3,
                              g.half_width, g.grid_n),
               kv("seed", std::to_string(seed + i)));
  } else if (o.id == "lieb-loss") {
    const auto gauss = gaussian_radial(o.n, o.a0, g.nodes);
    Entry e;
    e.tag = join({kv("family", "gaussian"), kv("a0", fd(o.a0)),
                  kv("n", std::to_string(o.n))});
    e.dim = o.n;
    const double l2 = lp_norm(gauss.profile, 2.0);
    if (!(l2 > 0.0)) throw std::domain_error("field has zero L^2 norm");
    e.l2sq = l2 * l2;
    e.energy = gradient_norm_pow(gauss.profile, 2.0);
    const RadialProfile profile = gauss.profile;
    e.margin_at = [profile](double a) { return lieb_loss_margin(profile, a).margin(); };
    entries.push_back(std::move(e));
  } else {
    add_grid(gaussian_grid(o.d, o.a0, g.half_width, g.grid_n).field,
             join({kv("family", "gaussian"), kv("a0", fd(o.a0))}));
  }

  CsvSink sink;
  sink.line("field,quantity,a,margin");
  bool violated = false;
  for (const auto& e : entries) {
    const double a_star = o.id == "lieb-loss"
        ? optimal_a_lieb_loss(e.l2sq, e.energy, e.dim)
        : optimal_a_theorem1(e.l2sq, e.energy, e.dim, o.s);
    const double m_star = e.margin_at(a_star);
    sink.line(e.tag + ",optimum," + fd(a_star) + "," + fd(m_star));
    double bracket_min = std::numeric_limits<double>::infinity();
    for (int k = -4; k <= 4; ++k) {
      const double a = a_star * std::pow(2.0, 0.5 * k);
      const double m = e.margin_at(a);
      if (k != 0) bracket_min = std::min(bracket_min, m);
      sink.line(e.tag + ",bracket," + fd(a) + "," + fd(m));
    }
    if (m_star > bracket_min + 1e-9 * (1.0 + std::abs(bracket_min)))
      violated = true;
  }
  sink.flush(g.csv_path);
  return violated ? kExitMarginFailure : kExitPass;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
  std::string var;
  std::string values;
  double start = 0.0, stop = 0.0;
  int count = 0;
  bool log_spacing = false;
  std::string what = "constants";
  std::string inequality = "theorem1";
  bool extremal = false;
  int n = 3;
  int d = 2;
  double s = 1.0;
  double a = 1.0;
  double p = 2.0;
  double q = 3.0;
};

std::vector<double> sweep_values(const SweepOpts& o) {
  if (!o.values.empty()) return parse_double_list(o.values);
  if (o.count < 1)
    throw std::domain_error("sweep needs --values or --start/--stop/--count");
  std::vector<double> vals(static_cast<std::size_t>(o.count));
  if (o.count == 1) {
    vals[0] = o.start;
    return vals;
  }
  if (o.log_spacing) {
    if (!(o.start > 0.0) || !(o.stop > 0.0))
      throw std::domain_error("log spacing needs positive start/stop");
    const double step = (std::log(o.stop) - std::log(o.start)) / (o.count - 1);
    for (int i = 0; i < o.count; ++i)
      vals[static_cast<std::size_t>(i)] = std::exp(std::log(o.start) + step * i);
  } else {
    const double step = (o.stop - o.start) / (o.count - 1);
    for (int i = 0; i < o.count; ++i)
      vals[static_cast<std::size_t>(i)] = o.start + step * i;
  }
  return vals;
}

int emit_sweep(const GlobalOpts& g, const SweepOpts& o) {
  static const std::vector<std::string> kVars = {"n", "s", "a", "p", "q", "resolution"};
  if (std::find(kVars.begin(), kVars.end(), o.var) == kVars.end())
    throw std::domain_error("sweep variable must be one of n,s,a,p,q,resolution");
  const std::vector<double> vals = sweep_values(o);

  CsvSink sink;
  std::vector<std::string> rows(vals.size());
  std::atomic<bool> violated{false};

  auto scrub = [](std::string msg) {
    for (auto& ch : msg)
      if (ch == ',' || ch == '\n') ch = ';';
    return msg;
  };

  if (o.what == "constants") {
    const bool gns_family = o.var == "p" || o.var == "q";
    sink.line(gns_family ? "n,p,q,r,theta,delta,constant,skipped"
                         : "n,s,constant,asymptotic,ratio,skipped");
    parallel_for(vals.size(), [&](std::size_t i) {
      int n = o.n;
      double s = o.s, p = o.p, q = o.q;
      if (o.var == "n")
        n = static_cast<int>(std::llround(vals[i]));
      else if (o.var == "s")
        s = vals[i];
      else if (o.var == "p")
        p = vals[i];
      else if (o.var == "q")
        q = vals[i];
      else
        throw std::domain_error("constants sweep supports variables n,s,p,q");
      try {
        if (gns_family) {
          const GnsParams e = gns_exponents(n, p, q);
          rows[i] = std::to_string(n) + "," + fd(p) + "," + fd(q) + "," + fd(e.r) +
                    "," + fd(e.theta) + "," + fd(e.delta) + "," +
                    fd(gns_constant(n, p, q)) + ",";
        } else {
          const double c = sobolev_constant(n, s);
          const double asym = asymptotic_constant(n, s);
          rows[i] = std::to_string(n) + "," + fd(s) + "," + fd(c) + "," + fd(asym) +
                    "," + fd(c / asym) + ",";
        }
      } catch (const std::domain_error& err) {
        rows[i] = (gns_family
                       ? std::to_string(n) + "," + fd(p) + "," + fd(q) + ",,,,,"
                       : std::to_string(n) + "," + fd(s) + ",,,,") +
                  scrub(err.what());
      }
    });
  } else if (o.what == "margin") {
    sink.line(std::string(kMarginCsvHeader) + ",skipped");
    parallel_for(vals.size(), [&](std::size_t i) {
      int n = o.n, d = o.d;
      double s = o.s, a = o.a, p = o.p, q = o.q;
      std::size_t nodes = g.nodes, grid_n = g.grid_n;
      if (o.var == "n")
        n = static_cast<int>(std::llround(vals[i]));
      else if (o.var == "s")
        s = vals[i];
      else if (o.var == "a")
        a = vals[i];
      else if (o.var == "p")
        p = vals[i];
      else if (o.var == "q")
        q = vals[i];
      else {
        nodes = static_cast<std::size_t>(std::llround(vals[i]));
        grid_n = nodes;
      }
      try {
        VerifyOpts vo;
        vo.id = o.inequality;
        vo.extremal = o.extremal;
        vo.gaussian = !o.extremal;
        vo.n = n;
        vo.d = d;
        vo.s = s;
        vo.a = a;
        vo.p = p;
        vo.q = q;
        GlobalOpts gi = g;
        gi.nodes = nodes;
        gi.grid_n = grid_n;
        const VerifyResult res = run_verify(gi, vo);
        const Case& c = res.cases.front();
        if (c.report.margin() < -margin_tolerance(c.report, g.tolerance_scale))
          violated = true;
        rows[i] = margin_csv_row(o.inequality, c.params, c.report) + ",";
      } catch (const std::domain_error& err) {
        rows[i] = o.inequality + "," +
                  join({kv(o.var.c_str(), fd(vals[i]))}) + ",,,,,,," +
                  scrub(err.what());
      }
    });
  } else {
    throw std::domain_error("sweep --what must be constants or margin");
  }

  for (auto& r : rows) sink.line(std::move(r));
  sink.flush(g.csv_path);
  return violated ? kExitMarginFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit log-Sobolev constants and inequality margin checks"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--csv", g.csv_path, "also write the CSV output to this path");
  app.add_option("--nodes", g.nodes, "radial quadrature node count")->capture_default_str();
  app.add_option("--grid-n", g.grid_n, "grid points per axis (power of two)")->capture_default_str();
  app.add_option("--half-width", g.half_width, "grid half width L")->capture_default_str();
  app.add_option("--seed", g.seed, "base seed for corpus fields")->capture_default_str();
  app.add_option("--tolerance-scale", g.tolerance_scale, "stretch factor for margin tolerances")->capture_default_str();

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "evaluate C(n,s) or the GNS exponents/constant");
  cmd_constants->fallthrough();
  int cn = 3;
  std::optional<double> cs, cp, cq;
  cmd_constants->add_option("--n", cn, "dimension")->required();
  cmd_constants->add_option("--s", cs, "fractional order");
  cmd_constants->add_option("--p", cp, "gradient exponent");
  cmd_constants->add_option("--q", cq, "integrability exponent");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "evaluate inequality margins and report CSV");
  cmd_verify->fallthrough();
  VerifyOpts vo;
  cmd_verify->add_option("id", vo.id,
                         "one of lieb-loss, theorem1, sobolev, sobolev-radial, gns, theorem2, interpolation, logbound")
      ->required();
  cmd_verify->add_flag("--gaussian", vo.gaussian, "use the Gaussian family");
  cmd_verify->add_flag("--extremal", vo.extremal, "use the extremizer family");
  cmd_verify->add_option("--corpus", vo.corpus, "seeded corpus spec seed=S,count=K");
  cmd_verify->add_option("--d", vo.d, "grid dimension")->capture_default_str();
  cmd_verify->add_option("--n", vo.n, "ambient dimension (radial)")->capture_default_str();
  cmd_verify->add_option("--s", vo.s, "fractional order")->capture_default_str();
  cmd_verify->add_option("--a", vo.a, "inequality scale a")->capture_default_str();
  cmd_verify->add_option("--a0", vo.a0, "field scale (defaults to --a)");
  cmd_verify->add_option("--p", vo.p, "GNS gradient exponent")->capture_default_str();
  cmd_verify->add_option("--q", vo.q, "GNS/entropy exponent")->capture_default_str();
  cmd_verify->add_option("--eps", vo.eps, "interpolation epsilon")->capture_default_str();
  cmd_verify->add_option("--c", vo.c, "extremizer shape parameter")->capture_default_str();
  cmd_verify->add_option("--x", vo.x, "logbound x")->capture_default_str();
  cmd_verify->add_option("--b", vo.b, "logbound b")->capture_default_str();
  cmd_verify->add_option("--scan", vo.scan, "logbound: check a KxK grid over (0,10]^2");

  // asymptotics
  auto* cmd_asym = app.add_subcommand("asymptotics", "table of C(n,s) against its large-n approximant");
  cmd_asym->fallthrough();
  double as = 1.0;
  std::string n_list;
  cmd_asym->add_option("--s", as, "fractional order")->required();
  cmd_asym->add_option("--n-list", n_list, "comma-separated dimensions (may be empty)");

  // optimal-a
  auto* cmd_opt = app.add_subcommand("optimal-a", "closed-form optimal scale with a bracket table");
  cmd_opt->fallthrough();
  OptimalAOpts oo;
  cmd_opt->add_option("id", oo.id, "lieb-loss or theorem1")->required();
  cmd_opt->add_flag("--gaussian", oo.gaussian, "use a Gaussian field");
  cmd_opt->add_option("--corpus", oo.corpus, "seeded corpus spec seed=S,count=K");
  cmd_opt->add_option("--n", oo.n, "Gaussian ambient dimension")->capture_default_str();
  cmd_opt->add_option("--d", oo.d, "grid dimension")->capture_default_str();
  cmd_opt->add_option("--s", oo.s, "fractional order (theorem1)")->capture_default_str();
  cmd_opt->add_option("--a0", oo.a0, "Gaussian field scale")->capture_default_str();

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "sweep one variable, emitting one CSV row per tuple");
  cmd_sweep->fallthrough();
  SweepOpts so;
  cmd_sweep->add_option("--var", so.var, "one of n,s,a,p,q,resolution")->required();
  cmd_sweep->add_option("--values", so.values, "explicit comma-separated values");
  cmd_sweep->add_option("--start", so.start, "range start");
  cmd_sweep->add_option("--stop", so.stop, "range stop");
  cmd_sweep->add_option("--count", so.count, "number of points");
  cmd_sweep->add_flag("--log", so.log_spacing, "log spacing");
  cmd_sweep->add_option("--what", so.what, "constants or margin")->capture_default_str();
  cmd_sweep->add_option("--inequality", so.inequality, "margin sweep inequality id")->capture_default_str();
  cmd_sweep->add_flag("--extremal", so.extremal, "margin sweep on the extremizer family");
  cmd_sweep->add_option("--n", so.n, "dimension")->capture_default_str();
  cmd_sweep->add_option("--d", so.d, "grid dimension")->capture_default_str();
  cmd_sweep->add_option("--s", so.s, "fractional order")->capture_default_str();
  cmd_sweep->add_option("--a", so.a, "inequality scale")->capture_default_str();
  cmd_sweep->add_option("--p", so.p, "GNS p")->capture_default_str();
  cmd_sweep->add_option("--q", so.q, "GNS q")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomainError;
  }

  try {
    if (cmd_constants->parsed()) return emit_constants(g, cn, cs, cp, cq);
    if (cmd_verify->parsed()) return emit_verify(g, vo);
    if (cmd_asym->parsed()) return emit_asymptotics(g, as, n_list);
    if (cmd_opt->parsed()) return emit_optimal_a(g, oo);
    if (cmd_sweep->parsed()) return emit_sweep(g, so);
  } catch (const std::domain_error& err) {
    std::cerr << "domain error: " << err.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitDomainError;
  }
  return kExitDomainError;
}
