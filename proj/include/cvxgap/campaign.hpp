#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvxgap/bounds.hpp"
#include "cvxgap/convex_function.hpp"
#include "cvxgap/enclosure.hpp"
#include "cvxgap/errors.hpp"
#include "cvxgap/gaps.hpp"
#include "cvxgap/generator.hpp"
#include "cvxgap/grid.hpp"
#include "cvxgap/json_writer.hpp"
#include "cvxgap/rng.hpp"
#include "cvxgap/tolerance.hpp"

namespace cvxgap {

enum class CampaignKind { PropX, PropZ, Lemma1, Chain4, HH, Remark3 };

inline const char* to_string(CampaignKind k) {
  switch (k) {
    case CampaignKind::PropX: return "prop-x";
    case CampaignKind::PropZ: return "prop-z";
    case CampaignKind::Lemma1: return "lemma1";
    case CampaignKind::Chain4: return "chain4";
    case CampaignKind::HH: return "hh";
    default: return "remark3";
  }
}

inline CampaignKind campaign_from_name(const std::string& name) {
  if (name == "prop-x") return CampaignKind::PropX;
  if (name == "prop-z") return CampaignKind::PropZ;
  if (name == "lemma1") return CampaignKind::Lemma1;
  if (name == "chain4") return CampaignKind::Chain4;
  if (name == "hh") return CampaignKind::HH;
  if (name == "remark3") return CampaignKind::Remark3;
  throw ParameterError("unknown campaign '" + name +
                       "' (expected prop-x|prop-z|lemma1|chain4|hh|remark3)");
}

struct CampaignConfig {
  CampaignKind kind = CampaignKind::PropX;
  int count = 50;
  std::uint64_t seed = 0;
  Tolerance tol{};
  int grid_n = 101;   // prop-x / remark3 scan resolution
  int draws = 1000;   // per-function random draws (prop-z, lemma1, chain4)
  int n_p = 10000;    // hh p-average resolution
  std::optional<ConvexFunction> fn;  // run on this single function instead of a pool
};

struct CampaignOutcome {
  bool all_pass;
  std::string json;
};

namespace detail {

struct PoolEntry {
  std::uint64_t seed;
  Interval interval;
  ConvexFunction f;
};

// Pool draws are strictly sequential per entry, so a (seed, count) pair
// fixes every function bit-for-bit.
inline std::vector<PoolEntry> make_pool(const CampaignConfig& cfg, bool need_hinges,
                                        bool gentle) {
  std::vector<PoolEntry> pool;
  if (cfg.fn) {
    pool.push_back(PoolEntry{0, cfg.fn->domain(), *cfg.fn});
    return pool;
  }
  if (cfg.count < 1) throw ParameterError("campaign count must be >= 1");
  pool.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t sub = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
    Rng rng(sub);
    const double a = rng.uniform(-3.0, 2.0);
    const double len = gentle ? rng.uniform(0.5, 2.0) : rng.uniform(0.5, 3.0);
    const Interval I(a, a + len);
    ConvexGeneratorSpec spec;
    spec.n_hinges = need_hinges ? rng.uniform_int(1, 5)
                                : rng.uniform_int(0, gentle ? 3 : 5);
    spec.quad_coeff_range = {0.0, gentle ? 1.0 : 2.0};
    spec.hinge_weight_range = {0.0, gentle ? 1.0 : 2.0};
    spec.affine_range = {-2.0, 2.0};
    spec.seed = mix_seed(sub, 0x1001);
    pool.push_back(PoolEntry{sub, I, generate_convex(spec, I)});
  }
  return pool;
}

inline void write_header(JsonWriter& w, const CampaignConfig& cfg) {
  w.key("campaign").value(std::string_view(to_string(cfg.kind)));
  w.key("count").value(cfg.count);
  w.key("seed").value(cfg.seed);
  w.key("atol").value(cfg.tol.atol);
  w.key("rtol").value(cfg.tol.rtol);
  if (cfg.fn) w.key("fn").value(std::string_view(cfg.fn->label()));
}

inline void write_interval(JsonWriter& w, const Interval& I) {
  w.key("interval").begin_array().value(I.a()).value(I.b()).end_array();
}

inline CampaignOutcome run_prop_x(const CampaignConfig& cfg) {
  const auto pool = make_pool(cfg, false, false);
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("grid_n").value(cfg.grid_n);
  w.key("results").begin_array();
  bool all_pass = true;
  for (const auto& e : pool) {
    const GridOracleResult r = grid_max_F(e.f, cfg.grid_n);
    const bool pass = r.endpoint_is_max(cfg.tol);
    all_pass = all_pass && pass;
    w.begin_object();
    w.key("seed").value(e.seed);
    write_interval(w, e.interval);
    w.key("F_ab").value(r.endpoint_value);
    w.key("grid_max").value(r.max_value);
    w.key("argmax").begin_array().value(r.argmax.first).value(r.argmax.second).end_array();
    w.key("pass").value(pass);
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all_pass);
  w.end_object();
  return CampaignOutcome{all_pass, w.str()};
}

inline CampaignOutcome run_prop_z(const CampaignConfig& cfg) {
  const auto pool = make_pool(cfg, false, false);
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("draws").value(cfg.draws);
  w.key("results").begin_array();
  bool all_pass = true;
  for (const auto& e : pool) {
    Rng rng(mix_seed(e.seed, 0x2002));
    int failures = 0;
    double wp = 0, wx = 0, wy = 0;
    for (int d = 0; d < cfg.draws; ++d) {
      const double p = rng.uniform01();
      const double x = rng.uniform(e.interval.a(), e.interval.b());
      const double y = rng.uniform(e.interval.a(), e.interval.b());
      if (!prop_z_check(e.f, WeightPair(p), x, y, cfg.tol)) {
        if (failures == 0) {
          wp = p;
          wx = x;
          wy = y;
        }
        ++failures;
      }
    }
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    w.begin_object();
    w.key("seed").value(e.seed);
    write_interval(w, e.interval);
    w.key("draws").value(cfg.draws);
    w.key("failures").value(failures);
    w.key("pass").value(pass);
    if (!pass) {
      w.key("witness").begin_object();
      w.key("p").value(wp);
      w.key("x").value(wx);
      w.key("y").value(wy);
      w.key("fstar").value(weighted_gap(e.f, WeightPair(wp), wx, wy));
      w.key("F_xy").value(midpoint_gap(e.f, wx, wy));
      w.key("F_ab").value(midpoint_gap(e.f, e.interval.a(), e.interval.b()));
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all_pass);
  w.end_object();
  return CampaignOutcome{all_pass, w.str()};
}

inline CampaignOutcome run_lemma1(const CampaignConfig& cfg) {
  const auto pool = make_pool(cfg, false, false);
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("draws").value(cfg.draws);
  w.key("results").begin_array();
  bool all_pass = true;
  for (const auto& e : pool) {
    Rng rng(mix_seed(e.seed, 0x3003));
    int failures = 0;
    double t1 = 0, t2 = 0, t3 = 0;
    for (int d = 0; d < cfg.draws; ++d) {
      double x1, x2, x3;
      do {
        x1 = rng.uniform(e.interval.a(), e.interval.b());
        x2 = rng.uniform(e.interval.a(), e.interval.b());
        x3 = rng.uniform(e.interval.a(), e.interval.b());
        if (x1 > x2) std::swap(x1, x2);
        if (x2 > x3) std::swap(x2, x3);
        if (x1 > x2) std::swap(x1, x2);
      } while (!(x1 < x2 && x2 < x3));
      const auto [part_i, part_ii] = lemma1_check(e.f, x1, x2, x3, cfg.tol);
      if (!(part_i && part_ii)) {
        if (failures == 0) {
          t1 = x1;
          t2 = x2;
          t3 = x3;
        }
        ++failures;
      }
    }
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    w.begin_object();
    w.key("seed").value(e.seed);
    write_interval(w, e.interval);
    w.key("draws").value(cfg.draws);
    w.key("failures").value(failures);
    w.key("pass").value(pass);
    if (!pass) {
      const Lemma1Sides s = lemma1_sides(e.f, t1, t2, t3);
      w.key("witness").begin_object();
      w.key("x1").value(t1);
      w.key("x2").value(t2);
      w.key("x3").value(t3);
      w.key("lhs_i").value(s.lhs_i);
      w.key("rhs_i").value(s.rhs_i);
      w.key("lhs_ii").value(s.lhs_ii);
      w.key("rhs_ii").value(s.rhs_ii);
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all_pass);
  w.end_object();
  return CampaignOutcome{all_pass, w.str()};
}

inline CampaignOutcome run_chain4(const CampaignConfig& cfg) {
  const auto pool = make_pool(cfg, false, false);
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("draws").value(cfg.draws);
  w.key("results").begin_array();
  bool all_pass = true;
  for (const auto& e : pool) {
    Rng rng(mix_seed(e.seed, 0x4004));
    int failures = 0;
    double wp = -1;
    auto check = [&](double p, bool degenerate) {
      const Chain4 c = chain4_bounds(e.f, WeightPair(p));
      bool ok = cfg.tol.leq(c.lower, c.middle) && cfg.tol.leq(c.middle, c.upper);
      if (degenerate) {
        const double exact = 1e-12 * (1 + std::max(std::abs(c.middle), std::abs(c.upper)));
        if (p == 0.5) ok = ok && std::abs(c.middle - c.lower) <= exact;
        if (p == 0.0 || p == 1.0) ok = ok && std::abs(c.middle - c.upper) <= exact;
      }
      if (!ok && failures++ == 0) wp = p;
    };
    check(0.0, true);
    check(0.5, true);
    check(1.0, true);
    for (int d = 0; d < cfg.draws; ++d) check(rng.uniform01(), false);
    const bool pass = failures == 0;
    all_pass = all_pass && pass;
    w.begin_object();
    w.key("seed").value(e.seed);
    write_interval(w, e.interval);
    w.key("draws").value(cfg.draws);
    w.key("failures").value(failures);
    w.key("pass").value(pass);
    if (!pass) {
      const Chain4 c = chain4_bounds(e.f, WeightPair(wp));
      w.key("witness").begin_object();
      w.key("p").value(wp);
      w.key("lower").value(c.lower);
      w.key("middle").value(c.middle);
      w.key("upper").value(c.upper);
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all_pass);
  w.end_object();
  return CampaignOutcome{all_pass, w.str()};
}

inline CampaignOutcome run_hh(const CampaignConfig& cfg) {
  const auto pool = make_pool(cfg, false, /*gentle=*/true);
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("n_p").value(cfg.n_p);
  w.key("results").begin_array();
  bool all_pass = true;
  for (const auto& e : pool) {
    bool pass = false;
    std::string error;
    double lo = std::nan(""), mid = std::nan(""), up = std::nan("");
    try {
      const HHChain c = hh_recover(e.f, cfg.n_p);
      lo = c.lower;
      mid = c.middle;
      up = c.upper;
      pass = cfg.tol.leq(lo, mid) && cfg.tol.leq(mid, up);
    } catch (const CrossCheckError& err) {
      error = err.what();
    }
    all_pass = all_pass && pass;
    w.begin_object();
    w.key("seed").value(e.seed);
    write_interval(w, e.interval);
    w.key("lower").value(lo);
    w.key("middle").value(mid);
    w.key("upper").value(up);
    w.key("pass").value(pass);
    if (!error.empty()) w.key("error").value(std::string_view(error));
    w.end_object();
  }
  w.end_array();
  w.key("all_pass").value(all_pass);
  w.end_object();
  return CampaignOutcome{all_pass, w.str()};
}

// Exploratory: reports where the endpoint-max claim fails for F*. Findings
// are data, not failures; the campaign itself always passes unless the
// F(a,b) cap is violated (which throws out of the search).
inline CampaignOutcome run_remark3(const CampaignConfig& cfg) {
  static const double p_grid[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  JsonWriter w;
  w.begin_object();
  write_header(w, cfg);
  w.key("grid_n").value(cfg.grid_n);
  w.key("p_grid").begin_array();
  for (double p : p_grid) w.value(p);
  w.end_array();
  w.key("findings").begin_array();
  std::size_t findings = 0;
  if (cfg.fn) {
    // external function: scan directly, one max-witness per weight
    const auto& f = *cfg.fn;
    const Interval I = f.domain();
    const double f_ab = midpoint_gap(f, I.a(), I.b());
    for (double p : p_grid) {
      const WeightPair wp(p);
      const double fstar_ab = weighted_gap(f, wp, I.a(), I.b());
      const GridOracleResult r = grid_max_Fstar(f, wp, cfg.grid_n);
      if (r.max_value > fstar_ab + cfg.tol.slack(r.max_value, fstar_ab)) {
        if (!cfg.tol.leq(r.max_value, f_ab))
          throw CrossCheckError("F* exceeded F(a,b) on supplied function");
        ++findings;
        w.begin_object();
        w.key("seed").value(std::uint64_t{0});
        write_interval(w, I);
        w.key("p").value(p);
        w.key("x").value(r.argmax.first);
        w.key("y").value(r.argmax.second);
        w.key("fstar_xy").value(r.max_value);
        w.key("fstar_ab").value(fstar_ab);
        w.key("F_ab").value(f_ab);
        w.end_object();
      }
    }
  } else {
    if (cfg.count < 1) throw ParameterError("campaign count must be >= 1");
    for (int i = 0; i < cfg.count; ++i) {
      const std::uint64_t sub = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
      Rng rng(sub);
      const double a = rng.uniform(-3.0, 2.0);
      const Interval I(a, a + rng.uniform(0.5, 3.0));
      ConvexGeneratorSpec spec;
      spec.n_hinges = rng.uniform_int(1, 5);
      spec.seed = mix_seed(sub, 0x1001);
      const auto records = fstar_counterexample_search(
          std::span<const ConvexGeneratorSpec>(&spec, 1), I,
          std::span<const double>(p_grid, std::size(p_grid)), cfg.grid_n, cfg.tol);
      for (const auto& r : records) {
        ++findings;
        w.begin_object();
        w.key("seed").value(r.seed);
        w.key("interval").begin_array().value(r.interval_a).value(r.interval_b).end_array();
        w.key("p").value(r.p);
        w.key("x").value(r.x);
        w.key("y").value(r.y);
        w.key("fstar_xy").value(r.fstar_xy);
        w.key("fstar_ab").value(r.fstar_ab);
        w.key("F_ab").value(r.f_ab);
        w.end_object();
      }
    }
  }
  w.end_array();
  w.key("findings_count").value(static_cast<std::uint64_t>(findings));
  w.key("all_pass").value(true);
  w.end_object();
  return CampaignOutcome{true, w.str()};
}

}  // namespace detail

inline CampaignOutcome run_campaign(const CampaignConfig& cfg) {
  switch (cfg.kind) {
    case CampaignKind::PropX: return detail::run_prop_x(cfg);
    case CampaignKind::PropZ: return detail::run_prop_z(cfg);
    case CampaignKind::Lemma1: return detail::run_lemma1(cfg);
    case CampaignKind::Chain4: return detail::run_chain4(cfg);
    case CampaignKind::HH: return detail::run_hh(cfg);
    default: return detail::run_remark3(cfg);
  }
}

}  // namespace cvxgap
