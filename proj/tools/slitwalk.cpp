// slitwalk: command-line front end.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/halfline_prob.hpp"
#include "slitwalk/io.hpp"
#include "slitwalk/limitlaw.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/slitgf.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
  std::string model = "square";
  int order = 16;
  int zorder = 8;
  std::string format = "json";
  std::string output;
  int guard_n = 0;
};

struct Outcome {
  std::string text;
  int status = 0;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Json quad_full(const Sqrt2Rat& x) {
  Json j = quad_to_json(x);
  j["value"] = to_double(x, 128);
  return j;
}

// "1/2" for rational values, the {"a","b","d"} object otherwise.
Json exact_field(const Sqrt2Rat& x) {
  if (x.b() == 0) return to_compact_string(x.a());
  return quad_to_json(x);
}

std::string series_out(const RunConfig& cfg, const TSeries<BigRat>& s,
                       const std::vector<std::string>& vars = {}) {
  if (cfg.format == "csv") return series_to_csv(s);
  Json j = series_to_json(s, vars);
  return dump(Json{{"model", cfg.model}, {"series", std::move(j)}});
}

std::string coefficients_out(const RunConfig& cfg, Json head, const std::vector<BigRat>& c) {
  if (cfg.format == "csv") {
    std::string out = "n,c\n";
    for (std::size_t n = 0; n < c.size(); ++n) {
      out += std::to_string(n) + "," + to_compact_string(c[n]) + "\n";
    }
    return out;
  }
  head["coefficients"] = rats_to_json(c);
  return dump(head);
}

std::string report_out(const RunConfig& cfg, const std::string& label,
                       const std::vector<CheckResult>& checks, bool timings) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  if (cfg.format == "csv") {
    std::string out = timings ? "check,passed,seconds,detail\n" : "check,passed,detail\n";
    for (const auto& c : checks) {
      out += csv_field(c.name) + "," + (c.passed ? "true" : "false") + ",";
      if (timings) out += fmt_double(c.seconds) + ",";
      out += csv_field(c.detail) + "\n";
    }
    return out;
  }
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (timings) {
      e["seconds"] = c.seconds;
      if (c.limit_seconds > 0) e["limit_seconds"] = c.limit_seconds;
    }
    arr.push_back(std::move(e));
  }
  return dump(Json{{"suite", label}, {"passed", ok}, {"checks", std::move(arr)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walks on the slit plane: exact enumeration, generating functions, probabilities"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--model", cfg.model, "square | diagonal | triangular | file:PATH")
      ->capture_default_str();
  app.add_option("--order", cfg.order, "truncation order in t")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--zorder", cfg.zorder, "truncation order in z")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--guard-n", cfg.guard_n, "largest walk length the enumerator accepts")
      ->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  auto model = [&] { return StepSet::from_selector(cfg.model); };

  // count
  auto* count = app.add_subcommand("count", "enumerate walks by endpoint");
  int count_start = 0;
  int count_length = -1;
  count->add_option("--start", count_start, "start at (k, 0)");
  count->add_option("--length", count_length, "only this length (default: 0..order)");
  count->callback([&] {
    action = [&] {
      const int nmax = count_length >= 0 ? count_length : cfg.order;
      auto tables = count_walks(model(), count_start, nmax);
      if (count_length >= 0) tables = {tables.back()};
      if (cfg.format == "csv") return Outcome{tables_to_csv(tables)};
      return Outcome{dump(Json{{"model", cfg.model},
                               {"start", count_start},
                               {"tables", tables_to_json(tables)}})};
    };
  });

  auto* gf = app.add_subcommand("gf", "complete generating function S(x, y; t)");
  gf->callback([&] {
    action = [&] { return Outcome{series_out(cfg, complete_gf(SlitContext(model(), cfg.order)))}; };
  });

  auto* bridges = app.add_subcommand("bridges", "bridge generating function B(1/x; t)");
  bridges->callback([&] {
    action = [&] { return Outcome{series_out(cfg, bridges_gf(SlitContext(model(), cfg.order)))}; };
  });

  auto* endpoint = app.add_subcommand("endpoint", "a_{i,j}(n) for n <= order");
  int ep_i = 1, ep_j = 0;
  bool ep_oracle = false;
  endpoint->add_option("--i", ep_i)->capture_default_str();
  endpoint->add_option("--j", ep_j)->capture_default_str();
  endpoint->add_flag("--oracle", ep_oracle, "count by enumeration instead");
  endpoint->callback([&] {
    action = [&] {
      const auto m = model();
      const auto c = ep_oracle ? count_endpoint(m, 0, ep_i, ep_j, cfg.order)
                               : endpoint_series(SlitContext(m, cfg.order), ep_i, ep_j);
      return Outcome{coefficients_out(
          cfg, Json{{"model", cfg.model}, {"i", ep_i}, {"j", ep_j}, {"order", cfg.order}}, c)};
    };
  });

  auto* loops = app.add_subcommand("loops", "loops at (k, 0), k = 1..K");
  int loops_k = 2;
  loops->add_option("--k", loops_k, "largest k")->check(CLI::PositiveNumber)->capture_default_str();
  loops->callback([&] {
    action = [&] {
      const auto L = loops_gf(SlitContext(model(), cfg.order), loops_k);
      if (cfg.format == "csv") {
        std::string out = "k,n,c\n";
        for (int k = 1; k <= loops_k; ++k) {
          const auto c = scalar_coefficients(L[k - 1]);
          for (std::size_t n = 0; n < c.size(); ++n) {
            out += std::to_string(k) + "," + std::to_string(n) + "," + to_compact_string(c[n]) + "\n";
          }
        }
        return Outcome{out};
      }
      Json arr = Json::array();
      for (int k = 1; k <= loops_k; ++k) {
        arr.push_back({{"k", k}, {"coefficients", rats_to_json(scalar_coefficients(L[k - 1]))}});
      }
      return Outcome{dump(Json{{"model", cfg.model}, {"order", cfg.order}, {"loops", arr}})};
    };
  });

  auto* visits = app.add_subcommand("visits", "walks visiting (k, 0) and total visits");
  int visits_k = 1;
  visits->add_option("--k", visits_k)->check(CLI::PositiveNumber)->capture_default_str();
  visits->callback([&] {
    action = [&] {
      const auto v = visits_gf(SlitContext(model(), cfg.order), visits_k);
      const auto a = scalar_coefficients(v.visiting);
      const auto b = scalar_coefficients(v.visit_total);
      if (cfg.format == "csv") {
        std::string out = "n,visiting,visits\n";
        for (std::size_t n = 0; n < a.size(); ++n) {
          out += std::to_string(n) + "," + to_compact_string(a[n]) + "," + to_compact_string(b[n]) + "\n";
        }
        return Outcome{out};
      }
      return Outcome{dump(Json{{"model", cfg.model},
                               {"k", visits_k},
                               {"order", cfg.order},
                               {"visiting", rats_to_json(a)},
                               {"visits", rats_to_json(b)}})};
    };
  });

  auto* factorize = app.add_subcommand("factorize", "canonical factorization D Delta DeltaBar");
  bool fac_direct = false;
  factorize->add_flag("--direct", fac_direct, "use the logarithm-free route");
  factorize->callback([&] {
    action = [&] {
      const auto delta = build_delta(model(), cfg.order);
      const auto f = fac_direct ? canonical_factorize_direct(delta) : canonical_factorize(delta);
      if (cfg.format == "csv") {
        return Outcome{"# D\n" + series_to_csv(f.D) + "# Delta\n" + series_to_csv(f.Delta) +
                       "# DeltaBar\n" + series_to_csv(f.DeltaBar)};
      }
      return Outcome{dump(Json{{"model", cfg.model},
                               {"D", series_to_json(f.D)},
                               {"Delta", series_to_json(f.Delta)},
                               {"DeltaBar", series_to_json(f.DeltaBar)}})};
    };
  });

  auto* closedform = app.add_subcommand("closedform", "expand an explicit algebraic form");
  std::string cf_id;
  int cf_i = 1;
  bool cf_list = false;
  closedform->add_option("--id", cf_id, "form name (see --list)");
  closedform->add_option("--i", cf_i, "parameter i")->capture_default_str();
  closedform->add_flag("--list", cf_list, "list form names");
  closedform->callback([&] {
    action = [&] {
      if (cf_list || cf_id.empty()) {
        std::string out;
        for (auto id : all_closed_form_ids()) out += closed_form_name(id) + "\n";
        return Outcome{out, cf_list ? 0 : kExitUsage};
      }
      const auto id = parse_closed_form_id(cf_id);
      const auto s = eval_closed_form(id, cfg.order, cf_i);
      if (cfg.format == "csv") return Outcome{series_to_csv(s)};
      return Outcome{dump(Json{{"id", cf_id}, {"i", cf_i}, {"series", series_to_json(s)}})};
    };
  });

  auto* conjecture = app.add_subcommand("conjecture", "anti-diagonal formula against enumeration");
  int cj_i = 1, cj_nmax = 10;
  conjecture->add_option("--i", cj_i)->check(CLI::PositiveNumber)->capture_default_str();
  conjecture->add_option("--nmax", cj_nmax)->check(CLI::NonNegativeNumber)->capture_default_str();
  conjecture->callback([&] {
    action = [&] {
      const auto rep = conjecture_anti_diagonal(cj_i, cj_nmax);
      const int status = rep.all_equal() ? 0 : kExitVerify;
      if (cfg.format == "csv") {
        std::string out = "n,formula,counted,equal\n";
        for (const auto& r : rep.rows) {
          out += std::to_string(r.n) + "," + to_compact_string(r.formula) + "," +
                 to_compact_string(r.counted) + "," + (r.equal() ? "true" : "false") + "\n";
        }
        return Outcome{out, status};
      }
      Json rows = Json::array();
      for (const auto& r : rep.rows) {
        rows.push_back({{"n", r.n},
                        {"formula", to_compact_string(r.formula)},
                        {"counted", to_compact_string(r.counted)},
                        {"equal", r.equal()}});
      }
      return Outcome{dump(Json{{"i", cj_i}, {"all_equal", rep.all_equal()}, {"rows", rows}}),
                     status};
    };
  });

  auto* hitting = app.add_subcommand("hitting", "first hitting probabilities of H at t = 1/4");
  std::vector<int> hit_point;
  int hit_K = 0, hit_nmax = 120;
  hitting->add_option("--point", hit_point, "I J: probability of ever reaching (I, J)")
      ->expected(2);
  hitting->add_option("--K", hit_K, "hitting distribution p^[k] for k <= K")
      ->check(CLI::PositiveNumber);
  hitting->add_option("--nmax", hit_nmax, "enumeration length for estimates")
      ->capture_default_str();
  hitting->callback([&] {
    action = [&] {
      if (!hit_point.empty()) {
        const auto h = hitting_point_prob(hit_point[0], hit_point[1], hit_nmax);
        Json j;
        if (h.exact) {
          j["exact"] = exact_field(*h.exact);
          j["exact_quad"] = quad_to_json(*h.exact);
        }
        j["value"] = h.value;
        j["method"] = h.method;
        if (!h.exact) {
          j["partial_sum"] = h.partial_sum;
          j["error_bar"] = h.error_bar;
          j["terms"] = h.terms;
        }
        return Outcome{dump(j)};
      }
      if (hit_K <= 0) throw PreconditionError("hitting needs --point I J or --K");
      const auto d = hitting_distribution(hit_K);
      if (cfg.format == "csv") {
        std::string out = "k,p,scaled,partial_sum\n";
        for (const auto& c : d.checkpoints) {
          out += std::to_string(c.k) + "," + fmt_double(c.p) + "," + fmt_double(c.scaled) + "," +
                 fmt_double(c.partial_sum) + "\n";
        }
        return Outcome{out};
      }
      Json lead = Json::array();
      for (const auto& x : d.leading_exact) lead.push_back(quad_full(x));
      Json cps = Json::array();
      for (const auto& c : d.checkpoints) {
        cps.push_back({{"k", c.k}, {"p", c.p}, {"scaled", c.scaled}, {"partial_sum", c.partial_sum}});
      }
      return Outcome{dump(Json{{"K", d.K},
                               {"leading_exact", lead},
                               {"partial_sum", d.partial_sum},
                               {"exact_limit", d.exact_limit},
                               {"all_positive", d.all_positive},
                               {"partial_sums_increasing", d.partial_sums_increasing},
                               {"max_float_rel_dev", d.max_float_rel_dev},
                               {"tail_constant", d.target},
                               {"checkpoints", cps}})};
    };
  });

  auto* trans = app.add_subcommand("transience", "visit probabilities p_k and Green values v_k");
  int tr_kmax = 5;
  trans->add_option("--kmax", tr_kmax)->check(CLI::PositiveNumber)->capture_default_str();
  trans->callback([&] {
    action = [&] {
      const auto t = transience(tr_kmax);
      if (cfg.format == "csv") {
        std::string out = "k,p_a,p_b,p,v_a,v_b,v\n";
        for (int k = 1; k <= tr_kmax; ++k) {
          const auto& p = t.p[k - 1];
          const auto& v = t.v[k - 1];
          out += std::to_string(k) + "," + to_compact_string(p.a()) + "," + to_compact_string(p.b()) +
                 "," + fmt_double(to_double(p, 128)) + "," + to_compact_string(v.a()) + "," +
                 to_compact_string(v.b()) + "," + fmt_double(to_double(v, 128)) + "\n";
        }
        return Outcome{out};
      }
      Json rows = Json::array();
      for (int k = 1; k <= tr_kmax; ++k) {
        rows.push_back({{"k", k}, {"p", quad_full(t.p[k - 1])}, {"v", quad_full(t.v[k - 1])}});
      }
      return Outcome{dump(Json{{"all_below_one", t.all_below_one},
                               {"s_decreasing", t.s_decreasing},
                               {"rows", rows}})};
    };
  });

  auto* limitlaw = app.add_subcommand("limitlaw", "finite-n moments against the limit law");
  std::vector<int> ll_n = {100, 200, 400};
  limitlaw->add_option("--n", ll_n, "walk lengths")->capture_default_str();
  limitlaw->callback([&] {
    action = [&] {
      const auto em = empirical_moments(ll_n);
      const auto an = asymptotic_an(ll_n);
      if (cfg.format == "json") {
        Json rows = Json::array();
        for (std::size_t r = 0; r < em.size(); ++r) {
          Json stats = Json::object();
          for (int k = 0; k < 5; ++k) {
            stats[stat_names()[k]] = {{"value", em[r].values[k]},
                                      {"target", em[r].targets[k]},
                                      {"gap", em[r].gaps[k]}};
          }
          stats["a(n) n^(1/4)/4^n"] = {
              {"value", an[r].ratio}, {"target", an_constant()}, {"gap", an[r].rel_gap}};
          rows.push_back({{"n", em[r].n}, {"E(Y) exact", to_compact_string(em[r].ey_exact)},
                          {"statistics", stats}});
        }
        return Outcome{dump(Json{{"rows", rows}})};
      }
      std::string out = "n,statistic,value,target,gap\n";
      for (std::size_t r = 0; r < em.size(); ++r) {
        for (int k = 0; k < 5; ++k) {
          out += std::to_string(em[r].n) + "," + csv_field(stat_names()[k]) + "," +
                 fmt_double(em[r].values[k]) + "," + fmt_double(em[r].targets[k]) + "," +
                 fmt_double(em[r].gaps[k]) + "\n";
        }
        out += std::to_string(an[r].n) + "," + csv_field("a(n) n^(1/4)/4^n") + "," +
               fmt_double(an[r].ratio) + "," + fmt_double(an_constant()) + "," +
               fmt_double(an[r].rel_gap) + "\n";
      }
      return Outcome{out};
    };
  });

  auto* verify = app.add_subcommand("verify", "cross-check pipeline, enumeration and closed forms");
  bool vf_acceptance = false, vf_timings = false;
  verify->add_flag("--acceptance", vf_acceptance, "run the numbered acceptance checks instead");
  verify->add_flag("--timings", vf_timings, "include run times (output no longer reproducible)");
  verify->callback([&] {
    action = [&] {
      std::vector<CheckResult> checks;
      std::string label;
      if (vf_acceptance) {
        checks = run_all_acceptance();
        label = "acceptance";
      } else {
        const auto rep = verify_model(model(), cfg.order);
        checks = rep.checks;
        label = rep.model + " order " + std::to_string(rep.order);
      }
      bool ok = true;
      for (const auto& c : checks) ok = ok && c.passed;
      return Outcome{report_out(cfg, label, checks, vf_timings || vf_acceptance),
                     ok ? 0 : kExitVerify};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (cfg.guard_n > 0) set_oracle_guard_n(cfg.guard_n);
    const Outcome out = action();
    if (cfg.output.empty()) {
      std::cout << out.text;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << cfg.output << "\n";
        return kExitUsage;
      }
      f << out.text;
    }
    return out.status;
  } catch (const ResourceGuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitVerify;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
