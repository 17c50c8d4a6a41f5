#include "slitwalk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/extract.hpp"
#include "slitwalk/factorize.hpp"
#include "slitwalk/halfline_prob.hpp"
#include "slitwalk/limitlaw.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/slitgf.hpp"

namespace slitwalk {

namespace {

using TS = TSeries<BigRat>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(7);
  os << x;
  return os.str();
}

// Walks from (start_k, 0) by endpoint, as an arity-2 series.
TS oracle_series(const StepSet& m, int start_k, int order) {
  const auto tables = count_walks(m, start_k, order);
  TS s(order, 2);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [p, c] : tables[n].counts) s.at(n).add_term({p.first, p.second, 0}, c);
  }
  return s;
}

template <class F>
bool same_series(const TSeries<F>& a, const TSeries<F>& b, std::string& detail,
                 const std::string& what) {
  if (a.arity() != b.arity()) {
    detail = what + ": arity differs";
    return false;
  }
  const int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n) {
    if (a[n] != b[n]) {
      detail = what + ": first difference at t^" + std::to_string(n);
      return false;
    }
  }
  detail = what + ": equal mod t^" + std::to_string(N + 1);
  return true;
}

bool same_values(const std::vector<BigRat>& a, const std::vector<BigRat>& b, std::string& detail,
                 const std::string& what) {
  const std::size_t N = std::min(a.size(), b.size());
  for (std::size_t n = 0; n < N; ++n) {
    if (a[n] != b[n]) {
      detail = what + ": n=" + std::to_string(n) + " gives " + to_string(a[n]) + " vs " +
               to_string(b[n]);
      return false;
    }
  }
  detail = what + ": " + std::to_string(N) + " terms equal";
  return true;
}

// Runs several sub-checks, stopping at the first failure.
class Steps {
 public:
  explicit Steps(std::string& detail) : detail_(detail) {}
  bool operator()(bool ok, const std::string& d) {
    if (!ok_) return false;
    parts_.push_back(d);
    ok_ = ok;
    detail_ = join();
    return ok;
  }
  bool ok() const { return ok_; }

 private:
  std::string join() const {
    std::string s;
    for (const auto& p : parts_) s += (s.empty() ? "" : "; ") + p;
    return s;
  }
  std::string& detail_;
  std::vector<std::string> parts_;
  bool ok_ = true;
};

TS xy_slice(const TS& s, int j) {
  return s.map_coeffs(
      [&](const Laurent<BigRat>& c) {
        Laurent<BigRat> out(1);
        for (const auto& [e, q] : c.terms()) {
          if (e[1] == j) out.add_term({e[0], 0, 0}, q);
        }
        return out;
      },
      1);
}

TS z_slice(const TS& s, int k) {
  return s.map_coeffs(
      [&](const Laurent<BigRat>& c) {
        Laurent<BigRat> out(2);
        for (const auto& [e, q] : c.terms()) {
          if (e[0] == k) out.add_term({e[1], e[2], 0}, q);
        }
        return out;
      },
      2);
}

std::vector<BigRat> scalars(const TS& s) { return scalar_coefficients(s); }

// (1 - sqrt(Delta(z))) / z, truncated at z^zorder.
TS hitting_series_from_delta(const SlitContext& ctx, int zorder) {
  TS one = TS::one(ctx.order(), 1);
  TS r = (one - ctx.sqrt_Delta()).map_coeffs(
      [](const Laurent<BigRat>& c) { return c.shifted({-1, 0, 0}); });
  return truncate_in(r, 0, zorder);
}

bool check_ending_on_H(const SlitContext& ctx, int zorder, std::string& detail) {
  Steps st(detail);
  const TS d = ending_on_H(ctx, 1, 0, zorder);
  std::string d1;
  st(same_series(d, hitting_series_from_delta(ctx, zorder), d1, "D_{1,0} vs (1-sqrt Delta)/z"),
     d1);
  for (int k = 0; k <= zorder && st.ok(); ++k) {
    std::vector<BigRat> a;
    for (int n = 0; n <= ctx.order(); ++n) a.push_back(d[n].coeff({k, 0, 0}));
    std::string dk;
    st(same_values(a, count_endpoint(ctx.model(), -k, 1, 0, ctx.order()), dk,
                   "D_{1,0} z^" + std::to_string(k) + " vs oracle"),
       dk);
  }
  return st.ok();
}

bool check_loops_visits(const SlitContext& ctx, int K, std::string& detail) {
  Steps st(detail);
  const int N = ctx.order();
  const auto loops = loops_gf(ctx, K);
  for (int k = 1; k <= K; ++k) {
    std::string d;
    st(same_values(scalars(loops[k - 1]), count_loops(ctx.model(), k, N), d,
                   "loops k=" + std::to_string(k)),
       d);
  }
  for (int k = 1; k <= K; ++k) {
    const auto v = visits_gf(ctx, k);
    const auto o = count_visits_marked(ctx.model(), k, N);
    std::vector<BigRat> ov, ot;
    for (const auto& c : o) {
      ov.push_back(c.visiting);
      ot.push_back(c.visits);
    }
    std::string d1, d2;
    st(same_values(scalars(v.visiting), ov, d1, "visiting k=" + std::to_string(k)), d1);
    st(same_values(scalars(v.visit_total), ot, d2, "visits k=" + std::to_string(k)), d2);
  }
  return st.ok();
}

struct PointForm {
  ClosedFormId id;
  int i, j, param;
};

std::vector<PointForm> point_forms(const std::string& model) {
  using C = ClosedFormId;
  if (model == "square") {
    return {{C::square_point_0_1, 0, 1, 1},
            {C::square_point_1_0, 1, 0, 1},
            {C::square_point_m1_1, -1, 1, 1},
            {C::square_point_1_1, 1, 1, 1}};
  }
  if (model == "diagonal") {
    return {{C::diagonal_point_1_1, 1, 1, 1},
            {C::diagonal_point_m1_1, -1, 1, 1},
            {C::diagonal_point_0_2, 0, 2, 1},
            {C::diagonal_point_2i_0, 2, 0, 1},
            {C::diagonal_point_2i_0, 4, 0, 2}};
  }
  return {};
}

bool check_closed_forms(const SlitContext& ctx, const TS& S, std::string& detail) {
  Steps st(detail);
  const std::string name = ctx.model().name();
  const int N = ctx.order();
  const ClosedFormId whole = name == "square" ? ClosedFormId::square_S : ClosedFormId::diagonal_S;
  const ClosedFormId ones =
      name == "square" ? ClosedFormId::square_S_at_ones : ClosedFormId::diagonal_S_at_ones;
  std::string d;
  st(same_series(eval_closed_form(whole, N), S, d, closed_form_name(whole)), d);
  st(same_series(eval_closed_form(ones, N), evaluate_at_ones(S), d, closed_form_name(ones)), d);
  for (const auto& pf : point_forms(name)) {
    const auto pipeline = endpoint_series(ctx, pf.i, pf.j);
    const std::string label = closed_form_name(pf.id) + "(" + std::to_string(pf.i) + "," +
                              std::to_string(pf.j) + ")";
    st(same_values(scalars(eval_closed_form(pf.id, N, pf.param)), pipeline, d, label), d);
    if (pf.id != ClosedFormId::diagonal_point_2i_0) {
      st(same_values(scalars(eval_point_u_form(pf.id, N)), pipeline, d, label + " u-form"), d);
    }
  }
  return st.ok();
}

bool preset_with_roots(const StepSet& m) {
  return m.unit_weights() &&
         (m.name() == "square" || m.name() == "diagonal" || m.name() == "triangular");
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult timed_check(const std::string& name, double limit_seconds,
                        const std::function<bool(std::string&)>& fn) {
  CheckResult r;
  r.name = name;
  r.limit_seconds = limit_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(r.detail);
  } catch (const ResourceGuardExceeded&) {
    throw;
  } catch (const Error& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = ok;
  if (ok && limit_seconds > 0 && r.seconds > limit_seconds) {
    r.passed = false;
    r.detail += "; took " + fmt(r.seconds) + " s, limit " + fmt(limit_seconds) + " s";
  }
  return r;
}

StepSet random_model(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> num(1, 3), den(1, 2);
  std::vector<Step> steps;
  bool vertical = false;
  for (int dx = -2; dx <= 2; ++dx) {
    for (int dy = 0; dy <= 1; ++dy) {
      if (coin(rng) != 0) continue;
      BigRat w(num(rng), den(rng));
      w.canonicalize();
      steps.push_back({dx, dy, w});
      if (dy == 1) {
        steps.push_back({dx, -1, w});
        vertical = true;
      }
    }
  }
  if (!vertical) {
    steps.push_back({0, 1, BigRat(1)});
    steps.push_back({0, -1, BigRat(1)});
  }
  return StepSet::validate(std::move(steps), "random-" + std::to_string(seed));
}

VerifyReport verify_model(const StepSet& m, int order) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  VerifyReport rep;
  rep.model = m.name();
  rep.order = order;
  auto& out = rep.checks;
  auto add = [&](const std::string& name, const std::function<bool(std::string&)>& fn) {
    out.push_back(timed_check(name, 0, fn));
  };

  std::optional<SlitContext> ctx_holder;
  add("context", [&](std::string& d) {
    ctx_holder.emplace(m, order);
    d = "kernel root and canonical factorization built to order " + std::to_string(order);
    return true;
  });
  if (!ctx_holder) return rep;
  const SlitContext& ctx = *ctx_holder;
  const TS S = complete_gf(ctx);

  add("oracle_equivalence",
      [&](std::string& d) { return same_series(S, oracle_series(m, 0, order), d, "S vs oracle"); });
  add("avoids_halfline", [&](std::string& d) {
    for (int n = 1; n <= order; ++n) {
      for (const auto& [e, q] : S[n].terms()) {
        if (e[1] == 0 && e[0] <= 0) {
          d = "mass at (" + std::to_string(e[0]) + ",0) at t^" + std::to_string(n);
          return false;
        }
      }
    }
    d = "no coefficient on H for n >= 1";
    return true;
  });
  add("y_symmetry", [&](std::string& d) {
    for (int n = 0; n <= order; ++n) {
      for (const auto& [e, q] : S[n].terms()) {
        if (S[n].coeff({e[0], -e[1], 0}) != q) {
          d = "asymmetric at t^" + std::to_string(n);
          return false;
        }
      }
    }
    d = "S(x, y) = S(x, 1/y)";
    return true;
  });
  add("kernel_equation", [&](std::string& d) {
    const TS B = ts_remap(bridges_gf(ctx), 2, {0, 1, 2});
    return same_series(ts_mul(ctx.kernel(), S), TS::one(order, 2) - B, d, "K S vs 1 - B");
  });
  add("bridges_identity", [&](std::string& d) {
    const auto& f = ctx.factors();
    const TS rhs = ts_sqrt(ts_mul(f.D, f.DeltaBar));
    return same_series(TS::one(order, 1) - bridges_gf(ctx), rhs, d, "1 - B vs sqrt(D DeltaBar)");
  });
  add("bridges_oracle", [&](std::string& d) {
    const TS B = bridges_gf(ctx);
    const auto tables = count_bridges(m, order);
    TS o(order, 1);
    for (int n = 0; n <= order; ++n) {
      for (const auto& [p, c] : tables[n].counts) o.at(n).add_term({p.first, 0, 0}, c);
    }
    return same_series(B, o, d, "B vs oracle bridges");
  });
  add("factorization", [&](std::string& d) {
    Steps st(d);
    check_canonical(ctx.factors());
    std::string d1, d2;
    st(same_series(recompose(ctx.factors()), ctx.delta(), d1, "D Delta DeltaBar vs delta"), d1);
    const auto direct = canonical_factorize_direct(ctx.delta());
    st(same_series(direct.D, ctx.factors().D, d2, "direct D") &&
           same_series(direct.Delta, ctx.factors().Delta, d2, "direct Delta") &&
           same_series(direct.DeltaBar, ctx.factors().DeltaBar, d2, "direct route"),
       d2);
    if (m.reverse_symmetric()) {
      std::string d3;
      st(same_series(reflect_x(ctx.factors().DeltaBar), ctx.factors().Delta, d3,
                     "DeltaBar(1/x) vs Delta(x)"),
         d3);
    }
    return st.ok();
  });
  add("sections", [&](std::string& d) {
    Steps st(d);
    for (int j = 0; j <= std::min(4, order); ++j) {
      std::string dj;
      st(same_series(section_Sj(ctx, j), xy_slice(S, j), dj, "S_" + std::to_string(j)), dj);
    }
    return st.ok();
  });
  add("endpoint_series", [&](std::string& d) {
    return same_values(endpoint_series(ctx, 1, 0), count_endpoint(m, 0, 1, 0, order), d,
                       "a_{1,0} vs oracle");
  });
  if (preset_with_roots(m) && order >= 2) {
    add("extraction", [&](std::string& d) {
      Steps st(d);
      const auto roots = preset_roots(m);
      for (int j = 1; j <= 2; ++j) {
        const auto chk = section_positive_via_roots(ctx, j, roots, order - j);
        st(chk.matches(), chk.label + (chk.matches() ? ": matches filter" : ": differs"));
      }
      return st.ok();
    });
  }
  if (m.reverse_symmetric()) {
    const int zorder = std::min(order, 6);
    add("start_negative", [&](std::string& d) {
      return same_series(z_slice(start_negative(ctx, zorder), 0), S, d, "z^0 slice vs S");
    });
    add("ending_on_halfline", [&](std::string& d) { return check_ending_on_H(ctx, zorder, d); });
    add("start_positive", [&](std::string& d) {
      Steps st(d);
      const TS sp = start_positive(ctx, 3);
      for (int k = 1; k <= 3; ++k) {
        std::string dk;
        const auto o = oracle_series(m, k, order);
        st(same_series(start_at(ctx, k), o, dk, "S^[" + std::to_string(k) + "] vs oracle") &&
               same_series(z_slice(sp, k), o, dk, "z^" + std::to_string(k) + " slice vs oracle"),
           dk);
      }
      return st.ok();
    });
    add("loops_visits", [&](std::string& d) { return check_loops_visits(ctx, 2, d); });
  }
  if (m.unit_weights() && (m.name() == "square" || m.name() == "diagonal")) {
    add("closed_forms", [&](std::string& d) { return check_closed_forms(ctx, S, d); });
  }
  return rep;
}

namespace {

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "oracle_equivalence",  "factorization",      "catalan_identities", "bridges",
      "extraction",          "start_line_identities", "refined_model",   "hitting_values",
      "hitting_tail",        "conjecture_slice",   "limit_law"};
  return names;
}

const double kLimits[] = {30, 5, 0, 0, 0, 0, 0, 1, 10, 0, 180};

bool crit_oracle(std::string& d) {
  Steps st(d);
  for (const auto& m : {StepSet::square(), StepSet::diagonal(), StepSet::triangular()}) {
    SlitContext ctx(m, 12);
    std::string dm;
    st(same_series(complete_gf(ctx), oracle_series(m, 0, 12), dm, m.name()), dm);
  }
  SlitContext sq(StepSet::square(), 3);
  const auto sums = scalars(evaluate_at_ones(complete_gf(sq)));
  std::string ds;
  st(same_values(sums, {1, 3, 9, 34}, ds, "square a(n)"), ds);
  return st.ok();
}

TS catalan_of(const TS& arg, int order) {
  // C(s) for a scalar series s with s(0) = 0, by composition.
  const auto c = catalan_numbers(order + 1);
  TS out(order, 1);
  TS p = TS::one(order, 1);
  for (int k = 0; k <= order; ++k) {
    out += p * BigRat(c[k]);
    p = ts_mul(p, arg);
  }
  return out;
}

bool crit_factorization(std::string& d) {
  constexpr int N = 16;
  Steps st(d);
  int count = 0;
  std::vector<StepSet> models = {StepSet::square(), StepSet::diagonal(), StepSet::triangular()};
  for (unsigned s = 1; s <= 20; ++s) models.push_back(random_model(1000 + s));
  for (const auto& m : models) {
    const TS delta = build_delta(m, N);
    const auto f = canonical_factorize(delta);
    check_canonical(f);
    if (recompose(f) != delta) {
      st(false, "recomposition fails for " + m.name());
      return false;
    }
    ++count;
  }
  st(true, std::to_string(count) + " models recompose mod t^17");

  const TS t = TS::from_scalars({0, 1}, N);
  const TS C = catalan_of(t, N);
  const TS Cm = catalan_of(t * BigRat(-1), N);
  const LaurentPoly x = LaurentPoly::monomial(1, {1, 0, 0}, 1);
  const TS one = TS::one(N, 1);
  const TS sq = ts_mul(one - ts_scale(C - one, x), one + ts_scale(Cm - one, x));
  std::string d1;
  st(same_series(canonical_factorize(build_delta(StepSet::square(), N)).Delta, sq, d1,
                 "square Delta closed form"),
     d1);
  const TS four_t2 = ts_mul(t, t) * BigRat(4);
  const TS C4 = catalan_of(four_t2, N);
  const LaurentPoly x2 = LaurentPoly::monomial(1, {2, 0, 0}, 1);
  const TS dg = one - ts_scale(ts_mul(four_t2, ts_mul(C4, C4)), x2);
  std::string d2;
  st(same_series(canonical_factorize(build_delta(StepSet::diagonal(), N)).Delta, dg, d2,
                 "diagonal Delta closed form"),
     d2);
  return st.ok();
}

bool crit_catalan(std::string& d) {
  constexpr int N = 15;
  Steps st(d);
  const auto cat = catalan_numbers(2 * 7 + 2);
  auto odd = [&](const std::vector<BigRat>& a) {
    std::vector<BigRat> r;
    for (int n = 0; 2 * n + 1 < static_cast<int>(a.size()); ++n) r.push_back(a[2 * n + 1]);
    return r;
  };
  auto even_from1 = [&](const std::vector<BigRat>& a) {
    std::vector<BigRat> r;
    for (int n = 1; 2 * n < static_cast<int>(a.size()); ++n) r.push_back(a[2 * n]);
    return r;
  };
  std::vector<BigRat> four_n_cn, c_odd, c_even, diag20;
  BigInt p4 = 1;
  for (int n = 0; n <= 7; ++n) {
    four_n_cn.push_back(BigRat(p4 * cat[n]));
    c_odd.push_back(BigRat(cat[2 * n + 1]));
    p4 *= 4;
  }
  for (int n = 1; n <= 7; ++n) {
    c_even.push_back(BigRat(cat[2 * n]));
    diag20.push_back(diagonal_2i_0_coefficient(1, n));
  }
  using C = ClosedFormId;
  SlitContext sq(StepSet::square(), N);
  SlitContext dg(StepSet::diagonal(), N);
  struct Row {
    const SlitContext* ctx;
    int i, j;
    ClosedFormId id;
    bool odd;
    const std::vector<BigRat>* want;
    const char* label;
  };
  const Row rows[] = {
      {&sq, 0, 1, C::square_point_0_1, true, &four_n_cn, "square a_{0,1}(2n+1) = 4^n C_n"},
      {&sq, 1, 0, C::square_point_1_0, true, &c_odd, "square a_{1,0}(2n+1) = C_{2n+1}"},
      {&dg, 1, 1, C::diagonal_point_1_1, true, &c_odd, "diagonal a_{1,1}(2n+1) = C_{2n+1}"},
      {&dg, 0, 2, C::diagonal_point_0_2, false, &c_even, "diagonal a_{0,2}(2n) = C_{2n}"},
      {&dg, 2, 0, C::diagonal_point_2i_0, false, &diag20, "diagonal a_{2,0}(2n)"},
  };
  for (const auto& r : rows) {
    const auto pipe = endpoint_series(*r.ctx, r.i, r.j);
    const auto closed = scalars(eval_closed_form(r.id, N, 1));
    auto pick = [&](const std::vector<BigRat>& a) { return r.odd ? odd(a) : even_from1(a); };
    std::string d1, d2;
    st(same_values(pick(pipe), *r.want, d1, std::string(r.label) + " (pipeline)"), d1);
    st(same_values(pick(closed), *r.want, d2, std::string(r.label) + " (closed form)"), d2);
  }
  return st.ok();
}

bool crit_bridges(std::string& d) {
  constexpr int N = 12;
  Steps st(d);
  SlitContext ctx(StepSet::square(), N);
  const TS B = bridges_gf(ctx);
  const auto& f = ctx.factors();
  std::string d1, d2;
  st(same_series(TS::one(N, 1) - B, ts_sqrt(ts_mul(f.D, f.DeltaBar)), d1,
                 "1 - B vs sqrt(D DeltaBar)"),
     d1);
  const auto tables = count_bridges(StepSet::square(), N);
  TS o(N, 1);
  for (int n = 0; n <= N; ++n) {
    for (const auto& [p, c] : tables[n].counts) o.at(n).add_term({p.first, 0, 0}, c);
  }
  st(same_series(B, o, d2, "B vs oracle bridges"), d2);
  return st.ok();
}

bool crit_extraction(std::string& d) {
  constexpr int N = 10;
  Steps st(d);
  const auto s1 = diagonal_S1_positive(N);
  const auto s2 = diagonal_S2_positive(N);
  st(s1.matches(), s1.label + (s1.matches() ? ": matches filter" : ": differs"));
  st(s2.matches(), s2.label + (s2.matches() ? ": matches filter" : ": differs"));
  // Constant-in-x term of S_2^+ is S_{0,2} = sum C_{2n} t^(2n).
  std::vector<BigRat> got, want;
  for (int n = 1; n <= 3; ++n) {
    const GaussRat c = s2.extracted[2 * n].coeff({0, 0, 0});
    if (c.b() != 0) return st(false, "S_{0,2} coefficient not rational");
    got.push_back(c.a());
    want.push_back(BigRat(catalan_number(2 * n)));
  }
  std::string d3;
  st(same_values(got, want, d3, "S_{0,2} at t^2, t^4, t^6 = C_{2n}"), d3);
  return st.ok();
}

bool crit_start_line(std::string& d) {
  Steps st(d);
  for (const auto& m : {StepSet::square(), StepSet::diagonal()}) {
    SlitContext ctx(m, 10);
    std::string d1, d2, d3;
    const bool neg = same_series(z_slice(start_negative(ctx, 8), 0), complete_gf(ctx), d1,
                                 m.name() + " start_negative z^0 slice vs S");
    st(neg, d1);
    const bool hit = check_ending_on_H(ctx, 8, d2);
    st(hit, m.name() + " " + d2);
    const bool lv = check_loops_visits(ctx, 2, d3);
    st(lv, m.name() + " " + d3);
  }
  return st.ok();
}

bool crit_refined(std::string& d) {
  constexpr int N = 11;
  Steps st(d);
  const TS refined = eval_closed_form(ClosedFormId::refined_S, N);
  const auto tables = count_vertical_marked(N);
  TS o(N, 3);
  for (int n = 0; n <= N; ++n) {
    for (const auto& [p, vs] : tables[n]) {
      for (std::size_t k = 0; k < vs.size(); ++k) {
        o.at(n).add_term({p.first, p.second, static_cast<int>(k)}, BigRat(vs[k]));
      }
    }
  }
  std::string d1;
  st(same_series(refined.truncated(N - 1), o.truncated(N - 1), d1,
                 "refined expansion vs vertical-marked oracle"),
     d1);

  for (const BigRat& v : {BigRat(2), BigRat(1, 3)}) {
    SlitContext ctx(StepSet::square_vertical_weight(v), N - 1);
    const TS sub = refined.truncated(N - 1).map_coeffs([&](const Laurent<BigRat>& c) {
      return c.substituted(2, v).remapped(2, {0, 1, 2});
    }, 2);
    std::string dv;
    st(same_series(complete_gf(ctx), sub, dv, "weighted pipeline at v=" + to_compact_string(v)), dv);
  }

  for (int n = 0; n <= 5; ++n) {
    const int len = 2 * n + 1;
    const auto it = tables[len].find({1, 0});
    std::vector<BigInt> vs = it == tables[len].end() ? std::vector<BigInt>{} : it->second;
    vs.resize(len + 1);
    std::vector<BigRat> got, want;
    BigInt row = 0;
    for (int v = 0; v <= len; ++v) {
      got.push_back(BigRat(vs[v]));
      row += vs[v];
      if (v % 2 == 1) {
        want.push_back(0);
      } else {
        const int k = v / 2;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, 2 * k);
        want.push_back(BigRat(binomial(2 * n, 2 * k) * pw * catalan_number(n - k)));
      }
    }
    std::string dn;
    st(same_values(got, want, dn, "a_{1,0}(" + std::to_string(len) + ") by vertical steps"), dn);
    st(row == catalan_number(len), "row sum C_" + std::to_string(len));
  }
  return st.ok();
}

bool crit_hitting_values(std::string& d) {
  Steps st(d);
  const Sqrt2Rat r2 = Sqrt2Rat::root();
  auto point = [&](int i, int j, const Sqrt2Rat& want) {
    const auto h = hitting_point_prob(i, j);
    const bool ok = h.exact && *h.exact == want && (!h.exact_alt || *h.exact_alt == want);
    return st(ok, "p_{" + std::to_string(i) + "," + std::to_string(j) + "} = " +
                      (h.exact ? to_string(*h.exact) : std::string("?")));
  };
  point(0, 1, Sqrt2Rat(BigRat(1, 2)));
  point(1, 0, Sqrt2Rat(2) - r2);
  const auto tr = transience(2);
  auto value = [&](const std::string& label, const Sqrt2Rat& got, const Sqrt2Rat& want) {
    return st(got == want, label + " = " + to_string(got));
  };
  value("p_1", tr.p[0], Sqrt2Rat(2) - r2);
  value("p_2", tr.p[1], Sqrt2Rat(BigRat(5, 34)) * (Sqrt2Rat(19) - Sqrt2Rat(11) * r2));
  value("v_1", tr.v[0], Sqrt2Rat(4) * (Sqrt2Rat(3) * r2 - Sqrt2Rat(4)));
  value("v_2", tr.v[1], Sqrt2Rat(10) * (Sqrt2Rat(22) * r2 - Sqrt2Rat(31)));
  return st.ok();
}

bool crit_hitting_tail(std::string& d) {
  Steps st(d);
  const auto h = hitting_distribution(10000);
  const double target = hitting_tail_constant();
  const auto& last = h.checkpoints.back();
  const double rel = std::abs(last.scaled / target - 1);
  st(h.all_positive, "exact coefficients positive up to k=" + std::to_string(h.exact_limit));
  st(h.partial_sums_increasing, "partial sums increasing");
  st(rel <= 0.02, "k^(3/2) p at k=" + std::to_string(last.k) + " is " + fmt(last.scaled) +
                      " vs " + fmt(target) + " (rel " + fmt(rel) + ")");
  st(h.partial_sum > 0.99, "partial sum " + fmt(h.partial_sum));
  return st.ok();
}

bool crit_conjecture(std::string& d) {
  Steps st(d);
  for (int i = 1; i <= 3; ++i) {
    const auto rep = conjecture_anti_diagonal(i, 10);
    st(rep.all_equal(), "i=" + std::to_string(i) + (rep.all_equal() ? " holds" : " fails") +
                            " for n <= 10");
  }
  return st.ok();
}

bool crit_limit_law(std::string& d) {
  Steps st(d);
  const double refl = gamma_reflection_residual();
  st(std::abs(refl) <= 1e-12, "Gamma reflection residual " + fmt(refl));
  const auto q = integrate_density();
  st(std::abs(q.mass - 1) <= 1e-6, "mass " + fmt(q.mass));
  st(q.max_polar_gap <= 1e-14, "polar gap " + fmt(q.max_polar_gap));
  const auto lm = limit_moments();
  double worst = 0;
  for (int k = 0; k < 5; ++k) worst = std::max(worst, std::abs(q.moments[k] - lm[k]));
  st(worst <= 1e-6, "quadrature moments vs closed values " + fmt(worst));

  const auto em = empirical_moments({100, 200, 400});
  for (const auto& r : em) {
    if (r.ey_exact != 0) return st(false, "E(Y_" + std::to_string(r.n) + ") != 0");
  }
  st(true, "E(Y_n) = 0 exactly");
  const auto& e400 = em.back();
  // values: X/sqrt n, Y/sqrt n, X^2/n, Y^2/n, R/sqrt n
  st(std::abs(e400.values[3] - 2.0 / 3) <= 0.05, "E(Y^2)/n " + fmt(e400.values[3]));
  st(std::abs(e400.values[2] - 7.0 / 12) <= 0.05, "E(X^2)/n " + fmt(e400.values[2]));
  st(std::abs(e400.values[0] - 0.337989) <= 0.05, "E(X)/sqrt n " + fmt(e400.values[0]));
  for (int k : {0, 2, 3, 4}) {
    bool mono = true;
    for (std::size_t a = 1; a < em.size(); ++a) mono = mono && em[a].gaps[k] < em[a - 1].gaps[k];
    st(mono, std::string(stat_names()[k]) + " gap decreasing " + fmt(em[0].gaps[k]) + " -> " +
                 fmt(e400.gaps[k]));
  }
  const auto an = asymptotic_an({400});
  const double rel = std::abs(an[0].ratio / 0.633985 - 1);
  st(rel <= 0.05, "a(400) 400^(1/4) / 4^400 = " + fmt(an[0].ratio) + " (rel " + fmt(rel) + ")");
  return st.ok();
}

}  // namespace

int acceptance_count() { return static_cast<int>(criterion_names().size()); }

std::string acceptance_name(int criterion) {
  if (criterion < 1 || criterion > acceptance_count()) {
    throw PreconditionError("no acceptance criterion " + std::to_string(criterion));
  }
  return criterion_names()[criterion - 1];
}

CheckResult run_acceptance(int criterion) {
  using Fn = bool (*)(std::string&);
  static const Fn fns[] = {crit_oracle,     crit_factorization, crit_catalan,  crit_bridges,
                           crit_extraction, crit_start_line,    crit_refined,  crit_hitting_values,
                           crit_hitting_tail, crit_conjecture,  crit_limit_law};
  const std::string name = std::to_string(criterion) + "_" + acceptance_name(criterion);
  return timed_check(name, kLimits[criterion - 1], fns[criterion - 1]);
}

std::vector<CheckResult> run_all_acceptance() {
  std::vector<CheckResult> out;
  for (int c = 1; c <= acceptance_count(); ++c) out.push_back(run_acceptance(c));
  return out;
}

}  // namespace slitwalk
