#include "slitwalk/closedform.hpp"

#include "slitwalk/model.hpp"
#include "slitwalk/oracle.hpp"

namespace slitwalk {

namespace {

using TS = TSeries<BigRat>;

// Polynomial in t with scalar coefficients.
TS tpoly(std::initializer_list<std::pair<int, BigRat>> terms, int order, int arity = 1) {
  TS s(order, arity);
  for (const auto& [n, c] : terms) {
    if (n <= order) s.at(n) += LaurentPoly::constant(c, arity);
  }
  return s;
}

// sqrt(1 + c t^k)
TS sqrt1p(const BigRat& c, int k, int order) { return ts_sqrt(tpoly({{0, 1}, {k, c}}, order)); }

TS lift_arity(const TS& a, int arity) { return ts_remap(a, arity, {0, 1, 2}); }

LaurentPoly mono(const BigRat& c, int i, int j = 0, int k = 0, int arity = 1) {
  return LaurentPoly::monomial(c, {i, j, k}, arity);
}

TS one(int order, int arity = 1) { return TS::one(order, arity); }

// (1 - 4t)^(-3/4)
TS inv_three_quarter_power(int order) {
  return ts_pow(ts_sqrt(ts_sqrt(tpoly({{0, 1}, {1, -4}}, order))), -3);
}

const BigRat kHalf(1, 2);

TS square_S(int N) {
  // sqrt((1 - 2t(1+1/x) + sqrt(1-4t))/2) sqrt((1 + 2t(1-1/x) + sqrt(1+4t))/2) / K
  TS r1 = lift_arity(sqrt1p(-4, 1, N), 2);
  TS r2 = lift_arity(sqrt1p(4, 1, N), 2);
  TS p1(N, 2), p2(N, 2);
  p1.at(0) = LaurentPoly::constant(1, 2);
  p2.at(0) = LaurentPoly::constant(1, 2);
  if (N >= 1) {
    p1.at(1) = mono(-2, 0, 0, 0, 2) + mono(-2, -1, 0, 0, 2);
    p2.at(1) = mono(2, 0, 0, 0, 2) + mono(-2, -1, 0, 0, 2);
  }
  TS a = ts_sqrt((p1 + r1) * kHalf);
  TS b = ts_sqrt((p2 + r2) * kHalf);
  TS K(N, 2);
  K.at(0) = LaurentPoly::constant(1, 2);
  if (N >= 1) {
    K.at(1) = mono(-1, 1, 0, 0, 2) + mono(-1, -1, 0, 0, 2) + mono(-1, 0, 1, 0, 2) +
              mono(-1, 0, -1, 0, 2);
  }
  return ts_mul(ts_mul(a, b), ts_recip(K));
}

TS diagonal_S(int N) {
  // sqrt((1 - 8t^2(1 + 1/x^2) + sqrt(1-16t^2))/2) / (1 - t(x+1/x)(y+1/y))
  TS r = lift_arity(sqrt1p(-16, 2, N), 2);
  TS p(N, 2);
  p.at(0) = LaurentPoly::constant(1, 2);
  if (N >= 2) p.at(2) = mono(-8, 0, 0, 0, 2) + mono(-8, -2, 0, 0, 2);
  TS a = ts_sqrt((p + r) * kHalf);
  TS K(N, 2);
  K.at(0) = LaurentPoly::constant(1, 2);
  if (N >= 1) {
    K.at(1) = mono(-1, 1, 1, 0, 2) + mono(-1, 1, -1, 0, 2) + mono(-1, -1, 1, 0, 2) +
              mono(-1, -1, -1, 0, 2);
  }
  return ts_mul(a, ts_recip(K));
}

TS refined_S(int N) {
  // variables (x, y, v)
  const int ar = 3;
  auto c = [&](const BigRat& q, int i, int j, int k) { return mono(q, i, j, k, ar); };
  auto quad = [&](LaurentPoly t1, LaurentPoly t2) {
    TS s(N, ar);
    s.at(0) = LaurentPoly::constant(1, ar);
    if (N >= 1) s.at(1) = std::move(t1);
    if (N >= 2) s.at(2) = std::move(t2);
    return s;
  };
  // delta1 = (1 - 2t(1+v))(1 + 2t(1-v)) = 1 - 4tv - 4t^2(1 - v^2)
  // delta2 = (1 - 2t(1-v))(1 + 2t(1+v)) = 1 + 4tv - 4t^2(1 - v^2)
  LaurentPoly t2 = c(-4, 0, 0, 0) + c(4, 0, 0, 2);
  TS d1 = quad(c(-4, 0, 0, 1), t2);
  TS d2 = quad(c(4, 0, 0, 1), t2);
  TS p1 = quad(c(-2, 0, 0, 1) + c(-2, -1, 0, 0), LaurentPoly(ar));
  TS p2 = quad(c(2, 0, 0, 1) + c(-2, -1, 0, 0), LaurentPoly(ar));
  TS a = ts_sqrt((p1 + ts_sqrt(d1)) * kHalf);
  TS b = ts_sqrt((p2 + ts_sqrt(d2)) * kHalf);
  TS K = quad(c(-1, 1, 0, 0) + c(-1, -1, 0, 0) + c(-1, 0, 1, 1) + c(-1, 0, -1, 1),
              LaurentPoly(ar));
  return ts_mul(ts_mul(a, b), ts_recip(K));
}

TS square_S_at_ones(int N) {
  TS a = ts_sqrt((one(N) + sqrt1p(4, 1, N)) * kHalf);
  TS b = ts_sqrt((one(N) + sqrt1p(-4, 1, N)) * kHalf);
  return ts_mul(ts_mul(a, b), inv_three_quarter_power(N));
}

TS diagonal_S_at_ones(int N) {
  TS a = ts_sqrt(sqrt1p(4, 1, N));
  TS b = ts_sqrt((one(N) + sqrt1p(-16, 2, N)) * kHalf);
  return ts_mul(ts_mul(a, b), inv_three_quarter_power(N));
}

// Radical forms of the endpoint series, computed one or two orders higher and
// divided by the matching power of t.
TS square_0_1(int N) {
  return ts_divide_by_t((one(N + 1) - sqrt1p(-16, 2, N + 1)) * BigRat(1, 8), 1);
}
TS square_1_0(int N) {
  return ts_divide_by_t(
      (one(N + 1) * BigRat(2) - sqrt1p(-4, 1, N + 1) - sqrt1p(4, 1, N + 1)) * BigRat(1, 4), 1);
}
TS square_m1_1(int N) {
  return ts_divide_by_t(
      (sqrt1p(4, 1, N + 1) - sqrt1p(-4, 1, N + 1) - tpoly({{1, 4}}, N + 1)) * BigRat(1, 8), 1);
}
TS square_1_1(int N) {
  const int M = N + 2;
  TS t4 = tpoly({{1, 4}}, M);
  TS num = tpoly({{0, 1}, {2, -24}}, M) + ts_mul(t4, sqrt1p(4, 1, M)) -
           ts_mul(t4, sqrt1p(-4, 1, M)) - sqrt1p(-16, 2, M);
  return ts_divide_by_t(num * BigRat(1, 32), 2);
}
TS diagonal_0_2(int N) { return square_m1_1(N) * BigRat(2); }

TS diagonal_2i_0(int N, int i) {
  if (i < 1) throw PreconditionError("diagonal_point_2i_0 needs i >= 1");
  if (2 * i > N) return TS(N, 1);
  // C(2i, i) t^(2i) C(4t^2)^(2i)
  const TS C = catalan_series(N);
  TS sub(N, 1);
  for (int n = 0; 2 * n <= N; ++n) {
    BigRat q = C[n].constant_term();
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), 2 * n);
    sub.at(2 * n) = LaurentPoly::constant(q, 1);
  }
  return ts_shift_up(ts_pow(sub, 2 * i), 2 * i) * BigRat(binomial(2 * i, i));
}

TS conjecture_series(int N, int i) {
  if (i < 1) throw PreconditionError("conjecture needs i >= 1");
  TS s(N, 1);
  for (int n = i; 2 * n <= N; ++n) s.at(2 * n) = LaurentPoly::constant(conjectured_anti_diagonal(i, n), 1);
  return s;
}

struct NameEntry {
  ClosedFormId id;
  const char* name;
};
const NameEntry kNames[] = {
    {ClosedFormId::catalan, "catalan"},
    {ClosedFormId::u, "u"},
    {ClosedFormId::square_S, "square_S"},
    {ClosedFormId::square_S_at_ones, "square_S_at_ones"},
    {ClosedFormId::diagonal_S, "diagonal_S"},
    {ClosedFormId::diagonal_S_at_ones, "diagonal_S_at_ones"},
    {ClosedFormId::refined_S, "refined_S"},
    {ClosedFormId::square_point_0_1, "square_point_0_1"},
    {ClosedFormId::square_point_1_0, "square_point_1_0"},
    {ClosedFormId::square_point_m1_1, "square_point_-1_1"},
    {ClosedFormId::square_point_1_1, "square_point_1_1"},
    {ClosedFormId::diagonal_point_1_1, "diagonal_point_1_1"},
    {ClosedFormId::diagonal_point_m1_1, "diagonal_point_-1_1"},
    {ClosedFormId::diagonal_point_0_2, "diagonal_point_0_2"},
    {ClosedFormId::diagonal_point_2i_0, "diagonal_point_2i_0"},
    {ClosedFormId::conjecture, "conjecture"},
};

}  // namespace

const std::vector<ClosedFormId>& all_closed_form_ids() {
  static const std::vector<ClosedFormId> ids = [] {
    std::vector<ClosedFormId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string closed_form_name(ClosedFormId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  throw PreconditionError("unknown closed form id");
}

ClosedFormId parse_closed_form_id(const std::string& name) {
  for (const auto& e : kNames) {
    if (name == e.name) return e.id;
  }
  std::string known;
  for (const auto& e : kNames) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw PreconditionError("unknown closed form '" + name + "' (known: " + known + ")");
}

std::vector<BigInt> catalan_numbers(int count) {
  std::vector<BigInt> out;
  for (int n = 0; n < count; ++n) out.push_back(catalan_number(n));
  return out;
}

TSeries<BigRat> catalan_series(int order) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  // (1 - sqrt(1 - 4t)) / (2t)
  return ts_divide_by_t((one(order + 1) - sqrt1p(-4, 1, order + 1)) * kHalf, 1);
}

TSeries<BigRat> u_series(int order) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  // (sqrt(1 + 4t) - 1) / (sqrt(1 - 4t) + 1)
  return ts_mul(sqrt1p(4, 1, order) - one(order), ts_recip(sqrt1p(-4, 1, order) + one(order)));
}

BigRat diagonal_2i_0_coefficient(int i, int n) {
  if (i < 1 || n < i) return 0;
  BigInt four = 1;
  mpz_mul_2exp(four.get_mpz_t(), four.get_mpz_t(), 2 * (n - i));
  BigRat q(BigInt(i) * binomial(2 * i, i) * binomial(2 * n, n - i) * four, BigInt(n));
  q.canonicalize();
  return q;
}

BigRat conjectured_anti_diagonal(int i, int n) {
  if (i < 1 || n < 1) throw PreconditionError("conjectured_anti_diagonal needs i, n >= 1");
  BigRat q(BigInt(i) * binomial(2 * i, i) * binomial(n + i, 2 * i) * binomial(4 * n, 2 * n),
           BigInt(2 * n) * binomial(2 * n + 2 * i, 2 * i));
  q.canonicalize();
  return q;
}

TSeries<BigRat> eval_closed_form(ClosedFormId id, int order, int param) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  switch (id) {
    case ClosedFormId::catalan: return catalan_series(order);
    case ClosedFormId::u: return u_series(order);
    case ClosedFormId::square_S: return square_S(order);
    case ClosedFormId::square_S_at_ones: return square_S_at_ones(order);
    case ClosedFormId::diagonal_S: return diagonal_S(order);
    case ClosedFormId::diagonal_S_at_ones: return diagonal_S_at_ones(order);
    case ClosedFormId::refined_S: return refined_S(order);
    case ClosedFormId::square_point_0_1: return square_0_1(order);
    case ClosedFormId::square_point_1_0: return square_1_0(order);
    case ClosedFormId::square_point_m1_1: return square_m1_1(order);
    case ClosedFormId::square_point_1_1: return square_1_1(order);
    case ClosedFormId::diagonal_point_1_1: return square_1_0(order);
    case ClosedFormId::diagonal_point_m1_1: return u_series(order);
    case ClosedFormId::diagonal_point_0_2: return diagonal_0_2(order);
    case ClosedFormId::diagonal_point_2i_0: return diagonal_2i_0(order, param);
    case ClosedFormId::conjecture: return conjecture_series(order, param);
  }
  throw PreconditionError("unknown closed form id");
}

TSeries<BigRat> eval_point_u_form(ClosedFormId id, int order) {
  const TS u = u_series(order);
  const TS u2 = ts_mul(u, u);
  const TS o = one(order);
  const TS inv1mu2 = ts_recip(o - u2);
  switch (id) {
    case ClosedFormId::square_point_0_1: return ts_mul(u, inv1mu2);
    case ClosedFormId::square_point_1_0:
    case ClosedFormId::diagonal_point_1_1: return ts_mul(ts_mul(u, o + u2), inv1mu2);
    case ClosedFormId::square_point_m1_1: return ts_mul(u2, inv1mu2);
    case ClosedFormId::square_point_1_1:
      return ts_mul(ts_mul(u2, o * BigRat(2) - u2), ts_mul(inv1mu2, inv1mu2));
    case ClosedFormId::diagonal_point_m1_1: return u;
    case ClosedFormId::diagonal_point_0_2: return ts_mul(u2 * BigRat(2), inv1mu2);
    default: break;
  }
  throw PreconditionError("no u-form for closed form '" + closed_form_name(id) + "'");
}

bool ConjectureReport::all_equal() const {
  for (const auto& r : rows) {
    if (!r.equal()) return false;
  }
  return !rows.empty();
}

ConjectureReport conjecture_anti_diagonal(int i, int nmax) {
  if (i < 1) throw PreconditionError("conjecture_anti_diagonal needs i >= 1");
  ConjectureReport rep;
  rep.i = i;
  if (nmax < i) return rep;
  const auto tables = count_walks(StepSet::square(), 0, 2 * nmax);
  for (int n = i; n <= nmax; ++n) {
    rep.rows.push_back({n, conjectured_anti_diagonal(i, n), tables[2 * n].at(-i, i)});
  }
  return rep;
}

}  // namespace slitwalk
