#include "slitwalk/halfline_prob.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>

#include "slitwalk/model.hpp"
#include "slitwalk/oracle.hpp"

namespace slitwalk {

namespace {

const Sqrt2Rat kSqrt2(0, 1);

// a + b sqrt 2 with integer parts.
struct ZSqrt2 {
  BigInt a, b;
};

// (4 - 2 sqrt 2) x
ZSqrt2 times_one_plus_c(const ZSqrt2& x) { return {4 * x.a - 4 * x.b, 4 * x.b - 2 * x.a}; }
// (3 - 2 sqrt 2) x
ZSqrt2 times_c(const ZSqrt2& x) { return {3 * x.a - 4 * x.b, 3 * x.b - 2 * x.a}; }

// G_k = 2^k k! g_k, g = sqrt((1 - z)(1 - c z)):
// G_{k+1} = (2k - 1)(1 + c) G_k - 4 k (k - 2) c G_{k-1}.
class ScaledSqrtDelta {
 public:
  ScaledSqrtDelta() : prev_{0, 0}, cur_{1, 0} {}
  int k() const { return k_; }
  const ZSqrt2& current() const { return cur_; }
  void advance() {
    ZSqrt2 t1 = times_one_plus_c(cur_);
    ZSqrt2 t2 = times_c(prev_);
    const long m1 = 2L * k_ - 1;
    const long m2 = 4L * k_ * (k_ - 2);
    ZSqrt2 next;
    mpz_mul_si(next.a.get_mpz_t(), t1.a.get_mpz_t(), m1);
    mpz_mul_si(next.b.get_mpz_t(), t1.b.get_mpz_t(), m1);
    BigInt s;
    mpz_mul_si(s.get_mpz_t(), t2.a.get_mpz_t(), m2);
    next.a -= s;
    mpz_mul_si(s.get_mpz_t(), t2.b.get_mpz_t(), m2);
    next.b -= s;
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    ++k_;
  }
  // 2^k k!
  BigInt scale() const {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k_));
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), static_cast<mp_bitcnt_t>(k_));
    return f;
  }

 private:
  int k_ = 0;
  ZSqrt2 prev_, cur_;
};

Sqrt2Rat to_sqrt2rat(const ZSqrt2& x, const BigInt& den) {
  BigRat a(x.a, den), b(x.b, den);
  a.canonicalize();
  b.canonicalize();
  return Sqrt2Rat(a, b);
}

// Float value and exact sign of (a + b sqrt 2) / scale, where the two parts
// may cancel to thousands of bits.
class Sqrt2Evaluator {
 public:
  Sqrt2Evaluator() {
    mpfr_inits2(80, root_, num_, den_, tmp_, scale_, nullptr);
    mpfr_sqrt_ui(root_, 2, MPFR_RNDN);
    mpfr_set_ui(scale_, 1, MPFR_RNDN);
  }
  ~Sqrt2Evaluator() { mpfr_clears(root_, num_, den_, tmp_, scale_, nullptr); }
  Sqrt2Evaluator(const Sqrt2Evaluator&) = delete;
  Sqrt2Evaluator& operator=(const Sqrt2Evaluator&) = delete;

  // scale *= 2 k
  void grow_scale(int k) { mpfr_mul_ui(scale_, scale_, 2UL * static_cast<unsigned long>(k), MPFR_RNDN); }

  // Also reports the exact sign.
  double value(const ZSqrt2& x, int& sign) {
    const int sa = sgn(x.a), sb = sgn(x.b);
    if (sa * sb >= 0) {
      sign = sa != 0 ? sa : sb;
      mpfr_set_z(num_, x.b.get_mpz_t(), MPFR_RNDN);
      mpfr_mul(num_, num_, root_, MPFR_RNDN);
      mpfr_set_z(tmp_, x.a.get_mpz_t(), MPFR_RNDN);
      mpfr_add(num_, num_, tmp_, MPFR_RNDN);
    } else {
      // (a^2 - 2b^2) / (a - b sqrt 2)
      norm(x);
      sign = sa * sgn(norm_);
      mpfr_set_z(num_, norm_.get_mpz_t(), MPFR_RNDN);
      mpfr_set_z(den_, x.b.get_mpz_t(), MPFR_RNDN);
      mpfr_mul(den_, den_, root_, MPFR_RNDN);
      mpfr_set_z(tmp_, x.a.get_mpz_t(), MPFR_RNDN);
      mpfr_sub(den_, tmp_, den_, MPFR_RNDN);
      mpfr_div(num_, num_, den_, MPFR_RNDN);
    }
    mpfr_div(num_, num_, scale_, MPFR_RNDN);
    return mpfr_get_d(num_, MPFR_RNDN);
  }

 private:
  void norm(const ZSqrt2& x) {
    BigInt b2;
    mpz_mul(norm_.get_mpz_t(), x.a.get_mpz_t(), x.a.get_mpz_t());
    mpz_mul(b2.get_mpz_t(), x.b.get_mpz_t(), x.b.get_mpz_t());
    mpz_submul_ui(norm_.get_mpz_t(), b2.get_mpz_t(), 2);
  }
  mpfr_t root_, num_, den_, tmp_, scale_;
  BigInt norm_;
};

bool is_checkpoint(int k, int K) {
  if (k == K) return true;
  for (int p = 1; p <= k; p *= 10) {
    if (p == k) return true;
  }
  return false;
}

// Exact values at t = 1/4: sqrt(1 + 4t) = sqrt 2, sqrt(1 - 4t) = sqrt(1 - 16t^2) = 0.
struct PointForms {
  Sqrt2Rat radical, u_form;
};

std::optional<PointForms> closed_point(int i, int j) {
  const Sqrt2Rat u = kSqrt2 - Sqrt2Rat(1);
  const Sqrt2Rat u2 = u * u;
  const Sqrt2Rat one(1);
  const BigRat t(1, 4);
  if (j == 0 && i == 1) return PointForms{(Sqrt2Rat(2) - kSqrt2) / Sqrt2Rat(4 * t), u * (one + u2) / (one - u2)};
  if (j == 0) return std::nullopt;
  j = std::abs(j);
  if (j != 1) return std::nullopt;
  if (i == 0) return PointForms{Sqrt2Rat(1) / Sqrt2Rat(8 * t), u / (one - u2)};
  if (i == -1) {
    return PointForms{(kSqrt2 - Sqrt2Rat(4 * t)) / Sqrt2Rat(8 * t), u2 / (one - u2)};
  }
  if (i == 1) {
    Sqrt2Rat num = Sqrt2Rat(1 - 24 * t * t) + Sqrt2Rat(4 * t) * kSqrt2;
    return PointForms{num / Sqrt2Rat(32 * t * t), u2 * (Sqrt2Rat(2) - u2) / ((one - u2) * (one - u2))};
  }
  return std::nullopt;
}

}  // namespace

Sqrt2Rat quarter_c() { return Sqrt2Rat(3, -2); }

std::vector<Sqrt2Rat> s0_at_quarter(int K) {
  if (K < 0) throw PreconditionError("s0_at_quarter: K must be >= 0");
  const Sqrt2Rat c = quarter_c();
  const Sqrt2Rat onePlusC = Sqrt2Rat(1) + c;
  std::vector<Sqrt2Rat> s{Sqrt2Rat(1)};
  for (int n = 0; n < K; ++n) {
    Sqrt2Rat next = onePlusC * Sqrt2Rat(BigRat(2 * n + 1, 2)) * s[n];
    if (n >= 1) next -= c * Sqrt2Rat(n) * s[n - 1];
    s.push_back(next / Sqrt2Rat(n + 1));
  }
  return s;
}

QuarterContext quarter_context(int K) {
  return {s0_at_quarter(K), Sqrt2Rat(-4, 4)};
}

HittingPoint hitting_point_estimate(int i, int j, int nmax) {
  HittingPoint hp;
  hp.i = i;
  hp.j = j;
  hp.method = "enumeration to n=" + std::to_string(nmax) + " plus fitted n^(-3/2) tail";
  const auto counts = count_endpoint(StepSet::square(), 0, i, j, nmax);
  BigInt pow4 = 1;
  double partial = 0, last = 0;
  int lastN = -1;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) pow4 *= 4;
    if (sgn(counts[n]) == 0) continue;
    BigRat q = counts[n] / BigRat(pow4);
    last = to_double(q);
    partial += last;
    lastN = n;
  }
  hp.terms = nmax + 1;
  hp.partial_sum = partial;
  if (lastN <= 0) {
    hp.value = partial;
    return hp;
  }
  // Only one parity of n contributes: sum_{m>=1} (N + 2m)^(-3/2) ~ 1/sqrt(N + 1).
  const double C = last * std::pow(lastN, 1.5);
  const double tail = C / std::sqrt(lastN + 1.0);
  hp.value = partial + tail;
  hp.error_bar = tail;
  return hp;
}

HittingPoint hitting_point_prob(int i, int j, int nmax_estimate) {
  HittingPoint hp;
  hp.i = i;
  hp.j = j;
  if (j == 0 && i <= 0) {
    hp.exact = Sqrt2Rat(i == 0 ? 1 : 0);
    hp.method = "on H";
  } else if (auto forms = closed_point(i, j)) {
    hp.exact = forms->radical;
    hp.exact_alt = forms->u_form;
    hp.method = "closed form (radical and u = sqrt 2 - 1)";
    if (forms->radical != forms->u_form) {
      throw InternalInconsistency("hitting probability: radical and u forms disagree");
    }
  } else if (j == 0) {
    hp.exact = s0_at_quarter(i).back();
    hp.method = "coefficient of ((1 - x)(1 - c x))^(-1/2)";
  } else {
    return hitting_point_estimate(i, j, nmax_estimate);
  }
  hp.value = to_double(*hp.exact);
  return hp;
}

Sqrt2Rat hitting_coefficient_exact(int k) {
  if (k < 0) throw PreconditionError("hitting_coefficient_exact: k must be >= 0");
  ScaledSqrtDelta g;
  while (g.k() < k + 1) g.advance();
  return -to_sqrt2rat(g.current(), g.scale());
}

double hitting_tail_constant() {
  return std::sqrt((std::numbers::sqrt2 - 1.0) / (2.0 * std::numbers::pi));
}

HittingDistribution hitting_distribution(int K, int keep_exact, int exact_limit) {
  if (K < 1) throw PreconditionError("hitting_distribution: K must be >= 1");
  HittingDistribution hd;
  hd.K = K;
  hd.exact_limit = std::min(K, exact_limit);
  hd.target = hitting_tail_constant();
  hd.p.reserve(static_cast<std::size_t>(K) + 1);

  const long double c = 3.0L - 2.0L * std::sqrt(2.0L);
  long double gPrev = 0, gCur = 1;  // floating recurrence for g_k
  ScaledSqrtDelta exact;
  Sqrt2Evaluator eval;
  long double partial = 0;
  for (int k = 0; k <= K; ++k) {
    // advance to g_{k+1}; p^{[k]} = -g_{k+1}
    const long double gNext =
        ((1 + c) * (2.0L * k - 1) * gCur - 2 * c * (k - 2.0L) * gPrev) / (2.0L * (k + 1));
    gPrev = gCur;
    gCur = gNext;
    double pk = static_cast<double>(-gNext);
    if (k <= hd.exact_limit) {
      exact.advance();
      eval.grow_scale(k + 1);
      const ZSqrt2 neg{-exact.current().a, -exact.current().b};
      int sign = 0;
      const double fromExact = eval.value(neg, sign);
      if (sign <= 0) hd.all_positive = false;
      if (fromExact != 0) {
        hd.max_float_rel_dev =
            std::max(hd.max_float_rel_dev, std::abs(pk - fromExact) / std::abs(fromExact));
      }
      pk = fromExact;
      if (k < keep_exact) hd.leading_exact.push_back(to_sqrt2rat(neg, exact.scale()));
    } else if (pk <= 0) {
      hd.all_positive = false;
    }
    hd.p.push_back(pk);
    const long double before = partial;
    partial += pk;
    if (!(partial > before)) hd.partial_sums_increasing = false;
    if (k >= 1 && is_checkpoint(k, K)) {
      hd.checkpoints.push_back({k, pk, std::pow(static_cast<double>(k), 1.5) * pk,
                                static_cast<double>(partial)});
    }
  }
  hd.partial_sum = static_cast<double>(partial);
  return hd;
}

Transience transience(int kmax) {
  if (kmax < 1) throw PreconditionError("transience: kmax must be >= 1");
  const QuarterContext q = quarter_context(kmax);
  Transience tr;
  Sqrt2Rat sum(0), sumSq(0);
  for (int k = 1; k <= kmax; ++k) {
    sum += q.s[k - 1];
    sumSq += q.s[k - 1] * q.s[k - 1];
    const Sqrt2Rat pk = q.s[k] * sum / sumSq;
    tr.p.push_back(pk);
    tr.v.push_back(q.sqrt_D_inv * q.s[k] * sum);
    if (sign(Sqrt2Rat(1) - pk) <= 0) tr.all_below_one = false;
    if (!(q.s[k] < q.s[k - 1])) tr.s_decreasing = false;
  }
  return tr;
}

}  // namespace slitwalk
