#include "slitwalk/exactnum.hpp"

#include <mpfr.h>

#include <cmath>
#include <memory>

namespace slitwalk {

std::string to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact_string(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_string(q);
}

BigRat parse_rat(std::string_view text) {
  BigRat q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw PreconditionError("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt catalan_number(long n) {
  BigInt c = binomial(2 * n, n);
  c /= n + 1;
  return c;
}

int sign(const Sqrt2Rat& x) {
  int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // opposite signs: the larger of a^2 and 2 b^2 wins
  int cmp_ = cmp(x.a() * x.a(), BigRat(2) * x.b() * x.b());
  return cmp_ > 0 ? sa : (cmp_ < 0 ? sb : 0);
}

namespace {

struct MpfrDeleter {
  void operator()(__mpfr_struct* p) const {
    mpfr_clear(p);
    delete p;
  }
};
using MpfrPtr = std::unique_ptr<__mpfr_struct, MpfrDeleter>;

MpfrPtr make_mpfr(int bits) {
  auto* p = new __mpfr_struct;
  mpfr_init2(p, bits);
  return MpfrPtr(p);
}

// Evaluates a + b sqrt(2) into out. Working precision carries guard bits so
// the handful of correctly rounded operations stays well below 2^(1-bits).
void eval_sqrt2(const Sqrt2Rat& x, int bits, mpfr_ptr out) {
  const int work = bits + 16;
  auto s = make_mpfr(work);
  auto ta = make_mpfr(work);
  auto tb = make_mpfr(work);
  mpfr_sqrt_ui(s.get(), 2, MPFR_RNDN);
  mpfr_set_q(ta.get(), x.a().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(tb.get(), x.b().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(tb.get(), tb.get(), s.get(), MPFR_RNDN);
  if (sgn(x.a()) * sgn(x.b()) >= 0) {
    mpfr_add(out, ta.get(), tb.get(), MPFR_RNDN);
    return;
  }
  // a and b sqrt 2 cancel: use (a^2 - 2 b^2) / (a - b sqrt 2), both terms of
  // the denominator now share a sign.
  auto num = make_mpfr(work);
  mpfr_set_q(num.get(), x.norm().get_mpq_t(), MPFR_RNDN);
  mpfr_sub(ta.get(), ta.get(), tb.get(), MPFR_RNDN);
  mpfr_div(out, num.get(), ta.get(), MPFR_RNDN);
}

}  // namespace

std::string to_decimal(const Sqrt2Rat& x, int precision_bits, int digits) {
  auto v = make_mpfr(precision_bits + 16);
  eval_sqrt2(x, precision_bits, v.get());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double to_double(const Sqrt2Rat& x, int precision_bits) {
  auto v = make_mpfr(precision_bits + 16);
  eval_sqrt2(x, precision_bits, v.get());
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

double to_double(const BigRat& q) {
  auto v = make_mpfr(64);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

std::complex<double> to_complex(const GaussRat& x) { return {to_double(x.a()), to_double(x.b())}; }

AnyQuad make_quad(const BigRat& a, const BigRat& b, int d) {
  if (d == -1) return GaussRat(a, b);
  if (d == 2) return Sqrt2Rat(a, b);
  throw PreconditionError("unsupported discriminant " + std::to_string(d) + " (expected -1 or 2)");
}

int discriminant_of(const AnyQuad& x) { return x.index() == 0 ? -1 : 2; }

AnyQuad quad_field_ops(const AnyQuad& lhs, const AnyQuad& rhs, QuadOp op) {
  if (lhs.index() != rhs.index()) {
    throw DiscriminantMismatch("cannot combine elements of Q(sqrt " +
                               std::to_string(discriminant_of(lhs)) + ") and Q(sqrt " +
                               std::to_string(discriminant_of(rhs)) + ")");
  }
  return std::visit(
      [&](const auto& l) -> AnyQuad {
        using T = std::decay_t<decltype(l)>;
        const T& r = std::get<T>(rhs);
        switch (op) {
          case QuadOp::add: return l + r;
          case QuadOp::sub: return l - r;
          case QuadOp::mul: return l * r;
          case QuadOp::div: return l / r;
        }
        throw PreconditionError("unknown quadratic field operation");
      },
      lhs);
}

double quad_to_float(const AnyQuad& x, int precision_bits) {
  if (const auto* s = std::get_if<Sqrt2Rat>(&x)) return to_double(*s, precision_bits);
  return to_double(std::get<GaussRat>(x).a());
}

namespace {
template <int D>
std::string quad_string(const QuadElem<D>& x, const char* unit) {
  if (sgn(x.b()) == 0) return to_compact_string(x.a());
  std::string bpart = to_compact_string(abs(x.b())) + "*" + unit;
  if (sgn(x.a()) == 0) return (sgn(x.b()) < 0 ? "-" : "") + bpart;
  return to_compact_string(x.a()) + (sgn(x.b()) < 0 ? " - " : " + ") + bpart;
}
}  // namespace

std::string to_string(const GaussRat& x) { return quad_string(x, "i"); }
std::string to_string(const Sqrt2Rat& x) { return quad_string(x, "sqrt(2)"); }

}  // namespace slitwalk
