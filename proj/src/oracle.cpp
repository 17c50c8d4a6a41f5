#include "slitwalk/oracle.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace slitwalk {

BigRat CountTable::at(int i, int j) const {
  auto it = counts.find({i, j});
  return it == counts.end() ? BigRat(0) : it->second;
}

BigRat CountTable::total() const {
  BigRat s = 0;
  for (const auto& [p, c] : counts) s += c;
  return s;
}

namespace {
std::atomic<int> guard_override{0};
}

void set_oracle_guard_n(int cap) {
  if (cap < 0) throw PreconditionError("guard cap must be positive");
  guard_override = cap;
}

int oracle_guard_n() {
  if (const int o = guard_override.load(); o > 0) return o;
  if (const char* env = std::getenv("SLITWALK_GUARD_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 400;
}

void check_guard(int nmax) {
  if (nmax < 0) throw PreconditionError("walk length must be >= 0");
  const int cap = oracle_guard_n();
  if (nmax > cap) {
    throw ResourceGuardExceeded("enumeration to length " + std::to_string(nmax) +
                                " exceeds the guard " + std::to_string(cap) +
                                " (set SLITWALK_GUARD_N to raise it)");
  }
}

namespace {

bool on_H(int i, int j) { return j == 0 && i <= 0; }

// Step weights scaled to integers by the lcm of their denominators.
struct ScaledSteps {
  std::vector<int> dx, dy;
  std::vector<BigInt> w;
  bool unit = true;
  BigInt scale = 1;
  int min_dx = 0, max_dx = 0, max_dy = 0;
};

ScaledSteps scale_steps(const StepSet& m) {
  ScaledSteps st;
  for (const auto& s : m.steps()) {
    mpz_lcm(st.scale.get_mpz_t(), st.scale.get_mpz_t(), s.weight.get_den().get_mpz_t());
  }
  st.min_dx = m.min_dx();
  st.max_dx = m.max_dx();
  for (const auto& s : m.steps()) {
    st.dx.push_back(s.dx);
    st.dy.push_back(s.dy);
    BigRat w = s.weight * st.scale;
    st.w.push_back(w.get_num());
    if (st.w.back() != 1) st.unit = false;
    st.max_dy = std::max(st.max_dy, std::abs(s.dy));
  }
  return st;
}

struct Box {
  int imin, imax, jmin, jmax;
};

Box reach(const ScaledSteps& st, int start_k, int n) {
  return {start_k + n * st.min_dx, start_k + n * st.max_dx, -n * st.max_dy, n * st.max_dy};
}

template <class Cell>
class Grid {
 public:
  Grid(const Box& b, const Cell& blank)
      : imin_(b.imin), jmin_(b.jmin), height_(b.jmax - b.jmin + 1),
        cells_(static_cast<std::size_t>(b.imax - b.imin + 1) * height_, blank) {}
  Cell& at(int i, int j) { return cells_[index(i, j)]; }
  const Cell& at(int i, int j) const { return cells_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - imin_) * height_ + static_cast<std::size_t>(j - jmin_);
  }
  int imin_, jmin_;
  std::size_t height_;
  std::vector<Cell> cells_;
};

// Layer-by-layer enumeration. Hooks:
//   zero(cell) -> bool, clear(cell), seed(cell)
//   move(dst, src, step, ti, tj)     target avoids H
//   land(src, step, ti)              target on H (optional bookkeeping)
//   layer(n, grid, box)              after layer n is complete
template <class Cell, class Zero, class Clear, class Seed, class Move, class Land, class Layer>
void enumerate(const ScaledSteps& st, int start_k, int nmax, const Cell& blank, Zero zero,
               Clear clear, Seed seed, Move move, Land land, Layer layer) {
  const Box full = reach(st, start_k, nmax);
  Grid<Cell> cur(full, blank), next(full, blank);
  seed(cur.at(start_k, 0));
  layer(0, cur, reach(st, start_k, 0));
  for (int n = 1; n <= nmax; ++n) {
    const Box src = reach(st, start_k, n - 1);
    const Box dst = reach(st, start_k, n);
    for (int i = dst.imin; i <= dst.imax; ++i) {
      for (int j = dst.jmin; j <= dst.jmax; ++j) clear(next.at(i, j));
    }
    for (int i = src.imin; i <= src.imax; ++i) {
      for (int j = src.jmin; j <= src.jmax; ++j) {
        const Cell& c = cur.at(i, j);
        if (zero(c)) continue;
        for (std::size_t s = 0; s < st.dx.size(); ++s) {
          const int ti = i + st.dx[s];
          const int tj = j + st.dy[s];
          if (on_H(ti, tj)) {
            land(c, s, ti);
          } else {
            move(next.at(ti, tj), c, s, ti, tj);
          }
        }
      }
    }
    std::swap(cur, next);
    layer(n, cur, dst);
  }
}

void add_weighted(mpz_class& dst, const mpz_class& src, const ScaledSteps& st, std::size_t s) {
  if (st.unit) {
    mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), src.get_mpz_t());
  } else {
    mpz_addmul(dst.get_mpz_t(), src.get_mpz_t(), st.w[s].get_mpz_t());
  }
}

// scale^n, for converting scaled counts back to weighted counts.
class ScalePowers {
 public:
  explicit ScalePowers(const BigInt& scale) : scale_(scale), cur_(1) {}
  BigRat unscale(const BigInt& v, int n) {
    if (scale_ == 1) return BigRat(v);
    while (done_ < n) {
      cur_ *= scale_;
      ++done_;
    }
    BigRat q(v, cur_);
    q.canonicalize();
    return q;
  }

 private:
  BigInt scale_;
  BigInt cur_;
  int done_ = 0;
};

// Plain counting with hooks for bridges and per-layer callbacks.
template <class Land, class Layer>
void enumerate_counts(const StepSet& m, int start_k, int nmax, Land land, Layer layer) {
  check_guard(nmax);
  const ScaledSteps st = scale_steps(m);
  enumerate<mpz_class>(
      st, start_k, nmax, mpz_class(0), [](const mpz_class& c) { return sgn(c) == 0; },
      [](mpz_class& c) { c = 0; }, [](mpz_class& c) { c = 1; },
      [&](mpz_class& dst, const mpz_class& src, std::size_t s, int, int) {
        add_weighted(dst, src, st, s);
      },
      [&](const mpz_class& src, std::size_t s, int ti) { land(src, st, s, ti); },
      [&](int n, const Grid<mpz_class>& g, const Box& b) { layer(n, g, b, st); });
}

void addmul_signed(mpz_class& dst, const mpz_class& c, int k) {
  if (k >= 0) {
    mpz_addmul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
  } else {
    mpz_submul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-k));
  }
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

}  // namespace

std::vector<CountTable> count_walks(const StepSet& m, int start_k, int nmax) {
  std::vector<CountTable> out;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, start_k, nmax, [](const mpz_class&, const ScaledSteps&, std::size_t, int) {},
      [&](int n, const Grid<mpz_class>& g, const Box& b, const ScaledSteps&) {
        CountTable t;
        t.n = n;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) {
            const mpz_class& c = g.at(i, j);
            if (sgn(c) != 0) t.counts.emplace(Point{i, j}, sp.unscale(c, n));
          }
        }
        out.push_back(std::move(t));
      });
  return out;
}

std::vector<CountTable> count_bridges(const StepSet& m, int nmax) {
  std::vector<CountTable> out(static_cast<std::size_t>(nmax) + 1);
  std::map<int, BigInt> landing;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, 0, nmax,
      [&](const mpz_class& src, const ScaledSteps& st, std::size_t s, int ti) {
        add_weighted(landing[ti], src, st, s);
      },
      [&](int n, const Grid<mpz_class>&, const Box&, const ScaledSteps&) {
        out[n].n = n;
        for (const auto& [i, c] : landing) {
          if (sgn(c) != 0) out[n].counts.emplace(Point{i, 0}, sp.unscale(c, n));
        }
        landing.clear();
      });
  return out;
}

std::vector<BigRat> count_loops(const StepSet& m, int k, int nmax) {
  if (k <= 0) throw PreconditionError("count_loops: k must be > 0");
  std::vector<BigRat> out;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, k, nmax, [](const mpz_class&, const ScaledSteps&, std::size_t, int) {},
      [&](int n, const Grid<mpz_class>& g, const Box& b, const ScaledSteps&) {
        out.push_back(k >= b.imin && k <= b.imax ? sp.unscale(g.at(k, 0), n) : BigRat(0));
      });
  return out;
}

std::vector<BigRat> count_endpoint(const StepSet& m, int start_k, int i, int j, int nmax) {
  std::vector<BigRat> out;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, start_k, nmax, [](const mpz_class&, const ScaledSteps&, std::size_t, int) {},
      [&](int n, const Grid<mpz_class>& g, const Box& b, const ScaledSteps&) {
        const bool inside = i >= b.imin && i <= b.imax && j >= b.jmin && j <= b.jmax;
        out.push_back(inside ? sp.unscale(g.at(i, j), n) : BigRat(0));
      });
  return out;
}

std::vector<BigRat> count_totals(const StepSet& m, int nmax) {
  std::vector<BigRat> out;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, 0, nmax, [](const mpz_class&, const ScaledSteps&, std::size_t, int) {},
      [&](int n, const Grid<mpz_class>& g, const Box& b, const ScaledSteps&) {
        BigInt s = 0;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) s += g.at(i, j);
        }
        out.push_back(sp.unscale(s, n));
      });
  return out;
}

std::vector<VisitCounts> count_visits_marked(const StepSet& m, int k, int nmax) {
  if (k <= 0) throw PreconditionError("count_visits_marked: k must be > 0");
  check_guard(nmax);
  const ScaledSteps st = scale_steps(m);
  struct Cell {
    mpz_class count, visited, visits;
  };
  std::vector<VisitCounts> out;
  ScalePowers sp(st.scale);
  enumerate<Cell>(
      st, 0, nmax, Cell{0, 0, 0}, [](const Cell& c) { return sgn(c.count) == 0; },
      [](Cell& c) { c.count = c.visited = c.visits = 0; }, [](Cell& c) { c.count = 1; },
      [&](Cell& dst, const Cell& src, std::size_t s, int ti, int tj) {
        add_weighted(dst.count, src.count, st, s);
        if (ti == k && tj == 0) {
          add_weighted(dst.visited, src.count, st, s);
          add_weighted(dst.visits, src.visits, st, s);
          add_weighted(dst.visits, src.count, st, s);
        } else {
          add_weighted(dst.visited, src.visited, st, s);
          add_weighted(dst.visits, src.visits, st, s);
        }
      },
      [](const Cell&, std::size_t, int) {},
      [&](int n, const Grid<Cell>& g, const Box& b) {
        BigInt vis = 0, tot = 0;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) {
            vis += g.at(i, j).visited;
            tot += g.at(i, j).visits;
          }
        }
        out.push_back({sp.unscale(vis, n), sp.unscale(tot, n)});
      });
  return out;
}

std::vector<VerticalTable> count_vertical_marked(int nmax) {
  check_guard(nmax);
  const ScaledSteps st = scale_steps(StepSet::square());
  using Cell = std::vector<mpz_class>;
  std::vector<VerticalTable> out;
  enumerate<Cell>(
      st, 0, nmax, Cell(static_cast<std::size_t>(nmax) + 1, 0),
      [](const Cell& c) {
        for (const auto& v : c) {
          if (sgn(v) != 0) return false;
        }
        return true;
      },
      [](Cell& c) {
        for (auto& v : c) v = 0;
      },
      [](Cell& c) { c[0] = 1; },
      [&](Cell& dst, const Cell& src, std::size_t s, int, int) {
        const bool vertical = st.dy[s] != 0;
        for (std::size_t v = 0; v < src.size(); ++v) {
          if (sgn(src[v]) == 0) continue;
          dst[vertical ? v + 1 : v] += src[v];
        }
      },
      [](const Cell&, std::size_t, int) {},
      [&](int n, const Grid<Cell>& g, const Box& b) {
        VerticalTable t;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) {
            const Cell& c = g.at(i, j);
            std::vector<BigInt> row(c.begin(), c.begin() + n + 1);
            bool any = false;
            for (const auto& v : row) any = any || sgn(v) != 0;
            if (any) t.emplace(Point{i, j}, std::move(row));
          }
        }
        out.push_back(std::move(t));
      });
  return out;
}

EndpointDistribution endpoint_distribution(const StepSet& m, int n) {
  const CountTable t = count_walks(m, 0, n).back();
  EndpointDistribution d;
  d.n = n;
  d.total = t.total();
  double r = 0;
  for (const auto& [p, c] : t.counts) {
    BigRat pr = c / d.total;
    d.probability.emplace(p, pr);
    d.marginal_x[p.first] += pr;
    d.marginal_y[p.second] += pr;
    d.mean_x += pr * p.first;
    d.mean_y += pr * p.second;
    d.mean_x2 += pr * p.first * p.first;
    d.mean_y2 += pr * p.second * p.second;
    r += to_double(pr) * std::hypot(p.first, p.second);
  }
  d.mean_r = r;
  return d;
}

std::vector<EndpointMoments> endpoint_moments(const StepSet& m, const std::vector<int>& lengths) {
  int nmax = 0;
  for (int n : lengths) nmax = std::max(nmax, n);
  std::map<int, EndpointMoments> byN;
  ScalePowers sp(scale_steps(m).scale);
  enumerate_counts(
      m, 0, nmax, [](const mpz_class&, const ScaledSteps&, std::size_t, int) {},
      [&](int n, const Grid<mpz_class>& g, const Box& b, const ScaledSteps&) {
        if (std::find(lengths.begin(), lengths.end(), n) == lengths.end()) return;
        BigInt tot = 0, sx = 0, sy = 0, sx2 = 0, sy2 = 0;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) {
            const mpz_class& c = g.at(i, j);
            if (sgn(c) == 0) continue;
            tot += c;
            addmul_signed(sx, c, i);
            addmul_signed(sy, c, j);
            mpz_addmul_ui(sx2.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i) * i);
            mpz_addmul_ui(sy2.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j) * j);
          }
        }
        double r = 0;
        for (int i = b.imin; i <= b.imax; ++i) {
          for (int j = b.jmin; j <= b.jmax; ++j) {
            const mpz_class& c = g.at(i, j);
            if (sgn(c) != 0) r += ratio_to_double(c, tot) * std::hypot(i, j);
          }
        }
        EndpointMoments em;
        em.n = n;
        em.total = sp.unscale(tot, n);
        em.mean_x = BigRat(sx, tot);
        em.mean_y = BigRat(sy, tot);
        em.mean_x2 = BigRat(sx2, tot);
        em.mean_y2 = BigRat(sy2, tot);
        em.mean_x.canonicalize();
        em.mean_y.canonicalize();
        em.mean_x2.canonicalize();
        em.mean_y2.canonicalize();
        em.mean_r = r;
        byN[n] = std::move(em);
      });
  std::vector<EndpointMoments> out;
  for (int n : lengths) out.push_back(byN.at(n));
  return out;
}

}  // namespace slitwalk
