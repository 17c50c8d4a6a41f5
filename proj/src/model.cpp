#include "slitwalk/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace slitwalk {

namespace {

std::string describe(const Step& s) {
  return "(" + std::to_string(s.dx) + "," + std::to_string(s.dy) + ")";
}

}  // namespace

StepSet StepSet::validate(std::vector<Step> raw, std::string name) {
  if (raw.empty()) throw EmptyStepSet("step set is empty");
  std::map<std::pair<int, int>, BigRat> byPos;
  for (const auto& s : raw) {
    if (s.dy < -1 || s.dy > 1) {
      throw HeightViolation("step " + describe(s) + " has |dy| > 1");
    }
    if (sgn(s.weight) <= 0) throw PreconditionError("step " + describe(s) + " has weight <= 0");
    if (!byPos.emplace(std::pair{s.dx, s.dy}, s.weight).second) {
      throw PreconditionError("duplicate step " + describe(s));
    }
  }
  for (const auto& s : raw) {
    auto it = byPos.find({s.dx, -s.dy});
    if (it == byPos.end() || it->second != s.weight) {
      throw SymmetryViolation("step " + describe(s) + " has no mirror (" + std::to_string(s.dx) +
                              "," + std::to_string(-s.dy) + ") with equal weight");
    }
  }
  StepSet m;
  m.name_ = std::move(name);
  m.reverse_symmetric_ = std::all_of(raw.begin(), raw.end(), [&](const Step& s) {
    auto it = byPos.find({-s.dx, -s.dy});
    return it != byPos.end() && it->second == s.weight;
  });
  std::sort(raw.begin(), raw.end(), [](const Step& a, const Step& b) {
    return std::pair{a.dx, a.dy} < std::pair{b.dx, b.dy};
  });
  m.steps_ = std::move(raw);
  return m;
}

StepSet StepSet::square() {
  return validate({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}, "square");
}

StepSet StepSet::diagonal() {
  return validate({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}, "diagonal");
}

StepSet StepSet::triangular() {
  return validate({{-1, 1, 1}, {-1, -1, 1}, {2, 0, 1}}, "triangular");
}

StepSet StepSet::square_vertical_weight(const BigRat& v) {
  return validate({{1, 0, 1}, {-1, 0, 1}, {0, 1, v}, {0, -1, v}},
                  "square[v=" + to_compact_string(v) + "]");
}

StepSet StepSet::parse(std::string_view text, std::string name) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Step s;
    if (!(ls >> s.dx)) continue;  // blank or comment-only line
    if (!(ls >> s.dy)) {
      throw PreconditionError("step file line " + std::to_string(lineno) + ": expected 'dx dy'");
    }
    std::string w;
    if (ls >> w) s.weight = parse_rat(w);
    std::string extra;
    if (ls >> extra) {
      throw PreconditionError("step file line " + std::to_string(lineno) + ": trailing '" +
                              extra + "'");
    }
    steps.push_back(std::move(s));
  }
  return validate(std::move(steps), std::move(name));
}

StepSet StepSet::from_selector(std::string_view selector) {
  if (selector == "square") return square();
  if (selector == "diagonal") return diagonal();
  if (selector == "triangular") return triangular();
  if (selector.substr(0, 5) == "file:") {
    std::string path(selector.substr(5));
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open step file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str(), path);
  }
  throw PreconditionError("unknown model '" + std::string(selector) +
                          "' (expected square, diagonal, triangular or file:PATH)");
}

bool StepSet::unit_weights() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.weight == 1; });
}

int StepSet::max_abs_dx() const {
  int m = 0;
  for (const auto& s : steps_) m = std::max(m, std::abs(s.dx));
  return m;
}

int StepSet::min_dx() const {
  int m = steps_.front().dx;
  for (const auto& s : steps_) m = std::min(m, s.dx);
  return m;
}

int StepSet::max_dx() const {
  int m = steps_.front().dx;
  for (const auto& s : steps_) m = std::max(m, s.dx);
  return m;
}

BigRat StepSet::total_weight() const {
  BigRat w = 0;
  for (const auto& s : steps_) w += s.weight;
  return w;
}

KernelPoly kernel_poly(const StepSet& m) {
  KernelPoly k;
  for (const auto& s : m.steps()) {
    if (s.dy == 0) k.A0.add_term({s.dx, 0, 0}, s.weight);
    if (s.dy == 1) k.A1.add_term({s.dx, 0, 0}, s.weight);
  }
  return k;
}

TSeries<BigRat> build_kernel(const StepSet& m, int order) {
  TSeries<BigRat> K = TSeries<BigRat>::one(order, 2);
  if (order >= 1) {
    Laurent<BigRat> c1(2);
    for (const auto& s : m.steps()) c1.add_term({s.dx, s.dy, 0}, -s.weight);
    K.at(1) = std::move(c1);
  }
  return K;
}

TSeries<BigRat> build_delta(const StepSet& m, int order) {
  const KernelPoly k = kernel_poly(m);
  // (1 - t(A0 + 2A1))(1 - t(A0 - 2A1)) = 1 - 2 A0 t + (A0^2 - 4 A1^2) t^2
  TSeries<BigRat> delta = TSeries<BigRat>::one(order, 1);
  if (order >= 1) delta.at(1) = k.A0 * BigRat(-2);
  if (order >= 2) delta.at(2) = k.A0 * k.A0 - (k.A1 * k.A1) * BigRat(4);
  return delta;
}

}  // namespace slitwalk
