#pragma once

// Step sets that are symmetric in y and have |dy| <= 1, and the polynomials
// built from them: A0, A1, the kernel K(x, y) and delta(x).

#include <string>
#include <string_view>
#include <vector>

#include "slitwalk/exactnum.hpp"
#include "slitwalk/fps.hpp"

namespace slitwalk {

struct Step {
  int dx = 0;
  int dy = 0;
  BigRat weight{1};

  friend bool operator==(const Step& l, const Step& r) {
    return l.dx == r.dx && l.dy == r.dy && l.weight == r.weight;
  }
};

class StepSet {
 public:
  // Validates: nonempty, |dy| <= 1, (i, j) present iff (i, -j) present with
  // the same weight, positive weights. Duplicate steps are rejected.
  static StepSet validate(std::vector<Step> raw, std::string name = "custom");

  static StepSet square();
  static StepSet diagonal();
  static StepSet triangular();
  // Square lattice with vertical steps weighted v (v > 0).
  static StepSet square_vertical_weight(const BigRat& v);
  // "square" | "diagonal" | "triangular" | "file:PATH"
  static StepSet from_selector(std::string_view selector);
  // One step per line: "dx dy [weight]", '#' starts a comment.
  static StepSet parse(std::string_view text, std::string name = "file");

  const std::vector<Step>& steps() const { return steps_; }
  const std::string& name() const { return name_; }
  // (i, j) in A iff (-i, -j) in A, with equal weights.
  bool reverse_symmetric() const { return reverse_symmetric_; }
  bool unit_weights() const;
  int max_abs_dx() const;
  int min_dx() const;
  int max_dx() const;
  BigRat total_weight() const;

 private:
  StepSet() = default;
  std::vector<Step> steps_;
  std::string name_;
  bool reverse_symmetric_ = false;
};

struct KernelPoly {
  LaurentPoly A0{1};  // weight of steps with dy = 0, by dx
  LaurentPoly A1{1};  // weight of steps with dy = 1 (equal to dy = -1)
};

KernelPoly kernel_poly(const StepSet& m);

// K(x, y) = 1 - t A0(x) - t (y + 1/y) A1(x), arity 2, padded to order N.
TSeries<BigRat> build_kernel(const StepSet& m, int order);

// delta(x) = (1 - t A0 - 2 t A1)(1 - t A0 + 2 t A1), padded to order N.
TSeries<BigRat> build_delta(const StepSet& m, int order);

}  // namespace slitwalk
