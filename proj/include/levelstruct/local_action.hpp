#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace levelstruct {

/// (x, t) -> (zeta^wx x, zeta^wt t) with zeta = exp(2 pi i / order).
/// x runs along the zero section, t along the fiber.
struct CyclicActionWeights {
  int order = 1;
  int wx = 0;
  int wt = 0;

  friend bool operator==(const CyclicActionWeights&, const CyclicActionWeights&) = default;
};

/// A finite group of diagonal linear maps of the plane, stored as the
/// exponent pairs of all its elements over a common modulus.
class DiagonalAction {
 public:
  /// The trivial group.
  DiagonalAction() = default;

  static DiagonalAction generated_by(std::span<const CyclicActionWeights> generators);
  static DiagonalAction generated_by(const CyclicActionWeights& generator) {
    return generated_by(std::span<const CyclicActionWeights>(&generator, 1));
  }

  /// Common modulus L: each element is (x, t) -> (zeta_L^e1 x, zeta_L^e2 t).
  int modulus() const { return modulus_; }
  /// Sorted exponent pairs, identity first.
  const std::vector<std::pair<int, int>>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool is_trivial() const { return elements_.size() == 1; }
  bool is_cyclic() const;
  /// Every element acts trivially on t (the whole fiber is fixed).
  bool fixes_fiber() const;

  /// A minimal generating set: one element if cyclic, otherwise two. Each
  /// generator is written over its own order.
  std::vector<CyclicActionWeights> generators() const;

  /// Same set of linear maps, whatever the moduli used to describe them.
  friend bool operator==(const DiagonalAction& l, const DiagonalAction& r);

 private:
  int modulus_ = 1;
  std::vector<std::pair<int, int>> elements_{{0, 0}};
};

struct Monomial {
  int x = 0;
  int t = 0;

  int degree() const { return x + t; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Minimal generators of the ring of invariant monomials, by descending
/// x-exponent (two minimal generators never share an x-exponent).
std::vector<Monomial> invariant_generators(const DiagonalAction& action);
std::vector<Monomial> invariant_generators(const CyclicActionWeights& weights);

/// "{x^3, x^2t^2, xt^4, t^6}" with the given variable names.
std::string format_monomials(const std::vector<Monomial>& monomials, const std::string& first = "x",
                             const std::string& second = "t");

/// Type 1/m(1, q): the residual action after quasi-reflections are divided
/// out, normalized so that the first coordinate has weight 1. m = 1 means the
/// quotient is smooth (q is then 0).
struct CyclicQuotientType {
  int order = 1;
  int q = 0;

  bool smooth() const { return order == 1; }
  friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;
};

struct QuasiReflectionSplit {
  /// Orders of the subgroups fixing the x-axis resp. the t-axis pointwise.
  int fixing_x_axis = 1;
  int fixing_t_axis = 1;
  CyclicQuotientType residual;
};

/// Divides out the quasi-reflections (x -> x^a, t -> t^b) and normalizes
/// the faithful cyclic residue to 1/m(1, q).
QuasiReflectionSplit split_quasi_reflections(const DiagonalAction& action);

/// Hirzebruch-Jung continued fraction m/q = a1 - 1/(a2 - 1/(...)), ai >= 2.
/// Empty when m = 1.
std::vector<int> hirzebruch_jung(int m, int q);

}  // namespace levelstruct
