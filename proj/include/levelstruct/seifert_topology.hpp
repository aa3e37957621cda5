#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "levelstruct/congruence_groups.hpp"
#include "levelstruct/rational.hpp"

namespace levelstruct {

enum class FiberSource { EllipticOrder2, EllipticOrder3, IrregularCusp };

std::string to_string(FiberSource source);

struct ExceptionalFiber {
  int multiplicity;
  FiberSource source;
  friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
};

/// Seifert fibration of the link of Q: base orbifold genus, exceptional
/// fibers and rational Euler number (taken to be Z'^2, so negative).
struct SeifertData {
  std::int64_t base_genus = 0;
  std::vector<ExceptionalFiber> fibers;
  Rational euler;
};

/// One fiber of multiplicity 2 per order-2 elliptic point, 3 per order-3
/// elliptic point, 2 per irregular cusp; euler = zprime_self_intersection.
SeifertData seifert_data(const SubgroupSpec& spec, EnumerationLimit limit = {});

struct Sphere3 {};
struct LensSpace {
  std::int64_t order;
};
struct CircleBundle {
  std::int64_t genus;
  Rational euler;
};
struct SeifertGeneral {
  SeifertData data;
};
struct Unknown {};

using HomeoLabel = std::variant<Sphere3, LensSpace, CircleBundle, SeifertGeneral, Unknown>;

/// "S3", "L(4)", "circle bundle (genus 0, euler -2)", ...
std::string to_string(const HomeoLabel& label);

/// Only decides what base genus, multiplicities and the Euler number pin
/// down. Genus 0 with at most two exceptional fibers gives S3 or a lens space
/// of order p = |euler| * prod(alpha); any other fiber-free case is a circle
/// bundle; the rest is SeifertGeneral. Throws std::domain_error when p is not
/// an integer.
HomeoLabel recognize(const SeifertData& data);

/// p = |euler| * prod(alpha), which must be integral.
std::int64_t lens_order(const SeifertData& data);

}  // namespace levelstruct
