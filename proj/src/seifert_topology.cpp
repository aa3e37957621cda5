#include "levelstruct/seifert_topology.hpp"

#include <stdexcept>

#include "levelstruct/quotient_geometry.hpp"

namespace levelstruct {

std::string to_string(FiberSource source) {
  switch (source) {
    case FiberSource::EllipticOrder2:
      return "elliptic-order-2";
    case FiberSource::EllipticOrder3:
      return "elliptic-order-3";
    case FiberSource::IrregularCusp:
      return "irregular-cusp";
  }
  return "?";
}

SeifertData seifert_data(const SubgroupSpec& spec, EnumerationLimit limit) {
  check_level(spec);
  check_enumeration_bound(spec.level, limit);
  SeifertData out;
  out.base_genus = genus(spec);
  const EllipticCounts e = elliptic_counts(spec);
  for (int i = 0; i < e.e2; ++i) out.fibers.push_back({2, FiberSource::EllipticOrder2});
  for (int i = 0; i < e.e3; ++i) out.fibers.push_back({3, FiberSource::EllipticOrder3});
  for (const auto& c : cusps(spec, limit))
    if (!c.regular) out.fibers.push_back({2, FiberSource::IrregularCusp});
  out.euler = zprime_self_intersection(spec);
  return out;
}

std::int64_t lens_order(const SeifertData& data) {
  Rational p = data.euler.abs();
  for (const auto& f : data.fibers) p *= Rational(f.multiplicity);
  if (!p.is_integer()) throw std::domain_error("lens_order: |euler| * prod(alpha) = " + p.to_string() + " is not integral");
  return p.to_int64();
}

HomeoLabel recognize(const SeifertData& data) {
  if (data.base_genus == 0 && data.fibers.size() <= 2) {
    const std::int64_t p = lens_order(data);
    if (p == 1) return Sphere3{};
    if (data.fibers.empty()) return CircleBundle{0, data.euler};
    if (p >= 2) return LensSpace{p};
    return Unknown{};
  }
  if (data.fibers.empty()) {
    if (!data.euler.is_integer()) throw std::domain_error("recognize: circle bundle with non-integral euler number");
    return CircleBundle{data.base_genus, data.euler};
  }
  return SeifertGeneral{data};
}

std::string to_string(const HomeoLabel& label) {
  struct {
    std::string operator()(const Sphere3&) const { return "S3"; }
    std::string operator()(const LensSpace& l) const { return "L(" + std::to_string(l.order) + ")"; }
    std::string operator()(const CircleBundle& c) const {
      return "circle bundle (genus " + std::to_string(c.genus) + ", euler " + c.euler.to_string() + ")";
    }
    std::string operator()(const SeifertGeneral& s) const {
      std::string out = "Seifert (genus " + std::to_string(s.data.base_genus) + ", fibers [";
      for (std::size_t i = 0; i < s.data.fibers.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.data.fibers[i].multiplicity);
      }
      return out + "], euler " + s.data.euler.to_string() + "; classification not asserted)";
    }
    std::string operator()(const Unknown&) const { return "unknown"; }
  } visitor;
  return std::visit(visitor, label);
}

}  // namespace levelstruct
