#pragma once
// Small helpers shared by the classification sources.

#include "nil7/classify.hpp"

namespace nil7::detail {

/// Moves a scalar into L: a re-tag between rational-based fields, or the
/// embedding into a quadratic extension of its arithmetic field.
inline Scalar to_field(const Scalar& s, const Field& l) {
  if (s.field() == l) return s;
  if (l.is_extension()) return l.lift(s.field() == l.base() ? s : s.recast(l.base()));
  return s.recast(l);
}

inline Vector to_field(const Vector& v, const Field& l) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_field(x, l));
  return out;
}

inline Matrix to_field(const Matrix& m, const Field& l) {
  return m.map(l, [&](const Scalar& x) { return to_field(x, l); });
}

inline KForm to_field(const KForm& a, const Field& l) {
  return a.map(l, [&](const Scalar& x) { return to_field(x, l); });
}

inline std::string missing_root_reason(const Field& f) {
  return f.kind() == FieldKind::AlgClosedModel ? "needs algebraic closure" : "needs real square roots";
}

}  // namespace nil7::detail
