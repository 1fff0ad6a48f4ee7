#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nil7/liealg.hpp"
#include "nil7/quadform.hpp"

namespace nil7 {

/// The sixteen rows of the classification table, in table order.
enum class Shape {
  Rank2,                // dx7 = x1x2
  Rank4,                // dx7 = x1x2 + x3x4
  Rank6,                // dx7 = x1x2 + x3x4 + x5x6
  Contained,            // dx6 = x1x2, dx7 = x1x3
  Bisecant,             // dx6 = x1x2, dx7 = x3x4
  TangentLagrangian,    // dx6 = x1x2, dx7 = x1x3 + x2x4
  TangentLine,          // dx6 = x1x2, dx7 = x1x3 + x4x5
  Disjoint,             // dx6 = x1x2 + x3x4, dx7 = x1x3 + x2x5
  BisecantConjugate,    // dx6 = x1x3 + a x2x4, dx7 = x1x4 + x2x3
  CommonLine,           // x1x2, x1x3, x1x4
  Hyperplane,           // x1x2, x1x3, x2x3
  DoubleLine,           // x1x2, x1x3, x1x4 + x2x3
  LinePair,             // x1x2, x3x4, x1x3
  SmoothIsotropic,      // x1x2, x3x4, x1x3 + x2x4
  LinePairConjugate,    // x1x4 + x2x3, a x1x3 + x2x4, x1x2
  SmoothAnisotropic,    // x1x4 + x2x3, a x1x3 + x2x4, x1x2 - b x3x4
};

inline constexpr int kShapeCount = 16;

int row(Shape s);                   // 1..16
Shape shape_from_row(int row);      // throws Internal outside 1..16
std::string tag(Shape s);           // e.g. "52_disjoint"
std::optional<Shape> shape_from_tag(const std::string& t);
std::pair<int, int> signature(Shape s);
int parameter_count(Shape s);

struct CanonicalForm {
  Field field;
  Shape shape = Shape::Rank2;
  std::optional<SquareClass> a, b;
  std::optional<QuaternionClass> qclass;
  std::string label;  // empty when no name applies (parametric rows over F_p)

  std::pair<int, int> signature() const { return nil7::signature(shape); }
};

/// Same field, same shape, equal square classes; the two-parameter row
/// compares quaternion classes instead of (a, b).
bool operator==(const CanonicalForm& x, const CanonicalForm& y);
inline bool operator!=(const CanonicalForm& x, const CanonicalForm& y) { return !(x == y); }
/// Total order used for deduplication and stable listing.
bool operator<(const CanonicalForm& x, const CanonicalForm& y);
std::string to_string(const CanonicalForm& c);

/// Builds a CanonicalForm from raw parameters, reducing them to square
/// classes and attaching the label. Throws ZeroParameter or BadSignature.
CanonicalForm make_canonical(const Field& f, Shape s, const std::optional<Scalar>& a = std::nullopt,
                             const std::optional<Scalar>& b = std::nullopt);

/// The table model with literal parameter values.
Presentation model_presentation(const Field& f, Shape s, const std::optional<Scalar>& a = std::nullopt,
                                const std::optional<Scalar>& b = std::nullopt);
/// The table model of a canonical form (its representative parameters).
Presentation canonical_presentation(const CanonicalForm& c);

struct TraceStep {
  std::string branch;
  std::string witness;
};

struct Certificate {
  enum class Kind { Base, Extension, None };
  Kind kind = Kind::None;
  /// Base field: apply_basis_change(input, base) == canonical_presentation.
  std::optional<BasisChange> base;
  /// Extension part: apply_basis_change(input, to_split) == split_model over
  /// `extension`, and apply_basis_change(split_model, descent) == k_model.
  std::optional<Field> extension;
  std::optional<BasisChange> to_split;
  std::optional<Presentation> split_model;
  std::optional<BasisChange> descent;
  std::optional<Presentation> k_model;
  std::string reason;  // why no base-field certificate was produced
};

struct ClassificationReport {
  Presentation input;
  std::pair<int, int> signature;
  std::vector<TraceStep> trace;
  CanonicalForm canonical;
  Certificate certificate;
};

struct ClassifyOptions {
  bool certificate = true;
  std::int64_t height_bound = kDefaultHeightBound;
};

ClassificationReport classify(const Presentation& p, const ClassifyOptions& opt = {});

/// Outcome of one signature case on the closed part F0 of an adapted basis.
struct CaseResult {
  CanonicalForm form;
  std::vector<TraceStep> trace;
  /// New basis of F0 (columns), over the presentation's field or over
  /// `extension`; the other generators are recombined by linear algebra.
  std::optional<Matrix> x_basis;
  std::optional<Field> extension;
  /// Literal parameters of the model the construction reaches.
  std::optional<Scalar> raw_a, raw_b;
  std::string reason;
};

enum class PencilKind {
  ContainedInGrassmannian,
  Bisecant,
  BisecantConjugate,
  TangentLagrangian,
  TangentLine,
  Disjoint,
};
std::string to_string(PencilKind k);

struct PencilClass {
  PencilKind kind;
  std::optional<SquareClass> a;  // BisecantConjugate only
};

/// Position of the pencil spanned by two bivectors relative to the
/// decomposable ones. Throws DependentPencil.
PencilClass pencil_position(const KForm& phi6, const KForm& phi7);
/// Gram matrix of X phi5 + Y phi6 + Z phi7 squared, read on the top monomial.
/// Throws DependentNet.
Matrix net_conic(const KForm& phi5, const KForm& phi6, const KForm& phi7);

CaseResult classify_61(const KForm& phi, const ClassifyOptions& opt = {});
CaseResult classify_52(const KForm& phi6, const KForm& phi7, const ClassifyOptions& opt = {});
CaseResult classify_43(const KForm& phi5, const KForm& phi6, const KForm& phi7,
                       const ClassifyOptions& opt = {});

/// Requires the same field; compares canonical forms.
bool is_isomorphic(const Presentation& x, const Presentation& y);

/// Table seeds with every parameter representative (plus a few quaternion
/// pairs over Q) and `samples` random presentations; returns the distinct
/// canonical forms in sorted order.
std::vector<CanonicalForm> enumerate_classes(const Field& f, std::size_t samples, std::uint64_t seed);

/// Parameter values used to seed enumeration: square-class representatives
/// other than 1, and anisotropic (a, b) pairs.
std::vector<Scalar> seed_square_classes(const Field& f);
std::vector<std::pair<Scalar, Scalar>> seed_quaternion_pairs(const Field& f);

}  // namespace nil7
