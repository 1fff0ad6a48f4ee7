#include <array>
#include <sstream>

#include "nil7/classify.hpp"

namespace nil7 {

namespace {

struct ShapeInfo {
  Shape shape;
  const char* tag;
  int f0, f1, params;
  const char* label;
};

constexpr std::array<ShapeInfo, kShapeCount> kShapes{{
    {Shape::Rank2, "61_rank2", 6, 1, 0, "L_3 ⊕ A_4"},
    {Shape::Rank4, "61_rank4", 6, 1, 0, "L_{5,1} ⊕ A_2"},
    {Shape::Rank6, "61_rank6", 6, 1, 0, "L_{7,1}"},
    {Shape::Contained, "52_contained", 5, 2, 0, "L_{5,2} ⊕ A_2"},
    {Shape::Bisecant, "52_bisecant", 5, 2, 0, "L_3 ⊕ L_3 ⊕ A_1"},
    {Shape::TangentLagrangian, "52_tangent_lagrangian", 5, 2, 0, "L_{6,1} ⊕ A_1"},
    {Shape::TangentLine, "52_tangent_line", 5, 2, 0, "L_{7,2}"},
    {Shape::Disjoint, "52_disjoint", 5, 2, 0, "L_{7,3}"},
    {Shape::BisecantConjugate, "52_bisecant_conjugate", 5, 2, 1, "L_{6,2} ⊕ A_1"},
    {Shape::CommonLine, "43_common_line", 4, 3, 0, "L_{7,4}"},
    {Shape::Hyperplane, "43_hyperplane", 4, 3, 0, "L_{6,4} ⊕ A_1"},
    {Shape::DoubleLine, "43_double_line", 4, 3, 0, "L_{7,5}"},
    {Shape::LinePair, "43_line_pair", 4, 3, 0, "L_{7,6}"},
    {Shape::SmoothIsotropic, "43_smooth_isotropic", 4, 3, 0, "L_{7,7}"},
    {Shape::LinePairConjugate, "43_line_pair_conjugate", 4, 3, 1, "L_{7,8}"},
    {Shape::SmoothAnisotropic, "43_smooth_anisotropic", 4, 3, 2, "L_{7,9}"},
}};

const ShapeInfo& info(Shape s) { return kShapes[static_cast<std::size_t>(s)]; }

bool scalar_less(const Scalar& x, const Scalar& y) {
  if (x.field().kind() == FieldKind::PrimeField) return x.residue() < y.residue();
  return x.rational() < y.rational();
}

bool negative(const Scalar& x) { return x.field().rational_based() && x.rational() < 0; }

std::string label_for(const Field& f, Shape s, const std::optional<Scalar>& a, const std::optional<Scalar>& b) {
  if (parameter_count(s) == 0) return info(s).label;
  if (f.kind() == FieldKind::PrimeField) return "";
  // Real form of the parametric rows: they only stay distinct for negative parameters.
  switch (s) {
    case Shape::BisecantConjugate:
      return negative(*a) ? info(s).label : info(Shape::Bisecant).label;
    case Shape::LinePairConjugate:
      return negative(*a) ? info(s).label : info(Shape::LinePair).label;
    case Shape::SmoothAnisotropic:
      return negative(*a) && negative(*b) ? info(s).label : info(Shape::SmoothIsotropic).label;
    default:
      return "";
  }
}

void put(Presentation& p, int gen, int i, int j, const Scalar& c) {
  p.d[static_cast<std::size_t>(gen - 1)].add_term(mono({i - 1, j - 1}), c);
}

}  // namespace

int row(Shape s) { return static_cast<int>(s) + 1; }

Shape shape_from_row(int r) {
  if (r < 1 || r > kShapeCount) throw Error(ErrorCode::Internal, "no table row " + std::to_string(r));
  return static_cast<Shape>(r - 1);
}

std::string tag(Shape s) { return info(s).tag; }

std::optional<Shape> shape_from_tag(const std::string& t) {
  for (const auto& i : kShapes)
    if (t == i.tag) return i.shape;
  return std::nullopt;
}

std::pair<int, int> signature(Shape s) { return {info(s).f0, info(s).f1}; }
int parameter_count(Shape s) { return info(s).params; }

bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
  if (x.field != y.field || x.shape != y.shape) return false;
  switch (parameter_count(x.shape)) {
    case 0:
      return true;
    case 1:
      return x.a == y.a;
    default:
      return quaternion_iso(*x.qclass, *y.qclass);
  }
}

bool operator<(const CanonicalForm& x, const CanonicalForm& y) {
  if (x.shape != y.shape) return row(x.shape) < row(y.shape);
  switch (parameter_count(x.shape)) {
    case 0:
      return false;
    case 1:
      return scalar_less(x.a->representative, y.a->representative);
    default:
      return x.qclass->ramified < y.qclass->ramified;
  }
}

std::string to_string(const CanonicalForm& c) {
  std::ostringstream os;
  os << "row " << row(c.shape) << " (" << tag(c.shape) << ")";
  if (c.a) os << " a=" << c.a->representative;
  if (c.b) os << " b=" << c.b->representative;
  if (c.qclass) os << " [" << to_string(*c.qclass) << "]";
  if (!c.label.empty()) os << " " << c.label;
  return os.str();
}

CanonicalForm make_canonical(const Field& f, Shape s, const std::optional<Scalar>& a,
                             const std::optional<Scalar>& b) {
  CanonicalForm c;
  c.field = f;
  c.shape = s;
  const int np = parameter_count(s);
  if ((np >= 1 && !a) || (np >= 2 && !b)) throw Error(ErrorCode::BadSignature, tag(s) + " needs parameters");
  if (np >= 1) {
    if (a->is_zero()) throw Error(ErrorCode::ZeroParameter, "parameter a is zero");
    c.a = square_class(*a);
  }
  if (np >= 2) {
    if (b->is_zero()) throw Error(ErrorCode::ZeroParameter, "parameter b is zero");
    c.b = square_class(*b);
    c.qclass = quaternion_class(c.a->representative, c.b->representative);
  }
  c.label = label_for(f, s, c.a ? std::optional<Scalar>(c.a->representative) : std::nullopt,
                      c.b ? std::optional<Scalar>(c.b->representative) : std::nullopt);
  return c;
}

Presentation model_presentation(const Field& f, Shape s, const std::optional<Scalar>& a,
                                const std::optional<Scalar>& b) {
  Presentation p(f, 7);
  const Scalar one = f.one();
  const int np = parameter_count(s);
  if ((np >= 1 && !a) || (np >= 2 && !b)) throw Error(ErrorCode::BadSignature, tag(s) + " needs parameters");
  switch (s) {
    case Shape::Rank6:
      put(p, 7, 5, 6, one);
      [[fallthrough]];
    case Shape::Rank4:
      put(p, 7, 3, 4, one);
      [[fallthrough]];
    case Shape::Rank2:
      put(p, 7, 1, 2, one);
      break;
    case Shape::Contained:
      put(p, 6, 1, 2, one);
      put(p, 7, 1, 3, one);
      break;
    case Shape::Bisecant:
      put(p, 6, 1, 2, one);
      put(p, 7, 3, 4, one);
      break;
    case Shape::TangentLagrangian:
      put(p, 6, 1, 2, one);
      put(p, 7, 1, 3, one);
      put(p, 7, 2, 4, one);
      break;
    case Shape::TangentLine:
      put(p, 6, 1, 2, one);
      put(p, 7, 1, 3, one);
      put(p, 7, 4, 5, one);
      break;
    case Shape::Disjoint:
      put(p, 6, 1, 2, one);
      put(p, 6, 3, 4, one);
      put(p, 7, 1, 3, one);
      put(p, 7, 2, 5, one);
      break;
    case Shape::BisecantConjugate:
      put(p, 6, 1, 3, one);
      put(p, 6, 2, 4, *a);
      put(p, 7, 1, 4, one);
      put(p, 7, 2, 3, one);
      break;
    case Shape::CommonLine:
      put(p, 5, 1, 2, one);
      put(p, 6, 1, 3, one);
      put(p, 7, 1, 4, one);
      break;
    case Shape::Hyperplane:
      put(p, 5, 1, 2, one);
      put(p, 6, 1, 3, one);
      put(p, 7, 2, 3, one);
      break;
    case Shape::DoubleLine:
      put(p, 5, 1, 2, one);
      put(p, 6, 1, 3, one);
      put(p, 7, 1, 4, one);
      put(p, 7, 2, 3, one);
      break;
    case Shape::LinePair:
      put(p, 5, 1, 2, one);
      put(p, 6, 3, 4, one);
      put(p, 7, 1, 3, one);
      break;
    case Shape::SmoothIsotropic:
      put(p, 5, 1, 2, one);
      put(p, 6, 3, 4, one);
      put(p, 7, 1, 3, one);
      put(p, 7, 2, 4, one);
      break;
    case Shape::SmoothAnisotropic:
      put(p, 7, 3, 4, -*b);
      [[fallthrough]];
    case Shape::LinePairConjugate:
      put(p, 5, 1, 4, one);
      put(p, 5, 2, 3, one);
      put(p, 6, 1, 3, *a);
      put(p, 6, 2, 4, one);
      put(p, 7, 1, 2, one);
      break;
  }
  return p;
}

Presentation canonical_presentation(const CanonicalForm& c) {
  return model_presentation(c.field, c.shape, c.a ? std::optional<Scalar>(c.a->representative) : std::nullopt,
                            c.b ? std::optional<Scalar>(c.b->representative) : std::nullopt);
}

std::string to_string(PencilKind k) {
  switch (k) {
    case PencilKind::ContainedInGrassmannian:
      return "contained";
    case PencilKind::Bisecant:
      return "bisecant";
    case PencilKind::BisecantConjugate:
      return "bisecant_conjugate";
    case PencilKind::TangentLagrangian:
      return "tangent_lagrangian";
    case PencilKind::TangentLine:
      return "tangent_line";
    case PencilKind::Disjoint:
      return "disjoint";
  }
  return "";
}

std::vector<Scalar> seed_square_classes(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: {
      std::vector<Scalar> out;
      for (int v : {-1, 2, -2, 3, -3, 5, 6, -5, 7, -7}) out.push_back(f.from_int(v));
      return out;
    }
    case FieldKind::PrimeField:
      return {f.from_int(arith::least_nonresidue(f.characteristic()))};
    case FieldKind::RealsModel:
      return {f.from_int(-1)};
    default:
      return {};
  }
}

std::vector<std::pair<Scalar, Scalar>> seed_quaternion_pairs(const Field& f) {
  if (f.kind() == FieldKind::RealsModel) return {{f.from_int(-1), f.from_int(-1)}};
  if (f.kind() != FieldKind::Rationals) return {};
  std::vector<std::pair<Scalar, Scalar>> out;
  const int cands[][2] = {{-1, -1}, {-1, 3}, {2, 5}, {-2, -5}, {3, 5}, {-1, 7}, {-3, -7}, {5, 7}};
  for (const auto& c : cands) {
    Scalar a = f.from_int(c[0]), b = f.from_int(c[1]);
    if (!quaternion_class(a, b).split()) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace nil7
