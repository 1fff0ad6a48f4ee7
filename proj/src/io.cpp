#include "nil7/io.hpp"

#include <sstream>

namespace nil7 {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Scalar coefficient(const Field& f, const Json& v) {
  if (v.is_number_integer()) return f.from_int(v.get<long long>());
  if (v.is_string()) return parse_scalar(f, v.get<std::string>());
  parse_error("coefficient must be an integer or a string");
}

int index_of(const Json& v, int n) {
  if (!v.is_number_integer()) parse_error("generator index must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > n) parse_error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return i - 1;
}

}  // namespace

Field parse_field(const std::string& name, std::optional<std::int64_t> p) {
  if (name == "Q") return Field::rationals();
  if (name == "R") return Field::reals();
  if (name == "Qbar") return Field::alg_closed();
  if (name == "Fp") {
    if (!p) throw Error(ErrorCode::InvalidField, "Fp needs a prime p");
    return Field::prime(*p);
  }
  if (name.rfind("F_", 0) == 0) {
    try {
      return Field::prime(std::stoll(name.substr(2)));
    } catch (const std::logic_error&) {
      // fall through to the error below
    }
  }
  throw Error(ErrorCode::InvalidField, "unknown field \"" + name + "\" (use Q, Fp, R or Qbar)");
}

Scalar parse_scalar(const Field& f, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) parse_error("bad number \"" + text + "\"");
  if (q.get_den() == 0) parse_error("zero denominator in \"" + text + "\"");
  q.canonicalize();
  if (f.kind() != FieldKind::PrimeField) return f.from_rational(q);
  const auto p = static_cast<unsigned long>(f.characteristic());
  const auto num = static_cast<long long>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
  const auto den = static_cast<long long>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
  if (den == 0) parse_error("denominator of \"" + text + "\" vanishes in " + f.name());
  return f.from_int(num) / f.from_int(den);
}

Presentation presentation_from_json(const Json& doc, const std::optional<Field>& field) {
  if (!doc.is_object()) parse_error("input must be a JSON object");
  Field f;
  if (field) {
    f = *field;
  } else if (doc.contains("field")) {
    if (!doc["field"].is_string()) parse_error("\"field\" must be a string");
    std::optional<std::int64_t> p;
    if (doc.contains("p")) {
      if (!doc["p"].is_number_integer()) parse_error("\"p\" must be an integer");
      p = doc["p"].get<std::int64_t>();
    }
    f = parse_field(doc["field"].get<std::string>(), p);
  } else {
    throw Error(ErrorCode::InvalidField, "no field given");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) parse_error("\"dim\" must be an integer");
  const int n = doc["dim"].get<int>();
  if (n < 1 || n > 16) parse_error("\"dim\" must lie in 1..16");
  const bool has_b = doc.contains("brackets"), has_d = doc.contains("differentials");
  if (has_b == has_d) parse_error("give exactly one of \"brackets\" and \"differentials\"");
  if (has_d) {
    const Json& d = doc["differentials"];
    if (!d.is_object()) parse_error("\"differentials\" must be an object");
    Presentation p(f, n);
    for (const auto& [key, val] : d.items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) k = 0;
      } catch (const std::logic_error&) {
        k = 0;
      }
      if (k < 1 || k > n) parse_error("differential key \"" + key + "\" is not a generator 1.." + std::to_string(n));
      if (!val.is_string()) parse_error("differential of x" + key + " must be a string");
      p.d[static_cast<std::size_t>(k - 1)] = parse_form(f, n, 2, val.get<std::string>());
    }
    return p;
  }
  const Json& b = doc["brackets"];
  if (!b.is_array()) parse_error("\"brackets\" must be an array");
  StructureConstants sc(f, n);
  for (const auto& e : b) {
    if (!e.is_array() || e.size() != 4) parse_error("bracket entries are [i, j, k, coef]");
    const int i = index_of(e[0], n), j = index_of(e[1], n), k = index_of(e[2], n);
    if (i == j) parse_error("bracket [X_i, X_i] listed");
    sc.set(i, j, k, sc.get(i, j, k) + coefficient(f, e[3]));
  }
  return dualize(sc);
}

Presentation parse_presentation(const std::string& text, const std::optional<Field>& field) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error("malformed JSON at " + line_column(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  return presentation_from_json(doc, field);
}

Json to_json(const Field& f) {
  Json j;
  switch (f.kind()) {
    case FieldKind::Rationals:
      j["field"] = "Q";
      break;
    case FieldKind::PrimeField:
      j["field"] = "Fp";
      j["p"] = f.characteristic();
      break;
    case FieldKind::RealsModel:
      j["field"] = "R";
      break;
    case FieldKind::AlgClosedModel:
      j["field"] = "Qbar";
      break;
    case FieldKind::QuadraticExtension:
      j["field"] = f.name();
      j["base"] = to_json(f.base());
      j["sqrt_of"] = to_json(f.ext_param());
      break;
  }
  return j;
}

Json to_json(const Scalar& x) {
  if (x.field().kind() == FieldKind::PrimeField) return x.residue();
  return x.to_string();
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const Presentation& p) {
  Json j = to_json(p.field);
  j["dim"] = p.n;
  Json d = Json::object();
  for (int k = 0; k < p.n; ++k) {
    const KForm& dk = p.d[static_cast<std::size_t>(k)];
    if (!dk.is_zero()) d[std::to_string(k + 1)] = to_string(dk);
  }
  j["differentials"] = d;
  return j;
}

Json to_json(const CanonicalForm& c) {
  Json j;
  j["row"] = row(c.shape);
  j["shape"] = tag(c.shape);
  j["signature"] = {c.signature().first, c.signature().second};
  if (c.a) j["a"] = to_json(c.a->representative);
  if (c.b) j["b"] = to_json(c.b->representative);
  if (c.qclass) {
    Json places = Json::array();
    for (Place pl : c.qclass->ramified) places.push_back(pl == kInfinity ? Json("inf") : Json(pl));
    j["quaternion_ramified"] = places;
  }
  j["label"] = c.label;
  j["model"] = to_json(canonical_presentation(c))["differentials"];
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  switch (c.kind) {
    case Certificate::Kind::Base:
      j["kind"] = "base";
      break;
    case Certificate::Kind::Extension:
      j["kind"] = "extension";
      break;
    case Certificate::Kind::None:
      j["kind"] = "none";
      break;
  }
  if (c.base) j["basis_change"] = to_json(c.base->matrix);
  if (c.to_split) {
    j["extension"] = c.extension->name();
    j["to_split"] = to_json(c.to_split->matrix);
    j["split_model"] = to_json(*c.split_model)["differentials"];
    j["descent"] = to_json(c.descent->matrix);
    j["k_model"] = to_json(*c.k_model)["differentials"];
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["input"] = to_json(r.input);
  j["signature"] = {r.signature.first, r.signature.second};
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back({{"branch", t.branch}, {"witness", t.witness}});
  j["trace"] = trace;
  j["canonical"] = to_json(r.canonical);
  j["certificate"] = to_json(r.certificate);
  j["summary"] = summary_text(r);
  return j;
}

Json to_json(const BettiVector& b) {
  Json j;
  j["betti"] = b.b;
  j["total"] = b.total();
  j["euler"] = b.euler();
  j["poincare_dual"] = b.poincare_dual();
  return j;
}

std::string summary_text(const ClassificationReport& r) {
  const CanonicalForm& c = r.canonical;
  std::ostringstream os;
  os << "row " << row(c.shape) << "  (" << r.signature.first << "," << r.signature.second << ")  " << tag(c.shape);
  if (c.a) os << "  a = " << c.a->representative;
  if (c.b) os << "  b = " << c.b->representative;
  if (c.qclass) os << "  quaternion " << to_string(*c.qclass);
  os << "  " << (c.label.empty() ? "-" : c.label) << "\n";
  const Presentation m = canonical_presentation(c);
  for (int k = 0; k < 7; ++k) {
    const KForm& dk = m.d[static_cast<std::size_t>(k)];
    if (!dk.is_zero()) os << "  dx" << k + 1 << " = " << to_string(dk) << "\n";
  }
  os << "  certificate: ";
  switch (r.certificate.kind) {
    case Certificate::Kind::Base:
      os << "basis change over " << r.input.field.name();
      break;
    case Certificate::Kind::Extension:
      os << "over " << r.certificate.extension->name() << " (" << r.certificate.reason << ")";
      break;
    case Certificate::Kind::None:
      os << "none (" << r.certificate.reason << ")";
      break;
  }
  return os.str();
}

}  // namespace nil7
