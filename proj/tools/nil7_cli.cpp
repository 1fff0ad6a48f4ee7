// nil7: classify 7-dimensional 2-step nilpotent Lie algebras from the command line.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "nil7/io.hpp"

using namespace nil7;

namespace {

enum Exit { kOk = 0, kValidation = 1, kClassification = 2, kInternal = 3 };

struct Job {
  std::optional<std::string> field;
  std::optional<std::int64_t> p;
  std::vector<std::string> inputs, jsons;
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  std::int64_t height_bound = kDefaultHeightBound;
  std::string format = "json";
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Internal:
      return kInternal;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::UnsupportedField:
    case ErrorCode::FieldMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::DegreeMismatch:
      return kValidation;
    default:
      return kClassification;
  }
}

// Thrown for errors raised while a presentation was being classified, with
// whatever trace could be recovered.
struct Failure {
  Error error;
  Json trace;
};

std::optional<Field> field_of(const Job& job) {
  if (!job.field) return std::nullopt;
  return parse_field(*job.field, job.p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Presentation> inputs(const Job& job) {
  const auto f = field_of(job);
  std::vector<Presentation> out;
  for (const auto& path : job.inputs) out.push_back(parse_presentation(read_file(path), f));
  for (const auto& text : job.jsons) out.push_back(parse_presentation(text, f));
  return out;
}

Presentation single_input(const Job& job) {
  auto ps = inputs(job);
  if (ps.size() != 1) throw Error(ErrorCode::ParseError, "give one presentation with --input or --json");
  return ps.front();
}

ClassificationReport run_classify(const Presentation& p, const Job& job, bool certificate = true) {
  ClassifyOptions opt;
  opt.certificate = certificate;
  opt.height_bound = job.height_bound;
  try {
    return classify(p, opt);
  } catch (const Error& e) {
    Json trace = Json::array();
    if (p.n == 7 && e.code() != ErrorCode::NotFlat && e.code() != ErrorCode::NotNilpotent) {
      try {
        const Filtration filt = characteristic_filtration(p);
        std::ostringstream fv;
        for (std::size_t i = 0; i < filt.f.size(); ++i) fv << (i ? "," : "") << filt.f[i];
        trace.push_back({{"branch", "filtration"}, {"witness", "f-vector (" + fv.str() + ")"}});
      } catch (const Error&) {
        // nothing more to say than the error itself
      }
    }
    throw Failure{e, trace};
  }
}

void emit(const Job& job, const Json& j, const std::string& text) {
  if (job.format == "text") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

std::string canonical_line(const CanonicalForm& c) {
  std::ostringstream os;
  os << std::setw(2) << row(c.shape) << "  (" << c.signature().first << "," << c.signature().second << ")  "
     << std::left << std::setw(24) << tag(c.shape) << std::right;
  if (c.a) os << " a=" << c.a->representative;
  if (c.b) os << " b=" << c.b->representative;
  if (c.qclass) os << " " << to_string(*c.qclass);
  os << "  " << (c.label.empty() ? "-" : c.label) << "  " << to_string(canonical_presentation(c));
  return os.str();
}

int cmd_classify(const Job& job) {
  const auto rep = run_classify(single_input(job), job);
  std::ostringstream text;
  text << summary_text(rep) << "\n  trace:\n";
  for (const auto& t : rep.trace) text << "    " << t.branch << ": " << t.witness << "\n";
  emit(job, to_json(rep), text.str());
  return kOk;
}

int cmd_betti(const Job& job) {
  const Presentation p = single_input(job);
  const BettiVector b = betti(p);
  Json j = to_json(b);
  std::ostringstream text;
  text << "betti " << to_string(b) << "  total " << b.total() << "  euler " << b.euler() << "\n";
  // Compare with the table entry of the presentation's class when it has one.
  try {
    const auto rep = run_classify(p, job, false);
    const int r = row(rep.canonical.shape);
    const Table2Row& t = table2_rows().at(static_cast<std::size_t>(r - 1));
    const bool match = b.b.size() == 8 && b.b[1] == t.b123[0] && b.b[2] == t.b123[1] && b.b[3] == t.b123[2];
    j["table2"] = {{"row", r}, {"label", t.label}, {"b123", t.b123}, {"printed_sum", t.printed_sum}, {"match", match}};
    text << "table row " << r << " (" << t.label << "): b1..b3 = " << t.b123[0] << " " << t.b123[1] << " "
         << t.b123[2] << "  " << (match ? "match" : "DIFFER") << "\n";
  } catch (const Failure& f) {
    j["table2"] = {{"row", nullptr}, {"reason", f.error.what()}};
    text << "no table row: " << f.error.what() << "\n";
  }
  emit(job, j, text.str());
  return kOk;
}

int cmd_iso(const Job& job) {
  const auto ps = inputs(job);
  if (ps.size() != 2) throw Error(ErrorCode::ParseError, "iso needs two presentations (--input/--json twice)");
  if (ps[0].field != ps[1].field)
    throw Error(ErrorCode::FieldMismatch, ps[0].field.name() + " vs " + ps[1].field.name());
  const auto a = run_classify(ps[0], job, false), b = run_classify(ps[1], job, false);
  const bool iso = a.canonical == b.canonical;
  const Json j = {{"isomorphic", iso}, {"first", to_json(a.canonical)}, {"second", to_json(b.canonical)}};
  emit(job, j,
       std::string(iso ? "isomorphic" : "not isomorphic") + "\n  " + canonical_line(a.canonical) + "\n  " +
           canonical_line(b.canonical) + "\n");
  return kOk;
}

int cmd_enumerate(const Job& job) {
  const auto f = field_of(job);
  if (!f) throw Error(ErrorCode::InvalidField, "enumerate needs --field");
  const auto classes = enumerate_classes(*f, job.samples, job.seed);
  Json list = Json::array();
  std::ostringstream text;
  text << classes.size() << " classes over " << f->name() << "\n";
  for (const auto& c : classes) {
    list.push_back(to_json(c));
    text << "  " << canonical_line(c) << "\n";
  }
  Json j = to_json(*f);
  j["count"] = classes.size();
  j["samples"] = job.samples;
  j["seed"] = job.seed;
  j["classes"] = list;
  emit(job, j, text.str());
  return kOk;
}

// Models with the parameters left symbolic.
std::string symbolic(const Presentation& p) {
  std::string s = to_string(p);
  for (const auto& [from, to] : {std::pair<std::string, std::string>{"1009", "a"}, {"1013", "b"}}) {
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at)) s.replace(at, from.size(), to);
  }
  return s;
}

int cmd_table(const Job& job) {
  const Field q = Field::rationals();
  Json t1 = Json::array(), t2 = Json::array();
  std::ostringstream text;
  text << "Table 1: canonical forms\n";
  for (int r = 1; r <= kShapeCount; ++r) {
    const Shape s = shape_from_row(r);
    const std::string model = symbolic(model_presentation(q, s, q.from_int(1009), q.from_int(1013)));
    t1.push_back({{"row", r},
                  {"shape", tag(s)},
                  {"signature", {signature(s).first, signature(s).second}},
                  {"parameters", parameter_count(s)},
                  {"model", model}});
    text << std::setw(3) << r << "  (" << signature(s).first << "," << signature(s).second << ")  " << std::left
         << std::setw(24) << tag(s) << std::right << model << "\n";
  }
  text << "\nTable 2: Betti numbers (printed models, a = -1, b = -1)\n";
  text << "row  label              b1  b2  b3  total  printed sum\n";
  for (const auto& row : table2_rows()) {
    const BettiVector b = betti(row.model);
    t2.push_back({{"row", row.row},
                  {"label", row.label},
                  {"model", to_string(row.model)},
                  {"betti", b.b},
                  {"total", b.total()},
                  {"expected_b123", row.b123},
                  {"printed_sum", row.printed_sum}});
    // Pad by display width: each multibyte symbol in a label is one column.
    const auto width = row.label.size() -
                       2 * static_cast<std::size_t>(std::count(row.label.begin(), row.label.end(), '\xe2'));
    const std::string l = row.label + std::string(width < 18 ? 18 - width : 0, ' ');
    text << std::setw(3) << row.row << "  " << l << " " << std::setw(3) << b.b[1] << " " << std::setw(3) << b.b[2]
         << " " << std::setw(3) << b.b[3] << "  " << std::setw(5) << b.total() << "  " << std::setw(11)
         << row.printed_sum << "\n";
  }
  emit(job, {{"table1", t1}, {"table2", t2}}, text.str());
  return kOk;
}

int cmd_selftest(const Job& job) {
  acceptance::Options opt;
  opt.enumeration_samples = job.samples;
  Json results = Json::array();
  bool all = true;
  const auto rs = acceptance::run_all(opt, [&](const acceptance::Result& r) {
    if (job.format == "text") std::cout << acceptance::format(r) << std::endl;
  });
  for (const auto& r : rs) {
    all = all && r.pass;
    results.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (job.format != "text") std::cout << Json{{"pass", all}, {"criteria", results}}.dump(2) << '\n';
  return all ? kOk : kInternal;
}

void report_error(const Error& e, const Json& trace) {
  Json j = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (!trace.empty()) j["trace"] = trace;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of 7-dimensional 2-step nilpotent Lie algebras over Q, F_p, R and Qbar.\n"
               "Generators are numbered from 1: x1..x7."};
  app.require_subcommand(1, 1);
  Job job;
  auto common = [&](CLI::App* sub, bool input) {
    sub->add_option("--field", job.field, "Q, Fp, R or Qbar (overrides the input's field)")
        ->check(CLI::IsMember({"Q", "Fp", "R", "Qbar"}));
    sub->add_option("--p", job.p, "the prime for --field Fp");
    if (input) {
      sub->add_option("--input", job.inputs, "JSON input file")->type_size(1)->allow_extra_args(false);
      sub->add_option("--json", job.jsons, "inline JSON input")->type_size(1)->allow_extra_args(false);
    }
    sub->add_option("--seed", job.seed, "random seed");
    sub->add_option("--samples", job.samples, "random samples per field");
    sub->add_option("--height-bound", job.height_bound, "height bound for rational point search")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  struct Command {
    const char* name;
    const char* help;
    bool input;
    int (*run)(const Job&);
  };
  const Command commands[] = {
      {"classify", "canonical form, certificate and case trace", true, cmd_classify},
      {"betti", "Chevalley-Eilenberg Betti numbers", true, cmd_betti},
      {"iso", "decide isomorphism of two presentations", true, cmd_iso},
      {"enumerate", "isomorphism classes found from seeds and random samples", false, cmd_enumerate},
      {"table", "reproduce the tables of canonical forms and Betti numbers", false, cmd_table},
      {"selftest", "run the acceptance suites", false, cmd_selftest},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub, c.input);
    subs.emplace_back(sub, &c);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  try {
    for (const auto& [sub, c] : subs)
      if (sub->parsed()) return c->run(job);
  } catch (const Failure& f) {
    report_error(f.error, f.trace);
    return exit_code(f.error.code());
  } catch (const Error& e) {
    report_error(e, Json::array());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kInternal;
  }
  return kInternal;
}
