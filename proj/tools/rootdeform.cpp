#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "rootdeform/export.hpp"
#include "rootdeform/notation.hpp"

using namespace rootdeform;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string system;
  std::vector<int> minus;
  std::vector<int> plus;
  std::vector<int> word;
  std::optional<double> epsilon;
  bool json = false;
  std::string out;
  bool pretty = false;
  bool literal = false;
  unsigned threads = 0;
  bool allow_large = false;
  std::string model = "calogero";
  double omega = 1.0;
  double coupling = 1.0;
  std::vector<double> sample;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystem load_system(const Options& o) {
  if (o.system.empty()) throw UsageError("--system is required");
  if (std::filesystem::path(o.system).extension() == ".json") return load_root_system(o.system);
  return build_root_system(o.system);
}

bool has_subsets(const Options& o) { return !o.minus.empty() || !o.plus.empty(); }

FactorizedElement load_element(const RootSystem& rs, const Options& o) {
  if (!o.word.empty()) {
    if (has_subsets(o)) throw UsageError("give either --word or --minus/--plus, not both");
    auto fe = factorize_word(rs, o.word);
    if (!fe) throw UsageError("word is not a bicolored product sigma_minus * sigma_plus");
    return *fe;
  }
  return factorize(rs, o.minus, o.plus);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string format_int_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m << '\n';
  return os.str();
}

// display width of UTF-8 text
std::size_t width_of(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

std::string format_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], width_of(row[k]));
    }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += (k ? " | " : "") + row[k];
      if (k + 1 < row.size()) line += std::string(width[k] - width_of(row[k]), ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string format_ring_matrix(const RingMatrix& m, bool pretty) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) cells[static_cast<std::size_t>(i)].push_back(m(i, j).to_string(!pretty));
  return format_table(cells);
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << 'i';
  return os.str();
}

std::string format_numeric(const Eigen::MatrixXcd& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) cells[static_cast<std::size_t>(i)].push_back(format_complex(m(i, j)));
  return format_table(cells);
}

Json element_json(const RootSystem& rs, const FactorizedElement& fe) {
  return Json{{"system", rs.name()}, {"v_minus", fe.v_minus}, {"v_plus", fe.v_plus}, {"order", fe.order}};
}

AnsatzVariant variant(const Options& o) { return o.literal ? AnsatzVariant::literal : AnsatzVariant::consistent; }

struct Output {
  std::string text;
  int status = kOk;
  // printed to stdout when the main output goes to --out, else to stderr
  std::string summary;
};

Output show_element(const Options& o) {
  const RootSystem rs = load_system(o);
  // a word that is not bicolored can still be shown
  if (!o.word.empty() && !has_subsets(o) && !factorize_word(rs, o.word)) {
    const WeylElement w = compose(rs, o.word);
    const int order = element_order(w);
    if (o.json)
      return {Json{{"system", rs.name()}, {"word", w.word}, {"order", order}, {"matrix", to_json(w.matrix)}}.dump(2) + '\n'};
    return {"system: " + rs.name() + "\nword: " + join(w.word) + "\norder: " + std::to_string(order) + "\nmatrix:\n" +
            format_int_matrix(w.matrix)};
  }
  const FactorizedElement fe = load_element(rs, o);
  if (o.json) {
    Json j = element_json(rs, fe);
    j["word"] = fe.sigma.word;
    j["matrix"] = to_json(fe.sigma.matrix);
    j["sigma_minus"] = to_json(fe.sigma_minus.matrix);
    j["sigma_plus"] = to_json(fe.sigma_plus.matrix);
    return {j.dump(2) + '\n'};
  }
  return {"system: " + rs.name() + "\nminus: " + join(fe.v_minus) + "\nplus: " + join(fe.v_plus) +
          "\nword: " + join(fe.sigma.word) + "\norder: " + std::to_string(fe.order) + "\nmatrix:\n" +
          format_int_matrix(fe.sigma.matrix)};
}

Output order(const Options& o) {
  const RootSystem rs = load_system(o);
  int h = 0;
  if (!o.word.empty() && !has_subsets(o))
    h = element_order(compose(rs, o.word));
  else
    h = load_element(rs, o).order;
  if (o.json) return {Json{{"system", rs.name()}, {"order", h}}.dump() + '\n'};
  return {std::to_string(h) + '\n'};
}

Output theta(const Options& o) {
  const RootSystem rs = load_system(o);
  const FactorizedElement fe = load_element(rs, o);
  const DeformMatrix t = build_theta(fe, variant(o));
  if (o.json) {
    Json j = element_json(rs, fe);
    j["variant"] = o.literal ? "literal" : "consistent";
    j["theta"] = to_json(t);
    if (o.epsilon) {
      j["epsilon"] = *o.epsilon;
      j["numeric"] = numeric_json(evaluate(t, *o.epsilon));
    }
    return {j.dump(2) + '\n'};
  }
  if (o.epsilon) return {format_numeric(evaluate(t, *o.epsilon))};
  return {format_ring_matrix(t, o.pretty)};
}

Output verify(const Options& o) {
  const RootSystem rs = load_system(o);
  const FactorizedElement fe = load_element(rs, o);
  const ConstraintReport r = verify_constraints(build_theta(fe, variant(o)), fe);
  const int status = r.all_passed() ? kOk : kFailed;
  if (o.json) {
    Json j = element_json(rs, fe);
    j["constraints"] = to_json(r);
    return {j.dump(2) + '\n', status};
  }
  auto line = [](const char* name, bool ok) { return std::string(ok ? "pass  " : "FAIL  ") + name + '\n'; };
  std::string text = line("theta* s- = s- theta", r.intertwine_minus) + line("theta* s+ = s+ theta", r.intertwine_plus) +
                     line("[s, theta] = 0", r.commutes_with_sigma) + line("theta* theta = I", r.antiunitary) +
                     line(("det theta = " + r.det_value.to_string(!o.pretty)).c_str(), r.det_ok) +
                     line("theta = I at c = 1", r.limit_ok);
  return {text, status};
}

Output orbits(const Options& o) {
  const RootSystem rs = load_system(o);
  const FactorizedElement fe = load_element(rs, o);
  const ReducedRootSpace space = reduced_root_space(rs, fe);
  if (o.json) {
    Json j = element_json(rs, fe);
    j["space"] = to_json(space);
    return {j.dump(2) + '\n'};
  }
  return {render_orbit_table(space, o.pretty ? Superscript::unicode : Superscript::caret)};
}

std::string relation_text(const FactorInvariance& f, const char* factor) {
  std::string text;
  for (const SimpleRootImage& s : f.simple_images) {
    text += std::string(factor) + " a" + std::to_string(s.vertex) + " = " + render_root(s.image);
    if (s.witness) text += " = s^" + std::to_string(s.witness->first) + " a" + std::to_string(s.witness->second);
    text += '\n';
  }
  for (const Root& r : f.offending) text += std::string(factor) + " maps " + render_root(r) + " outside the space\n";
  return text;
}

Output invariance(const Options& o) {
  const RootSystem rs = load_system(o);
  const FactorizedElement fe = load_element(rs, o);
  const ReducedRootSpace space = reduced_root_space(rs, fe);
  const InvarianceReport r = check_invariance(fe, space);
  const int status = r.invariant() ? kOk : kFailed;
  if (o.json) {
    Json j = element_json(rs, fe);
    j["invariance"] = to_json(r);
    return {j.dump(2) + '\n', status};
  }
  std::string text = relation_text(r.minus, "s-") + relation_text(r.plus, "s+");
  text += std::string("s- ") + (r.minus.invariant ? "preserves" : "does not preserve") + " the space\n";
  text += std::string("s+ ") + (r.plus.invariant ? "preserves" : "does not preserve") + " the space\n";
  return {text, status};
}

Output scan_cmd(const Options& o) {
  if (!o.word.empty() || has_subsets(o)) throw UsageError("scan takes no element options");
  const RootSystem rs = load_system(o);
  const auto records = scan(rs, ScanOptions{o.threads, o.allow_large});
  struct Tally {
    int candidates = 0, applicable = 0, passed = 0, invariant = 0, trivial = 0;
  };
  std::map<int, Tally> by_order;
  for (const auto& r : records) {
    Tally& t = by_order[r.order];
    ++t.candidates;
    t.applicable += r.ansatz_applicable;
    t.passed += r.constraints && r.constraints->all_passed();
    t.invariant += r.invariant.value_or(false);
    t.trivial += r.trivial.value_or(false);
  }
  std::vector<std::vector<std::string>> cells{{"order", "candidates", "ansatz", "constraints", "invariant", "trivial"}};
  for (const auto& [h, t] : by_order)
    cells.push_back({std::to_string(h), std::to_string(t.candidates), std::to_string(t.applicable), std::to_string(t.passed),
                     std::to_string(t.invariant), std::to_string(t.trivial)});
  return {to_json_lines(records), kOk, format_table(cells)};
}

Output export_cmd(const Options& o) {
  if (!o.epsilon) throw UsageError("export needs --epsilon");
  Model model;
  if (o.model == "calogero")
    model = Model::calogero;
  else if (o.model == "toda")
    model = Model::toda;
  else
    throw UsageError("unknown model " + o.model);
  const RootSystem rs = load_system(o);
  const FactorizedElement fe = load_element(rs, o);
  CalogeroParams params{o.omega, o.coupling, std::nullopt};
  if (!o.sample.empty()) params.sample_point = Eigen::Map<const Eigen::VectorXd>(o.sample.data(), static_cast<Eigen::Index>(o.sample.size()));
  const ModelExport ex = export_model(rs, fe, build_theta(fe, variant(o)), *o.epsilon, model, params);
  return {to_json(ex).dump(2) + '\n'};
}

void add_common(CLI::App* cmd, Options& o, bool element) {
  cmd->add_option("--system", o.system, "catalog name (E8, D5, ...) or a .json file with a Cartan matrix")->required();
  if (element) {
    cmd->add_option("--minus", o.minus, "minus-colored vertices")->delimiter(',');
    cmd->add_option("--plus", o.plus, "plus-colored vertices")->delimiter(',');
    cmd->add_option("--word", o.word, "element as a word in simple reflections")->delimiter(',');
    cmd->add_option("--epsilon", o.epsilon, "deformation parameter, c = cosh(epsilon)");
  }
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_option("--out", o.out, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex deformations of root systems from factorized Weyl group elements"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    CLI::App* app;
    Output (*run)(const Options&);
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, Output (*run)(const Options&), bool element = true) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, o, element);
    commands.push_back({cmd, run});
    return cmd;
  };

  add("show-element", "print the action matrix of an element", show_element);
  add("order", "print the order of an element", order);
  CLI::App* theta_cmd = add("theta", "print the deformation matrix", theta);
  theta_cmd->add_flag("--pretty", o.pretty, "Unicode symbols");
  theta_cmd->add_flag("--literal-ansatz", o.literal, "swap the exponents of the ansatz");
  CLI::App* verify_cmd = add("verify", "check the constraints on the deformation matrix", verify);
  verify_cmd->add_flag("--pretty", o.pretty, "Unicode symbols");
  verify_cmd->add_flag("--literal-ansatz", o.literal, "swap the exponents of the ansatz");
  add("orbits", "print the reduced orbit table", orbits)->add_flag("--pretty", o.pretty, "Unicode superscripts");
  add("invariance", "check that both factors preserve the reduced root space", invariance);
  CLI::App* scan_app = add("scan", "classify all bicolored subset pairs", scan_cmd, false);
  scan_app->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  scan_app->add_flag("--allow-large", o.allow_large, "lift the rank limit");
  CLI::App* export_app = add("export", "export numeric root data for model studies", export_cmd);
  export_app->add_option("--model", o.model, "calogero or toda")->check(CLI::IsMember({"calogero", "toda"}));
  export_app->add_option("--omega", o.omega, "oscillator frequency");
  export_app->add_option("--coupling", o.coupling, "coupling constant g");
  export_app->add_option("--sample", o.sample, "sample point in simple-root coordinates")->delimiter(',');
  export_app->add_flag("--literal-ansatz", o.literal, "swap the exponents of the ansatz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const Command& c : commands) {
      if (!c.app->parsed()) continue;
      const Output out = c.run(o);
      if (o.out.empty()) {
        std::cout << out.text;
        std::cerr << out.summary;
      } else {
        std::cout << out.summary;
        std::ofstream file(o.out, std::ios::binary);
        file << out.text;
        if (!file) throw UsageError("cannot write " + o.out);
      }
      return out.status;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ansatz_inapplicable ? kFailed : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
