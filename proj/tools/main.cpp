#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmagic/catalog.hpp"
#include "qmagic/clifford.hpp"
#include "qmagic/distillation.hpp"
#include "qmagic/error.hpp"
#include "qmagic/extent.hpp"
#include "qmagic/extremality.hpp"
#include "qmagic/io.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/verify.hpp"
#include "tables.hpp"

namespace qmagic::cli {

using nlohmann::json;

struct RunConfig {
  std::string dims;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(Errc::invalid_input, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

PrimeDim parse_dims(const std::string& text, const PrimeDim& fallback) {
  if (text.empty()) return fallback;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    return PrimeDim(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, "--dims must look like d,N, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_input, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Catalog name, inline JSON, or a path to a JSON file.
PureState parse_state(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return state_from_json(spec);
  if (spec.ends_with(".json")) return state_from_json(read_file(spec));
  return build(spec);
}

const CatalogEntry* find_entry(const std::string& spec) {
  for (const auto& n : catalog_names())
    if (n == spec) return &catalog_entry(n);
  return nullptr;
}

// "1.2", "pi", "-pi/5", "2pi/3", "2*pi/3".
double parse_angle(std::string s) {
  try {
    double sign = 1;
    if (!s.empty() && s.front() == '-') {
      sign = -1;
      s.erase(0, 1);
    }
    const auto p = s.find("pi");
    if (p == std::string::npos) return sign * std::stod(s);
    std::string head = s.substr(0, p), tail = s.substr(p + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    double v = (head.empty() ? 1.0 : std::stod(head)) * std::numbers::pi;
    if (!tail.empty()) {
      if (tail.front() != '/') throw std::invalid_argument("");
      v /= std::stod(tail.substr(1));
    }
    return sign * v;
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, "cannot parse angle '" + s + "'");
  }
}

json parsed(const std::string& text) { return json::parse(text); }

json exact_annotations(const CatalogEntry& e) {
  json j = json::object();
  for (const auto& [k, v] : e.expected) j[k] = {{"exact", v.exact}, {"value", v.value}};
  if (const auto it = e.expected.find(kTraceNorm); it != e.expected.end())
    j["mana"] = {{"exact", "log(" + it->second.exact + ")"}, {"value", std::log(it->second.value)}};
  if (e.expected_nearest_count) j["nearest_count"] = *e.expected_nearest_count;
  return j;
}

std::string num_label(double a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

void print_value(std::ostream& os, const std::string& label, double v, const json& exact, const std::string& key) {
  os << label << " " << std::setprecision(12) << v;
  if (exact.contains(key)) os << "  (" << exact[key]["exact"].get<std::string>() << ")";
  os << "\n";
}

int cmd_measures(const RunConfig& cfg, const std::string& spec, const std::string& file, const std::vector<double>& alphas) {
  if (spec.empty() == file.empty()) throw Error(Errc::invalid_input, "give exactly one of a state argument or --file");
  const PureState psi = file.empty() ? parse_state(spec) : state_from_json(read_file(file));
  const CatalogEntry* entry = file.empty() ? find_entry(spec) : nullptr;
  const auto rep = measure_report(psi, alphas, cfg.tol);
  const json exact = entry ? exact_annotations(*entry) : json::object();
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (cfg.json) {
    json j = parsed(to_json(rep));
    j["state"] = parsed(to_json(psi));
    if (entry) j["name"] = entry->name;
    j["exact"] = exact;
    os << j.dump(2) << "\n";
    return 0;
  }
  os << "state " << (entry ? entry->name : file.empty() ? spec : file) << "  d=" << psi.dims().d() << " N=" << psi.dims().n() << "\n";
  if (rep.wigner_trace_norm) print_value(os, "wigner_trace_norm", *rep.wigner_trace_norm, exact, kTraceNorm);
  if (rep.mana) print_value(os, "mana", *rep.mana, exact, "mana");
  print_value(os, "stabilizer_fidelity", rep.stabilizer_fidelity, exact, kFidelity);
  os << "nearest_count " << rep.nearest_count;
  if (exact.contains("nearest_count")) os << "  (" << exact["nearest_count"].get<int>() << ")";
  os << "\n";
  for (const auto& [a, v] : rep.sre) print_value(os, "sre" + num_label(a), v, exact, a == 2.0 ? kSre2 : "");
  return 0;
}

int cmd_tables(const RunConfig& cfg, const std::string& id, const std::string& grid) {
  Sink sink(cfg.out);
  sink.os() << make_table(id, parse_grid(grid), cfg.tol);
  return 0;
}

json class_json(const EigenClass& c) {
  return {{"stabilizer", c.stabilizer},        {"fidelity", c.fidelity},
          {"nearest_count", c.nearest_count},  {"eigenstates", c.sources.size()},
          {"catalog", c.catalog_matches},      {"representative", parsed(to_json(c.representative))}};
}

int cmd_eigenstates(const RunConfig& cfg, bool all_cliffords, bool reps) {
  if (all_cliffords == reps) throw Error(Errc::invalid_input, "choose one of --all-cliffords or --two-qubit-reps");
  SweepResult sweep;
  if (reps) {
    sweep = two_qubit_sweep();
  } else {
    const PrimeDim dims = parse_dims(cfg.dims, PrimeDim(3, 1));
    if (dims.n() != 1) throw Error(Errc::unsupported_dimension, "--all-cliffords supports one qudit");
    sweep = single_qudit_sweep(dims.d());
  }
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (cfg.json) {
    json classes = json::array();
    for (const auto& c : sweep.classes) classes.push_back(class_json(c));
    os << json{{"operators", sweep.operators},
               {"eigenstates", sweep.eigenstates},
               {"classes", classes},
               {"nonstabilizer_classes", sweep.nonstabilizer_classes()}}
              .dump(2)
       << "\n";
    return 0;
  }
  os << "operators " << sweep.operators << "  eigenstates " << sweep.eigenstates << "  classes " << sweep.classes.size()
     << "  non-stabilizer " << sweep.nonstabilizer_classes() << "\n";
  for (std::size_t k = 0; k < sweep.classes.size(); ++k) {
    const auto& c = sweep.classes[k];
    os << "class " << k << (c.stabilizer ? " stabilizer" : " magic") << "  F=" << std::setprecision(10) << c.fidelity
       << "  nearest=" << c.nearest_count << "  eigenstates=" << c.sources.size() << "  catalog:";
    for (const auto& m : c.catalog_matches) os << " " << m;
    os << "\n";
  }
  return 0;
}

// Other non-degenerate eigenstates of the entry's eigen-operator, in solver order.
std::vector<PureState> eigen_directions(const CatalogEntry& e) {
  if (!e.eigen_operator) throw Error(Errc::invalid_input, e.name + " has no eigen-operator; use state: or random");
  const DenseOperator u(e.dims, e.eigen_operator->word.matrix(e.dims), Role::unitary, 1e-9);
  std::vector<PureState> out;
  for (auto& p : nondegenerate_eigenstates(u))
    if (std::abs(p.state.vector().dot(e.state.vector())) < 0.5) out.push_back(std::move(p.state));
  return out;
}

PureState orthogonalized(const PureState& psi, const PureState& v) {
  CVector w = v.vector() - psi.vector().dot(v.vector()) * psi.vector();
  if (w.norm() < 1e-9) throw Error(Errc::invalid_input, "direction is parallel to the state");
  return PureState(psi.dims(), std::move(w));
}

// phase:PHI[:K], state:SPEC, angles:THETA,PHI1,PHI2, random.
PureState parse_direction(const std::string& spec, const PureState& psi, const CatalogEntry* entry, std::mt19937_64& rng) {
  auto need_basis = [&](std::size_t k) {
    auto dirs = entry ? eigen_directions(*entry) : orthogonal_complement(psi);
    if (dirs.size() <= k) throw Error(Errc::invalid_input, "not enough orthogonal eigenstates for '" + spec + "'");
    return dirs;
  };
  if (spec == "random") return random_direction(psi, rng);
  if (spec.starts_with("state:")) return orthogonalized(psi, parse_state(spec.substr(6)));
  if (spec.starts_with("phase:")) {
    std::string rest = spec.substr(6);
    std::size_t k = 0;
    if (const auto c = rest.find(':'); c != std::string::npos) {
      k = std::stoul(rest.substr(c + 1));
      rest = rest.substr(0, c);
    }
    return phase_direction(need_basis(k)[k], parse_angle(rest));
  }
  if (spec.starts_with("angles:")) {
    std::vector<double> a;
    std::stringstream ss(spec.substr(7));
    for (std::string part; std::getline(ss, part, ',');) a.push_back(parse_angle(part));
    if (a.size() != 3) throw Error(Errc::parse_error, "angles: needs theta,phi1,phi2");
    const auto b = need_basis(1);
    return two_angle_direction(b[0], b[1], a[0], a[1], a[2]);
  }
  throw Error(Errc::parse_error, "unknown direction '" + spec + "'");
}

json report_json(const CriticalReport& r) {
  return {{"measure", to_string(r.measure)},
          {"kind", to_string(r.kind)},
          {"leading_order", r.leading_order},
          {"leading_coefficient", r.leading_coefficient}};
}

struct Analysis {
  std::optional<ManaExpansion> mana;
  FidelityExpansion fidelity;
  Xi2Expansion xi2;
  CriticalReport xi2_report;
};

Analysis analyse(const PerturbationFrame& frame, double tol) {
  Analysis a;
  if (frame.base.dims().odd()) a.mana = mana_expansion(frame);
  a.fidelity = fidelity_expansion(frame, stabilizer_dictionary(frame.base.dims()), tol);
  a.xi2 = xi2_expansion(frame);
  a.xi2_report = classify_xi2(a.xi2.coeffs);
  return a;
}

int cmd_extremality(const RunConfig& cfg, const std::string& spec, const std::string& direction, const std::string& grid) {
  const PureState psi = parse_state(spec);
  const CatalogEntry* entry = find_entry(spec);
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (!grid.empty()) {
    // cos(theta/2) b1 + e^{i phi} sin(theta/2) b2 over the first two directions.
    const Grid g = parse_grid(grid);
    auto dirs = entry && entry->eigen_operator ? eigen_directions(*entry) : orthogonal_complement(psi);
    if (dirs.size() < 2) dirs = orthogonal_complement(psi);
    os << "theta,phi,measure,kind,leading_order,leading_coefficient\n";
    for (int i = 0; i < g.rows; ++i)
      for (int j = 0; j < g.cols; ++j) {
        const double theta = g.rows > 1 ? std::numbers::pi * i / (g.rows - 1) : 0.0;
        const double phi = g.cols > 1 ? 2 * std::numbers::pi * j / (g.cols - 1) : 0.0;
        const PureState dir = dirs.size() > 1 ? two_angle_direction(dirs[0], dirs[1], theta / 2, 0, phi) : phase_direction(dirs[0], phi);
        const auto a = analyse(make_frame(psi, dir), cfg.tol);
        std::vector<CriticalReport> reps{a.fidelity.report, a.xi2_report};
        if (a.mana) reps.insert(reps.begin(), a.mana->report);
        for (const auto& r : reps)
          os << theta << "," << phi << "," << to_string(r.measure) << "," << to_string(r.kind) << "," << r.leading_order << ","
             << r.leading_coefficient << "\n";
      }
    return 0;
  }
  std::mt19937_64 rng(cfg.seed);
  const PureState dir = parse_direction(direction, psi, entry, rng);
  const auto a = analyse(make_frame(psi, dir), cfg.tol);
  if (cfg.json) {
    json j;
    j["state"] = parsed(to_json(psi));
    j["direction"] = parsed(to_json(dir));
    if (a.mana)
      j["mana"] = {{"report", report_json(a.mana->report)},
                   {"linear_abs_coeff", a.mana->linear_abs_coeff},
                   {"smooth_linear_coeff", a.mana->smooth_linear_coeff},
                   {"quadratic_coeff", a.mana->quadratic_coeff},
                   {"zero_tol", a.mana->zero_tol}};
    j["stabilizer_fidelity"] = {{"report", report_json(a.fidelity.report)},
                                {"linear", a.fidelity.linear},
                                {"quadratic", a.fidelity.quadratic}};
    j["xi2"] = {{"report", report_json(a.xi2_report)}, {"coefficients", a.xi2.coeffs}};
    os << j.dump(2) << "\n";
    return 0;
  }
  os << "state " << spec << "  direction " << direction << "\n";
  if (a.mana)
    os << "mana " << to_string(a.mana->report.kind) << "  order " << a.mana->report.leading_order << "  coefficient "
       << a.mana->report.leading_coefficient << "\n";
  os << "stabilizer_fidelity " << to_string(a.fidelity.report.kind) << "  order " << a.fidelity.report.leading_order
     << "  coefficient " << a.fidelity.report.leading_coefficient << "\n";
  os << "xi2 " << to_string(a.xi2_report.kind) << "  order " << a.xi2_report.leading_order << "  coefficient "
     << a.xi2_report.leading_coefficient << "\n";
  return 0;
}

json params_json(const PairParams& p) {
  return {{"eps1", p.eps1}, {"eps2", p.eps2}, {"eps3", p.eps3}, {"a", p.a}, {"b", p.b}};
}

int cmd_distill_step(const RunConfig& cfg, const PairParams& p) {
  const auto r = distill_step(p);
  Sink sink(cfg.out);
  auto& os = sink.os();
  const bool dephased_only = p.eps1 == 0 && p.eps2 == 0 && p.a == 0 && p.b == 0;
  if (cfg.json) {
    json j{{"input", params_json(p)}, {"output", params_json(r.out)}, {"p_success", r.p_success}, {"structure_residual", r.structure_residual}};
    if (dephased_only) j["exact"] = {{"p_success", success_probability_exact(p.eps3)}, {"eps3", output_error_exact(p.eps3)}};
    os << j.dump(2) << "\n";
    return 0;
  }
  os << std::setprecision(15) << "p_success " << r.p_success << "\n"
     << "eps1 " << r.out.eps1 << "\neps2 " << r.out.eps2 << "\neps3 " << r.out.eps3 << "\na " << r.out.a << "\nb " << r.out.b << "\n"
     << "structure_residual " << r.structure_residual << "\n";
  if (dephased_only)
    os << "exact_p_success " << success_probability_exact(p.eps3) << "\nexact_eps3 " << output_error_exact(p.eps3) << "\n";
  return 0;
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  try {
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(std::stod(s));
  } catch (const std::logic_error&) {
    parts.clear();
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || parts[2] <= 0 || parts[1] < parts[0])
    throw Error(Errc::parse_error, "range must look like start:stop:step, got '" + text + "'");
  std::vector<double> out;
  const auto n = static_cast<int>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (int k = 0; k <= n; ++k) out.push_back(parts[0] + k * parts[2]);
  return out;
}

int cmd_distill_sweep(const RunConfig& cfg, const std::string& range, int rounds) {
  Sink sink(cfg.out);
  auto& os = sink.os();
  json rows = json::array();
  if (!cfg.json) os << "eps,round,p_success,eps1,eps2,eps3,a,b,exact_p_success,exact_eps3\n";
  for (double e : parse_range(range)) {
    const auto steps = iterate_protocol(PairParams{0, 0, e, 0, 0}, rounds);
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& s = steps[k];
      if (cfg.json) {
        json row{{"eps", e}, {"round", k + 1}, {"p_success", s.p_success}, {"output", params_json(s.out)}};
        if (k == 0) row["exact"] = {{"p_success", success_probability_exact(e)}, {"eps3", output_error_exact(e)}};
        rows.push_back(row);
      } else {
        os << std::setprecision(15) << e << "," << k + 1 << "," << s.p_success << "," << s.out.eps1 << "," << s.out.eps2 << ","
           << s.out.eps3 << "," << s.out.a << "," << s.out.b << ",";
        if (k == 0) os << success_probability_exact(e) << "," << output_error_exact(e);
        else os << ",";
        os << "\n";
      }
    }
  }
  if (cfg.json) os << rows.dump(2) << "\n";
  return 0;
}

int cmd_extent(const RunConfig& cfg, const std::string& spec, const std::vector<std::string>& group, int max_iterations) {
  PureState psi = parse_state(spec);
  if (!cfg.dims.empty() && !(parse_dims(cfg.dims, psi.dims()) == psi.dims()))
    throw Error(Errc::dimension_mismatch, "state does not match --dims " + cfg.dims);
  ExtentProblem problem = ExtentProblem::stabilizer(psi);
  std::vector<PureState> atoms;
  if (!group.empty()) {
    std::vector<CMatrix> gens;
    for (const auto& w : group) gens.push_back(CliffordWord::parse(w).matrix(psi.dims()));
    const auto g = FiniteUnitaryGroup::generate(psi.dims(), gens);
    atoms = group_stabilizer_states(g);
    if (atoms.empty()) throw Error(Errc::infeasible, "the group has no stabilizer states");
    problem = ExtentProblem::from_states(psi, atoms, span_projector(atoms));
  }
  ExtentOptions opts;
  opts.max_iterations = max_iterations;
  const auto sol = solve_extent(problem, opts);
  const double fid = atoms.empty() ? stabilizer_fidelity(psi, cfg.tol).value : group_stabilizer_fidelity(psi, atoms, cfg.tol).value;
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (cfg.json) {
    json coeffs = json::array();
    for (Eigen::Index k = 0; k < sol.coefficients.size(); ++k) coeffs.push_back({sol.coefficients(k).real(), sol.coefficients(k).imag()});
    os << json{{"value", sol.value},
               {"dual_certificate", sol.dual_certificate},
               {"gap", sol.gap},
               {"residual", sol.residual},
               {"iterations", sol.iterations},
               {"converged", sol.converged},
               {"dictionary_size", problem.dictionary.cols()},
               {"inverse_fidelity", 1 / fid},
               {"coefficients", coeffs}}
              .dump(2)
       << "\n";
    return 0;
  }
  os << std::setprecision(12) << "extent " << sol.value << "\ndual_certificate " << sol.dual_certificate << "\ngap " << sol.gap
     << "\nresidual " << sol.residual << "\niterations " << sol.iterations << (sol.converged ? "" : " (not converged)")
     << "\ndictionary_size " << problem.dictionary.cols() << "\ninverse_fidelity " << 1 / fid << "\n";
  return 0;
}

int cmd_catalog_verify(const RunConfig& cfg) {
  VerifyReport rep = verify_catalog(cfg.tol);
  const auto eq = verify_equivalences(cfg.tol);
  rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
  Sink sink(cfg.out);
  auto& os = sink.os();
  if (cfg.json) {
    os << json::parse(to_json(rep)).dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      if (!c.pass)
        os << "FAIL " << c.name << "  expected " << c.expected_exact << " = " << c.expected << "  got " << c.got << "  error "
           << c.abs_error << "\n";
    os << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_catalog_list(const RunConfig& cfg, const std::string& prefix) {
  Sink sink(cfg.out);
  auto& os = sink.os();
  json list = json::array();
  for (const auto& n : catalog_names(prefix)) {
    const auto& e = catalog_entry(n);
    if (cfg.json) {
      json j{{"name", n}, {"d", e.dims.d()}, {"N", e.dims.n()}, {"clifford_stabilizer", e.clifford_stabilizer}, {"expected", exact_annotations(e)}};
      if (e.eigen_operator) j["eigen_operator"] = e.eigen_operator->word.str();
      list.push_back(j);
    } else {
      os << n << "  d=" << e.dims.d() << " N=" << e.dims.n();
      if (e.eigen_operator) os << "  op: " << e.eigen_operator->word.str();
      os << "\n";
    }
  }
  if (cfg.json) os << list.dump(2) << "\n";
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Stabilizer formalism and magic measures for prime-dimensional qudits"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--dims", cfg.dims, "Local dimension and qudit count, d,N");
  app.add_option("--tol", cfg.tol, "Tie and comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized directions");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--out", cfg.out, "Write output to a file");

  std::function<int()> action;

  auto* measures = app.add_subcommand("measures", "Mana, stabilizer fidelity and SRE of a state");
  std::string state_spec, state_file;
  std::vector<double> alphas{2.0};
  measures->add_option("state", state_spec, "Catalog name, JSON object or .json path");
  measures->add_option("--file", state_file, "State JSON file");
  measures->add_option("--alpha", alphas, "Renyi orders for the SRE");
  measures->callback([&] { action = [&] { return cmd_measures(cfg, state_spec, state_file, alphas); }; });

  auto* tables = app.add_subcommand("tables", "Regenerate tabulated data as CSV");
  std::string table_id, grid = "181x361";
  tables->add_option("id", table_id)->required()->check(CLI::IsMember(table_ids()));
  tables->add_option("--grid", grid, "ROWSxCOLS for grid tables");
  tables->callback([&] { action = [&] { return cmd_tables(cfg, table_id, grid); }; });

  auto* eigen = app.add_subcommand("eigenstates", "Classify non-degenerate Clifford eigenstates");
  bool all_cliffords = false, reps = false;
  eigen->add_flag("--all-cliffords", all_cliffords, "Every reduced Clifford of one qudit (--dims d,1)");
  eigen->add_flag("--two-qubit-reps", reps, "The 21 two-qubit class representatives");
  eigen->callback([&] { action = [&] { return cmd_eigenstates(cfg, all_cliffords, reps); }; });

  auto* extr = app.add_subcommand("extremality", "Expansion of the measures along a perturbation");
  std::string direction = "random", dir_grid;
  extr->add_option("state", state_spec)->required();
  extr->add_option("--direction", direction, "phase:PHI[:K] | state:SPEC | angles:THETA,PHI1,PHI2 | random");
  extr->add_option("--grid", dir_grid, "ROWSxCOLS classification grid instead of one direction");
  extr->callback([&] { action = [&] { return cmd_extremality(cfg, state_spec, direction, dir_grid); }; });

  auto* distill = app.add_subcommand("distill", "Doubled five-qubit-code distillation");
  distill->require_subcommand(1);
  auto* step = distill->add_subcommand("step", "One round on five identical pairs");
  PairParams params;
  step->add_option("--eps1", params.eps1);
  step->add_option("--eps2", params.eps2);
  step->add_option("--eps3", params.eps3);
  step->add_option("--a", params.a);
  step->add_option("--b", params.b);
  step->callback([&] { action = [&] { return cmd_distill_step(cfg, params); }; });
  auto* sweep = distill->add_subcommand("sweep", "Iterate the protocol over a range of eps3");
  std::string range = "0:0.2:0.01";
  int rounds = 1;
  sweep->add_option("--eps3", range, "start:stop:step");
  sweep->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  sweep->callback([&] { action = [&] { return cmd_distill_sweep(cfg, range, rounds); }; });

  auto* extent = app.add_subcommand("extent", "Stabilizer extent");
  extent->require_subcommand(1);
  auto* solve = extent->add_subcommand("solve", "Solve the l1 decomposition problem");
  std::vector<std::string> group;
  int max_iterations = 100000;
  solve->add_option("--state", state_spec, "Catalog name, JSON object or .json path")->required();
  solve->add_option("--group", group, "Generator words of a finite group; uses its stabilizer states");
  solve->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  solve->callback([&] { action = [&] { return cmd_extent(cfg, state_spec, group, max_iterations); }; });

  auto* catalog = app.add_subcommand("catalog", "Named states");
  catalog->require_subcommand(1);
  auto* verify = catalog->add_subcommand("verify", "Check every stored value; exit 1 on a mismatch");
  verify->callback([&] { action = [&] { return cmd_catalog_verify(cfg); }; });
  auto* list = catalog->add_subcommand("list", "List entries");
  std::string prefix;
  list->add_option("--prefix", prefix);
  list->callback([&] { action = [&] { return cmd_catalog_list(cfg, prefix); }; });

  for (auto* sub : {measures, tables, eigen, extr, distill, step, sweep, extent, solve, catalog, verify, list}) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qmagic::cli

int main(int argc, char** argv) { return qmagic::cli::run(argc, argv); }
