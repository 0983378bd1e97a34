#include "qmagic/io.hpp"

#include <json.hpp>

#include "qmagic/error.hpp"

namespace qmagic {

using nlohmann::json;

namespace {

json cplx_array(const CMatrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a.push_back({m(i, j).real(), m(i, j).imag()});
  return a;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<cplx> read_complex(const json& a, const char* field) {
  if (!a.is_array()) throw Error(Errc::parse_error, std::string("'") + field + "' must be an array");
  std::vector<cplx> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& e = a[k];
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(Errc::parse_error, std::string("'") + field + "' entry " + std::to_string(k) + " is not [re, im]");
    }
  }
  return out;
}

int read_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw Error(Errc::parse_error, std::string("missing integer field '") + field + "'");
  return j[field].get<int>();
}

}  // namespace

std::string to_json(const PureState& psi) {
  json j{{"d", psi.dims().d()}, {"N", psi.dims().n()}, {"amplitudes", cplx_array(psi.vector())}};
  return j.dump();
}

PureState state_from_json(std::string_view text) {
  const json j = parse(text);
  const PrimeDim dims(read_int(j, "d"), read_int(j, "N"));
  if (!j.contains("amplitudes")) throw Error(Errc::parse_error, "missing field 'amplitudes'");
  const auto amps = read_complex(j["amplitudes"], "amplitudes");
  if (static_cast<int>(amps.size()) != dims.hilbert())
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(dims.hilbert()) + " amplitudes, got " + std::to_string(amps.size()));
  CVector v(dims.hilbert());
  for (int k = 0; k < dims.hilbert(); ++k) v(k) = amps[k];
  return PureState(dims, v);
}

std::string to_json(const DenseOperator& op) {
  json j{{"d", op.dims().d()},   {"N", op.dims().n()}, {"role", to_string(op.role())},
         {"rows", op.matrix().rows()}, {"cols", op.matrix().cols()}, {"matrix", cplx_array(op.matrix())}};
  return j.dump();
}

DenseOperator operator_from_json(std::string_view text) {
  const json j = parse(text);
  const PrimeDim dims(read_int(j, "d"), read_int(j, "N"));
  const int n = dims.hilbert();
  if (read_int(j, "rows") != n || read_int(j, "cols") != n) throw Error(Errc::dimension_mismatch, "operator shape does not match d^N");
  if (!j.contains("matrix")) throw Error(Errc::parse_error, "missing field 'matrix'");
  const auto vals = read_complex(j["matrix"], "matrix");
  if (static_cast<int>(vals.size()) != n * n) throw Error(Errc::dimension_mismatch, "matrix has the wrong number of entries");
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = vals[r * n + c];
  Role role = Role::general;
  if (j.contains("role")) {
    const auto s = j["role"].get<std::string>();
    for (Role cand : {Role::general, Role::unitary, Role::hermitian, Role::density})
      if (s == to_string(cand)) role = cand;
  }
  return DenseOperator(dims, std::move(m), role);
}

std::string to_json(const CliffordWord& w, const PrimeDim& dims) {
  json j{{"word", w.str()}, {"tokens", w.tokens()}, {"d", dims.d()}, {"N", dims.n()}, {"matrix", cplx_array(w.matrix(dims))}};
  return j.dump();
}

std::string to_json(const MeasureReport& r) {
  json j;
  j["stabilizer_fidelity"] = r.stabilizer_fidelity;
  j["nearest_count"] = r.nearest_count;
  if (r.mana) j["mana"] = *r.mana;
  if (r.wigner_trace_norm) j["wigner_trace_norm"] = *r.wigner_trace_norm;
  json sre = json::object(), xi = json::object();
  for (const auto& [a, v] : r.sre) sre[std::to_string(a)] = v;
  for (const auto& [a, v] : r.xi) xi[std::to_string(a)] = v;
  j["sre"] = sre;
  j["xi"] = xi;
  return j.dump();
}

std::string to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected_exact},
                      {"expected_value", c.expected},
                      {"got", c.got},
                      {"abs_error", c.abs_error},
                      {"tol", c.tol},
                      {"pass", c.pass}});
  json j{{"checks", checks}, {"failures", r.failures()}, {"passed", r.passed()}};
  return j.dump();
}

}  // namespace qmagic
