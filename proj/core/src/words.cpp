#include "qmagic/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"

namespace qmagic {

namespace {

std::vector<int> parse_ints(std::string_view s, std::string_view token) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto part = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    if (!part.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last)
      throw Error(Errc::parse_error, "bad integer list '" + std::string(s) + "' in token '" + std::string(token) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::size_t arity(const std::string& name) {
  if (name == "CZ" || name == "CNOT" || name == "SWAP") return 2;
  return 1;
}

}  // namespace

Gate parse_gate(std::string_view token) {
  Gate g;
  std::string_view t = token;
  if (const auto caret = t.find('^'); caret != std::string_view::npos) {
    g.power = parse_ints(t.substr(caret + 1), token).at(0);
    t = t.substr(0, caret);
  }
  const auto at = t.find('@');
  if (at == std::string_view::npos) throw Error(Errc::parse_error, "token '" + std::string(token) + "' lacks '@qudit'");
  std::string_view head = t.substr(0, at);
  if (const auto colon = head.find(':'); colon != std::string_view::npos) {
    g.params = parse_ints(head.substr(colon + 1), token);
    head = head.substr(0, colon);
  }
  g.name = std::string(head);
  g.qudits = parse_ints(t.substr(at + 1), token);
  static const std::vector<std::string> known{"H", "Hdg", "S", "Sdg", "X", "Z", "CZ", "CNOT", "SWAP", "V"};
  if (std::find(known.begin(), known.end(), g.name) == known.end())
    throw Error(Errc::parse_error, "unknown gate '" + g.name + "' in token '" + std::string(token) + "'");
  if (g.qudits.size() != arity(g.name)) throw Error(Errc::parse_error, "wrong qudit count in token '" + std::string(token) + "'");
  if ((g.name == "V") != (g.params.size() == 4)) throw Error(Errc::parse_error, "V needs four parameters: '" + std::string(token) + "'");
  return g;
}

std::string to_token(const Gate& g) {
  std::ostringstream os;
  os << g.name;
  if (!g.params.empty()) {
    os << ':';
    for (std::size_t i = 0; i < g.params.size(); ++i) os << (i ? "," : "") << g.params[i];
  }
  os << '@';
  for (std::size_t i = 0; i < g.qudits.size(); ++i) os << (i ? "," : "") << g.qudits[i];
  if (g.power != 1) os << '^' << g.power;
  return os.str();
}

CliffordWord CliffordWord::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return from_tokens(tokens);
}

CliffordWord CliffordWord::from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Gate> gates;
  for (const auto& t : tokens) gates.push_back(parse_gate(t));
  return CliffordWord(std::move(gates));
}

std::vector<std::string> CliffordWord::tokens() const {
  std::vector<std::string> out;
  for (const auto& g : gates_) out.push_back(to_token(g));
  return out;
}

std::string CliffordWord::str() const {
  std::string s;
  for (const auto& t : tokens()) s += (s.empty() ? "" : " ") + t;
  return s;
}

CMatrix gate_matrix(const Gate& g, const PrimeDim& dims) {
  const int d = dims.d();
  auto q = [&](std::size_t k) { return g.qudits.at(k) - 1; };
  CMatrix base;
  if (g.name == "H" || g.name == "Hdg") {
    CMatrix h = hadamard_matrix(d);
    base = embed_single(g.name == "H" ? h : CMatrix(h.adjoint()), q(0), dims);
  } else if (g.name == "S" || g.name == "Sdg") {
    CMatrix s = phase_gate_matrix(d);
    base = embed_single(g.name == "S" ? s : CMatrix(s.adjoint()), q(0), dims);
  } else if (g.name == "X") {
    base = embed_single(displacement_monomial(PhasePoint({1}, {0}, d), PrimeDim(d, 1)).dense(), q(0), dims);
  } else if (g.name == "Z") {
    base = embed_single(displacement_monomial(PhasePoint({0}, {1}, d), PrimeDim(d, 1)).dense(), q(0), dims);
  } else if (g.name == "CZ") {
    base = cz_matrix(q(0), q(1), dims);
  } else if (g.name == "CNOT") {
    base = cnot_matrix(q(0), q(1), dims);
  } else if (g.name == "SWAP") {
    base = swap_matrix(q(0), q(1), dims);
  } else if (g.name == "V") {
    base = embed_single(metaplectic_V(ZdMatrix(2, 2, d, g.params)).matrix(), q(0), dims);
  } else {
    throw Error(Errc::parse_error, "unknown gate '" + g.name + "'");
  }
  CMatrix r = CMatrix::Identity(dims.hilbert(), dims.hilbert());
  const CMatrix f = g.power >= 0 ? base : CMatrix(base.adjoint());
  for (int k = 0; k < std::abs(g.power); ++k) r = f * r;
  return r;
}

CMatrix CliffordWord::matrix(const PrimeDim& dims) const {
  CMatrix r = CMatrix::Identity(dims.hilbert(), dims.hilbert());
  for (const auto& g : gates_) r = r * gate_matrix(g, dims);
  return r;
}

CVector CliffordWord::apply(const CVector& v, const PrimeDim& dims) const {
  CVector r = v;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) r = gate_matrix(*it, dims) * r;
  return r;
}

CliffordWord CliffordWord::then_after(const CliffordWord& other) const {
  auto g = gates_;
  g.insert(g.end(), other.gates_.begin(), other.gates_.end());
  return CliffordWord(std::move(g));
}

}  // namespace qmagic
