#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmagic/operators.hpp"

namespace qmagic {

// One gate of a word. Qudit indices are 1-based in tokens and here.
struct Gate {
  std::string name;          // H, Hdg, S, Sdg, X, Z, CZ, CNOT, SWAP, V
  std::vector<int> qudits;   // 1-based
  std::vector<int> params;   // V:a,b,c,e
  int power = 1;
};

// Product of gates in written order: the rightmost gate acts first.
class CliffordWord {
 public:
  CliffordWord() = default;
  explicit CliffordWord(std::vector<Gate> gates) : gates_(std::move(gates)) {}
  // Tokens separated by whitespace or ';', e.g. "Sdg@1 H@1 CZ@1,2".
  static CliffordWord parse(std::string_view text);
  static CliffordWord from_tokens(const std::vector<std::string>& tokens);

  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }
  std::vector<std::string> tokens() const;
  std::string str() const;

  CMatrix matrix(const PrimeDim& dims) const;
  CVector apply(const CVector& v, const PrimeDim& dims) const;
  // this * other (other acts first)
  CliffordWord then_after(const CliffordWord& other) const;

 private:
  std::vector<Gate> gates_;
};

Gate parse_gate(std::string_view token);
std::string to_token(const Gate& g);
CMatrix gate_matrix(const Gate& g, const PrimeDim& dims);

}  // namespace qmagic
