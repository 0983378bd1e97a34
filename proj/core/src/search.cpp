#include "qmagic/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "qmagic/clifford.hpp"
#include "qmagic/error.hpp"
#include "qmagic/stabilizer.hpp"

namespace qmagic {

std::vector<double> overlap_invariant(const PureState& psi) {
  auto ov = overlaps(psi, stabilizer_dictionary(psi.dims()));
  std::sort(ov.begin(), ov.end());
  return ov;
}

bool invariants_match(const PureState& a, const PureState& b, double tol) {
  if (!(a.dims() == b.dims())) return false;
  const auto x = overlap_invariant(a);
  const auto y = overlap_invariant(b);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol) return false;
  return true;
}

namespace {

struct Move {
  Gate forward;   // gate as applied on the a side
  Gate backward;  // power that inverts it
  CMatrix fwd;
  CMatrix bwd;
};

std::vector<Move> alphabet(const PrimeDim& dims) {
  const int d = dims.d();
  const int h_order = d == 2 ? 2 : 4;
  const int s_order = d == 2 ? 4 : d;
  const int cz_order = d;
  std::vector<Move> moves;
  auto add = [&](Gate g, int order) {
    Gate inv = g;
    inv.power = order - 1;
    CMatrix f = gate_matrix(g, dims);
    moves.push_back(Move{g, inv, f, f.adjoint()});
  };
  for (int i = 1; i <= dims.n(); ++i) {
    add(Gate{"H", {i}, {}, 1}, h_order);
    add(Gate{"S", {i}, {}, 1}, s_order);
  }
  for (int i = 1; i <= dims.n(); ++i)
    for (int j = i + 1; j <= dims.n(); ++j) add(Gate{"CZ", {i, j}, {}, 1}, cz_order);
  return moves;
}

std::string state_key(const CVector& v) { return quantized_key(CMatrix(phase_normalized(v, 1e-4)), 1e-6, false); }

struct Node {
  CVector v;
  long parent;
  int move;
};

// Gates from the root to node, in application order.
std::vector<int> path_moves(const std::vector<Node>& nodes, long idx) {
  std::vector<int> out;
  while (nodes[idx].parent >= 0) {
    out.push_back(nodes[idx].move);
    idx = nodes[idx].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<CliffordWord> clifford_equivalence_search(const PureState& a, const PureState& b, const SearchOptions& opts) {
  if (!(a.dims() == b.dims())) throw Error(Errc::dimension_mismatch, "equivalence search across dims");
  const PrimeDim& dims = a.dims();
  if (equal_up_to_phase(a, b, opts.tol)) return CliffordWord{};
  if (!invariants_match(a, b)) return std::nullopt;
  const auto moves = alphabet(dims);

  // fwd nodes: u = W a; bwd nodes: u = W^{-1} b
  std::vector<Node> fwd{{a.vector(), -1, -1}}, bwd{{b.vector(), -1, -1}};
  std::unordered_map<std::string, long> fseen{{state_key(a.vector()), 0}}, bseen{{state_key(b.vector()), 0}};

  auto assemble = [&](long fi, const std::vector<int>& extra_fwd, long bi) -> std::optional<CliffordWord> {
    // b = B_1 ... B_k m and m = W_f a, where B_i are the forward gates whose inverses led b -> m
    std::vector<Gate> gates;
    for (int mv : path_moves(bwd, bi)) gates.push_back(moves[mv].forward);
    auto fm = path_moves(fwd, fi);
    fm.insert(fm.end(), extra_fwd.begin(), extra_fwd.end());
    for (auto it = fm.rbegin(); it != fm.rend(); ++it) gates.push_back(moves[*it].forward);
    CliffordWord w(std::move(gates));
    if (equal_up_to_phase(PureState(dims, w.apply(a.vector(), dims)), b, 1e-8)) return w;
    return std::nullopt;
  };

  std::size_t fhead = 0, bhead = 0, expanded = 0;
  while (expanded < opts.node_budget && (fhead < fwd.size() || bhead < bwd.size())) {
    const bool forward_turn = bhead >= bwd.size() || (fhead < fwd.size() && fwd.size() <= bwd.size());
    auto& nodes = forward_turn ? fwd : bwd;
    auto& head = forward_turn ? fhead : bhead;
    auto& seen = forward_turn ? fseen : bseen;
    auto& other = forward_turn ? bseen : fseen;
    const std::size_t level_end = nodes.size();
    for (; head < level_end && expanded < opts.node_budget; ++head, ++expanded) {
      for (std::size_t m = 0; m < moves.size(); ++m) {
        CVector v = (forward_turn ? moves[m].fwd : moves[m].bwd) * nodes[head].v;
        auto key = state_key(v);
        if (seen.count(key)) continue;
        nodes.push_back({v, static_cast<long>(head), static_cast<int>(m)});
        const long idx = static_cast<long>(nodes.size()) - 1;
        seen.emplace(std::move(key), idx);
        if (auto hit = other.find(state_key(v)); hit != other.end()) {
          auto w = forward_turn ? assemble(idx, {}, hit->second) : assemble(hit->second, {}, idx);
          if (w) return w;
        }
      }
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  std::uniform_int_distribution<std::size_t> start(0, fwd.size() - 1);
  for (std::size_t walk = 0; walk < opts.walks; ++walk) {
    const long root = static_cast<long>(start(rng));
    CVector v = fwd[root].v;
    std::vector<int> steps;
    for (int s = 0; s < opts.max_walk; ++s) {
      const auto m = pick(rng);
      v = moves[m].fwd * v;
      steps.push_back(static_cast<int>(m));
      if (auto hit = bseen.find(state_key(v)); hit != bseen.end())
        if (auto w = assemble(root, steps, hit->second)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace qmagic
