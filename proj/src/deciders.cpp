#include "matdecide/deciders.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "matdecide/pda.hpp"
#include "matdecide/sanov.hpp"
#include "matdecide/valence_automaton.hpp"

namespace matdecide {

namespace {

void require_2x2(IntMatrix const& m, char const* what) {
  if (m.dim() != 2) {
    throw std::invalid_argument(std::string(what) + " must be 2x2, got " +
                                std::to_string(m.dim()) + "x" +
                                std::to_string(m.dim()));
  }
}

// Emptiness of a GL(2,Z)-labelled automaton through the Sanov coset product.
bool gl2_automaton_empty(ValenceAutomaton const& v,
                         DecisionOptions const& options) {
  ValenceAutomaton free = to_free_group_automaton(v, sanov_coset_table());
  bool empty = free_automaton_emptiness(free);
  if (options.checked) {
    bool pda_empty = pda_emptiness(from_free_automaton(free));
    if (pda_empty != empty) {
      throw InternalError(
          "saturation and pushdown emptiness disagree on the coset product");
    }
  }
  return empty;
}

}  // namespace

Decision subgroup_membership_gl2(IntMatrix const& y,
                                 std::vector<IntMatrix> const& gens,
                                 DecisionOptions const& options) {
  require_2x2(y, "target");
  for (auto const& g : gens) require_2x2(g, "generator");

  Integer det = y.determinant();
  if (det != 1 && det != -1) {
    return {false, "det(target) = " + det.get_str() +
                       "; every element of a group of integer matrices "
                       "containing I has determinant +1 or -1"};
  }
  std::vector<IntMatrix> loops;
  std::size_t dropped = 0;
  for (auto const& g : gens) {
    if (g.is_unimodular()) {
      loops.push_back(g);
      loops.push_back(g.inverse_unimodular());
    } else {
      ++dropped;
    }
  }
  std::string pruned =
      dropped ? std::to_string(dropped) + " non-unimodular generator(s) "
                                          "dropped; "
              : std::string();
  if (loops.empty()) {
    bool id = y.is_identity();
    return {id, pruned + "generated group is trivial; target is " +
                    (id ? std::string("I") : std::string("not I"))};
  }
  ValenceAutomaton v1 = build_membership_automaton(y, loops);
  bool empty = gl2_automaton_empty(v1, options);
  return {!empty, pruned + "membership machine over " +
                      std::to_string(loops.size()) + " loop labels is " +
                      (empty ? "empty" : "nonempty")};
}

Decision identity_in_semigroup_gl2(std::vector<IntMatrix> const& gens,
                                   DecisionOptions const& options) {
  if (gens.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  for (auto const& g : gens) require_2x2(g, "generator");
  std::vector<IntMatrix> kept;
  for (auto const& g : gens) {
    if (g.is_unimodular()) kept.push_back(g);
  }
  std::size_t dropped = gens.size() - kept.size();
  std::string pruned =
      dropped ? std::to_string(dropped) + " non-unimodular generator(s) "
                                          "dropped; "
              : std::string();
  if (kept.empty()) {
    return {false, pruned + "no unimodular generator remains"};
  }
  ValenceAutomaton v2 = build_identity_automaton(kept);
  bool empty = gl2_automaton_empty(v2, options);
  return {!empty, pruned + "identity machine is " +
                      (empty ? std::string("empty") : std::string("nonempty"))};
}

namespace {

struct Node {
  IntMatrix value;
  std::size_t parent;  // index into the node list; npos for roots
  std::size_t gen;     // 1-based
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

IndexWitness trace(std::vector<Node> const& nodes, std::size_t i) {
  IndexWitness w;
  for (; i != npos; i = nodes[i].parent) w.push_back(nodes[i].gen);
  return {w.rbegin(), w.rend()};
}

// Layers are kept in lexicographic order of their witnesses, so the first
// hit is the shortest and lexicographically least.
std::optional<IndexWitness> bfs_products(IntMatrix const& target,
                                         std::vector<IntMatrix> const& gens,
                                         std::size_t max_len) {
  if (gens.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  for (auto const& g : gens) {
    if (g.dim() != target.dim()) {
      throw std::invalid_argument("dimension mismatch among matrices");
    }
  }
  std::vector<Node> nodes;
  std::unordered_set<IntMatrix> seen;
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < gens.size() && max_len > 0; ++i) {
    if (gens[i] == target) return IndexWitness{i + 1};
    if (seen.insert(gens[i]).second) {
      layer.push_back(nodes.size());
      nodes.push_back({gens[i], npos, i + 1});
    }
  }
  for (std::size_t len = 2; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        IntMatrix m = nodes[idx].value * gens[i];
        if (m == target) {
          IndexWitness w = trace(nodes, idx);
          w.push_back(i + 1);
          return w;
        }
        if (!seen.insert(m).second) continue;
        next.push_back(nodes.size());
        nodes.push_back({std::move(m), idx, i + 1});
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<IndexWitness> identity_in_semigroup_bounded(
    std::vector<IntMatrix> const& gens, std::size_t max_len) {
  if (gens.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  return bfs_products(IntMatrix::identity(gens.front().dim()), gens, max_len);
}

std::optional<IndexWitness> membership_bounded(
    IntMatrix const& y, std::vector<IntMatrix> const& gens,
    std::size_t max_len) {
  return bfs_products(y, gens, max_len);
}

std::string to_string(IndexWitness const& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

}  // namespace matdecide
