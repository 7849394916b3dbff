#include "matdecide/valence_automaton.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace matdecide {

std::string to_string(LabelDomain const& d) {
  return (d.kind == LabelDomain::Kind::matrix ? "matrix(" : "word(") +
         std::to_string(d.size) + ")";
}

std::string to_string(BoundedResult r) {
  switch (r) {
    case BoundedResult::accepted:
      return "accepted";
    case BoundedResult::rejected_at_bound:
      return "rejected-at-bound";
    case BoundedResult::rejected:
      return "no";
  }
  return "?";
}

ValenceAutomaton::ValenceAutomaton(LabelDomain domain,
                                   std::vector<std::string> alphabet)
    : domain_(domain), alphabet_(std::move(alphabet)) {
  if (domain_.size == 0) {
    throw std::invalid_argument("label domain size must be positive");
  }
  if (domain_.kind == LabelDomain::Kind::word && domain_.size > 26) {
    throw std::invalid_argument("free rank above 26 has no letter names");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) {
      throw std::invalid_argument("empty input symbol");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) {
        throw std::invalid_argument("duplicate input symbol " + alphabet_[i]);
      }
    }
  }
}

std::size_t ValenceAutomaton::add_state(std::string name) {
  names_.push_back(std::move(name));
  accepting_.push_back(false);
  return names_.size() - 1;
}

void ValenceAutomaton::add_edge(std::size_t from, InputSymbol input,
                                Label label, std::size_t to) {
  if (from >= num_states() || to >= num_states()) {
    throw std::invalid_argument("edge endpoint is not a state");
  }
  if (input && *input >= alphabet_.size()) {
    throw std::invalid_argument("edge input is not in the alphabet");
  }
  if (domain_.kind == LabelDomain::Kind::matrix) {
    auto const* m = std::get_if<IntMatrix>(&label);
    if (!m) {
      throw std::invalid_argument("word label on a matrix automaton");
    }
    if (m->dim() != domain_.size) {
      throw std::invalid_argument(
          "label dimension " + std::to_string(m->dim()) + " does not match " +
          to_string(domain_));
    }
  } else {
    auto const* w = std::get_if<FreeWord>(&label);
    if (!w) {
      throw std::invalid_argument("matrix label on a word automaton");
    }
    if (static_cast<std::size_t>(w->max_generator()) > domain_.size) {
      throw std::invalid_argument("word label " + to_string(*w) +
                                  " exceeds " + to_string(domain_));
    }
  }
  edges_.push_back(Edge{from, input, std::move(label), to});
}

void ValenceAutomaton::set_initial(std::size_t state) {
  if (state >= num_states()) {
    throw std::invalid_argument("initial state is not a state");
  }
  initial_ = state;
}

void ValenceAutomaton::set_accepting(std::size_t state, bool accepting) {
  if (state >= num_states()) {
    throw std::invalid_argument("accepting state is not a state");
  }
  accepting_[state] = accepting;
}

std::vector<std::size_t> ValenceAutomaton::accepting_states() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

std::optional<std::size_t> ValenceAutomaton::symbol_index(
    std::string_view symbol) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == symbol) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> ValenceAutomaton::encode_input(
    std::string_view text) const {
  std::vector<std::size_t> out;
  auto push = [&](std::string_view sym) {
    auto idx = symbol_index(sym);
    if (!idx) {
      throw std::invalid_argument("input symbol '" + std::string(sym) +
                                  "' is not in the alphabet");
    }
    out.push_back(*idx);
  };
  bool spaced = text.find_first_of(" \t") != std::string_view::npos;
  if (!spaced) {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) push(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string ValenceAutomaton::decode_input(
    std::vector<std::size_t> const& symbols) const {
  bool single_chars = true;
  for (auto const& s : alphabet_) single_chars = single_chars && s.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i && !single_chars) out += ' ';
    out += alphabet_.at(symbols[i]);
  }
  return out;
}

Label ValenceAutomaton::identity_label() const {
  if (domain_.kind == LabelDomain::Kind::matrix) {
    return IntMatrix::identity(domain_.size);
  }
  return FreeWord();
}

namespace {

std::size_t common_dimension(std::vector<IntMatrix> const& gens,
                             IntMatrix const* g) {
  if (gens.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  std::size_t n = g ? g->dim() : gens.front().dim();
  for (auto const& h : gens) {
    if (h.dim() != n) {
      throw std::invalid_argument("dimension mismatch among matrices");
    }
  }
  return n;
}

}  // namespace

ValenceAutomaton build_membership_automaton(
    IntMatrix const& g, std::vector<IntMatrix> const& gens) {
  std::size_t n = common_dimension(gens, &g);
  ValenceAutomaton v(LabelDomain::matrices(n), {"a"});
  std::size_t q1 = v.add_state("q1");
  std::size_t q2 = v.add_state("q2");
  v.set_initial(q1);
  v.set_accepting(q2);
  v.add_edge(q1, 0, g, q2);
  for (auto const& h : gens) v.add_edge(q2, 0, h, q2);
  return v;
}

ValenceAutomaton build_identity_automaton(std::vector<IntMatrix> const& gens) {
  std::size_t n = common_dimension(gens, nullptr);
  ValenceAutomaton v(LabelDomain::matrices(n), {"a"});
  std::size_t q1 = v.add_state("q1");
  std::size_t q2 = v.add_state("q2");
  v.set_initial(q1);
  v.set_accepting(q2);
  for (auto const& s : gens) v.add_edge(q1, 0, s, q2);
  for (auto const& s : gens) v.add_edge(q2, 0, s, q2);
  return v;
}

ValenceAutomaton build_membership_universe_automaton(
    IntMatrix const& g, std::vector<IntMatrix> const& gens) {
  std::size_t n = common_dimension(gens, &g);
  ValenceAutomaton v(LabelDomain::matrices(n), {"a"});
  std::size_t q1 = v.add_state("q1");
  std::size_t q2 = v.add_state("q2");
  v.set_initial(q1);
  v.set_accepting(q1);
  v.set_accepting(q2);
  v.add_edge(q1, 0, g, q2);
  for (auto const& h : gens) {
    v.add_edge(q2, 0, h, q2);
    v.add_edge(q2, std::nullopt, h, q2);
  }
  return v;
}

ValenceAutomaton build_identity_universe_automaton(
    std::vector<IntMatrix> const& gens) {
  std::size_t n = common_dimension(gens, nullptr);
  ValenceAutomaton v(LabelDomain::matrices(n), {"a"});
  std::size_t q1 = v.add_state("q1");
  v.set_initial(q1);
  v.set_accepting(q1);
  for (auto const& s : gens) {
    v.add_edge(q1, 0, s, q1);
    v.add_edge(q1, std::nullopt, s, q1);
  }
  return v;
}

namespace {

ValenceAutomaton copy_states(ValenceAutomaton const& v, LabelDomain domain) {
  ValenceAutomaton out(domain, v.alphabet());
  for (auto const& name : v.state_names()) out.add_state(name);
  out.set_initial(v.initial());
  for (std::size_t s : v.accepting_states()) out.set_accepting(s);
  return out;
}

}  // namespace

ValenceAutomaton prune_noninvertible(ValenceAutomaton const& v) {
  if (v.domain().kind != LabelDomain::Kind::matrix) {
    throw std::invalid_argument("prune_noninvertible needs matrix labels");
  }
  ValenceAutomaton out = copy_states(v, v.domain());
  for (auto const& e : v.edges()) {
    if (std::get<IntMatrix>(e.label).is_unimodular()) {
      out.add_edge(e.from, e.input, e.label, e.to);
    }
  }
  return out;
}

ValenceAutomaton to_free_group_automaton(ValenceAutomaton const& v,
                                         CosetTable const& table) {
  if (v.domain() != LabelDomain::matrices(2)) {
    throw std::invalid_argument(
        "coset conversion needs a 2x2 matrix automaton, got " +
        to_string(v.domain()));
  }
  std::size_t const k = table.size();
  ValenceAutomaton out(LabelDomain::words(2), v.alphabet());
  for (std::size_t q = 0; q < v.num_states(); ++q) {
    for (std::size_t c = 0; c < k; ++c) {
      out.add_state(v.state_name(q) + "#" + std::to_string(c));
    }
  }
  auto pair = [k](std::size_t q, std::size_t c) { return q * k + c; };
  out.set_initial(pair(v.initial(), CosetTable::kIdentityCoset));
  for (std::size_t q : v.accepting_states()) {
    out.set_accepting(pair(q, CosetTable::kIdentityCoset));
  }
  for (auto const& e : v.edges()) {
    auto const& g = std::get<IntMatrix>(e.label);
    if (!g.is_unimodular()) {
      throw NotUnimodular();
    }
    for (std::size_t c = 0; c < k; ++c) {
      SchreierStep step = schreier_rewrite(table, c, g);
      out.add_edge(pair(e.from, c), e.input, std::move(step.word),
                   pair(e.to, step.coset));
    }
  }
  return out;
}

Integer SimulationBounds::cap_for(LabelDomain const& d) const {
  if (register_cap) return *register_cap;
  return d.kind == LabelDomain::Kind::matrix ? Integer(1000000) : Integer(64);
}

namespace {

bool exceeds(IntMatrix const& m, Integer const& cap) {
  for (auto const& e : m.entries()) {
    if (cmp_abs(e, cap) > 0) return true;
  }
  return false;
}

bool exceeds(FreeWord const& w, Integer const& cap) {
  return cmp(cap, static_cast<unsigned long>(w.size())) < 0;
}

bool is_unit(IntMatrix const& m) { return m.is_identity(); }
bool is_unit(FreeWord const& w) { return w.is_identity(); }

template <typename Reg>
struct Config {
  std::size_t state;
  std::size_t pos;
  Reg reg;
  bool operator==(Config const&) const = default;
};

template <typename Reg>
struct ConfigHash {
  std::size_t operator()(Config<Reg> const& c) const noexcept {
    std::size_t h = std::hash<Reg>{}(c.reg);
    h ^= c.state * 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= c.pos * 0xc2b2ae3d27d4eb4full + (h << 6) + (h >> 2);
    return h;
  }
};

template <typename Reg>
BoundedResult simulate(ValenceAutomaton const& v,
                       std::vector<std::size_t> const& input,
                       SimulationBounds const& bounds, Reg identity) {
  Integer const cap = bounds.cap_for(v.domain());
  std::vector<std::vector<std::size_t>> out_edges(v.num_states());
  for (std::size_t i = 0; i < v.edges().size(); ++i) {
    out_edges[v.edges()[i].from].push_back(i);
  }
  std::unordered_set<Config<Reg>, ConfigHash<Reg>> seen;
  std::deque<Config<Reg>> queue;
  bool truncated = false;
  Config<Reg> start{v.initial(), 0, std::move(identity)};
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Config<Reg> cur = std::move(queue.front());
    queue.pop_front();
    if (cur.pos == input.size() && v.is_accepting(cur.state) &&
        is_unit(cur.reg)) {
      return BoundedResult::accepted;
    }
    for (std::size_t ei : out_edges[cur.state]) {
      Edge const& e = v.edges()[ei];
      std::size_t pos = cur.pos;
      if (e.input) {
        if (pos == input.size() || input[pos] != *e.input) continue;
        ++pos;
      }
      Reg reg = cur.reg * std::get<Reg>(e.label);
      if (exceeds(reg, cap)) {
        truncated = true;
        continue;
      }
      Config<Reg> next{e.to, pos, std::move(reg)};
      if (seen.contains(next)) continue;
      if (seen.size() >= bounds.max_configurations) {
        return BoundedResult::rejected_at_bound;
      }
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return truncated ? BoundedResult::rejected_at_bound
                   : BoundedResult::rejected;
}

template <typename Reg>
struct LayerEntry {
  std::size_t state;
  Reg reg;
  std::vector<std::size_t> input;
};

template <typename Reg>
WitnessSearch layered_search(ValenceAutomaton const& v, std::size_t max_len,
                             SimulationBounds const& bounds, Reg identity) {
  Integer const cap = bounds.cap_for(v.domain());
  std::vector<std::vector<std::size_t>> out_edges(v.num_states());
  for (std::size_t i = 0; i < v.edges().size(); ++i) {
    out_edges[v.edges()[i].from].push_back(i);
  }
  bool truncated = false;
  std::size_t explored = 0;
  using Key = Config<Reg>;  // pos unused (0) inside a layer
  WitnessSearch result;

  std::vector<LayerEntry<Reg>> layer;
  std::unordered_set<Key, ConfigHash<Reg>> seen;
  auto admit = [&](std::size_t state, Reg reg,
                   std::vector<std::size_t> const& in) -> bool {
    if (exceeds(reg, cap)) {
      truncated = true;
      return true;
    }
    Key key{state, 0, reg};
    if (seen.contains(key)) return true;
    if (++explored > bounds.max_configurations) return false;
    seen.insert(std::move(key));
    layer.push_back({state, std::move(reg), in});
    return true;
  };
  // Closes the current layer under ε-edges; false when the budget ran out.
  auto close = [&]() -> bool {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (std::size_t ei : out_edges[layer[i].state]) {
        Edge const& e = v.edges()[ei];
        if (e.input) continue;
        Reg reg = layer[i].reg * std::get<Reg>(e.label);
        std::vector<std::size_t> in = layer[i].input;
        if (!admit(e.to, std::move(reg), in)) return false;
      }
    }
    return true;
  };

  std::vector<std::size_t> empty_input;
  admit(v.initial(), std::move(identity), empty_input);
  for (std::size_t len = 0;; ++len) {
    bool budget_ok = close();
    for (auto const& entry : layer) {
      if (v.is_accepting(entry.state) && is_unit(entry.reg)) {
        result.input = entry.input;
        return result;
      }
    }
    if (!budget_ok) return result;
    if (len == max_len || layer.empty()) break;
    std::vector<LayerEntry<Reg>> prev = std::move(layer);
    layer.clear();
    seen.clear();
    for (auto const& entry : prev) {
      for (std::size_t ei : out_edges[entry.state]) {
        Edge const& e = v.edges()[ei];
        if (!e.input) continue;
        std::vector<std::size_t> in = entry.input;
        in.push_back(*e.input);
        if (!admit(e.to, entry.reg * std::get<Reg>(e.label), in)) {
          return result;
        }
      }
    }
  }
  result.exhaustive = !truncated;
  return result;
}

}  // namespace

BoundedResult bounded_accepts(ValenceAutomaton const& v,
                              std::vector<std::size_t> const& input,
                              SimulationBounds const& bounds) {
  if (v.num_states() == 0) return BoundedResult::rejected;
  if (v.domain().kind == LabelDomain::Kind::matrix) {
    return simulate<IntMatrix>(v, input, bounds,
                               IntMatrix::identity(v.domain().size));
  }
  return simulate<FreeWord>(v, input, bounds, FreeWord());
}

BoundedResult bounded_accepts(ValenceAutomaton const& v,
                              std::string_view input,
                              SimulationBounds const& bounds) {
  return bounded_accepts(v, v.encode_input(input), bounds);
}

WitnessSearch shortest_accepted_input(ValenceAutomaton const& v,
                                      std::size_t max_length,
                                      SimulationBounds const& bounds) {
  if (v.num_states() == 0) return {std::nullopt, true};
  if (v.domain().kind == LabelDomain::Kind::matrix) {
    return layered_search<IntMatrix>(v, max_length, bounds,
                                     IntMatrix::identity(v.domain().size));
  }
  return layered_search<FreeWord>(v, max_length, bounds, FreeWord());
}

}  // namespace matdecide
