#include "matdecide/pda.hpp"

#include <cstdint>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace matdecide {

Pda::Pda(std::size_t rank, std::vector<std::string> alphabet)
    : rank_(rank), alphabet_(std::move(alphabet)) {}

std::size_t Pda::add_state(std::string name) {
  names_.push_back(std::move(name));
  accepting_.push_back(false);
  return names_.size() - 1;
}

void Pda::check_symbol(StackSymbol x) const {
  if (x == 0 || static_cast<std::size_t>(generator_of(x)) > rank_) {
    throw std::invalid_argument("stack symbol " + std::to_string(x) +
                                " outside rank " + std::to_string(rank_));
  }
}

void Pda::add_transition(PdaTransition t) {
  if (t.from >= num_states() || t.to >= num_states()) {
    throw std::invalid_argument("transition endpoint is not a state");
  }
  if (t.input && *t.input >= alphabet_.size()) {
    throw std::invalid_argument("transition input is not in the alphabet");
  }
  if (t.guard != PdaTransition::Guard::any) check_symbol(t.guard_symbol);
  if (t.action == PdaTransition::Action::push) check_symbol(t.push_symbol);
  if (t.action == PdaTransition::Action::pop &&
      t.guard != PdaTransition::Guard::top_is) {
    throw std::invalid_argument("pop must be guarded by a top symbol");
  }
  transitions_.push_back(t);
}

void Pda::set_initial(std::size_t s) {
  if (s >= num_states()) throw std::invalid_argument("unknown initial state");
  initial_ = s;
}

void Pda::set_accepting(std::size_t s, bool accepting) {
  if (s >= num_states()) throw std::invalid_argument("unknown state");
  accepting_[s] = accepting;
}

Pda from_free_automaton(ValenceAutomaton const& v) {
  if (v.domain().kind != LabelDomain::Kind::word) {
    throw std::invalid_argument("from_free_automaton needs word labels");
  }
  using Guard = PdaTransition::Guard;
  using Action = PdaTransition::Action;
  Pda p(v.domain().size, v.alphabet());
  for (auto const& name : v.state_names()) p.add_state(name);
  p.set_initial(v.initial());
  for (std::size_t s : v.accepting_states()) p.set_accepting(s);

  std::size_t edge_no = 0;
  for (auto const& e : v.edges()) {
    auto const& letters = std::get<FreeWord>(e.label).letters();
    if (letters.empty()) {
      p.add_transition({e.from, e.input, Guard::any, 0, Action::none, 0, e.to});
      ++edge_no;
      continue;
    }
    std::size_t cur = e.from;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::size_t next =
          i + 1 == letters.size()
              ? e.to
              : p.add_state("e" + std::to_string(edge_no) + "." +
                            std::to_string(i + 1));
      Letter x = letters[i];
      InputSymbol in = i == 0 ? e.input : std::nullopt;
      p.add_transition(
          {cur, in, Guard::top_is, inverse_letter(x), Action::pop, 0, next});
      p.add_transition({cur, in, Guard::top_is_not, inverse_letter(x),
                        Action::push, x, next});
      cur = next;
    }
    ++edge_no;
  }
  return p;
}

namespace {

// Set of state pairs with O(1) membership and per-row / per-column lists.
class PairSet {
 public:
  explicit PairSet(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_), rows_(n), cols_(n) {}

  bool contains(std::size_t p, std::size_t q) const {
    return (bits_[p * stride_ + q / 64] >> (q % 64)) & 1u;
  }
  bool insert(std::size_t p, std::size_t q) {
    std::uint64_t& w = bits_[p * stride_ + q / 64];
    std::uint64_t mask = std::uint64_t{1} << (q % 64);
    if (w & mask) return false;
    w |= mask;
    rows_[p].push_back(q);
    cols_[q].push_back(p);
    return true;
  }
  std::vector<std::size_t> const& row(std::size_t p) const { return rows_[p]; }
  std::vector<std::size_t> const& col(std::size_t q) const { return cols_[q]; }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::vector<std::size_t>> cols_;
};

}  // namespace

// Summaries over the top-of-stack symbol g (the bottom marker included):
//   same[g](p, q): from p with g on top, reach q with the same stack.
//   pop[x](p, q):  from p with x on top, reach q with x removed.
// Same-level facts are extended one macro step at a time from their source,
// and a push of x into r is summarized by pop[x](r, .), seeded on demand.
bool pda_emptiness(Pda const& pda) {
  std::size_t const n = pda.num_states();
  if (n == 0) return true;
  std::size_t const letters = 2 * pda.rank();
  std::size_t const bottom = letters;
  auto index = [](StackSymbol x) -> std::size_t {
    return x > 0 ? 2 * static_cast<std::size_t>(x - 1)
                 : 2 * static_cast<std::size_t>(-x - 1) + 1;
  };
  using Guard = PdaTransition::Guard;
  using Action = PdaTransition::Action;
  auto const& ts = pda.transitions();
  auto enabled = [&](PdaTransition const& t, std::size_t top) {
    switch (t.guard) {
      case Guard::any:
        return true;
      case Guard::top_is:
        return top == index(t.guard_symbol);
      case Guard::top_is_not:
        return top != index(t.guard_symbol);
    }
    return false;
  };

  std::vector<std::vector<std::size_t>> out(n), push_into(n);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out[ts[i].from].push_back(i);
    if (ts[i].action == Action::push) push_into[ts[i].to].push_back(i);
  }

  std::vector<PairSet> same(letters + 1, PairSet(n));
  std::vector<PairSet> pop(letters, PairSet(n));
  struct Fact {
    bool is_pop;
    std::size_t sym, p, q;
  };
  std::deque<Fact> work;
  auto add_same = [&](std::size_t g, std::size_t p, std::size_t q) {
    if (same[g].insert(p, q)) work.push_back({false, g, p, q});
  };
  auto add_pop = [&](std::size_t x, std::size_t p, std::size_t q) {
    if (pop[x].insert(p, q)) work.push_back({true, x, p, q});
  };

  add_same(bottom, pda.initial(), pda.initial());
  while (!work.empty()) {
    Fact f = work.front();
    work.pop_front();
    if (!f.is_pop) {
      if (f.sym == bottom && f.p == pda.initial() && pda.is_accepting(f.q)) {
        return false;
      }
      for (std::size_t ti : out[f.q]) {
        PdaTransition const& t = ts[ti];
        if (!enabled(t, f.sym)) continue;
        switch (t.action) {
          case Action::none:
            add_same(f.sym, f.p, t.to);
            break;
          case Action::pop:
            add_pop(f.sym, f.p, t.to);
            break;
          case Action::push: {
            std::size_t x = index(t.push_symbol);
            add_same(x, t.to, t.to);
            auto const& ends = pop[x].row(t.to);
            for (std::size_t i = 0; i < ends.size(); ++i) {
              add_same(f.sym, f.p, ends[i]);
            }
            break;
          }
        }
      }
    } else {
      // f: pop[x](r, s); resume every same-level run that pushed x into r.
      for (std::size_t ti : push_into[f.p]) {
        PdaTransition const& t = ts[ti];
        if (index(t.push_symbol) != f.sym) continue;
        for (std::size_t g = 0; g <= letters; ++g) {
          if (!enabled(t, g)) continue;
          auto const& sources = same[g].col(t.from);
          for (std::size_t i = 0; i < sources.size(); ++i) {
            add_same(g, sources[i], f.q);
          }
        }
      }
    }
  }
  return true;
}

namespace {

// States lying on some path from the initial state to an accepting state.
std::vector<bool> useful_states(ValenceAutomaton const& v) {
  std::size_t n = v.num_states();
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (auto const& e : v.edges()) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  auto sweep = [n](std::vector<std::vector<std::size_t>> const& g,
                   std::vector<std::size_t> seeds) {
    std::vector<bool> mark(n, false);
    for (std::size_t s : seeds) mark[s] = true;
    while (!seeds.empty()) {
      std::size_t s = seeds.back();
      seeds.pop_back();
      for (std::size_t t : g[s]) {
        if (!mark[t]) {
          mark[t] = true;
          seeds.push_back(t);
        }
      }
    }
    return mark;
  };
  auto reach = sweep(fwd, {v.initial()});
  auto coreach = sweep(bwd, v.accepting_states());
  std::vector<bool> keep(n);
  for (std::size_t s = 0; s < n; ++s) keep[s] = reach[s] && coreach[s];
  return keep;
}

}  // namespace

SaturationStats free_automaton_saturation(ValenceAutomaton const& v) {
  if (v.domain().kind != LabelDomain::Kind::word) {
    throw std::invalid_argument("free_automaton_emptiness needs word labels");
  }
  SaturationStats stats;
  if (v.num_states() == 0) return stats;
  std::vector<bool> keep = useful_states(v);
  if (!keep[v.initial()]) return stats;

  // Renumber useful states, then split every edge into single-letter steps.
  std::vector<std::size_t> id(v.num_states(), SIZE_MAX);
  std::size_t n = 0;
  for (std::size_t s = 0; s < v.num_states(); ++s) {
    if (keep[s]) id[s] = n++;
  }
  struct Step {
    std::size_t from;
    Letter x;  // 0 for an ε-step
    std::size_t to;
  };
  std::vector<Step> steps;
  for (auto const& e : v.edges()) {
    if (!keep[e.from] || !keep[e.to]) continue;
    auto const& letters = std::get<FreeWord>(e.label).letters();
    if (letters.empty()) {
      steps.push_back({id[e.from], 0, id[e.to]});
      continue;
    }
    std::size_t cur = id[e.from];
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::size_t next = i + 1 == letters.size() ? id[e.to] : n++;
      steps.push_back({cur, letters[i], next});
      cur = next;
    }
  }
  stats.states = n;

  std::vector<std::vector<std::pair<Letter, std::size_t>>> in(n), out(n);
  for (auto const& st : steps) {
    if (st.x == 0) continue;
    in[st.to].emplace_back(st.x, st.from);
    out[st.from].emplace_back(st.x, st.to);
  }

  PairSet rel(n);
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto add = [&](std::size_t p, std::size_t q) {
    if (rel.insert(p, q)) {
      ++stats.additions;
      work.emplace_back(p, q);
    }
  };
  for (std::size_t s = 0; s < n; ++s) add(s, s);
  for (auto const& st : steps) {
    if (st.x == 0) add(st.from, st.to);
  }
  while (!work.empty()) {
    auto [u, w] = work.front();
    work.pop_front();
    // p -x-> u R w -x^-1-> q  gives  p R q
    for (auto const& [x, p] : in[u]) {
      for (auto const& [y, q] : out[w]) {
        if (y == inverse_letter(x)) add(p, q);
      }
    }
    // Transitivity on both sides; lists may grow while we walk them.
    for (std::size_t i = 0; i < rel.row(w).size(); ++i) add(u, rel.row(w)[i]);
    for (std::size_t i = 0; i < rel.col(u).size(); ++i) add(rel.col(u)[i], w);
  }

  std::size_t q0 = id[v.initial()];
  for (std::size_t s : v.accepting_states()) {
    if (keep[s] && rel.contains(q0, id[s])) {
      stats.empty = false;
      break;
    }
  }
  return stats;
}

bool free_automaton_emptiness(ValenceAutomaton const& v) {
  return free_automaton_saturation(v).empty;
}

std::string to_string(Pda const& p) {
  using Guard = PdaTransition::Guard;
  using Action = PdaTransition::Action;
  auto sym = [](StackSymbol x) { return to_string(FreeWord({x})); };
  std::ostringstream os;
  os << "pda rank " << p.rank() << ", " << p.num_states() << " states, "
     << p.transitions().size() << " transitions\n";
  os << "initial " << p.state_name(p.initial()) << "\naccepting";
  for (std::size_t s = 0; s < p.num_states(); ++s) {
    if (p.is_accepting(s)) os << ' ' << p.state_name(s);
  }
  os << '\n';
  for (auto const& t : p.transitions()) {
    os << p.state_name(t.from) << " --"
       << (t.input ? p.alphabet()[*t.input] : std::string("ε")) << ", ";
    switch (t.guard) {
      case Guard::any:
        os << "*";
        break;
      case Guard::top_is:
        os << "top=" << sym(t.guard_symbol);
        break;
      case Guard::top_is_not:
        os << "top!=" << sym(t.guard_symbol);
        break;
    }
    os << ", ";
    switch (t.action) {
      case Action::none:
        os << "-";
        break;
      case Action::push:
        os << "push " << sym(t.push_symbol);
        break;
      case Action::pop:
        os << "pop";
        break;
    }
    os << "--> " << p.state_name(t.to) << '\n';
  }
  return os.str();
}

}  // namespace matdecide
