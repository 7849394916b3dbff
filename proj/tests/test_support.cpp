#include "test_support.hpp"

#include "matdecide/sanov.hpp"

namespace matdecide::testing {

namespace {

std::vector<std::size_t> random_accepting(Rng& rng, ValenceAutomaton& v,
                                          std::size_t n) {
  std::vector<std::size_t> acc;
  for (std::size_t s = 0; s < n; ++s) {
    if (uniform(rng, 0, 2) == 0) acc.push_back(s);
  }
  if (acc.empty()) acc.push_back(uniform(rng, 0, n - 1));
  for (std::size_t s : acc) v.set_accepting(s);
  return acc;
}

InputSymbol random_input(Rng& rng, std::size_t epsilon_one_in) {
  if (uniform(rng, 1, epsilon_one_in) == 1) return std::nullopt;
  return uniform(rng, 0, 1);
}

}  // namespace

ValenceAutomaton random_gl2_automaton(Rng& rng, std::size_t max_states,
                                      std::size_t max_edges) {
  ValenceAutomaton v(LabelDomain::matrices(2), {"a", "b"});
  std::size_t n = uniform(rng, 1, max_states);
  for (std::size_t s = 0; s < n; ++s) v.add_state("s" + std::to_string(s));
  v.set_initial(0);
  random_accepting(rng, v, n);
  std::size_t m = uniform(rng, 1, max_edges);
  for (std::size_t i = 0; i < m; ++i) {
    IntMatrix label = uniform(rng, 0, 1)
                          ? eval_word(random_reduced_word(rng, uniform(rng, 0, 4)))
                          : random_gl2(rng, 4);
    v.add_edge(uniform(rng, 0, n - 1), random_input(rng, 5), std::move(label),
               uniform(rng, 0, n - 1));
  }
  return v;
}

ValenceAutomaton random_word_automaton(Rng& rng, std::size_t max_states,
                                       std::size_t max_edges,
                                       std::size_t max_label) {
  ValenceAutomaton v(LabelDomain::words(2), {"a", "b"});
  std::size_t n = uniform(rng, 1, max_states);
  for (std::size_t s = 0; s < n; ++s) v.add_state("s" + std::to_string(s));
  v.set_initial(0);
  random_accepting(rng, v, n);
  std::size_t m = uniform(rng, 1, max_edges);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Letter> raw;
    std::size_t len = uniform(rng, 0, max_label);
    for (std::size_t k = 0; k < len; ++k) {
      int g = static_cast<int>(uniform(rng, 1, 2));
      raw.push_back(uniform(rng, 0, 1) ? g : -g);
    }
    v.add_edge(uniform(rng, 0, n - 1), random_input(rng, 4), FreeWord(raw),
               uniform(rng, 0, n - 1));
  }
  return v;
}

std::vector<std::vector<std::size_t>> all_inputs(std::size_t k,
                                                 std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        auto w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    start = end;
  }
  return out;
}

}  // namespace matdecide::testing
