#include "matdecide/oracle.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace matdecide::oracle {

std::vector<Product> enumerate_products(std::vector<IntMatrix> const& gens,
                                        std::size_t max_len) {
  if (gens.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  std::vector<Product> all;
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < gens.size() && max_len > 0; ++i) {
    if (seen.emplace(to_string(gens[i]), all.size()).second) {
      layer.push_back(all.size());
      all.push_back({gens[i], {i + 1}});
    }
  }
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        IntMatrix m = all[idx].value * gens[i];
        if (!seen.emplace(to_string(m), all.size()).second) continue;
        std::vector<std::size_t> w = all[idx].witness;
        w.push_back(i + 1);
        next.push_back(all.size());
        all.push_back({std::move(m), std::move(w)});
      }
    }
    layer = std::move(next);
  }
  return all;
}

std::optional<GroupWitness> group_word_search(
    IntMatrix const& y, std::vector<IntMatrix> const& gens,
    std::size_t max_len) {
  std::vector<std::pair<int, IntMatrix>> letters;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int idx = static_cast<int>(i) + 1;
    letters.emplace_back(idx, gens[i]);
    letters.emplace_back(-idx, gens[i].inverse_unimodular());
  }
  IntMatrix id = IntMatrix::identity(y.dim());
  if (y == id) return GroupWitness{};

  std::map<std::string, GroupWitness> seen{{to_string(id), {}}};
  std::vector<std::pair<IntMatrix, GroupWitness>> layer{{id, {}}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<IntMatrix, GroupWitness>> next;
    for (auto const& [m, w] : layer) {
      for (auto const& [idx, g] : letters) {
        IntMatrix p = m * g;
        std::string key = to_string(p);
        if (seen.count(key)) continue;
        GroupWitness pw = w;
        pw.push_back(idx);
        if (p == y) return pw;
        seen.emplace(std::move(key), pw);
        next.emplace_back(std::move(p), std::move(pw));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

IntMatrix evaluate(std::vector<IntMatrix> const& gens,
                   std::vector<std::size_t> const& witness) {
  IntMatrix acc = IntMatrix::identity(gens.at(0).dim());
  for (std::size_t i : witness) acc = acc * gens.at(i - 1);
  return acc;
}

IntMatrix evaluate(std::vector<IntMatrix> const& gens,
                   GroupWitness const& witness) {
  IntMatrix acc = IntMatrix::identity(gens.at(0).dim());
  for (int i : witness) {
    IntMatrix const& g = gens.at(static_cast<std::size_t>(i < 0 ? -i : i) - 1);
    acc = acc * (i < 0 ? g.inverse_unimodular() : g);
  }
  return acc;
}

}  // namespace matdecide::oracle
