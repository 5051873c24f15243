#ifndef WINSHIFT_TEST_HELPERS_HPP
#define WINSHIFT_TEST_HELPERS_HPP

#include <random>

#include "winshift/automata.hpp"

namespace winshift::testing {

// small random total DFA over a single track
inline Dfa random_dfa(std::mt19937& rng, int max_states, int max_sigma) {
  std::uniform_int_distribution<int> ns(1, max_states), sig(1, max_sigma), coin(0, 1);
  Dfa d;
  d.alpha = single_track(sig(rng));
  d.n_states = static_cast<uint32_t>(ns(rng));
  std::uniform_int_distribution<uint32_t> st(0, d.n_states - 1);
  d.initial = st(rng);
  int A = d.alpha.letter_count();
  d.delta.resize(static_cast<size_t>(d.n_states) * A);
  for (auto& q : d.delta) q = st(rng);
  d.accepting.resize(d.n_states);
  for (auto& a : d.accepting) a = static_cast<char>(coin(rng));
  return d;
}

}  // namespace winshift::testing

#endif
