#ifndef PISOM_SAMPLING_HPP_
#define PISOM_SAMPLING_HPP_

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "matrix_order.hpp"
#include "order.hpp"
#include "word.hpp"

// Seeded generators of random words, selfadjoint elements and basic order
// relations, shared by the test suites and the CLI.

namespace pisom {

  using Rng = std::mt19937_64;

  struct WordShape {
    std::size_t max_len = 4;
    entry_type  max_abs = 3;
  };

  inline ReducedWord random_word(Rng& rng, WordShape shape = {}) {
    std::size_t const len
        = std::uniform_int_distribution<std::size_t>(1, shape.max_len)(rng);
    entry_type sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    std::vector<entry_type> raw;
    for (std::size_t i = 0; i < len; ++i, sign = -sign) {
      bool const interior = i != 0 && i + 1 != len;
      entry_type lo       = interior ? 2 : 1;
      entry_type hi       = std::max(lo, shape.max_abs);
      raw.push_back(sign
                    * std::uniform_int_distribution<entry_type>(lo, hi)(rng));
    }
    return reduce(std::move(raw));
  }

  // Raw sequence of nonzero entries, not necessarily reduced.
  inline std::vector<entry_type> random_raw(Rng&        rng,
                                            std::size_t max_len,
                                            entry_type  max_abs) {
    std::size_t const len
        = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    std::vector<entry_type> raw;
    for (std::size_t i = 0; i < len; ++i) {
      entry_type x = std::uniform_int_distribution<entry_type>(1, max_abs)(rng);
      raw.push_back(std::bernoulli_distribution(0.5)(rng) ? x : -x);
    }
    return raw;
  }

  inline ReducedWord random_in(Rng& rng, SetTag tag, WordShape shape = {}) {
    while (true) {
      ReducedWord w = random_word(rng, shape);
      if (member(w, tag)) {
        return w;
      }
    }
  }

  // star(h) h for random h, kept when it lies in D1.
  inline ReducedWord random_d1_sa(Rng& rng, WordShape shape = {}) {
    while (true) {
      ReducedWord const h = random_word(rng, shape);
      ReducedWord       n = mul(star(h), h);
      if (member(n, SetTag::D1)) {
        return n;
      }
    }
  }

  inline std::vector<std::pair<ReducedWord, ReducedWord>>
  random_scalar_relations(Rng& rng, std::size_t count, WordShape shape = {}) {
    std::vector<std::pair<ReducedWord, ReducedWord>> out;
    while (out.size() < count) {
      ReducedWord n    = random_d1_sa(rng, shape);
      auto        succ = hollow_successors(n);
      if (succ.empty()) {
        continue;
      }
      auto j = std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(
          rng);
      out.emplace_back(std::move(n), std::move(succ[j]));
    }
    return out;
  }

  // Word vector with a common tau, so that every cell lies in A0.
  inline WordVector random_vector(Rng& rng, std::size_t k, WordShape shape = {}) {
    WordVector v{random_word(rng, shape)};
    entry_type const t = tau(v.front());
    while (v.size() < k) {
      ReducedWord             w = random_word(rng, shape);
      std::vector<entry_type> raw(w.begin(), w.end());
      entry_type const        last = raw.back() + (t - tau(w));
      if (last == 0 || (last > 0) != (raw.back() > 0)) {
        continue;
      }
      raw.back() = last;
      v.push_back(reduce(std::move(raw)));
    }
    return v;
  }

  inline GramMatrix random_d1_gram(Rng& rng, std::size_t k, WordShape shape = {}) {
    while (true) {
      GramMatrix g = gram(random_vector(rng, k, shape));
      if (in_semigroup(g, SetTag::D1)) {
        return g;
      }
    }
  }

  inline std::vector<std::pair<GramMatrix, GramMatrix>>
  random_matrix_relations(Rng&        rng,
                          std::size_t count,
                          std::size_t k,
                          WordShape   shape = {}) {
    std::vector<std::pair<GramMatrix, GramMatrix>> out;
    while (out.size() < count) {
      GramMatrix g    = random_d1_gram(rng, k, shape);
      auto       succ = matrix_successors(g);
      if (succ.empty()) {
        continue;
      }
      auto j = std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(
          rng);
      out.emplace_back(std::move(g), std::move(succ[j]));
    }
    return out;
  }

}  // namespace pisom

#endif  // PISOM_SAMPLING_HPP_
