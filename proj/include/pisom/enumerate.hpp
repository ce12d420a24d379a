#ifndef PISOM_ENUMERATE_HPP_
#define PISOM_ENUMERATE_HPP_

#include <cstddef>
#include <vector>

#include "word.hpp"

namespace pisom {

  namespace detail {
    inline void compositions(entry_type               left,
                             std::vector<entry_type>& cur,
                             std::vector<std::vector<entry_type>>& out) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (entry_type p = 1; p <= left; ++p) {
        cur.push_back(p);
        compositions(left - p, cur, out);
        cur.pop_back();
      }
    }
  }  // namespace detail

  // All reduced words of weight exactly w, sorted.
  inline std::vector<ReducedWord> reduced_words_of_weight(entry_type w) {
    std::vector<std::vector<entry_type>> comps;
    std::vector<entry_type>              cur;
    detail::compositions(w, cur, comps);
    std::vector<ReducedWord> out;
    for (auto const& c : comps) {
      bool ok = true;
      for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        ok = ok && c[i] >= 2;
      }
      if (!ok) {
        continue;
      }
      for (int s : {-1, 1}) {
        std::vector<entry_type> raw(c);
        for (std::size_t i = 0; i < raw.size(); ++i) {
          raw[i] *= (i % 2 == 0) ? s : -s;
        }
        out.push_back(reduce(std::move(raw)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<ReducedWord> reduced_words_up_to(entry_type max_weight) {
    std::vector<ReducedWord> out;
    for (entry_type w = 1; w <= max_weight; ++w) {
      auto ws = reduced_words_of_weight(w);
      out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
  }

  // Every selfadjoint reduced word is star(h) ++ h for a unique right half h
  // with |h_0| >= 2 unless h has length one.
  inline std::vector<ReducedWord> selfadjoint_words_up_to(entry_type max_weight) {
    std::vector<ReducedWord> out;
    for (auto const& h : reduced_words_up_to(max_weight / 2)) {
      if (h.size() > 1 && (h.front() == 1 || h.front() == -1)) {
        continue;
      }
      std::vector<entry_type> raw;
      for (std::size_t i = h.size(); i-- > 0;) {
        raw.push_back(-h[i]);
      }
      raw.insert(raw.end(), h.begin(), h.end());
      out.push_back(reduce(std::move(raw)));
    }
    return out;
  }

}  // namespace pisom

#endif  // PISOM_ENUMERATE_HPP_
