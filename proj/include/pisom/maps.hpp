#ifndef PISOM_MAPS_HPP_
#define PISOM_MAPS_HPP_

#include <cstddef>
#include <vector>

#include "word.hpp"

namespace pisom {

  namespace detail {
    // Irr+(A0): in A0+, and every proper prefix sum is negative.
    inline bool is_irr_plus(ReducedWord const& n) {
      if (!member(n, SetTag::Aplus0)) {
        return false;
      }
      entry_type s = 0;
      for (std::size_t r = 0; r + 1 < n.size(); ++r) {
        s += n[r];
        if (s >= 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // alpha(n) = (-1) n (1)
  inline ReducedWord alpha(ReducedWord const& n) {
    return mul(mul(generator_star(), n), generator());
  }

  // omega(n) = (1) n (-1)
  inline ReducedWord omega(ReducedWord const& n) {
    return mul(mul(generator(), n), generator_star());
  }

  // Endpoint shift; a left inverse of alpha on D0.
  inline ReducedWord beta_omega(ReducedWord const& n) {
    if (!detail::is_irr_plus(n) || n == neg_pos()) {
      throw DomainError("beta_omega: " + format(n)
                        + " is not a non-unit element of Irr+(A0)");
    }
    std::vector<entry_type> raw(n.begin(), n.end());
    raw.front() += 1;
    raw.back() -= 1;
    return reduce(std::move(raw));
  }

  // s -> a* s a
  inline ReducedWord conj(ReducedWord const& a, ReducedWord const& s) {
    return mul(mul(star(a), s), a);
  }

}  // namespace pisom

#endif  // PISOM_MAPS_HPP_
