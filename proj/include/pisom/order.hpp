#ifndef PISOM_ORDER_HPP_
#define PISOM_ORDER_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "word.hpp"

namespace pisom {

  enum class SaVariant { Minimal, ShiftedPlus, ShiftedMinus };

  struct SaFactorization {
    ReducedWord base;
    SaVariant   variant;
  };

  // Which ambient semigroup a query lives in; only used to check inputs.
  enum class Ambient { A, D0, D1 };

  namespace detail {
    inline void require_selfadjoint(ReducedWord const& n, char const* op) {
      if (!is_selfadjoint(n)) {
        throw DomainError(std::string(op) + ": " + format(n)
                          + " is not selfadjoint");
      }
    }

    inline void require_ambient(ReducedWord const& n,
                                Ambient            amb,
                                char const*        op) {
      require_selfadjoint(n, op);
      if ((amb == Ambient::D0 && !member(n, SetTag::D0))
          || (amb == Ambient::D1 && !member(n, SetTag::D1))) {
        throw DomainError(std::string(op) + ": " + format(n)
                          + " is not in the requested semigroup");
      }
    }

    inline ReducedWord from_raw(std::vector<entry_type> raw) {
      return reduce(std::move(raw));
    }
  }  // namespace detail

  // n = (n0..nl, -nl..-n0) is the palindromic concatenation of star(w) and
  // w for w = (-nl..-n0), its right half.
  inline ReducedWord sa_factor_min(ReducedWord const& n) {
    detail::require_selfadjoint(n, "sa_factor_min");
    // A reduced selfadjoint word has even length: the middle entry of an odd
    // palindrome would equal its own negation.
    std::vector<entry_type> half(n.begin() + n.size() / 2, n.end());
    return detail::from_raw(std::move(half));
  }

  inline std::vector<SaFactorization> sa_factorizations(ReducedWord const& n) {
    ReducedWord                  w = sa_factor_min(n);
    std::vector<SaFactorization> out{{w, SaVariant::Minimal}};
    if (w.front() < 0) {
      out.push_back({mul(generator(), w), SaVariant::ShiftedPlus});
    } else {
      out.push_back({mul(generator_star(), w), SaVariant::ShiftedMinus});
    }
    return out;
  }

  // u = (-1, x, ...) -> (x, ...); u = (a, ...) with a <= -2 -> (a+1, ...);
  // u = (-1) -> (1,-1).
  inline ReducedWord strip_neg(ReducedWord const& u) {
    if (u.front() >= 0) {
      throw DomainError("strip_neg: " + format(u) + " starts positive");
    }
    if (u.size() == 1 && u.front() == -1) {
      return pos_neg();
    }
    std::vector<entry_type> raw(u.begin(), u.end());
    if (raw.front() == -1) {
      raw.erase(raw.begin());
    } else {
      raw.front() += 1;
    }
    return detail::from_raw(std::move(raw));
  }

  inline ReducedWord strip_pos(ReducedWord const& u) {
    if (u.front() <= 0) {
      throw DomainError("strip_pos: " + format(u) + " starts negative");
    }
    if (u.size() == 1 && u.front() == 1) {
      return neg_pos();
    }
    std::vector<entry_type> raw(u.begin(), u.end());
    if (raw.front() == 1) {
      raw.erase(raw.begin());
    } else {
      raw.front() -= 1;
    }
    return detail::from_raw(std::move(raw));
  }

  // Both choices of u_+ (or u_-) for a single factor u.
  inline std::vector<ReducedWord> hollow_choices(ReducedWord const& u) {
    if (u.front() < 0) {
      return {strip_neg(u), mul(generator(), u)};
    }
    return {strip_pos(u), mul(generator_star(), u)};
  }

  inline std::vector<ReducedWord> hollow_successors(ReducedWord const& n,
                                                    Ambient amb = Ambient::A) {
    detail::require_ambient(n, amb, "hollow_successors");
    std::vector<ReducedWord> out;
    for (auto const& f : sa_factorizations(n)) {
      for (auto const& c : hollow_choices(f.base)) {
        ReducedWord s = mul(star(c), c);
        if (s != n && std::find(out.begin(), out.end(), s) == out.end()) {
          out.push_back(std::move(s));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool leq(ReducedWord const& n,
                  ReducedWord const& m,
                  Ambient            amb = Ambient::A) {
    detail::require_ambient(n, amb, "leq");
    detail::require_ambient(m, amb, "leq");
    if (n == m) {
      return true;
    }
    auto const target = weight(m);
    std::unordered_set<ReducedWord> seen{n};
    std::deque<ReducedWord>         todo{n};
    while (!todo.empty()) {
      ReducedWord x = std::move(todo.front());
      todo.pop_front();
      for (auto& y : hollow_successors(x)) {
        if (y == m) {
          return true;
        }
        // weights strictly decrease along strict steps
        if (weight(y) > target && seen.insert(y).second) {
          todo.push_back(std::move(y));
        }
      }
    }
    return false;
  }

  inline ReducedWord upper_idempotent(ReducedWord const& n) {
    detail::require_ambient(n, Ambient::D1, "upper_idempotent");
    return mul(neg_pos(), n) == n ? neg_pos() : pos_neg();
  }

}  // namespace pisom

#endif  // PISOM_ORDER_HPP_
