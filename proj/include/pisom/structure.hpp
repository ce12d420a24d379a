#ifndef PISOM_STRUCTURE_HPP_
#define PISOM_STRUCTURE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <vector>

#include "maps.hpp"
#include "order.hpp"
#include "word.hpp"

namespace pisom {

  using Factorization = std::vector<ReducedWord>;

  namespace detail {
    inline void require_A0(ReducedWord const& p, char const* op) {
      if (tau(p) != 0) {
        throw DomainError(std::string(op) + ": " + format(p)
                          + " is not in A0");
      }
    }

    // Least r in 1..size-2 with sigma_0 * sigma_r <= 0, if any.
    inline std::optional<std::size_t> first_sign_break(ReducedWord const& p) {
      entry_type const s0 = p.front();
      entry_type       s  = s0;
      for (std::size_t r = 1; r + 1 < p.size(); ++r) {
        s += p[r];
        if ((s0 > 0 && s <= 0) || (s0 < 0 && s >= 0)) {
          return r;
        }
      }
      return std::nullopt;
    }

    inline bool is_idempotent_word(ReducedWord const& w) {
      return w == neg_pos() || w == pos_neg();
    }

    // Drop idempotent factors that act as a one-sided unit on a neighbour.
    inline void make_minimal(Factorization& f) {
      bool changed = true;
      while (changed && f.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
          if (is_idempotent_word(f[i]) && mul(f[i], f[i + 1]) == f[i + 1]) {
            f.erase(f.begin() + i);
            changed = true;
            break;
          }
          if (is_idempotent_word(f[i + 1]) && mul(f[i], f[i + 1]) == f[i]) {
            f.erase(f.begin() + i + 1);
            changed = true;
            break;
          }
        }
      }
    }
  }  // namespace detail

  inline bool is_irreducible_A0(ReducedWord const& p) {
    detail::require_A0(p, "is_irreducible_A0");
    return !detail::first_sign_break(p).has_value();
  }

  inline Factorization factor_A0(ReducedWord const& p) {
    detail::require_A0(p, "factor_A0");
    Factorization out;
    ReducedWord   cur = p;
    while (true) {
      auto r = detail::first_sign_break(cur);
      if (!r) {
        out.push_back(cur);
        break;
      }
      auto const&             e = cur.entries();
      std::vector<entry_type> m, n;
      entry_type const        s_r = sigma(cur, *r);
      if (s_r == 0) {
        m.assign(e.begin(), e.begin() + *r + 1);
        n.assign(e.begin() + *r + 1, e.end());
      } else {
        entry_type const s_prev = sigma(cur, *r - 1);
        m.assign(e.begin(), e.begin() + *r);
        m.push_back(-s_prev);
        n.assign(e.begin() + *r, e.end());
        n.front() += s_prev;
        if (n.front() == 0) {
          n.erase(n.begin());
        }
      }
      out.push_back(reduce(std::move(m)));
      cur = reduce(std::move(n));
    }
    detail::make_minimal(out);
    return out;
  }

  inline Factorization factor_D0(ReducedWord const& d) {
    if (!member(d, SetTag::D0)) {
      throw DomainError("factor_D0: " + format(d) + " is not in D0");
    }
    return factor_A0(d);
  }

  inline ReducedWord product(Factorization const& f) {
    ReducedWord r = f.at(0);
    for (std::size_t i = 1; i < f.size(); ++i) {
      r = mul(r, f[i]);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graded enumeration of Irr(D0)
  ////////////////////////////////////////////////////////////////////////

  struct IrrTable {
    std::size_t              k;
    std::vector<ReducedWord> elements;  // sorted, duplicate free

    friend bool operator==(IrrTable const&, IrrTable const&) = default;
  };

  class IrrEnumerator {
   public:
    IrrTable table(std::size_t k) {
      if (k == 0) {
        throw DomainError("enum_irr_D0: grade must be positive");
      }
      {
        std::shared_lock lock(_mtx);
        if (auto it = _tables.find(k); it != _tables.end()) {
          return {k, it->second};
        }
      }
      std::unique_lock lock(_mtx);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!_tables.count(j)) {
          _tables.emplace(j, compute(j));
        }
      }
      return {k, _tables.at(k)};
    }

    // Seeds the memo from a persisted table; the caller vouches for it.
    void insert(IrrTable t) {
      std::unique_lock lock(_mtx);
      _tables.insert_or_assign(t.k, std::move(t.elements));
    }

    std::vector<IrrTable> cached() const {
      std::shared_lock      lock(_mtx);
      std::vector<IrrTable> out;
      for (auto const& [k, v] : _tables) {
        out.push_back({k, v});
      }
      return out;
    }

   private:
    // Requires _tables to hold every grade below k.
    std::vector<ReducedWord> compute(std::size_t k) const {
      if (k == 1) {
        return {neg_pos()};
      }
      std::set<ReducedWord> found;
      for (std::size_t k0 = 1; k0 < k; ++k0) {
        std::size_t const rest = k - k0;
        // r = 1: any lower-grade irreducible, including the unit
        for (auto const& m : _tables.at(rest)) {
          found.insert(alpha_pow(m, k0));
        }
        // r >= 2: ordered compositions of rest into parts >= 2
        std::vector<std::size_t> parts;
        products(rest, parts, k0, found);
      }
      return {found.begin(), found.end()};
    }

    void products(std::size_t               remaining,
                  std::vector<std::size_t>& parts,
                  std::size_t               k0,
                  std::set<ReducedWord>&    found) const {
      if (remaining == 0) {
        if (parts.size() >= 2) {
          expand(parts, 0, std::nullopt, k0, found);
        }
        return;
      }
      for (std::size_t p = 2; p <= remaining; ++p) {
        parts.push_back(p);
        products(remaining - p, parts, k0, found);
        parts.pop_back();
      }
    }

    void expand(std::vector<std::size_t> const& parts,
                std::size_t                     i,
                std::optional<ReducedWord>      acc,
                std::size_t                     k0,
                std::set<ReducedWord>&          found) const {
      if (i == parts.size()) {
        found.insert(alpha_pow(*acc, k0));
        return;
      }
      for (auto const& m : _tables.at(parts[i])) {
        expand(parts, i + 1, acc ? mul(*acc, m) : m, k0, found);
      }
    }

    static ReducedWord alpha_pow(ReducedWord w, std::size_t k0) {
      for (std::size_t j = 0; j < k0; ++j) {
        w = alpha(w);
      }
      return w;
    }

    mutable std::shared_mutex                          _mtx;
    std::map<std::size_t, std::vector<ReducedWord>>    _tables;
  };

  inline IrrEnumerator& default_irr_enumerator() {
    static IrrEnumerator e;
    return e;
  }

  inline IrrTable enum_irr_D0(std::size_t k) {
    return default_irr_enumerator().table(k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Selfadjoint elements of D1
  ////////////////////////////////////////////////////////////////////////

  struct SaCanonical {
    std::optional<ReducedWord> center;
    std::optional<ReducedWord> flank;
  };

  inline ReducedWord recompose(SaCanonical const& c) {
    if (!c.flank) {
      return c.center.value();
    }
    ReducedWord const& m = *c.flank;
    return c.center ? mul(mul(star(m), *c.center), m) : mul(star(m), m);
  }

  inline SaCanonical sa_canonical_D1(ReducedWord const& n) {
    detail::require_ambient(n, Ambient::D1, "sa_canonical_D1");
    Factorization const f = factor_A0(n);
    std::size_t const   t = f.size();
    for (std::size_t i = 0; i < t; ++i) {
      if (f[t - 1 - i] != star(f[i])) {
        throw Error("sa_canonical_D1: factorization of " + format(n)
                    + " is not star-palindromic");
      }
    }
    SaCanonical out;
    if (t % 2 == 1) {
      out.center = f[t / 2];
    }
    if (t >= 2) {
      Factorization right(f.begin() + (t + 1) / 2, f.end());
      out.flank = product(right);
    }
    return out;
  }

  enum class SaCase { CenterUnitPos, Boundary, CenterIrrNeg };

  inline char const* to_string(SaCase c) {
    switch (c) {
      case SaCase::CenterUnitPos:
        return "CenterUnitPos";
      case SaCase::Boundary:
        return "Boundary";
      case SaCase::CenterIrrNeg:
        return "CenterIrrNeg";
    }
    return "?";
  }

  inline SaCase classify_sa(ReducedWord const& n) {
    detail::require_ambient(n, Ambient::D1, "classify_sa");
    entry_type const t = tau(star(sa_factor_min(n)));
    if (t == 1) {
      return SaCase::CenterUnitPos;
    }
    if (t == 0) {
      return SaCase::Boundary;
    }
    if (t < 0) {
      return SaCase::CenterIrrNeg;
    }
    throw Error("classify_sa: tau(w*) > 1 for " + format(n));
  }

}  // namespace pisom

#endif  // PISOM_STRUCTURE_HPP_
