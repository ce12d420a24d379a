#ifndef PISOM_WORD_HPP_
#define PISOM_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pisom {

  using entry_type = std::int64_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input that violates a documented precondition (exit code 1 in the CLI).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class ReducedWord;
  ReducedWord reduce(std::vector<entry_type> raw);

  // Normal form of an element of A: nonempty, nonzero, alternating signs,
  // interior entries of absolute value at least 2.
  class ReducedWord {
   public:
    ReducedWord(std::initializer_list<entry_type> raw)
        : ReducedWord(reduce(std::vector<entry_type>(raw))) {}

    std::vector<entry_type> const& entries() const noexcept {
      return _entries;
    }
    std::size_t size() const noexcept {
      return _entries.size();
    }
    entry_type operator[](std::size_t i) const {
      return _entries[i];
    }
    entry_type front() const noexcept {
      return _entries.front();
    }
    entry_type back() const noexcept {
      return _entries.back();
    }
    auto begin() const noexcept {
      return _entries.cbegin();
    }
    auto end() const noexcept {
      return _entries.cend();
    }

    friend bool operator==(ReducedWord const&, ReducedWord const&) = default;
    friend auto operator<=>(ReducedWord const& x, ReducedWord const& y) {
      return x._entries <=> y._entries;
    }

   private:
    friend ReducedWord reduce(std::vector<entry_type> raw);
    struct trusted {};
    ReducedWord(trusted, std::vector<entry_type>&& e) : _entries(std::move(e)) {}

    std::vector<entry_type> _entries;
  };

  namespace detail {
    inline bool same_sign(entry_type x, entry_type y) noexcept {
      return (x > 0) == (y > 0);
    }

    inline entry_type checked_add(entry_type x, entry_type y) {
      entry_type r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw DomainError("integer overflow while reducing word");
      }
      return r;
    }
  }  // namespace detail

  // Single left-to-right pass with a stack; every prefix on the stack is kept
  // in normal form, so the result equals leftmost-first repeated rewriting.
  inline ReducedWord reduce(std::vector<entry_type> raw) {
    if (raw.empty()) {
      throw DomainError("empty word");
    }
    std::vector<entry_type> s;
    s.reserve(raw.size());
    for (entry_type x : raw) {
      if (x == 0) {
        throw DomainError("zero entry in word");
      }
      if (!s.empty() && detail::same_sign(s.back(), x)) {
        s.back() = detail::checked_add(s.back(), x);
      } else if (s.size() >= 2 && (s.back() == 1 || s.back() == -1)) {
        entry_type mid = s.back();
        s.pop_back();
        s.back() = detail::checked_add(detail::checked_add(s.back(), mid), x);
      } else {
        s.push_back(x);
      }
    }
    return ReducedWord(ReducedWord::trusted{}, std::move(s));
  }

  inline entry_type weight(ReducedWord const& w) {
    entry_type r = 0;
    for (entry_type x : w) {
      r = detail::checked_add(r, x < 0 ? -x : x);
    }
    return r;
  }

  inline ReducedWord const& neg_pos() {
    static ReducedWord const w{-1, 1};
    return w;
  }

  inline ReducedWord const& pos_neg() {
    static ReducedWord const w{1, -1};
    return w;
  }

  inline ReducedWord const& generator() {
    static ReducedWord const w{1};
    return w;
  }

  inline ReducedWord const& generator_star() {
    static ReducedWord const w{-1};
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  inline std::string format(ReducedWord const& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    out += ')';
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, ReducedWord const& w) {
    return os << format(w);
  }

  // word := '(' int (',' ' '* int)* ')' ; int := '-'? [1-9][0-9]*
  inline ReducedWord parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](char const* what) -> ParseError {
      return ParseError(std::string("malformed word literal '")
                        + std::string(text) + "': " + what);
    };
    auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
    if (peek() != '(') {
      throw fail("expected '('");
    }
    ++pos;
    std::vector<entry_type> raw;
    bool zero = false;
    while (true) {
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos;
      }
      if (peek() < '0' || peek() > '9') {
        throw fail("expected digit");
      }
      if (peek() == '0') {
        ++pos;
        if (peek() >= '0' && peek() <= '9') {
          throw fail("leading zero");
        }
        zero = true;
        raw.push_back(0);
      } else {
        entry_type v = 0;
        while (peek() >= '0' && peek() <= '9') {
          entry_type d = peek() - '0';
          if (__builtin_mul_overflow(v, entry_type(10), &v)
              || __builtin_add_overflow(v, d, &v)) {
            throw DomainError("integer overflow in word literal");
          }
          ++pos;
        }
        raw.push_back(neg ? -v : v);
      }
      if (peek() == ',') {
        ++pos;
        while (peek() == ' ') {
          ++pos;
        }
        continue;
      }
      if (peek() == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    if (pos != text.size()) {
      throw fail("trailing characters");
    }
    if (zero) {
      throw DomainError("zero entry in word literal '" + std::string(text)
                        + "'");
    }
    return reduce(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup operations
  ////////////////////////////////////////////////////////////////////////

  inline ReducedWord mul(ReducedWord const& m, ReducedWord const& n) {
    std::vector<entry_type> raw(m.begin(), m.end());
    raw.insert(raw.end(), n.begin(), n.end());
    return reduce(std::move(raw));
  }

  inline ReducedWord operator*(ReducedWord const& m, ReducedWord const& n) {
    return mul(m, n);
  }

  inline ReducedWord star(ReducedWord const& n) {
    std::vector<entry_type> raw(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      raw[i] = -n[n.size() - 1 - i];
    }
    return reduce(std::move(raw));
  }

  inline entry_type tau(ReducedWord const& n) {
    entry_type r = 0;
    for (entry_type x : n) {
      r = detail::checked_add(r, x);
    }
    return r;
  }

  // Prefix sum through index r, saturating at tau.
  inline entry_type sigma(ReducedWord const& n, std::size_t r) {
    entry_type s = 0;
    for (std::size_t i = 0; i < n.size() && i <= r; ++i) {
      s = detail::checked_add(s, n[i]);
    }
    return s;
  }

  inline entry_type tau_plus(ReducedWord const& n) {
    entry_type r     = 0;
    bool       found = false;
    for (entry_type x : n) {
      if (x > 0) {
        r     = detail::checked_add(r, x);
        found = true;
      }
    }
    if (!found) {
      throw DomainError("tau_plus: word " + format(n)
                        + " has no positive entry");
    }
    return r;
  }

  enum class SetTag { A0, Aplus, Aminus, Aplus0, D0, D1 };

  inline bool member(ReducedWord const& n, SetTag tag) {
    auto bounded_prefixes = [&n](entry_type bound) {
      entry_type s = 0;
      for (entry_type x : n) {
        s += x;
        if (s > bound) {
          return false;
        }
      }
      return true;
    };
    switch (tag) {
      case SetTag::A0:
        return tau(n) == 0;
      case SetTag::Aplus:
        return n.size() >= 2 && n.front() < 0 && n.back() > 0;
      case SetTag::Aminus:
        return n.size() >= 2 && n.front() > 0 && n.back() < 0;
      case SetTag::Aplus0:
        return member(n, SetTag::Aplus) && tau(n) == 0;
      case SetTag::D0:
        return tau(n) == 0 && bounded_prefixes(0);
      case SetTag::D1:
        return tau(n) == 0 && bounded_prefixes(1);
    }
    return false;
  }

  inline char const* to_string(SetTag tag) {
    switch (tag) {
      case SetTag::A0:
        return "A0";
      case SetTag::Aplus:
        return "Aplus";
      case SetTag::Aminus:
        return "Aminus";
      case SetTag::Aplus0:
        return "Aplus0";
      case SetTag::D0:
        return "D0";
      case SetTag::D1:
        return "D1";
    }
    return "?";
  }

  inline SetTag parse_set_tag(std::string_view s) {
    for (SetTag t : {SetTag::A0,
                     SetTag::Aplus,
                     SetTag::Aminus,
                     SetTag::Aplus0,
                     SetTag::D0,
                     SetTag::D1}) {
      if (s == to_string(t)) {
        return t;
      }
    }
    throw ParseError("unknown set tag '" + std::string(s) + "'");
  }

  inline bool is_selfadjoint(ReducedWord const& n) {
    return star(n) == n;
  }

  inline bool is_idempotent(ReducedWord const& n) {
    return mul(n, n) == n;
  }

}  // namespace pisom

template <>
struct std::hash<pisom::ReducedWord> {
  std::size_t operator()(pisom::ReducedWord const& w) const noexcept {
    std::size_t h = w.size();
    for (auto x : w) {
      h ^= std::hash<pisom::entry_type>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};

#endif  // PISOM_WORD_HPP_
