#ifndef PISOM_MATRIX_ORDER_HPP_
#define PISOM_MATRIX_ORDER_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maps.hpp"
#include "order.hpp"
#include "structure.hpp"
#include "word.hpp"

namespace pisom {

  using WordVector = std::vector<ReducedWord>;

  inline constexpr std::size_t default_max_k = 8;

  // A k x k array [w_i* w_j]. Equality and ordering look at the cells only;
  // the witness is a cached factorization.
  class GramMatrix {
   public:
    using cells_type = std::vector<std::vector<ReducedWord>>;

    explicit GramMatrix(cells_type                cells,
                        std::optional<WordVector> witness = std::nullopt)
        : _cells(std::move(cells)), _witness(std::move(witness)) {
      std::size_t const k = _cells.size();
      if (k == 0) {
        throw DomainError("gram matrix must be at least 1 x 1");
      }
      for (auto const& row : _cells) {
        if (row.size() != k) {
          throw DomainError("gram matrix is not square");
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
          if (_cells[j][i] != star(_cells[i][j])) {
            throw DomainError("gram matrix is not selfadjoint");
          }
        }
      }
      if (_witness && _witness->size() != k) {
        throw DomainError("witness length does not match gram matrix");
      }
    }

    std::size_t k() const noexcept {
      return _cells.size();
    }
    ReducedWord const& operator()(std::size_t i, std::size_t j) const {
      return _cells[i][j];
    }
    cells_type const& cells() const noexcept {
      return _cells;
    }
    std::optional<WordVector> const& witness() const noexcept {
      return _witness;
    }

    friend bool operator==(GramMatrix const& x, GramMatrix const& y) {
      return x._cells == y._cells;
    }
    friend auto operator<=>(GramMatrix const& x, GramMatrix const& y) {
      return x._cells <=> y._cells;
    }

   private:
    cells_type                _cells;
    std::optional<WordVector> _witness;
  };

  inline std::string format(GramMatrix const& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.k(); ++i) {
      s += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < g.k(); ++j) {
        s += (j == 0 ? "" : ",") + format(g(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

  inline std::ostream& operator<<(std::ostream& os, GramMatrix const& g) {
    return os << format(g);
  }

  inline std::string format(WordVector const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i == 0 ? "" : ",") + format(v[i]);
    }
    return s + "]";
  }

  namespace detail {
    // Reads '[' word (',' word)* ']' starting at pos, spaces allowed around
    // the separators.
    inline WordVector read_vector(std::string_view text, std::size_t& pos) {
      auto fail = [&](char const* what) {
        return ParseError("malformed word vector '" + std::string(text)
                          + "': " + what);
      };
      auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') {
          ++pos;
        }
      };
      skip();
      if (pos >= text.size() || text[pos] != '[') {
        throw fail("expected '['");
      }
      ++pos;
      WordVector out;
      while (true) {
        skip();
        if (pos >= text.size() || text[pos] != '(') {
          throw fail("expected '('");
        }
        std::size_t const close = text.find(')', pos);
        if (close == std::string_view::npos) {
          throw fail("unterminated word");
        }
        out.push_back(parse(text.substr(pos, close - pos + 1)));
        pos = close + 1;
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          return out;
        }
        throw fail("expected ',' or ']'");
      }
    }
  }  // namespace detail

  // "[(-2,3),(-3,4)]"
  inline WordVector parse_vector(std::string_view text) {
    std::size_t pos = 0;
    WordVector  v   = detail::read_vector(text, pos);
    if (pos != text.size()) {
      throw ParseError("malformed word vector '" + std::string(text)
                       + "': trailing characters");
    }
    return v;
  }

  inline GramMatrix gram(WordVector const& v) {
    if (v.empty()) {
      throw DomainError("gram: empty word vector");
    }
    GramMatrix::cells_type cells(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      ReducedWord const si = star(v[i]);
      cells[i].reserve(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        cells[i].push_back(mul(si, v[j]));
      }
    }
    return GramMatrix(std::move(cells), v);
  }

  // Either a word vector "[w1,w2]", read as its gram matrix, or the cells
  // "[[c11,c12],[c21,c22]]" as printed by format.
  inline GramMatrix parse_gram(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') {
      ++pos;
    }
    std::size_t inner = pos + 1;
    while (inner < text.size() && text[inner] == ' ') {
      ++inner;
    }
    if (inner >= text.size() || text[inner] != '[') {
      return gram(parse_vector(text));
    }
    GramMatrix::cells_type cells;
    pos = inner;
    while (true) {
      cells.push_back(detail::read_vector(text, pos));
      while (pos < text.size() && text[pos] == ' ') {
        ++pos;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("malformed matrix literal '" + std::string(text) + "'");
    }
    if (pos != text.size()) {
      throw ParseError("malformed matrix literal '" + std::string(text)
                       + "': trailing characters");
    }
    return GramMatrix(std::move(cells));
  }

  inline bool in_semigroup(GramMatrix const& g, SetTag tag) {
    for (auto const& row : g.cells()) {
      for (auto const& c : row) {
        if (!member(c, tag)) {
          return false;
        }
      }
    }
    return true;
  }

  inline entry_type diagonal_weight(GramMatrix const& g) {
    entry_type r = 0;
    for (std::size_t i = 0; i < g.k(); ++i) {
      r += weight(g(i, i));
    }
    return r;
  }

  // Elementwise left multiplication (x)[w] = [x w_1, ..., x w_k].
  inline WordVector left_mul(ReducedWord const& x, WordVector const& v) {
    WordVector out;
    out.reserve(v.size());
    for (auto const& w : v) {
      out.push_back(mul(x, w));
    }
    return out;
  }

  // +1 if every first entry is negative, -1 if every one is positive, else 0.
  inline int uniform_sign(WordVector const& v) {
    bool neg = true, pos = true;
    for (auto const& w : v) {
      neg = neg && w.front() < 0;
      pos = pos && w.front() > 0;
    }
    return neg ? 1 : (pos ? -1 : 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization recovery
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void
    factor_gram_search(GramMatrix const&                     g,
                       std::vector<std::vector<ReducedWord>> const& cand,
                       WordVector&                                  cur,
                       std::vector<WordVector>&                     out) {
      std::size_t const i = cur.size();
      if (i == g.k()) {
        out.push_back(cur);
        return;
      }
      for (auto const& c : cand[i]) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          ok = mul(star(cur[j]), c) == g(j, i);
        }
        if (ok) {
          cur.push_back(c);
          factor_gram_search(g, cand, cur, out);
          cur.pop_back();
        }
      }
    }
  }  // namespace detail

  // Every word vector v with gram(v) = g; the member whose first word starts
  // negative is listed first.
  inline std::vector<WordVector> factor_gram(GramMatrix const& g) {
    std::vector<std::vector<ReducedWord>> cand(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) {
      for (auto const& f : sa_factorizations(g(i, i))) {
        cand[i].push_back(f.base);
      }
    }
    std::vector<WordVector> out;
    WordVector              cur;
    detail::factor_gram_search(g, cand, cur, out);
    if (out.empty()) {
      throw DomainError("factor_gram: matrix is not a gram matrix");
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.front().front() < 0 && y.front().front() > 0;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Successors, order, predecessors
  ////////////////////////////////////////////////////////////////////////

  inline void check_k_cap(std::size_t k, std::size_t max_k) {
    if (k > max_k) {
      throw DomainError("matrix dimension " + std::to_string(k)
                        + " exceeds the cap " + std::to_string(max_k));
    }
  }

  inline std::vector<GramMatrix>
  matrix_successors(GramMatrix const& g, std::size_t max_k = default_max_k) {
    check_k_cap(g.k(), max_k);
    std::size_t const       k = g.k();
    std::vector<GramMatrix> out;
    for (auto const& w : factor_gram(g)) {
      if (uniform_sign(w) == 0) {
        continue;
      }
      std::vector<std::vector<ReducedWord>> choices;
      for (auto const& wi : w) {
        choices.push_back(hollow_choices(wi));
      }
      for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        WordVector u;
        for (std::size_t i = 0; i < k; ++i) {
          u.push_back(choices[i][(mask >> i) & 1]);
        }
        GramMatrix h = gram(u);
        if (h != g && std::find(out.begin(), out.end(), h) == out.end()) {
          out.push_back(std::move(h));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool is_maximal(GramMatrix const& g,
                         std::size_t       max_k = default_max_k) {
    return matrix_successors(g, max_k).empty();
  }

  inline bool matrix_leq(GramMatrix const& lo,
                         GramMatrix const& hi,
                         std::size_t       max_k = default_max_k) {
    if (lo.k() != hi.k()) {
      throw DomainError("matrix_leq: dimension mismatch");
    }
    check_k_cap(lo.k(), max_k);
    if (lo == hi) {
      return true;
    }
    // diagonal weight strictly drops along strict steps
    entry_type const      target = diagonal_weight(hi);
    std::set<GramMatrix>  seen{lo};
    std::deque<GramMatrix> todo{lo};
    while (!todo.empty()) {
      GramMatrix x = std::move(todo.front());
      todo.pop_front();
      for (auto& y : matrix_successors(x, max_k)) {
        if (y == hi) {
          return true;
        }
        if (diagonal_weight(y) > target && seen.insert(y).second) {
          todo.push_back(std::move(y));
        }
      }
    }
    return false;
  }

  inline std::pair<GramMatrix, GramMatrix>
  immediate_predecessors(GramMatrix const& g) {
    WordVector const v = factor_gram(g).front();
    auto pick = [&](entry_type x) {
      GramMatrix h = gram(left_mul(ReducedWord{x}, v));
      return h != g ? h : gram(left_mul(ReducedWord{2 * x}, v));
    };
    return {pick(-1), pick(1)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure of matrices over D1
  ////////////////////////////////////////////////////////////////////////

  enum class MatrixCase { Case1, Case2, Case3 };

  inline char const* to_string(MatrixCase c) {
    switch (c) {
      case MatrixCase::Case1:
        return "Case1";
      case MatrixCase::Case2:
        return "Case2";
      case MatrixCase::Case3:
        return "Case3";
    }
    return "?";
  }

  // Case1: g = [m_i* (1,-1) m_j].
  // Case2: g = [m_i* (a_i* a_j) m_j] with inner = a.
  // Case3: g = [m_i* (l_i* l_j) m_j] with inner = lambda.
  // An absent flank is omitted from the product.
  struct MatrixClass {
    MatrixCase                              tag;
    bool                                    maximal = false;
    WordVector                              inner;
    std::vector<std::optional<ReducedWord>> flank;
  };

  inline GramMatrix recompose(MatrixClass const& c) {
    std::size_t const      k = c.flank.size();
    GramMatrix::cells_type cells(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        ReducedWord x = c.tag == MatrixCase::Case1
                            ? pos_neg()
                            : mul(star(c.inner[i]), c.inner[j]);
        if (c.flank[i]) {
          x = mul(star(*c.flank[i]), x);
        }
        if (c.flank[j]) {
          x = mul(x, *c.flank[j]);
        }
        cells[i].push_back(std::move(x));
      }
    }
    return GramMatrix(std::move(cells));
  }

  namespace detail {
    inline std::optional<ReducedWord> flank_of(Factorization const& f,
                                               std::size_t          from) {
      if (from >= f.size()) {
        return std::nullopt;
      }
      return product(Factorization(f.begin() + from, f.end()));
    }

    inline std::optional<MatrixClass> split_case2(WordVector const& w) {
      MatrixClass out{MatrixCase::Case2, false, {}, {}};
      for (auto const& wi : w) {
        Factorization const f = factor_A0(wi);
        std::size_t         j = 0;
        while (j < f.size() && is_irr_plus(f[j])) {
          ++j;
        }
        if (j == 0) {
          return std::nullopt;
        }
        out.inner.push_back(product(Factorization(f.begin(), f.begin() + j)));
        out.flank.push_back(flank_of(f, j));
      }
      return out;
    }

    inline std::optional<MatrixClass> split_case3(GramMatrix const& g,
                                                  WordVector const& w) {
      MatrixClass out{MatrixCase::Case3, false, {}, {}};
      for (std::size_t i = 0; i < w.size(); ++i) {
        SaCanonical const sc = sa_canonical_D1(g(i, i));
        if (!sc.center || !is_irr_plus(*sc.center)) {
          return std::nullopt;
        }
        std::optional<ReducedWord> lambda;
        for (auto const& f : sa_factorizations(*sc.center)) {
          ReducedWord const x = sc.flank ? mul(f.base, *sc.flank) : f.base;
          if (x == w[i]) {
            lambda = f.base;
            break;
          }
        }
        if (!lambda) {
          return std::nullopt;
        }
        out.inner.push_back(*lambda);
        out.flank.push_back(sc.flank);
      }
      return out;
    }
  }  // namespace detail

  inline MatrixClass classify_matrix(GramMatrix const& g) {
    if (!in_semigroup(g, SetTag::D1)) {
      throw DomainError("classify_matrix: matrix is not over D1");
    }
    auto const facts = factor_gram(g);
    auto       t_of  = [](WordVector const& w) { return tau(star(w.front())); };
    entry_type t_max = t_of(facts.front());
    for (auto const& w : facts) {
      t_max = std::max(t_max, t_of(w));
    }

    bool uniform = false;
    for (auto const& w : facts) {
      uniform = uniform || uniform_sign(w) != 0;
    }

    std::optional<MatrixClass> out;
    if (t_max == 1) {
      for (auto const& w : facts) {
        if (t_of(w) != 1) {
          continue;
        }
        MatrixClass c{MatrixCase::Case1, false, {}, {}};
        for (auto const& wi : w) {
          ReducedWord m = mul(generator(), wi);
          c.flank.push_back(m == pos_neg() ? std::nullopt
                                           : std::optional<ReducedWord>(m));
        }
        out = std::move(c);
        break;
      }
    } else if (t_max == 0) {
      for (auto const& w : facts) {
        if (t_of(w) == 0) {
          out = detail::split_case2(w);
          if (out) {
            break;
          }
        }
      }
      // A mixed-sign factorization can have a coordinate like (1,-2,1) with
      // no D0 prefix; the matrix is then maximal and has no such form.
      if (!out && !uniform) {
        return MatrixClass{MatrixCase::Case2, true, {}, {}};
      }
      if (out) {
        out->maximal = !uniform;
      }
    } else {
      for (auto const& w : facts) {
        out = detail::split_case3(g, w);
        if (out) {
          break;
        }
      }
      if (out) {
        out->maximal = !uniform;
      } else if (!uniform) {
        out = MatrixClass{MatrixCase::Case3, true, {}, {}};
        return *out;
      }
    }
    if (!out || recompose(*out) != g) {
      throw Error("classify_matrix: no decomposition reproduces the matrix");
    }
    return *out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions and the maps iota_tau
  ////////////////////////////////////////////////////////////////////////

  struct Partition {
    std::vector<std::size_t> parts;

    std::size_t d() const noexcept {
      return parts.size();
    }
    std::size_t k() const noexcept {
      std::size_t s = 0;
      for (auto t : parts) {
        s += t;
      }
      return s;
    }
    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;
  };

  inline Partition identity_partition(std::size_t k) {
    return {std::vector<std::size_t>(k, 1)};
  }

  // All (t_1..t_d) of nonnegative integers summing to k, lexicographic.
  inline std::vector<Partition> partitions(std::size_t d, std::size_t k) {
    if (d == 0) {
      throw DomainError("partitions: d must be positive");
    }
    std::vector<Partition>   out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
      if (cur.size() + 1 == d) {
        cur.push_back(left);
        out.push_back({cur});
        cur.pop_back();
        return;
      }
      for (std::size_t t = 0; t <= left; ++t) {
        cur.push_back(t);
        rec(left - t);
        cur.pop_back();
      }
    };
    rec(k);
    return out;
  }

  // For tau in P(d,h) and sigma in P(h,k), the partition in P(d,k) with
  // iota_sigma . iota_tau = iota_(sigma . tau).
  inline Partition compose(Partition const& sigma, Partition const& tau) {
    if (sigma.d() != tau.k()) {
      throw DomainError("compose: partition dimensions do not match");
    }
    Partition   out;
    std::size_t offset = 0;
    for (auto t : tau.parts) {
      std::size_t g = 0;
      for (std::size_t l = 0; l < t; ++l) {
        g += sigma.parts[offset + l];
      }
      offset += t;
      out.parts.push_back(g);
    }
    return out;
  }

  inline GramMatrix iota_tau(GramMatrix const& g, Partition const& t) {
    if (t.d() != g.k()) {
      throw DomainError("iota_tau: partition length does not match matrix");
    }
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < t.d(); ++j) {
      idx.insert(idx.end(), t.parts[j], j);
    }
    if (idx.empty()) {
      throw DomainError("iota_tau: target dimension is zero");
    }
    GramMatrix::cells_type cells(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
      for (std::size_t q = 0; q < idx.size(); ++q) {
        cells[p].push_back(g(idx[p], idx[q]));
      }
    }
    std::optional<WordVector> wit;
    if (g.witness()) {
      wit.emplace();
      for (auto j : idx) {
        wit->push_back((*g.witness())[j]);
      }
    }
    return GramMatrix(std::move(cells), std::move(wit));
  }

  inline GramMatrix conj_delta(WordVector const& n, GramMatrix const& g) {
    if (n.size() != g.k()) {
      throw DomainError("conj_delta: dimension mismatch");
    }
    GramMatrix::cells_type cells(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) {
      ReducedWord const si = star(n[i]);
      for (std::size_t j = 0; j < g.k(); ++j) {
        cells[i].push_back(mul(mul(si, g(i, j)), n[j]));
      }
    }
    std::optional<WordVector> wit;
    if (g.witness()) {
      wit.emplace();
      for (std::size_t i = 0; i < g.k(); ++i) {
        wit->push_back(mul((*g.witness())[i], n[i]));
      }
    }
    return GramMatrix(std::move(cells), std::move(wit));
  }

  // Entrywise image under a *-map on words.
  template <typename F>
  GramMatrix map_cells(GramMatrix const& g, F&& f) {
    GramMatrix::cells_type cells(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) {
      for (std::size_t j = 0; j < g.k(); ++j) {
        cells[i].push_back(f(g(i, j)));
      }
    }
    return GramMatrix(std::move(cells));
  }

}  // namespace pisom

#endif  // PISOM_MATRIX_ORDER_HPP_
