#ifndef PISOM_NUMERIC_HPP_
#define PISOM_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "maps.hpp"
#include "matrix_order.hpp"
#include "structure.hpp"
#include "word.hpp"

namespace pisom {

  using ComplexMatrix = Eigen::MatrixXcd;

  inline constexpr double default_psd_tol      = 1e-9;
  inline constexpr double default_identity_tol = 1e-12;
  inline constexpr std::size_t max_block_dim   = 64;

  inline double op_norm(ComplexMatrix const& m) {
    if (m.size() == 0) {
      return 0.0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
  }

  // Smallest eigenvalue of the Hermitian part (M + M*)/2.
  inline double min_eigenvalue(ComplexMatrix const& m) {
    ComplexMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  inline bool psd_check(ComplexMatrix const& m, double tol = default_psd_tol) {
    return op_norm(m - m.adjoint()) <= tol && min_eigenvalue(m) >= -tol;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluators
  ////////////////////////////////////////////////////////////////////////

  // Evaluates words in an arbitrary square matrix v; no validity check.
  class MatrixEvaluator {
   public:
    explicit MatrixEvaluator(ComplexMatrix v) : _v(std::move(v)) {
      if (_v.rows() != _v.cols() || _v.rows() == 0) {
        throw DomainError("evaluator needs a nonempty square matrix");
      }
    }

    std::size_t dim() const noexcept {
      return static_cast<std::size_t>(_v.rows());
    }
    ComplexMatrix const& v() const noexcept {
      return _v;
    }

    ComplexMatrix eval(ReducedWord const& w) const {
      ComplexMatrix const vs = _v.adjoint();
      ComplexMatrix       r  = ComplexMatrix::Identity(_v.rows(), _v.cols());
      for (entry_type x : w) {
        ComplexMatrix const& f = x > 0 ? _v : vs;
        for (entry_type i = 0; i < (x > 0 ? x : -x); ++i) {
          r = r * f;
        }
      }
      return r;
    }

   private:
    ComplexMatrix _v;
  };

  inline double partial_isometry_defect(ComplexMatrix const& v) {
    return op_norm(v * v.adjoint() * v - v);
  }

  class PartialIsometryRep : public MatrixEvaluator {
   public:
    explicit PartialIsometryRep(ComplexMatrix v,
                                double        tol = default_identity_tol)
        : MatrixEvaluator(std::move(v)), _tol(tol) {
      if (partial_isometry_defect(this->v()) > tol) {
        throw DomainError("invalid-rep: matrix is not a partial isometry");
      }
    }

    double tol() const noexcept {
      return _tol;
    }

   private:
    double _tol;
  };

  inline ComplexMatrix eval_word(PartialIsometryRep const& rep,
                                 ReducedWord const&        w) {
    return rep.eval(w);
  }

  // Polar part of a seeded complex Gaussian matrix, truncated to a random
  // rank.
  inline PartialIsometryRep random_partial_isometry(std::size_t   n,
                                                    std::uint64_t seed) {
    if (n == 0) {
      throw DomainError("random_partial_isometry: dimension must be positive");
    }
    std::mt19937_64                  rng(seed);
    std::normal_distribution<double> nd;
    ComplexMatrix                    a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double re = nd(rng);
        double im = nd(rng);
        a(i, j)   = {re, im};
      }
    }
    std::size_t const rank
        = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    Eigen::JacobiSVD<ComplexMatrix> svd(a,
                                        Eigen::ComputeFullU
                                            | Eigen::ComputeFullV);
    ComplexMatrix v = svd.matrixU().leftCols(rank)
                      * svd.matrixV().leftCols(rank).adjoint();
    return PartialIsometryRep(std::move(v));
  }

  // A unital *-representation of D0 given on its free generators
  // Irr+(A0) \ {(-1,1)}: explicit images first, then the rule, else zero.
  class GeneratorAssignment {
   public:
    using Rule = std::function<std::optional<ComplexMatrix>(ReducedWord const&)>;

    explicit GeneratorAssignment(std::size_t dim, Rule rule = {})
        : _dim(dim), _rule(std::move(rule)) {
      if (dim == 0) {
        throw DomainError("generator assignment needs positive dimension");
      }
    }

    std::size_t dim() const noexcept {
      return _dim;
    }

    // Also fixes the image of star(g) to the adjoint.
    void assign(ReducedWord const& g, ComplexMatrix m) {
      if (!detail::is_irr_plus(g) || g == neg_pos()) {
        throw DomainError("assign: " + format(g)
                          + " is not a non-unit generator of D0");
      }
      if (static_cast<std::size_t>(m.rows()) != _dim
          || static_cast<std::size_t>(m.cols()) != _dim) {
        throw DomainError("assign: image has the wrong dimension");
      }
      ReducedWord const gs = star(g);
      if (gs == g && op_norm(m - m.adjoint()) > default_identity_tol) {
        throw DomainError("assign: selfadjoint generator needs a Hermitian "
                          "image");
      }
      _images.insert_or_assign(gs, ComplexMatrix(m.adjoint()));
      _images.insert_or_assign(g, std::move(m));
    }

    ComplexMatrix image(ReducedWord const& g) const {
      if (auto it = _images.find(g); it != _images.end()) {
        return it->second;
      }
      if (_rule) {
        if (auto m = _rule(g)) {
          return *m;
        }
      }
      return ComplexMatrix::Zero(_dim, _dim);
    }

    ComplexMatrix eval(ReducedWord const& d) const {
      ComplexMatrix r = ComplexMatrix::Identity(_dim, _dim);
      for (auto const& g : factor_D0(d)) {
        if (g != neg_pos()) {
          r = r * image(g);
        }
      }
      return r;
    }

   private:
    std::size_t                          _dim;
    Rule                                 _rule;
    std::map<ReducedWord, ComplexMatrix> _images;
  };

  // g -> star(g') g' with g' = (g_0 + 1, g_1, ...): the generator sitting
  // above g* g in the order.
  inline ReducedWord lift_square(ReducedWord const& g) {
    std::vector<entry_type> raw(g.begin(), g.end());
    raw.front() += 1;
    ReducedWord const gp = reduce(std::move(raw));
    return mul(star(gp), gp);
  }

  // Scalar assignment g -> base^(tau+(g) - [g in L]) where L is the orbit of
  // `lowered` under lift_square. It respects every scalar order relation of
  // D0 but not the 2 x 2 ones when `lowered` is (-4,3,-3,4).
  inline GeneratorAssignment graded_assignment(double             base,
                                               ReducedWord const& lowered) {
    if (!(base > 0.0 && base < 1.0)) {
      throw DomainError("graded_assignment: base must lie in (0,1)");
    }
    if (!detail::is_irr_plus(lowered) || lowered == neg_pos()
        || !is_selfadjoint(lowered)) {
      throw DomainError("graded_assignment: lowered generator must be a "
                        "selfadjoint non-unit irreducible");
    }
    auto rule = [base, lowered](ReducedWord const& g) {
      entry_type const t     = tau_plus(g);
      bool             lower = false;
      for (ReducedWord e = lowered; tau_plus(e) <= t; e = lift_square(e)) {
        if (e == g) {
          lower = true;
          break;
        }
      }
      ComplexMatrix m(1, 1);
      m(0, 0) = std::pow(base, static_cast<double>(t - (lower ? 1 : 0)));
      return std::optional<ComplexMatrix>(std::move(m));
    };
    return GeneratorAssignment(1, rule);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct Failure {
    std::string relation;
    std::string metric;  // "min_eig" or "residual"
    double      value;
  };

  struct Report {
    std::size_t          total = 0;
    std::vector<Failure> failures;

    bool ok() const noexcept {
      return failures.empty();
    }

    void merge(Report const& other) {
      total += other.total;
      failures.insert(
          failures.end(), other.failures.begin(), other.failures.end());
    }
  };

  namespace detail {
    inline void record_psd(Report&              rep,
                           ComplexMatrix const& diff,
                           double               tol,
                           std::string const&   label) {
      ++rep.total;
      double const e = min_eigenvalue(diff);
      if (e < -tol || op_norm(diff - diff.adjoint()) > tol) {
        rep.failures.push_back({label, "min_eig", e});
      }
    }

  }  // namespace detail

  template <typename Evaluator>
  ComplexMatrix eval_block(Evaluator const& ev, GramMatrix const& g) {
    std::size_t const n = ev.dim();
    if (g.k() * n > max_block_dim) {
      throw DomainError("block matrix dimension exceeds "
                        + std::to_string(max_block_dim));
    }
    ComplexMatrix out(g.k() * n, g.k() * n);
    for (std::size_t i = 0; i < g.k(); ++i) {
      for (std::size_t j = 0; j < g.k(); ++j) {
        out.block(i * n, j * n, n, n) = ev.eval(g(i, j));
      }
    }
    return out;
  }

  // Each pair (a, b) is expected to satisfy a <= b.
  template <typename Evaluator>
  Report verify_order_rep(
      Evaluator const&                                          ev,
      std::vector<std::pair<ReducedWord, ReducedWord>> const& pairs,
      double                                                    tol
      = default_psd_tol) {
    Report rep;
    for (auto const& [a, b] : pairs) {
      detail::record_psd(
          rep, ev.eval(b) - ev.eval(a), tol, format(a) + " <= " + format(b));
    }
    return rep;
  }

  template <typename Evaluator>
  Report verify_k_order(
      Evaluator const&                                        ev,
      std::size_t                                             k,
      std::vector<std::pair<GramMatrix, GramMatrix>> const& pairs,
      double                                                  tol
      = default_psd_tol) {
    Report rep;
    for (auto const& [lo, hi] : pairs) {
      if (lo.k() != k || hi.k() != k) {
        throw DomainError("verify_k_order: sample has the wrong dimension");
      }
      detail::record_psd(rep,
                         eval_block(ev, hi) - eval_block(ev, lo),
                         tol,
                         format(lo) + " <= " + format(hi));
    }
    return rep;
  }

  // alpha(a)* alpha(a) <= alpha(a* a)
  template <typename Evaluator>
  Report verify_schwarz(Evaluator const&                ev,
                        std::vector<ReducedWord> const& words,
                        double                          tol = default_psd_tol) {
    Report rep;
    for (auto const& a : words) {
      ComplexMatrix const x = ev.eval(alpha(a));
      detail::record_psd(rep,
                         ev.eval(alpha(mul(star(a), a))) - x.adjoint() * x,
                         tol,
                         "schwarz " + format(a));
    }
    return rep;
  }

  // v* eval(n) v = eval(alpha(n))
  inline Report verify_conjugation(PartialIsometryRep const&       rep,
                                   std::vector<ReducedWord> const& words,
                                   double tol = 1e-10) {
    Report out;
    for (auto const& n : words) {
      ++out.total;
      double const r = op_norm(rep.v().adjoint() * rep.eval(n) * rep.v()
                               - rep.eval(alpha(n)));
      if (r > tol) {
        out.failures.push_back({"conj " + format(n), "residual", r});
      }
    }
    return out;
  }

}  // namespace pisom

#endif  // PISOM_NUMERIC_HPP_
