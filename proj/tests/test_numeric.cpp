#include <algorithm>
#include <fstream>

#include "catch_amalgamated.hpp"

#include "pisom/enumerate.hpp"
#include "pisom/numeric.hpp"
#include "pisom/order.hpp"
#include "pisom/sampling.hpp"
#include "pisom/serialize.hpp"

using namespace pisom;
using cd = std::complex<double>;

namespace {
  ComplexMatrix e12() {
    ComplexMatrix v = ComplexMatrix::Zero(2, 2);
    v(0, 1)         = 1.0;
    return v;
  }

  ComplexMatrix diag(std::initializer_list<double> xs) {
    ComplexMatrix m = ComplexMatrix::Zero(xs.size(), xs.size());
    Eigen::Index  i = 0;
    for (double x : xs) {
      m(i, i) = x;
      ++i;
    }
    return m;
  }

  // Direct product of powers, without reducing first.
  ComplexMatrix eval_raw(ComplexMatrix const&           v,
                         std::vector<entry_type> const& raw) {
    ComplexMatrix r = ComplexMatrix::Identity(v.rows(), v.cols());
    for (auto x : raw) {
      for (entry_type i = 0; i < std::abs(x); ++i) {
        r = r * (x > 0 ? ComplexMatrix(v) : ComplexMatrix(v.adjoint()));
      }
    }
    return r;
  }

  // Evaluates every entry with v, ignoring the sign: not a *-map.
  struct SignBlind {
    ComplexMatrix v;
    std::size_t   dim() const {
      return static_cast<std::size_t>(v.rows());
    }
    ComplexMatrix eval(ReducedWord const& w) const {
      ComplexMatrix r = ComplexMatrix::Identity(v.rows(), v.cols());
      for (auto x : w) {
        for (entry_type i = 0; i < std::abs(x); ++i) {
          r = r * v;
        }
      }
      return r;
    }
  };

  std::vector<std::pair<ReducedWord, ReducedWord>> d0_relations(
      std::int64_t max_weight) {
    std::vector<std::pair<ReducedWord, ReducedWord>> out;
    for (auto const& n : selfadjoint_words_up_to(max_weight)) {
      if (!member(n, SetTag::D0)) {
        continue;
      }
      for (auto const& s : hollow_successors(n, Ambient::D0)) {
        out.emplace_back(n, s);
      }
    }
    return out;
  }

  GeneratorAssignment load_fixture() {
    std::ifstream in(PISOM_FIXTURE_DIR "/comp_order.json");
    REQUIRE(in);
    return assignment_from_json(json::parse(in));
  }
}  // namespace

TEST_CASE("evaluation at the matrix unit", "[numeric]") {
  PartialIsometryRep const rep(e12());
  CHECK(rep.eval(pos_neg()).isApprox(diag({1, 0})));
  CHECK(rep.eval(neg_pos()).isApprox(diag({0, 1})));
  CHECK(rep.eval(parse("(1,-1,1)")).isApprox(e12()));
  CHECK(eval_raw(e12(), {1, -1, 1}).isApprox(e12()));
  CHECK(rep.eval(ReducedWord{2}).isZero());
  CHECK_THROWS_AS(PartialIsometryRep(diag({2, 0})), DomainError);
  CHECK_NOTHROW(PartialIsometryRep(ComplexMatrix::Zero(3, 3)));
}

TEST_CASE("psd_check", "[numeric]") {
  CHECK(psd_check(diag({1, 0})));
  CHECK_FALSE(psd_check(diag({1, -1})));
  ComplexMatrix m(2, 2);
  m << 0.3, 0.2, 0.2, 0.0;
  CHECK_FALSE(psd_check(m));
  ComplexMatrix nh(2, 2);
  nh << 1.0, cd(0, 1), 0.0, 1.0;
  CHECK_FALSE(psd_check(nh));
  CHECK(psd_check(diag({-1e-12, 1}), 1e-9));
  CHECK(min_eigenvalue(diag({3, -2, 5})) == Catch::Approx(-2.0));
}

TEST_CASE("random_partial_isometry", "[numeric]") {
  auto const a = random_partial_isometry(2, 7);
  auto const b = random_partial_isometry(2, 7);
  CHECK(a.v() == b.v());
  CHECK(random_partial_isometry(5, 1).v() != random_partial_isometry(5, 2).v());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto const r = random_partial_isometry(1 + seed % 8, seed);
    CHECK(partial_isometry_defect(r.v()) <= 1e-12);
  }
  CHECK_THROWS_AS(random_partial_isometry(0, 1), DomainError);
}

TEST_CASE("evaluation is a contractive *-representation", "[numeric][property]") {
  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const rep = random_partial_isometry(1 + seed % 6, seed);
    for (int i = 0; i < 20; ++i) {
      auto const a = random_word(rng, {5, 3});
      auto const b = random_word(rng, {5, 3});
      CHECK((rep.eval(mul(a, b)) - rep.eval(a) * rep.eval(b)).norm() <= 1e-12);
      CHECK((rep.eval(star(a)) - rep.eval(a).adjoint()).norm() <= 1e-12);
      CHECK(op_norm(rep.eval(a)) <= 1.0 + 1e-12);
      auto const raw = random_raw(rng, 6, 3);
      CHECK((eval_raw(rep.v(), raw) - rep.eval(reduce(raw))).norm() <= 1e-12);
    }
  }
}

TEST_CASE("scalar order relations map to PSD differences", "[numeric][property]") {
  PartialIsometryRep const                         unit(e12());
  std::vector<std::pair<ReducedWord, ReducedWord>> chain;
  for (entry_type k = 2; k <= 6; ++k) {
    chain.emplace_back(ReducedWord{-k, k}, ReducedWord{-k + 1, k - 1});
  }
  auto const r0 = verify_order_rep(unit, chain);
  CHECK(r0.total == chain.size());
  CHECK(r0.ok());

  Rng rng(32);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const rep = random_partial_isometry(1 + seed % 6, 1000 + seed);
    auto const r   = verify_order_rep(rep, random_scalar_relations(rng, 50));
    CHECK(r.total == 50);
    CHECK(r.ok());
  }

  // v = 2 is not a partial isometry: (-2,2) <= (-1,1) gives 4 - 16 < 0
  MatrixEvaluator const bad(2.0 * ComplexMatrix::Identity(1, 1));
  auto const r = verify_order_rep(bad, chain);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures.front().metric == "min_eig");
  CHECK(r.failures.front().value < 0);
}

TEST_CASE("matrix order relations map to PSD block differences",
          "[numeric][property]") {
  auto const lo = gram({parse("(-2,3)"), parse("(-3,4)")});
  auto const hi = gram({parse("(-1,3)"), parse("(-2,4)")});
  Rng        rng(33);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto const rep = random_partial_isometry(1 + seed % 6, 2000 + seed);
    CHECK(verify_k_order(rep, 2, {{lo, hi}}).ok());
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(verify_k_order(rep, k, random_matrix_relations(rng, 10, k)).ok());
    }
    // k = 1 agrees with the scalar check
    auto const rel = random_scalar_relations(rng, 5);
    std::vector<std::pair<GramMatrix, GramMatrix>> as_mat;
    for (auto const& [a, b] : rel) {
      as_mat.emplace_back(GramMatrix({{a}}), GramMatrix({{b}}));
    }
    CHECK(verify_k_order(rep, 1, as_mat).total
          == verify_order_rep(rep, rel).total);
  }
  auto const big = random_partial_isometry(33, 1);
  CHECK_THROWS_AS(verify_k_order(big, 2, {{lo, hi}}), DomainError);
  CHECK_THROWS_AS(verify_k_order(big, 3, {{lo, hi}}), DomainError);
}

TEST_CASE("Schwarz inequality", "[numeric][property]") {
  Rng rng(34);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const rep = random_partial_isometry(1 + seed % 6, 3000 + seed);
    auto const a   = random_in(rng, SetTag::D1, {5, 3});
    CHECK(verify_schwarz(rep, {a, pos_neg()}).ok());
  }
  // the sign-blind map is not a *-map and breaks the inequality
  std::size_t fails = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SignBlind const sb{random_partial_isometry(2 + seed % 4, 4000 + seed).v()};
    fails += verify_schwarz(sb, {neg_pos(), pos_neg(), parse("(-2,2)")})
                 .failures.size();
  }
  CHECK(fails > 0);
}

TEST_CASE("conjugation by v implements alpha", "[numeric][property]") {
  PartialIsometryRep const unit(e12());
  CHECK((unit.v().adjoint() * unit.eval(pos_neg()) * unit.v())
            .isApprox(unit.eval(neg_pos())));
  CHECK(verify_conjugation(unit, {pos_neg()}).ok());
  Rng rng(35);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const rep = random_partial_isometry(1 + seed % 6, 5000 + seed);
    auto const r   = verify_conjugation(rep,
                                        {random_in(rng, SetTag::D1, {5, 3}),
                                         parse("(1,-1,1,-1)")});
    CHECK(r.total == 2);
    CHECK(r.ok());
  }
}

TEST_CASE("generator assignments", "[numeric]") {
  GeneratorAssignment g(2);
  ComplexMatrix       m = ComplexMatrix::Identity(2, 2) * 0.5;
  CHECK_THROWS_AS(g.assign(neg_pos(), m), DomainError);
  CHECK_THROWS_AS(g.assign(parse("(-2,3,-3,2)"), m), DomainError);
  CHECK_THROWS_AS(g.assign(parse("(-2,2)"), ComplexMatrix::Identity(3, 3)),
                  DomainError);
  ComplexMatrix nh(2, 2);
  nh << 0, 1, 0, 0;
  CHECK_THROWS_AS(g.assign(parse("(-2,2)"), nh), DomainError);
  g.assign(parse("(-3,2,-3,4)"), nh);
  CHECK(g.image(parse("(-4,3,-2,3)")) == nh.adjoint());
  g.assign(parse("(-2,2)"), m);
  CHECK(g.eval(neg_pos()).isApprox(ComplexMatrix::Identity(2, 2)));
  CHECK(g.eval(parse("(-2,2,-2,2)")).isApprox(m * m));
  CHECK(g.eval(parse("(-5,5)")).isZero());
  CHECK_THROWS_AS(g.eval(parse("(-2,3,-3,2)")), DomainError);
  CHECK_THROWS_AS(GeneratorAssignment(0), DomainError);
  CHECK_THROWS_AS(graded_assignment(1.5, parse("(-4,3,-3,4)")), DomainError);
  CHECK_THROWS_AS(graded_assignment(0.5, parse("(-3,2,-3,4)")), DomainError);
}

TEST_CASE("the committed fixture is an order map but not a 2-order map",
          "[numeric]") {
  auto const phi = load_fixture();
  auto val = [&](char const* w) { return phi.eval(parse(w))(0, 0).real(); };
  CHECK(val("(-4,3,-3,4)") == Catch::Approx(val("(-4,2,-2,4)")));
  CHECK(val("(-4,4)") > 0.0);

  auto const scalar = d0_relations(22);
  REQUIRE(scalar.size() > 50);
  auto const r1 = verify_order_rep(phi, scalar);
  CHECK(r1.total == scalar.size());
  CHECK(r1.ok());

  auto const lo = gram({parse("(-2,3)"), parse("(-3,4)")});
  auto const hi = gram({parse("(-1,3)"), parse("(-2,4)")});
  auto const succ = matrix_successors(lo);
  REQUIRE(std::find(succ.begin(), succ.end(), hi) != succ.end());
  auto const r2 = verify_k_order(phi, 2, {{lo, hi}});
  REQUIRE(r2.failures.size() == 1);
  CHECK(r2.failures.front().value < -1e-3);
}
