// One line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "pisom/pisom.hpp"
#include "pisom/sampling.hpp"
#include "pisom/serialize.hpp"

using namespace pisom;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void fail(std::string const& what) {
      if (ok) {
        detail = what;
      }
      ok = false;
    }
    void expect(bool cond, std::string const& what) {
      if (!cond) {
        fail(what);
      }
    }
  };

  int failures = 0;

  void criterion(int id,
                 char const* name,
                 double limit_s,
                 std::function<void(Outcome&)> const& body) {
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double const s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    if (limit_s > 0 && s >= limit_s) {
      o.fail("took " + std::to_string(s) + " s, limit "
             + std::to_string(limit_s) + " s");
    }
    std::printf("[%s] %2d %s (%.2f s)%s%s\n",
                o.ok ? "PASS" : "FAIL",
                id,
                name,
                s,
                o.ok ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }

  std::vector<std::string> formatted(std::vector<ReducedWord> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(format(w));
    }
    return out;
  }

  WordVector vec(std::initializer_list<char const*> xs) {
    WordVector out;
    for (auto x : xs) {
      out.push_back(parse(x));
    }
    return out;
  }

  bool contains(std::vector<GramMatrix> const& xs, GramMatrix const& g) {
    return std::find(xs.begin(), xs.end(), g) != xs.end();
  }

  std::vector<ReducedWord> sa_in(SetTag tag, entry_type max_weight) {
    std::vector<ReducedWord> out;
    for (auto const& n : selfadjoint_words_up_to(max_weight)) {
      if (member(n, tag)) {
        out.push_back(n);
      }
    }
    return out;
  }

}  // namespace

int main() {
  criterion(1, "irreducible tables of D0, tau+ <= 6", 1.0, [](Outcome& o) {
    IrrEnumerator e;
    std::vector<std::vector<std::string>> const want{
        {"(-1,1)"},
        {"(-2,2)"},
        {"(-3,3)"},
        {"(-4,4)"},
        {"(-5,5)", "(-3,2,-2,3)"},
        {"(-6,6)", "(-4,2,-2,4)", "(-4,3,-2,3)", "(-3,2,-3,4)"}};
    for (std::size_t k = 1; k <= 6; ++k) {
      auto got = formatted(e.table(k).elements);
      auto exp = want[k - 1];
      std::sort(got.begin(), got.end());
      std::sort(exp.begin(), exp.end());
      o.expect(got == exp, "table mismatch at k = " + std::to_string(k));
    }
  });

  criterion(2, "factorization of (-2,3,-3,2)", 0, [](Outcome& o) {
    auto const f = factor_A0(parse("(-2,3,-3,2)"));
    o.expect(formatted(f)
                 == std::vector<std::string>{"(-2,2)", "(1,-1)", "(-2,2)"},
             "got " + format(WordVector(f.begin(), f.end())));
  });

  criterion(3, "confluence against the all-orders oracle, weight <= 8", 30.0,
            [](Outcome& o) {
              std::size_t cases = 0;
              for (std::int64_t w = 1; w <= 8; ++w) {
                for (auto const& raw : oracle::raw_words_of_weight(w)) {
                  auto const nf = oracle::all_normal_forms(raw);
                  if (nf.size() != 1 || *nf.begin() != reduce(raw).entries()) {
                    o.fail("disagreement at weight " + std::to_string(w));
                    return;
                  }
                  ++cases;
                }
              }
              o.expect(cases == 6560, "case count " + std::to_string(cases));
            });

  criterion(4, "map identities on Irr(D0) and random D0 products", 0,
            [](Outcome& o) {
              std::vector<ReducedWord> irr;
              for (std::size_t k = 1; k <= 6; ++k) {
                auto const t = enum_irr_D0(k).elements;
                irr.insert(irr.end(), t.begin(), t.end());
              }
              Rng rng(2024);
              std::vector<ReducedWord> sample = irr;
              for (int i = 0; i < 1000; ++i) {
                std::size_t const n = 1 + rng() % 4;
                ReducedWord       p = neg_pos();
                for (std::size_t j = 0; j < n; ++j) {
                  p = mul(p, irr[rng() % irr.size()]);
                }
                sample.push_back(p);
              }
              for (auto const& d : sample) {
                o.expect(member(d, SetTag::D0), format(d) + " not in D0");
                o.expect(alpha(omega(d)) == d, "alpha omega at " + format(d));
                o.expect(beta_omega(alpha(d)) == d,
                         "beta_omega alpha at " + format(d));
              }
              // Irr+ of A0 with tau+ <= 6, unit excluded
              for (auto const& g : reduced_words_up_to(12)) {
                if (g == neg_pos() || !member(g, SetTag::Aplus0)
                    || tau_plus(g) > 6 || !is_irreducible_A0(g)) {
                  continue;
                }
                o.expect(alpha(beta_omega(g)) == g,
                         "alpha beta_omega at " + format(g));
                o.expect(omega(g) == mul(mul(pos_neg(), beta_omega(g)), pos_neg()),
                         "omega formula at " + format(g));
              }
            });

  criterion(5, "order suite", 0, [](Outcome& o) {
    for (entry_type k = 1; k <= 10; ++k) {
      o.expect(leq(ReducedWord{-k, k}, neg_pos()),
               "chain at k = " + std::to_string(k));
    }
    for (auto const& a : sa_in(SetTag::D1, 8)) {
      o.expect(leq(mul(a, a), a, Ambient::D1), "square at " + format(a));
      o.expect(leq(a, upper_idempotent(a), Ambient::D1),
               "upper idempotent at " + format(a));
    }
    auto const sa = selfadjoint_words_up_to(6);
    for (auto const& n : sa) {
      for (auto const& m : sa) {
        if (n != m && leq(n, m) && leq(m, n)) {
          o.fail("antisymmetry at " + format(n) + ", " + format(m));
        }
      }
    }
  });

  criterion(6, "factor_gram exactness, k <= 3, weight <= 5", 0, [](Outcome& o) {
    auto const              words = reduced_words_up_to(5);
    std::vector<WordVector> level{{}};
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<WordVector> next;
      for (auto const& v : level) {
        for (auto const& w : words) {
          next.push_back(v);
          next.back().push_back(w);
        }
      }
      level = std::move(next);
      for (auto const& v : level) {
        auto const        f      = factor_gram(gram(v));
        std::size_t const expect = uniform_sign(v) != 0 ? 2 : 1;
        if (std::find(f.begin(), f.end(), v) == f.end() || f.size() != expect) {
          o.fail("mismatch at " + format(v));
          return;
        }
      }
    }
  });

  criterion(7, "worked successor examples", 0, [](Outcome& o) {
    auto check = [&](GramMatrix const& g,
                     std::vector<std::pair<WordVector, bool>> const& want) {
      auto const succ = matrix_successors(g);
      std::set<std::string> text;
      for (auto const& s : succ) {
        text.insert(format(s));
      }
      for (auto const& [v, maximal] : want) {
        GramMatrix const s = gram(v);
        o.expect(contains(succ, s) && text.count(format(s)),
                 format(s) + " missing below " + format(g));
        o.expect(is_maximal(s) == maximal, "maximality of " + format(s));
      }
    };
    check(gram(vec({"(-2,3)", "(-3,4)"})),
          {{vec({"(-1,3)", "(-2,4)"}), false},
           {vec({"(-1,3)", "(1,-3,4)"}), true},
           {vec({"(1,-2,3)", "(-2,4)"}), true}});
    check(gram(vec({"(-1,2,-5,6)", "(-3,5)"})),
          {{vec({"(2,-5,6)", "(-2,5)"}), true},
           {vec({"(1,-5,6)", "(-3,5)"}), true}});
  });

  criterion(8, "two immediate predecessors, 500 random grams", 0,
            [](Outcome& o) {
              Rng rng(8);
              for (int i = 0; i < 500; ++i) {
                GramMatrix const g = random_d1_gram(rng, 1 + i % 4);
                auto const [a, b]  = immediate_predecessors(g);
                o.expect(a != b, "equal predecessors of " + format(g));
                o.expect(contains(matrix_successors(a), g)
                             && contains(matrix_successors(b), g),
                         "not a successor: " + format(g));
              }
            });

  criterion(9, "numeric soundness on 100 random partial isometries", 60.0,
            [](Outcome& o) {
              Rng rng(9);
              for (std::uint64_t seed = 0; seed < 100; ++seed) {
                auto const rep = random_partial_isometry(1 + seed % 6, seed);
                Report r = verify_order_rep(rep, random_scalar_relations(rng, 200));
                for (std::size_t k = 1; k <= 3; ++k) {
                  r.merge(verify_k_order(rep, k, random_matrix_relations(rng, 50, k)));
                }
                std::vector<ReducedWord> words;
                for (int i = 0; i < 20; ++i) {
                  words.push_back(random_in(rng, SetTag::D1, {5, 3}));
                }
                r.merge(verify_schwarz(rep, words));
                Report const c = verify_conjugation(rep, words, 1e-10);
                r.merge(c);
                if (!r.ok()) {
                  auto const& f = r.failures.front();
                  o.fail("seed " + std::to_string(seed) + ": " + f.relation
                         + " " + f.metric + " " + std::to_string(f.value));
                  return;
                }
              }
            });

  criterion(10, "comp-order fixture: order map, not 2-order map", 0,
            [](Outcome& o) {
              std::ifstream in(PISOM_FIXTURE_DIR "/comp_order.json");
              if (!in) {
                o.fail("fixture missing");
                return;
              }
              auto const phi = assignment_from_json(json::parse(in));
              std::vector<std::pair<ReducedWord, ReducedWord>> rel;
              for (auto const& n : sa_in(SetTag::D0, 22)) {
                for (auto const& s : hollow_successors(n, Ambient::D0)) {
                  rel.emplace_back(n, s);
                }
              }
              Report const r1 = verify_order_rep(phi, rel);
              o.expect(r1.ok() && r1.total == rel.size(),
                       "scalar relation fails");
              auto const   lo = gram(vec({"(-2,3)", "(-3,4)"}));
              auto const   hi = gram(vec({"(-1,3)", "(-2,4)"}));
              Report const r2 = verify_k_order(phi, 2, {{lo, hi}});
              o.expect(!r2.ok() && r2.failures.front().value < -1e-9,
                       "block relation does not fail");
            });

  return failures;
}
