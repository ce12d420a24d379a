// pisom: command-line access to the word calculus, the orders and the
// numeric checks. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pisom/pisom.hpp"

using namespace pisom;

namespace {

  struct Options {
    bool          json  = false;
    std::uint64_t seed  = 1;
    double        tol   = default_psd_tol;
    std::string   cache;
    std::size_t   max_k = default_max_k;
  };

  Options opt;

  void emit(json const& j, std::string const& text) {
    if (opt.json) {
      std::cout << j.dump() << '\n';
    } else {
      std::cout << text << '\n';
    }
  }

  void emit_bool(bool b) {
    emit(json(b), b ? "true" : "false");
  }

  void emit_word(ReducedWord const& w) {
    emit(to_json(w), format(w));
  }

  void emit_words(std::vector<ReducedWord> const& ws) {
    std::string text;
    for (auto const& w : ws) {
      text += (text.empty() ? "" : "\n") + format(w);
    }
    emit(to_json(ws), text);
  }

  void emit_grams(std::vector<GramMatrix> const& gs) {
    json        j = json::array();
    std::string text;
    for (auto const& g : gs) {
      j.push_back(to_json(g));
      text += (text.empty() ? "" : "\n") + format(g);
    }
    emit(j, text);
  }

  void emit_report(Report const& r) {
    std::string text = "total " + std::to_string(r.total) + " failures "
                       + std::to_string(r.failures.size());
    for (auto const& f : r.failures) {
      std::ostringstream os;
      os << std::setprecision(6) << f.value;
      text += "\n" + f.relation + " " + f.metric + " " + os.str();
    }
    emit(to_json(r), text);
  }

  // A gram matrix argument: JSON object, word vector or cell literal.
  GramMatrix matrix_arg(std::string const& s) {
    if (!s.empty() && s.front() == '{') {
      json j;
      try {
        j = json::parse(s);
      } catch (json::exception const& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
      }
      try {
        return gram_from_json(j);
      } catch (json::exception const& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
      }
    }
    return parse_gram(s);
  }

  // "(2,1)" or "2,1"
  Partition partition_arg(std::string s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      s = s.substr(1, s.size() - 2);
    }
    Partition         p;
    std::stringstream ss(s);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long long   v    = -1;
      try {
        v = std::stoll(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != item.size() || v < 0) {
        throw ParseError("malformed partition '" + s + "'");
      }
      p.parts.push_back(static_cast<std::size_t>(v));
    }
    if (p.parts.empty()) {
      throw ParseError("empty partition");
    }
    return p;
  }

  Ambient ambient_arg(std::string const& s) {
    if (s == "A") {
      return Ambient::A;
    }
    if (s == "D0") {
      return Ambient::D0;
    }
    if (s == "D1") {
      return Ambient::D1;
    }
    throw ParseError("unknown semigroup '" + s + "' (A, D0 or D1)");
  }

  GeneratorAssignment load_assignment(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read fixture '" + path + "'");
    }
    try {
      return assignment_from_json(json::parse(in));
    } catch (json::exception const& e) {
      throw ParseError(std::string("bad fixture JSON: ") + e.what());
    }
  }

  // Every basic relation n <= s with n in D0^sa of weight <= w.
  std::vector<std::pair<ReducedWord, ReducedWord>> d0_relations(
      std::int64_t w) {
    std::vector<std::pair<ReducedWord, ReducedWord>> out;
    for (auto const& n : selfadjoint_words_up_to(w)) {
      if (member(n, SetTag::D0)) {
        for (auto const& s : hollow_successors(n, Ambient::D0)) {
          out.emplace_back(n, s);
        }
      }
    }
    return out;
  }

  std::vector<std::pair<GramMatrix, GramMatrix>> d0_matrix_relations(
      Rng& rng, std::size_t count, std::size_t k) {
    std::vector<std::pair<GramMatrix, GramMatrix>> out;
    while (out.size() < count) {
      auto rel = random_matrix_relations(rng, 1, k).front();
      if (in_semigroup(rel.first, SetTag::D0)
          && in_semigroup(rel.second, SetTag::D0)) {
        out.push_back(std::move(rel));
      }
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word calculus, orders and numeric checks for the *-semigroup "
               "of a partial isometry."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--tol", opt.tol, "PSD tolerance")->capture_default_str();
  app.add_option("--cache", opt.cache, "Irr(D0) cache file");
  app.add_option("--max-k", opt.max_k, "successor dimension cap")
      ->capture_default_str();

  std::function<void()> action;
  auto sub = [&](char const* name, char const* desc) {
    return app.add_subcommand(name, desc);
  };

  std::string a, b, tag, in = "A", fixture, lo, hi;
  std::vector<std::string> words;
  std::size_t r = 0, k = 0, d = 0, dim = 3, count = 50;
  std::int64_t max_weight = 22;
  bool d0 = false;

  auto* c = sub("reduce", "normal form of a word literal");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_word(parse(a)); }; });

  c = sub("mul", "product of words");
  c->add_option("words", words)->required()->expected(2, -1);
  c->callback([&] {
    action = [&] {
      ReducedWord p = parse(words.front());
      for (std::size_t i = 1; i < words.size(); ++i) {
        p = mul(p, parse(words[i]));
      }
      emit_word(p);
    };
  });

  c = sub("star", "involution");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_word(star(parse(a))); }; });

  c = sub("tau", "sum of entries");
  c->add_option("word", a)->required();
  c->callback([&] {
    action = [&] {
      auto t = tau(parse(a));
      emit(t, std::to_string(t));
    };
  });

  c = sub("sigma", "prefix sum through index r");
  c->add_option("word", a)->required();
  c->add_option("r", r)->required();
  c->callback([&] {
    action = [&] {
      auto t = sigma(parse(a), r);
      emit(t, std::to_string(t));
    };
  });

  c = sub("tau-plus", "sum of positive entries");
  c->add_option("word", a)->required();
  c->callback([&] {
    action = [&] {
      auto t = tau_plus(parse(a));
      emit(t, std::to_string(t));
    };
  });

  c = sub("member", "membership in A0, Aplus, Aminus, Aplus0, D0 or D1");
  c->add_option("word", a)->required();
  c->add_option("set", tag)->required();
  c->callback([&] {
    action = [&] { emit_bool(member(parse(a), parse_set_tag(tag))); };
  });

  c = sub("irr", "irreducibility in A0");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_bool(is_irreducible_A0(parse(a))); }; });

  c = sub("factor", "minimal factorization into irreducibles");
  c->add_option("word", a)->required();
  c->add_flag("--d0", d0, "require the word to lie in D0");
  c->callback([&] {
    action = [&] {
      ReducedWord const w = parse(a);
      emit_words(d0 ? factor_D0(w) : factor_A0(w));
    };
  });

  c = sub("enum-irr", "irreducibles of D0 with tau+ = k");
  c->add_option("k", k)->required();
  c->callback([&] {
    action = [&] {
      IrrEnumerator& e = default_irr_enumerator();
      if (!opt.cache.empty()) {
        load_irr_cache(e, opt.cache);
      }
      IrrTable const t = e.table(k);
      if (!opt.cache.empty()) {
        save_irr_cache(e, opt.cache);
      }
      std::string text;
      for (auto const& w : t.elements) {
        text += (text.empty() ? "" : "\n") + format(w);
      }
      emit(to_json(t), text);
    };
  });

  c = sub("alpha", "(-1) w (1)");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_word(alpha(parse(a))); }; });

  c = sub("omega", "(1) w (-1)");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_word(omega(parse(a))); }; });

  c = sub("beta-omega", "left inverse of alpha on Irr+ minus the unit");
  c->add_option("word", a)->required();
  c->callback([&] { action = [&] { emit_word(beta_omega(parse(a))); }; });

  c = sub("sa-factor", "factorizations n = w* w, minimal first");
  c->add_option("word", a)->required();
  c->callback([&] {
    action = [&] {
      std::vector<ReducedWord> ws;
      for (auto const& f : sa_factorizations(parse(a))) {
        ws.push_back(f.base);
      }
      emit_words(ws);
    };
  });

  c = sub("order-leq", "n <= m in the order on selfadjoint elements");
  c->add_option("n", a)->required();
  c->add_option("m", b)->required();
  c->add_option("--in", in, "ambient semigroup: A, D0 or D1")
      ->capture_default_str();
  c->callback([&] {
    action = [&] { emit_bool(leq(parse(a), parse(b), ambient_arg(in))); };
  });

  c = sub("order-succ", "basic successors of a selfadjoint element");
  c->add_option("n", a)->required();
  c->add_option("--in", in, "ambient semigroup: A, D0 or D1")
      ->capture_default_str();
  c->callback([&] {
    action = [&] { emit_words(hollow_successors(parse(a), ambient_arg(in))); };
  });

  c = sub("upper", "the idempotent above a selfadjoint element of D1");
  c->add_option("n", a)->required();
  c->callback([&] { action = [&] { emit_word(upper_idempotent(parse(a))); }; });

  c = sub("gram", "gram matrix of a word vector");
  c->add_option("vector", a)->required();
  c->callback([&] {
    action = [&] {
      GramMatrix const g = gram(parse_vector(a));
      emit(to_json(g), format(g));
    };
  });

  c = sub("factor-gram", "every word vector with the given gram matrix");
  c->add_option("matrix", a)->required();
  c->callback([&] {
    action = [&] {
      json        j = json::array();
      std::string text;
      for (auto const& v : factor_gram(matrix_arg(a))) {
        j.push_back(to_json(v));
        text += (text.empty() ? "" : "\n") + format(v);
      }
      emit(j, text);
    };
  });

  c = sub("matrix-leq", "order on gram matrices over D1");
  c->add_option("lo", a)->required();
  c->add_option("hi", b)->required();
  c->callback([&] {
    action = [&] {
      emit_bool(matrix_leq(matrix_arg(a), matrix_arg(b), opt.max_k));
    };
  });

  c = sub("matrix-succ", "basic successors of a gram matrix");
  c->add_option("matrix", a)->required();
  c->callback([&] {
    action = [&] { emit_grams(matrix_successors(matrix_arg(a), opt.max_k)); };
  });

  c = sub("matrix-pred", "the two immediate predecessors");
  c->add_option("matrix", a)->required();
  c->callback([&] {
    action = [&] {
      auto [p, q] = immediate_predecessors(matrix_arg(a));
      emit_grams({p, q});
    };
  });

  c = sub("classify", "structure of a gram matrix over D1");
  c->add_option("matrix", a)->required();
  c->callback([&] {
    action = [&] {
      MatrixClass const m = classify_matrix(matrix_arg(a));
      std::string text = to_string(m.tag);
      if (m.maximal) {
        text += " maximal";
      }
      if (!m.inner.empty()) {
        text += std::string("\n")
                + (m.tag == MatrixCase::Case2 ? "a " : "lambda ")
                + format(m.inner);
      }
      if (!m.flank.empty()) {
        text += "\nm [";
        for (std::size_t i = 0; i < m.flank.size(); ++i) {
          text += (i ? "," : "") + (m.flank[i] ? format(*m.flank[i]) : "-");
        }
        text += "]";
      }
      emit(to_json(m), text);
    };
  });

  c = sub("partitions", "ordered partitions of k into d parts, zeros allowed");
  c->add_option("d", d)->required();
  c->add_option("k", k)->required();
  c->callback([&] {
    action = [&] {
      json        j = json::array();
      std::string text;
      for (auto const& p : partitions(d, k)) {
        j.push_back(to_json(p));
        std::string s = "(";
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
          s += (i ? "," : "") + std::to_string(p.parts[i]);
        }
        text += (text.empty() ? "" : "\n") + s + ")";
      }
      emit(j, text);
    };
  });

  c = sub("iota-tau", "block expansion of a gram matrix by a partition");
  c->add_option("matrix", a)->required();
  c->add_option("partition", b)->required();
  c->callback([&] {
    action = [&] {
      GramMatrix const g = iota_tau(matrix_arg(a), partition_arg(b));
      emit(to_json(g), format(g));
    };
  });

  c = sub("verify-rep",
          "check scalar order relations at a random partial isometry or a "
          "fixture");
  c->add_option("--dim", dim, "matrix dimension")->capture_default_str();
  c->add_option("--pairs", count, "number of random relations")
      ->capture_default_str();
  c->add_option("--fixture", fixture, "generator assignment JSON");
  c->add_option("--max-weight", max_weight,
                "weight bound for fixture relations")
      ->capture_default_str();
  c->callback([&] {
    action = [&] {
      if (!fixture.empty()) {
        emit_report(verify_order_rep(
            load_assignment(fixture), d0_relations(max_weight), opt.tol));
        return;
      }
      Rng rng(opt.seed);
      emit_report(verify_order_rep(random_partial_isometry(dim, opt.seed),
                                   random_scalar_relations(rng, count),
                                   opt.tol));
    };
  });

  c = sub("verify-korder", "check k x k matrix order relations");
  c->add_option("k", k)->required();
  c->add_option("--dim", dim, "matrix dimension")->capture_default_str();
  c->add_option("--pairs", count, "number of random relations")
      ->capture_default_str();
  c->add_option("--fixture", fixture, "generator assignment JSON");
  c->add_option("--lo", lo, "lower matrix of a single relation");
  c->add_option("--hi", hi, "upper matrix of a single relation");
  c->callback([&] {
    action = [&] {
      if (lo.empty() != hi.empty()) {
        throw ParseError("--lo and --hi go together");
      }
      Rng rng(opt.seed);
      std::vector<std::pair<GramMatrix, GramMatrix>> rel;
      if (!lo.empty()) {
        rel.emplace_back(matrix_arg(lo), matrix_arg(hi));
      }
      if (!fixture.empty()) {
        if (rel.empty()) {
          rel = d0_matrix_relations(rng, count, k);
        }
        emit_report(verify_k_order(load_assignment(fixture), k, rel, opt.tol));
        return;
      }
      if (rel.empty()) {
        rel = random_matrix_relations(rng, count, k);
      }
      emit_report(verify_k_order(
          random_partial_isometry(dim, opt.seed), k, rel, opt.tol));
    };
  });

  c = sub("random-pi", "seeded random partial isometry");
  c->add_option("n", dim)->required();
  c->callback([&] {
    action = [&] {
      ComplexMatrix const v = random_partial_isometry(dim, opt.seed).v();
      std::ostringstream  os;
      os << std::fixed << std::setprecision(6);
      for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
          os << (j ? " " : "") << v(i, j).real() << (v(i, j).imag() < 0 ? "-" : "+")
             << std::abs(v(i, j).imag()) << "i";
        }
        if (i + 1 < v.rows()) {
          os << '\n';
        }
      }
      emit(to_json(v), os.str());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (ParseError const& e) {
    std::cerr << "pisom: " << e.what() << '\n';
    return 2;
  } catch (DomainError const& e) {
    std::cerr << "pisom: " << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    std::cerr << "pisom: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
