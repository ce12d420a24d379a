#ifndef PISOM_SERIALIZE_HPP_
#define PISOM_SERIALIZE_HPP_

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matrix_order.hpp"
#include "numeric.hpp"
#include "structure.hpp"
#include "word.hpp"

// JSON forms of the value types. Words are always word literals.

namespace pisom {

  using json = nlohmann::json;

  inline json to_json(ReducedWord const& w) {
    return format(w);
  }

  inline ReducedWord word_from_json(json const& j) {
    if (!j.is_string()) {
      throw ParseError("expected a word literal string");
    }
    return parse(j.get<std::string>());
  }

  inline json to_json(WordVector const& v) {
    json a = json::array();
    for (auto const& w : v) {
      a.push_back(format(w));
    }
    return a;
  }

  inline WordVector vector_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      throw ParseError("expected a nonempty array of word literals");
    }
    WordVector v;
    for (auto const& x : j) {
      v.push_back(word_from_json(x));
    }
    return v;
  }

  inline json to_json(IrrTable const& t) {
    return {{"k", t.k}, {"elements", to_json(t.elements)}};
  }

  inline IrrTable irr_table_from_json(json const& j) {
    IrrTable t{j.at("k").get<std::size_t>(), {}};
    for (auto const& x : j.at("elements")) {
      t.elements.push_back(word_from_json(x));
    }
    return t;
  }

  inline json to_json(GramMatrix const& g) {
    json cells = json::array();
    for (auto const& row : g.cells()) {
      cells.push_back(to_json(row));
    }
    return {{"k", g.k()},
            {"cells", cells},
            {"witness", g.witness() ? to_json(*g.witness()) : json(nullptr)}};
  }

  inline GramMatrix gram_from_json(json const& j) {
    GramMatrix::cells_type cells;
    for (auto const& row : j.at("cells")) {
      cells.push_back(vector_from_json(row));
    }
    if (j.contains("k") && j.at("k").get<std::size_t>() != cells.size()) {
      throw ParseError("gram matrix: k does not match cells");
    }
    std::optional<WordVector> wit;
    if (j.contains("witness") && !j.at("witness").is_null()) {
      wit = vector_from_json(j.at("witness"));
    }
    GramMatrix g(std::move(cells), wit);
    if (wit && gram(*wit) != g) {
      throw DomainError("gram matrix: witness does not reproduce the cells");
    }
    return g;
  }

  inline json to_json(Partition const& p) {
    return p.parts;
  }

  inline json to_json(ComplexMatrix const& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json r = json::array(), c = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        r.push_back(m(i, j).real());
        c.push_back(m(i, j).imag());
      }
      re.push_back(r);
      im.push_back(c);
    }
    return {{"n", m.rows()}, {"re", re}, {"im", im}};
  }

  inline ComplexMatrix matrix_from_json(json const& j) {
    auto const    n = j.at("n").get<Eigen::Index>();
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        m(i, k) = {j.at("re").at(i).at(k).get<double>(),
                   j.at("im").at(i).at(k).get<double>()};
      }
    }
    return m;
  }

  inline json to_json(Report const& r) {
    json f = json::array();
    for (auto const& x : r.failures) {
      f.push_back({{"relation", x.relation}, {x.metric, x.value}});
    }
    return {{"total", r.total}, {"failures", f}};
  }

  inline json to_json(MatrixClass const& c) {
    json flank = json::array();
    for (auto const& m : c.flank) {
      flank.push_back(m ? json(format(*m)) : json(nullptr));
    }
    json out = {{"case", to_string(c.tag)}, {"maximal", c.maximal}};
    if (c.tag != MatrixCase::Case1) {
      out[c.tag == MatrixCase::Case2 ? "a" : "lambda"] = to_json(c.inner);
    }
    out["m"] = flank;
    return out;
  }

  // Irr tables keyed by grade, e.g. {"5": {"k": 5, "elements": [...]}}.
  inline void load_irr_cache(IrrEnumerator& e, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      return;
    }
    json j;
    try {
      in >> j;
    } catch (json::exception const&) {
      throw ParseError("cache file '" + path + "' is not valid JSON");
    }
    for (auto const& [key, val] : j.items()) {
      IrrTable t = irr_table_from_json(val);
      if (std::to_string(t.k) != key) {
        throw ParseError("cache file '" + path + "': grade key mismatch");
      }
      e.insert(std::move(t));
    }
  }

  inline void save_irr_cache(IrrEnumerator const& e, std::string const& path) {
    json j = json::object();
    for (auto const& t : e.cached()) {
      j[std::to_string(t.k)] = to_json(t);
    }
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write cache file '" + path + "'");
    }
    out << j.dump(2) << '\n';
  }

  // {"kind": "graded", "base": 0.5, "lowered": "(-4,3,-3,4)"}
  inline GeneratorAssignment assignment_from_json(json const& j) {
    if (j.value("kind", "") != "graded") {
      throw ParseError("unknown generator assignment kind");
    }
    return graded_assignment(j.at("base").get<double>(),
                             word_from_json(j.at("lowered")));
  }

}  // namespace pisom

#endif  // PISOM_SERIALIZE_HPP_
