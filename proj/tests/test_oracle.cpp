#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dendri/oracle.hpp"
#include "dendri/rewrite.hpp"
#include "dendri/series.hpp"
#include "support.hpp"

using namespace dendri;
using dendri::testing::poly;
using dendri::testing::w;

TEST_CASE("enumerate_normal_lwords") {
  auto e12 = enumerate_normal_lwords(1, 2);
  CHECK(e12.words == std::vector<LWord>{w("x2"), w("x1")});
  auto e21 = enumerate_normal_lwords(2, 1);
  CHECK(e21.words == std::vector<LWord>{w("(x1 < x1)"), w("(x1 > x1)")});
  CHECK(enumerate_normal_lwords(4, 1).size() == 30);

  auto e = enumerate_normal_lwords(4, 2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(e.index_of(e.words[i]) == i);
    if (i > 0) CHECK(compare(e.words[i - 1], e.words[i]) > 0);
  }
  CHECK_FALSE(e.index_of(w("x1")).has_value());
}

TEST_CASE("count_normal_lwords matches enumeration") {
  for (std::size_t n : {1, 2, 3})
    for (std::size_t m = 1; m <= (n == 3 ? 4u : 6u); ++m)
      CHECK(count_normal_lwords(m, n) == enumerate_normal_lwords(m, n).size());
}

TEST_CASE("enumerate_dd_words") {
  CHECK(enumerate_dd_words(2, 1) == std::vector<LWord>{w("(x1 < x1)"), w("(x1 > x1)")});
  CHECK(enumerate_dd_words(3, 1).size() == 5);
  CHECK(enumerate_dd_words(1, 3) == std::vector<LWord>{w("x3"), w("x2"), w("x1")});
  for (std::size_t m = 1; m <= 6; ++m) {
    auto dd = enumerate_dd_words(m, 2);
    CHECK(dd.size() == dim_closed(m, 2));
    for (const auto& u : dd) CHECK(is_dd_normal(u));
  }
}

TEST_CASE("enumerate_contexts") {
  CHECK(enumerate_contexts(0, 2).size() == 1);
  // one letter, two operations, two sides
  for (const auto& c : enumerate_contexts(1, 2)) CHECK(c.degree() == 1);
  CHECK(enumerate_contexts(1, 2).size() == 8);
}

TEST_CASE("relations match the rule polynomials") {
  const Alphabet a{3};
  LWord x = w("x1"), y = w("(x2 < x1)"), z = w("x3");
  std::vector<LWord> b{x, y, z};
  CHECK(dendriform_left_relation(x, y, z, a) == rule_polynomial(RuleId::F1, b, a));
  CHECK(dendriform_right_relation(x, y, z, a) == -rule_polynomial(RuleId::F2, b, a));
}

TEST_CASE("relation matrix at degree 3") {
  auto mat = build_relation_matrix(3, 1);
  CHECK(mat.columns.size() == 7);
  CHECK(mat.rows.size() == 2);
  CHECK(matrix_rank(mat) == 2);
}

TEST_CASE("quotient dimensions") {
  CHECK(quotient_dim(3, 1) == 5);
  CHECK(quotient_dim(4, 1) == 14);
  CHECK(quotient_dim(5, 1) == 42);
  CHECK(matrix_rank(build_relation_matrix(4, 1)) == 16);
  CHECK(quotient_dim(3, 1, true) == quotient_dim(3, 1, false));
  CHECK(matrix_rank(build_relation_matrix(5, 1, true)) == matrix_rank(build_relation_matrix(5, 1, false)));
}

TEST_CASE("oracle agrees with the formula and the DD enumeration") {
  struct Range {
    std::size_t n, max_m;
  };
  for (auto [n, max_m] : {Range{1, 5}, Range{2, 5}, Range{3, 4}}) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      auto d = oracle_dimension(m, n);
      CHECK(d.agree);
      CHECK(d.quotient_dim == d.closed_form);
      CHECK(d.quotient_dim == enumerate_dd_words(m, n).size());
      CHECK(d.rank + d.quotient_dim == d.n_words);
    }
  }
}

TEST_CASE("f3 lies in the ideal of f1 and f2") {
  for (std::size_t n : {1, 2}) {
    for (std::size_t m = 4; m <= (n == 1 ? 5u : 4u); ++m) {
      auto base = build_relation_matrix(m, n, false);
      RowEchelon ech;
      for (const auto& r : base.rows) ech.insert(r);
      for (const auto& x : enumerate_normal_lwords(1, n).words) {
        std::vector<LWord> b{x, w("x1"), w("x1"), w("x1")};
        if (m == 5) b[3] = w("(x1 < x1)");
        CHECK(ech.contains(coordinates(rule_polynomial(RuleId::F3, b, Alphabet{n}), base.columns)));
      }
    }
  }
}

TEST_CASE("rewriting agrees with the oracle") {
  // u - nf(u) lies in the span of the relation rows
  for (std::size_t n : {1, 2}) {
    const Alphabet a{n};
    Rewriter rw(a);
    for (std::size_t m = 3; m <= 4; ++m) {
      auto mat = build_relation_matrix(m, n);
      RowEchelon ech;
      for (const auto& r : mat.rows) ech.insert(r);
      for (const auto& u : mat.columns.words) {
        Polynomial diff = Polynomial::monomial(a, u) - rw.word_normal_form(u);
        REQUIRE(ech.contains(coordinates(diff, mat.columns)));
      }
    }
  }
}

TEST_CASE("RowEchelon") {
  RowEchelon e;
  CHECK(e.insert({{0, 1}, {2, 1}}));
  CHECK(e.insert({{1, 2}}));
  CHECK_FALSE(e.insert({{0, 3}, {1, 4}, {2, 3}}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({{1, Rational(1, 3)}}));
  CHECK_FALSE(e.contains({{2, 1}}));
  CHECK(e.reduce({{2, 1}}).size() == 1);
}

TEST_CASE("coordinates") {
  auto idx = enumerate_normal_lwords(2, 1);
  auto row = coordinates(poly(1, {{2, "(x1 > x1)"}, {-1, "(x1 < x1)"}}), idx);
  CHECK(row == SparseRow{{0, -1}, {1, 2}});
  CHECK_THROWS(coordinates(poly(1, {{1, "x1"}}), idx));
}

TEST_CASE("JSON output") {
  auto j = to_json(oracle_dimension(4, 1));
  CHECK(j["quotient_dim"] == 14);
  CHECK(j["agree"] == true);
}
