#include "dendri/oracle.hpp"

#include <algorithm>
#include <set>

#include "dendri/rewrite.hpp"
#include "dendri/series.hpp"

namespace dendri {

std::optional<std::size_t> EnumerationIndex::index_of(const LWord& u) const {
  auto it = position.find(u);
  if (it == position.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<LWord> leaves(std::size_t n) {
  std::vector<LWord> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(LWord::leaf(Generator{static_cast<std::uint32_t>(i)}));
  return out;
}

// by_degree[d] = all normal L-words of degree d, for d = 1..m.
std::vector<std::vector<LWord>> normal_words_upto(std::size_t m, std::size_t n) {
  std::vector<std::vector<LWord>> by_degree(m + 1);
  if (m >= 1) by_degree[1] = leaves(n);
  for (std::size_t d = 2; d <= m; ++d) {
    auto& out = by_degree[d];
    for (std::size_t i = 1; i < d; ++i) {
      for (const auto& v : by_degree[i]) {
        for (const auto& w : by_degree[d - i]) {
          out.push_back(LWord::node(Op::Succ, v, w));
          if (!v.is_node(Op::Succ)) out.push_back(LWord::node(Op::Prec, v, w));
        }
      }
    }
  }
  return by_degree;
}

std::vector<std::vector<LWord>> dd_words_upto(std::size_t m, std::size_t n) {
  std::vector<std::vector<LWord>> by_degree(m + 1);
  const auto gens = leaves(n);
  if (m >= 1) by_degree[1] = gens;
  for (std::size_t d = 2; d <= m; ++d) {
    auto& out = by_degree[d];
    for (const auto& x : gens) {
      for (const auto& v : by_degree[d - 1]) {
        out.push_back(LWord::node(Op::Prec, x, v));
        out.push_back(LWord::node(Op::Succ, x, v));
      }
      for (std::size_t i = 1; i + 1 < d; ++i)
        for (const auto& u1 : by_degree[i])
          for (const auto& u2 : by_degree[d - 1 - i])
            out.push_back(LWord::node(Op::Succ, LWord::node(Op::Succ, x, u1), u2));
    }
  }
  return by_degree;
}

void axpy(SparseRow& row, const Rational& c, const SparseRow& pivot) {
  // row <- row - c * pivot
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -c * b->second);
      ++b;
    } else {
      Rational v = a->second - c * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace

EnumerationIndex enumerate_normal_lwords(std::size_t m, std::size_t n) {
  EnumerationIndex index;
  index.degree = m;
  index.alphabet = Alphabet{n};
  if (m == 0) return index;
  index.words = std::move(normal_words_upto(m, n)[m]);
  std::sort(index.words.begin(), index.words.end(), Descending{});
  index.position.reserve(index.words.size());
  for (std::size_t i = 0; i < index.words.size(); ++i) index.position.emplace(index.words[i], i);
  return index;
}

std::vector<LWord> enumerate_dd_words(std::size_t m, std::size_t n) {
  if (m == 0) return {};
  auto words = std::move(dd_words_upto(m, n)[m]);
  std::sort(words.begin(), words.end(), Descending{});
  return words;
}

Integer count_normal_lwords(std::size_t m, std::size_t n) {
  // all[d]: normal words; plain[d]: those not topped by Succ.
  std::vector<Integer> all(m + 1, 0), plain(m + 1, 0);
  for (std::size_t d = 1; d <= m; ++d) {
    plain[d] = d == 1 ? Integer(static_cast<unsigned long>(n)) : Integer(0);
    all[d] = 0;
    for (std::size_t i = 1; i < d; ++i) {
      plain[d] += plain[i] * all[d - i];
      all[d] += all[i] * all[d - i];
    }
    all[d] += plain[d];
  }
  return m == 0 ? Integer(0) : all[m];
}

std::vector<Context> enumerate_contexts(std::size_t d, std::size_t n) {
  auto words = normal_words_upto(d, n);
  std::vector<std::vector<Context>> by_degree(d + 1);
  by_degree[0].push_back(Context{});
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t s = 1; s <= k; ++s)
      for (const auto& sibling : words[s])
        for (Op op : {Op::Prec, Op::Succ})
          for (Side side : {Side::Left, Side::Right})
            for (const auto& inner : by_degree[k - s]) by_degree[k].push_back(inner.wrapped(op, side, sibling));
  }
  return std::move(by_degree[d]);
}

SparseRow coordinates(const Polynomial& p, const EnumerationIndex& index) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [u, c] : p.terms()) {
    auto i = index.index_of(u);
    if (!i) throw std::invalid_argument("word " + to_string(u) + " is not in the degree-" +
                                        std::to_string(index.degree) + " index");
    row.emplace_back(*i, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  std::size_t scan = 0;
  while (scan < row.size()) {
    auto it = pivots_.find(row[scan].first);
    if (it == pivots_.end()) {
      ++scan;
      continue;
    }
    Rational c = row[scan].second;
    axpy(row, c, it->second);
  }
  return row;
}

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    Rational c = row.front().second;
    axpy(row, c, it->second);
  }
  if (row.empty()) return false;
  Rational lead = row.front().second;
  for (auto& [col, v] : row) v /= lead;
  std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

Polynomial dendriform_left_relation(const LWord& x, const LWord& y, const LWord& z, Alphabet a) {
  Polynomial p(a);
  p.add_term(l_prec(l_prec(x, y), z), 1);
  p.add_term(l_prec(x, l_prec(y, z)), -1);
  p.add_term(l_prec(x, l_succ(y, z)), -1);
  return p;
}

Polynomial dendriform_right_relation(const LWord& x, const LWord& y, const LWord& z, Alphabet a) {
  Polynomial p(a);
  p.add_term(l_succ(x, l_succ(y, z)), 1);
  p.add_term(l_succ(l_succ(x, y), z), -1);
  p.add_term(l_succ(l_prec(x, y), z), -1);
  return p;
}

namespace {

// Visits every tuple of normal words with the given degrees.
template <class F>
void for_each_tuple(const std::vector<std::vector<LWord>>& words, const std::vector<std::size_t>& degrees,
                    std::vector<LWord>& current, F&& f) {
  if (current.size() == degrees.size()) {
    f(current);
    return;
  }
  for (const auto& w : words[degrees[current.size()]]) {
    current.push_back(w);
    for_each_tuple(words, degrees, current, f);
    current.pop_back();
  }
}

template <class F>
void for_each_composition(std::size_t total, std::size_t parts, std::vector<std::size_t>& current, F&& f) {
  if (current.size() + 1 == parts) {
    if (total >= 1) {
      current.push_back(total);
      f(current);
      current.pop_back();
    }
    return;
  }
  for (std::size_t d = 1; d + (parts - current.size() - 1) <= total; ++d) {
    current.push_back(d);
    for_each_composition(total - d, parts, current, f);
    current.pop_back();
  }
}

}  // namespace

RelationMatrix build_relation_matrix(std::size_t m, std::size_t n, bool include_f3) {
  RelationMatrix matrix;
  matrix.degree = m;
  matrix.alphabet = Alphabet{n};
  matrix.columns = enumerate_normal_lwords(m, n);
  if (m < 3) return matrix;

  const Alphabet a{n};
  const auto words = normal_words_upto(m, n);
  std::set<SparseRow> seen;

  for (std::size_t k = 3; k <= m; ++k) {
    std::vector<Polynomial> instances;
    std::vector<std::size_t> degrees;
    for_each_composition(k, 3, degrees, [&](const std::vector<std::size_t>& ds) {
      std::vector<LWord> t;
      for_each_tuple(words, ds, t, [&](const std::vector<LWord>& b) {
        instances.push_back(dendriform_left_relation(b[0], b[1], b[2], a));
        instances.push_back(dendriform_right_relation(b[0], b[1], b[2], a));
      });
    });
    if (include_f3 && k >= 4) {
      for_each_composition(k, 4, degrees, [&](const std::vector<std::size_t>& ds) {
        std::vector<LWord> t;
        for_each_tuple(words, ds, t, [&](const std::vector<LWord>& b) {
          instances.push_back(rule_polynomial(RuleId::F3, b, a));
        });
      });
    }
    for (const auto& c : enumerate_contexts(m - k, n)) {
      for (const auto& p : instances) {
        SparseRow row = coordinates(apply_context(c, p), matrix.columns);
        if (row.empty()) continue;
        if (seen.insert(row).second) matrix.rows.push_back(std::move(row));
      }
    }
  }
  return matrix;
}

std::size_t matrix_rank(const RelationMatrix& matrix) {
  RowEchelon echelon;
  for (const auto& row : matrix.rows) echelon.insert(row);
  return echelon.rank();
}

OracleDimension oracle_dimension(std::size_t m, std::size_t n, bool include_f3) {
  OracleDimension d;
  d.degree = m;
  d.n = n;
  RelationMatrix matrix = build_relation_matrix(m, n, include_f3);
  d.n_words = matrix.columns.size();
  d.rank = matrix_rank(matrix);
  d.quotient_dim = d.n_words - d.rank;
  d.closed_form = dim_closed(m, n);
  d.agree = d.closed_form == Integer(static_cast<unsigned long>(d.quotient_dim));
  return d;
}

std::size_t quotient_dim(std::size_t m, std::size_t n, bool include_f3) {
  return oracle_dimension(m, n, include_f3).quotient_dim;
}

nlohmann::json to_json(const OracleDimension& d) {
  return {{"degree", d.degree},       {"n", d.n},
          {"n_words", d.n_words},     {"rank", d.rank},
          {"quotient_dim", d.quotient_dim}, {"closed_form", d.closed_form.get_str()},
          {"agree", d.agree}};
}

}  // namespace dendri
