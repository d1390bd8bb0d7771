#pragma once

// Brute-force dimension of the degree-m piece of the free dendriform
// algebra: enumerate normal L-words, span the degree-m part of the ideal
// by context-embedded relation instances, and take an exact rank. Nothing
// here goes through the rewriting engine.

#include <optional>
#include <unordered_map>
#include <vector>

#include "dendri/poly.hpp"

namespace dendri {

/// All normal L-words of one degree, greatest first.
struct EnumerationIndex {
  std::size_t degree = 0;
  Alphabet alphabet;
  std::vector<LWord> words;
  std::unordered_map<LWord, std::size_t, LWordHash> position;

  std::optional<std::size_t> index_of(const LWord& u) const;
  std::size_t size() const noexcept { return words.size(); }
};

EnumerationIndex enumerate_normal_lwords(std::size_t m, std::size_t n);

/// Normal DD-words of degree m, greatest first, generated from their
/// grammar.
std::vector<LWord> enumerate_dd_words(std::size_t m, std::size_t n);

/// Number of normal L-words of degree m over n letters, from the shape
/// recursion (no enumeration).
Integer count_normal_lwords(std::size_t m, std::size_t n);

/// Contexts whose siblings are normal words of total degree d.
std::vector<Context> enumerate_contexts(std::size_t d, std::size_t n);

/// Sorted by column; no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow coordinates(const Polynomial& p, const EnumerationIndex& index);

/// Incremental exact row echelon form over the rationals.
class RowEchelon {
 public:
  /// Adds a row; returns true if it raised the rank.
  bool insert(SparseRow row);
  /// Remainder of `row` after elimination against the stored pivots.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::unordered_map<std::size_t, SparseRow> pivots_;
};

/// The dendriform relations as L-algebra elements:
/// (x<y)<z - x<(y<z) - x<(y>z) and x>(y>z) - (x>y)>z - (x<y)>z.
Polynomial dendriform_left_relation(const LWord& x, const LWord& y, const LWord& z, Alphabet a);
Polynomial dendriform_right_relation(const LWord& x, const LWord& y, const LWord& z, Alphabet a);

struct RelationMatrix {
  std::size_t degree = 0;
  Alphabet alphabet;
  EnumerationIndex columns;
  /// Distinct nonzero rows.
  std::vector<SparseRow> rows;
};

/// Rows: every context of degree m - k applied to every relation instance
/// of degree k, 3 <= k <= m. With include_f3 the instances of f3 are
/// added as well.
RelationMatrix build_relation_matrix(std::size_t m, std::size_t n, bool include_f3 = false);

std::size_t matrix_rank(const RelationMatrix& matrix);

struct OracleDimension {
  std::size_t degree = 0;
  std::size_t n = 0;
  std::size_t n_words = 0;
  std::size_t rank = 0;
  std::size_t quotient_dim = 0;
  Integer closed_form;
  bool agree = false;
};

OracleDimension oracle_dimension(std::size_t m, std::size_t n, bool include_f3 = false);
std::size_t quotient_dim(std::size_t m, std::size_t n, bool include_f3 = false);

nlohmann::json to_json(const OracleDimension& d);

}  // namespace dendri
