#pragma once

// Helpers shared by the test binaries.

#include <array>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dendri/poly.hpp"

namespace dendri::testing {

/// Parses a word; the alphabet is unchecked.
LWord w(std::string_view text);

/// Polynomial from (coefficient, word) pairs over {x1..xn}.
Polynomial poly(std::size_t n, std::initializer_list<std::pair<Rational, std::string_view>> terms);

/// Every L-word (normal or not) of degree m over n letters, built directly
/// from shapes, labels and leaves. Independent of the library enumerators.
std::vector<LWord> all_lwords(std::size_t m, std::size_t n);

/// Normal L-words of every degree in [1, max_degree].
std::vector<LWord> normal_words_upto(std::size_t max_degree, std::size_t n);

/// Uniform pick from a pool.
const LWord& pick(std::mt19937_64& rng, const std::vector<LWord>& pool);

/// Random normal L-word of degree between 1 and max_degree.
LWord random_normal_word(std::mt19937_64& rng, std::size_t max_degree, std::size_t n);

/// Random degrees (d1, d2, d3), each >= 1, summing to at most `total`.
std::array<std::size_t, 3> random_degrees(std::mt19937_64& rng, std::size_t total);

}  // namespace dendri::testing
