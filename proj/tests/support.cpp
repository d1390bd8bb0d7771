#include "support.hpp"

#include <map>

#include "dendri/oracle.hpp"

namespace dendri::testing {

LWord w(std::string_view text) { return parse_lword(text); }

Polynomial poly(std::size_t n, std::initializer_list<std::pair<Rational, std::string_view>> terms) {
  Polynomial p(Alphabet{n});
  for (const auto& [c, text] : terms) p.add_term(parse_lword(text, Alphabet{n}), c);
  return p;
}

std::vector<LWord> all_lwords(std::size_t m, std::size_t n) {
  std::vector<LWord> out;
  if (m == 1) {
    for (std::uint32_t i = 1; i <= n; ++i) out.push_back(LWord::leaf(Generator{i}));
    return out;
  }
  for (std::size_t i = 1; i < m; ++i) {
    auto lefts = all_lwords(i, n);
    auto rights = all_lwords(m - i, n);
    for (const auto& l : lefts)
      for (const auto& r : rights)
        for (Op op : {Op::Prec, Op::Succ}) out.push_back(LWord::node(op, l, r));
  }
  return out;
}

std::vector<LWord> normal_words_upto(std::size_t max_degree, std::size_t n) {
  std::vector<LWord> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    auto idx = enumerate_normal_lwords(d, n);
    out.insert(out.end(), idx.words.begin(), idx.words.end());
  }
  return out;
}

const LWord& pick(std::mt19937_64& rng, const std::vector<LWord>& pool) {
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

LWord random_normal_word(std::mt19937_64& rng, std::size_t max_degree, std::size_t n) {
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<LWord>> cache;
  std::size_t d = std::uniform_int_distribution<std::size_t>(1, max_degree)(rng);
  auto [it, fresh] = cache.try_emplace({d, n});
  if (fresh) it->second = enumerate_normal_lwords(d, n).words;
  return pick(rng, it->second);
}

std::array<std::size_t, 3> random_degrees(std::mt19937_64& rng, std::size_t total) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> d(1, total - 2);
    std::array<std::size_t, 3> out{d(rng), d(rng), d(rng)};
    if (out[0] + out[1] + out[2] <= total) return out;
  }
}

}  // namespace dendri::testing
