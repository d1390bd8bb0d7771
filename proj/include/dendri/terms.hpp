#pragma once

// Words of the free L-algebra: binary trees over a finite ordered alphabet
// whose internal nodes carry one of the two products.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendri {

/// A letter x_i of the alphabet, 1-based.
struct Generator {
  std::uint32_t index = 1;

  friend constexpr auto operator<=>(Generator, Generator) = default;
};

/// The alphabet {x1, ..., xn}; well-ordered by index.
struct Alphabet {
  std::size_t size = 1;

  constexpr bool contains(Generator g) const noexcept {
    return g.index >= 1 && g.index <= size;
  }
  friend constexpr bool operator==(Alphabet, Alphabet) = default;
};

/// The two products. `Succ` is the smaller one in the monomial order.
enum class Op : std::uint8_t { Succ = 1, Prec = 2 };

enum class Side : std::uint8_t { Left, Right };

/// Root-to-subterm address.
using Path = std::vector<Side>;

std::string to_string(Op op);
std::string to_string(const Path& path);

/// Immutable L-word. Copies share structure.
class LWord {
 public:
  static LWord leaf(Generator g);
  static LWord node(Op op, LWord left, LWord right);

  bool is_leaf() const noexcept;
  bool is_node(Op op) const noexcept;

  /// Only meaningful for leaves.
  Generator generator() const;
  /// Only meaningful for inner nodes.
  Op op() const;
  const LWord& left() const;
  const LWord& right() const;

  /// Number of leaves.
  std::size_t degree() const noexcept;
  std::size_t hash() const noexcept;
  /// Largest generator index occurring in the word.
  std::uint32_t max_generator() const noexcept;

  /// Subterm reached by following `path`; throws std::out_of_range.
  const LWord& at(const Path& path) const;

  friend bool operator==(const LWord& a, const LWord& b);

 private:
  struct Node;
  explicit LWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct LWordHash {
  std::size_t operator()(const LWord& u) const noexcept { return u.hash(); }
};

/// Monomial order: degree first; then the top product with Prec > Succ;
/// then left factors; then right factors. Leaves compare by index.
std::strong_ordering compare(const LWord& u, const LWord& v);

inline std::strong_ordering operator<=>(const LWord& u, const LWord& v) {
  return compare(u, v);
}

/// Orders a container so that the greatest word comes first.
struct Descending {
  bool operator()(const LWord& a, const LWord& b) const { return compare(a, b) > 0; }
};

inline std::size_t degree(const LWord& u) { return u.degree(); }

/// Leaf, or u = v > w, or u = v < w with v not Succ-topped; recursively.
bool is_normal(const LWord& u);

/// Product u > v of normal words; always normal.
LWord l_succ(const LWord& u, const LWord& v);

/// Product u < v of normal words, unfolding (u1 > u2) < v = u1 > (u2 < v).
LWord l_prec(const LWord& u, const LWord& v);

inline LWord l_product(Op op, const LWord& u, const LWord& v) {
  return op == Op::Succ ? l_succ(u, v) : l_prec(u, v);
}

/// Evaluates the tree bottom-up in the free L-algebra.
LWord normalize(const LWord& u);

/// One step of the spine of a context: the hole sits on `side` of an `op`
/// node whose other child is `sibling`.
struct Frame {
  Op op;
  Side side;
  LWord sibling;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// An L-word with exactly one hole, stored as the spine from the root
/// down to the hole.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Frame> frames) : frames_(std::move(frames)) {}

  /// The context surrounding the subterm of `w` at `path`.
  static Context around(const LWord& w, const Path& path);

  const std::vector<Frame>& frames() const noexcept { return frames_; }
  bool is_hole() const noexcept { return frames_.empty(); }
  /// Number of generator leaves, excluding the hole.
  std::size_t degree() const noexcept;
  std::uint32_t max_generator() const noexcept;

  /// Plain splice; the result need not be normal.
  LWord substitute(const LWord& u) const;

  /// Wraps this context in one more frame at the root.
  Context wrapped(Op op, Side side, LWord sibling) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Frame> frames_;
};

inline LWord substitute(const Context& c, const LWord& u) { return c.substitute(u); }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// word := generator | "(" word op word ")"; op := "<" | ">";
/// generator := "x" digits. Whitespace is ignored. When `alphabet` is
/// given, generators outside it are rejected.
LWord parse_lword(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

/// Same grammar plus exactly one hole leaf written "*".
Context parse_context(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

/// Canonical text: "x3", "(x1 < (x2 > x3))".
std::string to_string(const LWord& u);
std::string to_string(const Context& c);

}  // namespace dendri

template <>
struct std::hash<dendri::LWord> {
  std::size_t operator()(const dendri::LWord& u) const noexcept { return u.hash(); }
};
