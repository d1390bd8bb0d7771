#include "dendri/terms.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dendri {

struct LWord::Node {
  // 0 for inner nodes; the hole marker of the context parser also uses 0
  // but never escapes parse_context.
  std::uint32_t generator = 0;
  Op op = Op::Succ;
  std::optional<LWord> left;
  std::optional<LWord> right;
  std::size_t degree = 1;
  std::size_t hash = 0;
  std::uint32_t max_generator = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

LWord LWord::leaf(Generator g) {
  auto n = std::make_shared<Node>();
  n->generator = g.index;
  n->degree = 1;
  n->hash = mix(0x51ed270b27dULL, g.index);
  n->max_generator = g.index;
  return LWord(std::move(n));
}

LWord LWord::node(Op op, LWord left, LWord right) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->degree = left.degree() + right.degree();
  n->hash = mix(mix(mix(0x2545f4914f6cdd1dULL, static_cast<std::size_t>(op)), left.hash()),
                right.hash());
  n->max_generator = std::max(left.max_generator(), right.max_generator());
  n->left = std::move(left);
  n->right = std::move(right);
  return LWord(std::move(n));
}

bool LWord::is_leaf() const noexcept { return !node_->left.has_value(); }

bool LWord::is_node(Op op) const noexcept { return !is_leaf() && node_->op == op; }

Generator LWord::generator() const {
  assert(is_leaf());
  return Generator{node_->generator};
}

Op LWord::op() const {
  assert(!is_leaf());
  return node_->op;
}

const LWord& LWord::left() const {
  assert(!is_leaf());
  return *node_->left;
}

const LWord& LWord::right() const {
  assert(!is_leaf());
  return *node_->right;
}

std::size_t LWord::degree() const noexcept { return node_->degree; }

std::size_t LWord::hash() const noexcept { return node_->hash; }

std::uint32_t LWord::max_generator() const noexcept { return node_->max_generator; }

const LWord& LWord::at(const Path& path) const {
  const LWord* cur = this;
  for (Side s : path) {
    if (cur->is_leaf()) throw std::out_of_range("path leaves the word: " + to_string(path));
    cur = s == Side::Left ? &cur->left() : &cur->right();
  }
  return *cur;
}

bool operator==(const LWord& a, const LWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.degree() != b.degree()) return false;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.node_->generator == b.node_->generator;
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering compare(const LWord& u, const LWord& v) {
  if (&u == &v) return std::strong_ordering::equal;
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  if (u.is_leaf()) return u.generator() <=> v.generator();
  if (u == v) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(u.op()) <=> static_cast<int>(v.op()); c != 0) return c;
  if (auto c = compare(u.left(), v.left()); c != 0) return c;
  return compare(u.right(), v.right());
}

bool is_normal(const LWord& u) {
  if (u.is_leaf()) return true;
  if (u.op() == Op::Prec && u.left().is_node(Op::Succ)) return false;
  return is_normal(u.left()) && is_normal(u.right());
}

LWord l_succ(const LWord& u, const LWord& v) { return LWord::node(Op::Succ, u, v); }

LWord l_prec(const LWord& u, const LWord& v) {
  if (u.is_node(Op::Succ)) return LWord::node(Op::Succ, u.left(), l_prec(u.right(), v));
  return LWord::node(Op::Prec, u, v);
}

LWord normalize(const LWord& u) {
  if (u.is_leaf()) return u;
  return l_product(u.op(), normalize(u.left()), normalize(u.right()));
}

std::string to_string(Op op) { return op == Op::Prec ? "<" : ">"; }

std::string to_string(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (Side s : path) out += s == Side::Left ? 'L' : 'R';
  return out;
}

namespace {

void write(std::ostream& os, const LWord& u) {
  if (u.is_leaf()) {
    if (u.generator().index == 0)
      os << '*';
    else
      os << 'x' << u.generator().index;
    return;
  }
  os << '(';
  write(os, u.left());
  os << ' ' << to_string(u.op()) << ' ';
  write(os, u.right());
  os << ')';
}

constexpr Generator kHoleMarker{0};

}  // namespace

std::string to_string(const LWord& u) {
  std::ostringstream os;
  write(os, u);
  return os.str();
}

// Contexts

Context Context::around(const LWord& w, const Path& path) {
  std::vector<Frame> frames;
  frames.reserve(path.size());
  const LWord* cur = &w;
  for (Side s : path) {
    if (cur->is_leaf()) throw std::out_of_range("path leaves the word: " + to_string(path));
    if (s == Side::Left) {
      frames.push_back({cur->op(), s, cur->right()});
      cur = &cur->left();
    } else {
      frames.push_back({cur->op(), s, cur->left()});
      cur = &cur->right();
    }
  }
  return Context(std::move(frames));
}

std::size_t Context::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& f : frames_) d += f.sibling.degree();
  return d;
}

std::uint32_t Context::max_generator() const noexcept {
  std::uint32_t m = 0;
  for (const auto& f : frames_) m = std::max(m, f.sibling.max_generator());
  return m;
}

LWord Context::substitute(const LWord& u) const {
  LWord cur = u;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    cur = it->side == Side::Left ? LWord::node(it->op, std::move(cur), it->sibling)
                                 : LWord::node(it->op, it->sibling, std::move(cur));
  }
  return cur;
}

Context Context::wrapped(Op op, Side side, LWord sibling) const {
  std::vector<Frame> frames;
  frames.reserve(frames_.size() + 1);
  frames.push_back({op, side, std::move(sibling)});
  frames.insert(frames.end(), frames_.begin(), frames_.end());
  return Context(std::move(frames));
}

std::string to_string(const Context& c) { return to_string(c.substitute(LWord::leaf(kHoleMarker))); }

// Parsing

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::optional<Alphabet> alphabet, bool allow_hole)
      : text_(text), alphabet_(alphabet), allow_hole_(allow_hole) {}

  LWord parse() {
    LWord w = word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return w;
  }

  std::size_t holes() const { return holes_; }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  LWord word() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LWord l = word();
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError("expected '<' or '>'", pos_);
      Op op;
      if (text_[pos_] == '<')
        op = Op::Prec;
      else if (text_[pos_] == '>')
        op = Op::Succ;
      else
        throw ParseError(std::string("expected '<' or '>', found '") + text_[pos_] + "'", pos_);
      ++pos_;
      LWord r = word();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return LWord::node(op, std::move(l), std::move(r));
    }
    if (c == 'x') return generator();
    if (c == '*' && allow_hole_) {
      ++pos_;
      ++holes_;
      return LWord::leaf(kHoleMarker);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  LWord generator() {
    std::size_t start = pos_++;
    std::size_t digits_start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > UINT32_MAX) throw ParseError("generator index too large", start);
      ++pos_;
    }
    if (pos_ == digits_start) throw ParseError("expected digits after 'x'", pos_);
    Generator g{static_cast<std::uint32_t>(value)};
    if (g.index == 0) throw ParseError("generator index must be at least 1", start);
    if (alphabet_ && !alphabet_->contains(g))
      throw ParseError("generator x" + std::to_string(g.index) + " outside alphabet of size " +
                           std::to_string(alphabet_->size),
                       start);
    return LWord::leaf(g);
  }

  std::string_view text_;
  std::optional<Alphabet> alphabet_;
  bool allow_hole_;
  std::size_t pos_ = 0;
  std::size_t holes_ = 0;
};

bool find_hole(const LWord& w, Path& path) {
  if (w.is_leaf()) return w.generator() == kHoleMarker;
  path.push_back(Side::Left);
  if (find_hole(w.left(), path)) return true;
  path.back() = Side::Right;
  if (find_hole(w.right(), path)) return true;
  path.pop_back();
  return false;
}

}  // namespace

LWord parse_lword(std::string_view text, std::optional<Alphabet> alphabet) {
  return Parser(text, alphabet, false).parse();
}

Context parse_context(std::string_view text, std::optional<Alphabet> alphabet) {
  Parser p(text, alphabet, true);
  LWord w = p.parse();
  if (p.holes() != 1) throw ParseError("context needs exactly one '*', found " + std::to_string(p.holes()), 0);
  Path path;
  find_hole(w, path);
  return Context::around(w, path);
}

}  // namespace dendri
