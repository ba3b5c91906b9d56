#include "theta/dsl.hpp"

#include <cctype>

#include "theta/errors.hpp"

namespace theta {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  explicit Cursor(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(msg, line, col);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    size_t save = pos;
    if (text.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      // must not continue as an identifier
      if (pos >= text.size() ||
          (!std::isalnum(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '_'))
        return true;
    }
    pos = save;
    return false;
  }
  bool peek_word(const std::string& w) {
    size_t save = pos;
    bool ok = accept_word(w);
    pos = save;
    return ok;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  }
  HalfInt number() {
    int n = integer();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != '2')
        fail("half-integers are written as k/2");
      ++pos;
      return HalfInt::halves(n);
    }
    return HalfInt(n);
  }
};

struct ChunkItem {
  bool is_factor = false;
  GLFactor factor = GLFactor::delta(Segment::empty_at(HalfInt(0)));
  std::string label;
};

std::vector<ChunkItem> parse_chunk(Cursor& cur) {
  std::vector<ChunkItem> items;
  if (cur.peek() == ';') return items;
  for (;;) {
    ChunkItem item;
    char c = cur.peek();
    if ((c == 'D' || c == 'Z')) {
      size_t save = cur.pos;
      ++cur.pos;
      if (cur.peek() == '[') {
        ++cur.pos;
        HalfInt a = cur.number();
        cur.expect(',');
        HalfInt b = cur.number();
        cur.expect(']');
        Segment seg = [&] {
          try {
            return Segment(a, b);
          } catch (const validation_error& e) {
            cur.fail(e.what());
          }
        }();
        item.is_factor = true;
        item.factor = c == 'D' ? GLFactor::delta(seg) : GLFactor::zeta(seg);
        items.push_back(item);
      } else {
        cur.pos = save;
        item.label = cur.ident();
        items.push_back(item);
      }
    } else {
      item.label = cur.ident();
      if (item.label == "x") cur.fail("'x' is the factor separator");
      items.push_back(item);
    }
    if (!cur.accept_word("x")) break;
  }
  return items;
}

}  // namespace

StandardModule parse_module(const std::string& text) {
  Cursor cur(text);
  StandardModule m;

  if (!cur.accept_word("pair")) cur.fail("module must start with pair=");
  cur.expect('=');
  std::string pair = cur.ident();
  if (pair == "SpO")
    m.pair = DualPair::SpOeven;
  else if (pair == "MpO")
    m.pair = DualPair::MpOodd;
  else
    cur.fail("pair must be SpO or MpO");
  cur.expect(';');

  m.side = Side::W;
  if (cur.peek_word("side")) {
    cur.accept_word("side");
    cur.expect('=');
    std::string s = cur.ident();
    if (s == "W")
      m.side = Side::W;
    else if (s == "V")
      m.side = Side::V;
    else
      cur.fail("side must be W or V");
    cur.expect(';');
  }

  std::vector<std::vector<ChunkItem>> chunks;
  while (!cur.peek_word("tau")) {
    if (cur.done()) cur.fail("missing tau(...)");
    chunks.push_back(parse_chunk(cur));
    cur.expect(';');
  }
  if (chunks.size() > 2) cur.fail("too many ';'-separated sections");

  m.block.alpha = m.pair == DualPair::SpOeven ? HalfInt(0) : HalfInt::halves(1);
  auto fill_block = [&](const std::vector<ChunkItem>& items) {
    for (const auto& it : items) {
      if (!it.is_factor) cur.fail("the block may only contain D/Z factors");
      m.block.factors.push_back(it.factor);
    }
  };
  if (chunks.size() == 2) {
    for (const auto& it : chunks[0]) {
      if (it.is_factor)
        cur.fail("the xi section may only contain opaque labels");
      m.xi.push_back(it.label);
    }
    fill_block(chunks[1]);
  } else if (chunks.size() == 1) {
    fill_block(chunks[0]);
  } else {
    cur.fail("missing block section");
  }

  // tau(l=..., m={...}, n=...)
  cur.accept_word("tau");
  cur.expect('(');
  if (!cur.accept_word("l")) cur.fail("tau needs l=...");
  cur.expect('=');
  int l = cur.integer();
  std::map<int, int> mult;
  std::optional<int> n;
  while (cur.accept(',')) {
    if (cur.accept_word("m")) {
      cur.expect('=');
      cur.expect('{');
      if (cur.peek() != '}') {
        for (;;) {
          int dim = cur.integer();
          cur.expect(':');
          int count = cur.integer();
          if (!mult.emplace(dim, count).second)
            cur.fail("duplicate multiplicity key");
          if (!cur.accept(',')) break;
        }
      }
      cur.expect('}');
    } else if (cur.accept_word("n")) {
      cur.expect('=');
      n = cur.integer();
    } else {
      cur.fail("expected m={...} or n=... in tau");
    }
  }
  cur.expect(')');
  if (!cur.done()) cur.fail("trailing input after the module");

  try {
    m.tempered = TemperedToken::atom("tau", l, mult, m.side);
    m.n = n;
    m.epsilon = default_epsilon(m.side);
    validate_module(m);
  } catch (const validation_error& e) {
    throw validation_error(std::string("invalid module: ") + e.what());
  }
  return m;
}

}  // namespace theta
