#include "finmon/elem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace finmon {

namespace {

int kind_rank(Elem::Kind k) {
  switch (k) {
    case Elem::Kind::Atom: return 0;
    case Elem::Kind::Pair: return 1;
    case Elem::Kind::Node: return 2;
    case Elem::Kind::Set: return 3;
    case Elem::Kind::List: return 4;
  }
  return 5;
}

}  // namespace

Elem Elem::atom(std::string label) {
  return Elem(std::make_shared<const Repr>(Repr{Kind::Atom, std::move(label), {}}));
}

Elem Elem::pair(Elem left, Elem right) {
  std::vector<Elem> ch;
  ch.push_back(std::move(left));
  ch.push_back(std::move(right));
  return Elem(std::make_shared<const Repr>(Repr{Kind::Pair, {}, std::move(ch)}));
}

Elem Elem::node(std::string tag, std::vector<Elem> children) {
  return Elem(std::make_shared<const Repr>(
      Repr{Kind::Node, std::move(tag), std::move(children)}));
}

Elem Elem::set(std::vector<Elem> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Elem(std::make_shared<const Repr>(Repr{Kind::Set, {}, std::move(items)}));
}

Elem Elem::list(std::vector<Elem> items) {
  return Elem(std::make_shared<const Repr>(Repr{Kind::List, {}, std::move(items)}));
}

const Elem& Elem::left() const {
  if (repr_->kind != Kind::Pair) throw cat_error("Elem::left: not a pair: " + str());
  return repr_->children[0];
}

const Elem& Elem::right() const {
  if (repr_->kind != Kind::Pair) throw cat_error("Elem::right: not a pair: " + str());
  return repr_->children[1];
}

bool Elem::is_atom(std::string_view label) const {
  return repr_->kind == Kind::Atom && repr_->label == label;
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (a.repr_ == b.repr_) return std::strong_ordering::equal;
  if (auto c = kind_rank(a.kind()) <=> kind_rank(b.kind()); c != 0) return c;
  if (auto c = a.repr_->label <=> b.repr_->label; c != 0) return c;
  const auto& ac = a.repr_->children;
  const auto& bc = b.repr_->children;
  return std::lexicographical_compare_three_way(ac.begin(), ac.end(),
                                                bc.begin(), bc.end());
}

std::string Elem::str() const {
  std::ostringstream out;
  switch (kind()) {
    case Kind::Atom:
      out << label();
      break;
    case Kind::Pair:
      out << '(' << left().str() << ',' << right().str() << ')';
      break;
    case Kind::Node: {
      out << label() << '(';
      bool first = true;
      for (const auto& c : children()) {
        if (!first) out << ',';
        out << c.str();
        first = false;
      }
      out << ')';
      break;
    }
    case Kind::Set:
    case Kind::List: {
      out << (kind() == Kind::Set ? '{' : '[');
      bool first = true;
      for (const auto& c : children()) {
        if (!first) out << ',';
        out << c.str();
        first = false;
      }
      out << (kind() == Kind::Set ? '}' : ']');
      break;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser for the literal syntax.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Elem parse() {
    Elem e = elem();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  Elem elem() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Elem l = elem();
      expect(',');
      Elem r = elem();
      expect(')');
      return Elem::pair(std::move(l), std::move(r));
    }
    if (c == '{' || c == '[') {
      char close = (c == '{') ? '}' : ']';
      ++pos_;
      std::vector<Elem> items = elem_seq(close);
      expect(close);
      return c == '{' ? Elem::set(std::move(items)) : Elem::list(std::move(items));
    }
    std::string id = ident();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<Elem> ch = elem_seq(')');
      expect(')');
      return Elem::node(std::move(id), std::move(ch));
    }
    return Elem::atom(std::move(id));
  }

  std::vector<Elem> elem_seq(char close) {
    std::vector<Elem> out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == close) return out;
    out.push_back(elem());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(elem());
      skip_ws();
    }
    return out;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw schema_error("element literal: " + what + " at offset " +
                       std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem Elem::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace finmon
