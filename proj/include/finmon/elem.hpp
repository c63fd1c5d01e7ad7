#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finmon {

/// Error raised by category operations on ill-matched arguments.
struct cat_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a bounded enumeration cannot cover a requested computation.
struct bound_error : cat_error {
  using cat_error::cat_error;
};

/// Raised when a structured document or literal fails to parse/validate.
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical algebraic value: atom, pair, tagged node, or collection.
// Immutable; copies share structure. Equality is structural and the
// ordering is a strict total order consistent with it, so Elems can be
// used as deterministic set members and tie-breakers.
class Elem {
 public:
  enum class Kind { Atom, Pair, Node, Set, List };

  static Elem atom(std::string label);
  static Elem pair(Elem left, Elem right);
  static Elem node(std::string tag, std::vector<Elem> children);
  static Elem set(std::vector<Elem> items);   // dedups and sorts
  static Elem list(std::vector<Elem> items);  // order-preserving

  Kind kind() const { return repr_->kind; }
  // atom label or node tag
  const std::string& label() const { return repr_->label; }
  const std::vector<Elem>& children() const { return repr_->children; }
  const Elem& left() const;
  const Elem& right() const;

  bool is_atom(std::string_view label) const;

  // Canonical encoding: atoms bare, pairs "(l,r)", nodes "tag(c,...)",
  // sets "{...}" (sorted), lists "[...]".
  std::string str() const;
  static Elem parse(std::string_view text);

  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Repr {
    Kind kind;
    std::string label;
    std::vector<Elem> children;
  };
  explicit Elem(std::shared_ptr<const Repr> r) : repr_(std::move(r)) {}
  std::shared_ptr<const Repr> repr_;
};

}  // namespace finmon
