#include "finmon/finset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace finmon {

FinSet::FinSet(std::vector<Elem> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FinSet::contains(const Elem& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t FinSet::index_of(const Elem& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || !(*it == x))
    throw cat_error("element " + x.str() + " not in set " + str());
  return static_cast<std::size_t>(it - elems_.begin());
}

FinSet FinSet::parse(std::string_view text) {
  Elem e = Elem::parse(text);
  if (e.kind() != Elem::Kind::Set)
    throw schema_error("expected a set literal, got " + e.str());
  return FinSet(e.children());
}

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<Elem> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (values_.size() != dom_.size())
    throw cat_error("map table size " + std::to_string(values_.size()) +
                    " does not match domain size " + std::to_string(dom_.size()));
  for (const auto& v : values_)
    if (!cod_.contains(v))
      throw cat_error("map value " + v.str() + " not in codomain " + cod_.str());
}

FinMap FinMap::from_fn(FinSet dom, FinSet cod,
                       const std::function<Elem(const Elem&)>& fn) {
  std::vector<Elem> values;
  values.reserve(dom.size());
  for (const auto& x : dom) values.push_back(fn(x));
  return FinMap(std::move(dom), std::move(cod), std::move(values));
}

FinMap FinMap::identity(FinSet a) {
  std::vector<Elem> values(a.elems());
  FinSet dom = a;
  return FinMap(std::move(dom), std::move(a), std::move(values));
}

FinMap FinMap::constant(FinSet dom, FinSet cod, Elem value) {
  std::vector<Elem> values(dom.size(), value);
  return FinMap(std::move(dom), std::move(cod), std::move(values));
}

bool FinMap::is_injective() const {
  std::vector<Elem> seen(values_);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string FinMap::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (i) out << ',';
    out << dom_.elems()[i].str() << "->" << values_[i].str();
  }
  out << "}: " << dom_.str() << " -> " << cod_.str();
  return out.str();
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom()))
    throw cat_error("compose: codomain " + f.cod().str() +
                    " does not match domain " + g.dom().str());
  std::vector<Elem> values;
  values.reserve(f.dom().size());
  for (const auto& v : f.values()) values.push_back(g(v));
  return FinMap(f.dom(), g.cod(), std::move(values));
}

Cone product(const FinSet& a, const FinSet& b) {
  std::vector<Elem> pairs;
  pairs.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) pairs.push_back(Elem::pair(x, y));
  FinSet carrier(std::move(pairs));
  FinMap p1 = FinMap::from_fn(carrier, a, [](const Elem& p) { return p.left(); });
  FinMap p2 = FinMap::from_fn(carrier, b, [](const Elem& p) { return p.right(); });
  return Cone{std::move(carrier), std::move(p1), std::move(p2)};
}

Cone pullback(const FinMap& f, const FinMap& g) {
  if (!(f.cod() == g.cod()))
    throw cat_error("pullback: legs have different codomains: " + f.cod().str() +
                    " vs " + g.cod().str());
  std::vector<Elem> pairs;
  for (const auto& x : f.dom())
    for (const auto& y : g.dom())
      if (f(x) == g(y)) pairs.push_back(Elem::pair(x, y));
  FinSet carrier(std::move(pairs));
  FinMap p1 = FinMap::from_fn(carrier, f.dom(), [](const Elem& p) { return p.left(); });
  FinMap p2 = FinMap::from_fn(carrier, g.dom(), [](const Elem& p) { return p.right(); });
  return Cone{std::move(carrier), std::move(p1), std::move(p2)};
}

FinMap tupling(const FinMap& q1, const FinMap& q2, const Cone& target) {
  if (!(q1.dom() == q2.dom()))
    throw cat_error("tupling: legs have different domains");
  if (!(q1.cod() == target.p1.cod()) || !(q2.cod() == target.p2.cod()))
    throw cat_error("tupling: legs do not match the cone projections");
  std::vector<Elem> values;
  values.reserve(q1.dom().size());
  for (const auto& x : q1.dom()) {
    Elem p = Elem::pair(q1(x), q2(x));
    if (!target.apex.contains(p))
      throw cat_error("tupling: cone condition violated at " + x.str() +
                      ": " + p.str() + " not in " + target.apex.str());
    values.push_back(std::move(p));
  }
  return FinMap(q1.dom(), target.apex, std::move(values));
}

std::optional<Elem> first_unhit(const FinMap& f) {
  std::vector<Elem> image(f.values());
  std::sort(image.begin(), image.end());
  for (const auto& y : f.cod())
    if (!std::binary_search(image.begin(), image.end(), y)) return y;
  return std::nullopt;
}

bool is_surjective(const FinMap& f) { return !first_unhit(f).has_value(); }

FinMap right_inverse(const FinMap& s) {
  std::vector<Elem> values;
  values.reserve(s.cod().size());
  for (const auto& y : s.cod()) {
    const Elem* least = nullptr;
    for (const auto& x : s.dom()) {
      if (s(x) == y) {
        least = &x;  // domain is canonically sorted, first hit is least
        break;
      }
    }
    if (!least)
      throw cat_error("right_inverse: map is not surjective, " + y.str() +
                      " has no preimage");
    values.push_back(*least);
  }
  return FinMap(s.cod(), s.dom(), std::move(values));
}

FinSet kernel_meet_quotient(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()))
    throw cat_error("kernel_meet_quotient: maps have different domains");
  std::map<Elem, std::vector<Elem>> classes;
  for (const auto& x : f.dom()) classes[Elem::pair(f(x), g(x))].push_back(x);
  std::vector<Elem> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back(Elem::set(std::move(members)));
  return FinSet(std::move(out));
}

Elem terminal_point() { return Elem::atom("0"); }

FinSet terminal_set() { return FinSet({terminal_point()}); }

FinMap terminal_map(const FinSet& x) {
  return FinMap::constant(x, terminal_set(), terminal_point());
}

FinMap point_map(const Elem& x, const FinSet& to) {
  return FinMap::constant(terminal_set(), to, x);
}

FinSet canonical_set(std::size_t n) {
  if (n > 26) throw cat_error("canonical_set: size too large");
  std::vector<Elem> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    elems.push_back(Elem::atom(std::string(1, static_cast<char>('a' + i))));
  return FinSet(std::move(elems));
}

std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod) {
  std::vector<FinMap> out;
  if (dom.empty()) {
    out.push_back(FinMap(dom, cod, {}));
    return out;
  }
  if (cod.empty()) return out;  // no total map from nonempty to empty
  std::vector<std::size_t> idx(dom.size(), 0);
  for (;;) {
    std::vector<Elem> values;
    values.reserve(dom.size());
    for (std::size_t i : idx) values.push_back(cod.elems()[i]);
    out.push_back(FinMap(dom, cod, std::move(values)));
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++idx[k] < cod.size()) break;
      idx[k++] = 0;
    }
    if (k == idx.size()) break;
  }
  return out;
}

std::vector<FinSet> all_subsets(const FinSet& x, bool nonempty_only) {
  if (x.size() > 20) throw bound_error("all_subsets: set too large to enumerate");
  std::vector<FinSet> out;
  std::size_t n = x.size();
  for (std::size_t mask = nonempty_only ? 1 : 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Elem> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) elems.push_back(x.elems()[i]);
    out.push_back(FinSet(std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const FinSet& a, const FinSet& b) {
    return a.as_elem() < b.as_elem();
  });
  return out;
}

FinMap product_map(const FinMap& f, const FinMap& g) {
  Cone src = product(f.dom(), g.dom());
  Cone dst = product(f.cod(), g.cod());
  return FinMap::from_fn(src.apex, dst.apex, [&](const Elem& p) {
    return Elem::pair(f(p.left()), g(p.right()));
  });
}

}  // namespace finmon
