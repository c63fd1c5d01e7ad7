#include "finmon/functor.hpp"

#include <algorithm>

namespace finmon {

FinMap EndoFunctor::on_morphism(const FinMap& f) const {
  FinSet fdom = on_object(f.dom());
  FinSet fcod = on_object(f.cod());
  return FinMap::from_fn(std::move(fdom), std::move(fcod),
                         [&](const Elem& u) { return map_elem(f, u); });
}

std::string EndoFunctor::bound_label() const {
  if (finiteness == Finiteness::Finite) return "";
  return "under bound " + std::to_string(bound);
}

EndoFunctor identity_functor() {
  EndoFunctor f;
  f.name = "identity";
  f.on_object = [](const FinSet& x) { return x; };
  f.map_elem = [](const FinMap& m, const Elem& u) { return m(u); };
  f.declared_f_empty = FinSet{};
  f.declared_f_one = terminal_set();
  return f;
}

Report check_functor_laws(const EndoFunctor& f, int max_size) {
  Report rep;
  rep.subject = f.name;
  std::string bound = f.bound_label();

  std::vector<FinSet> sets;
  for (int n = 0; n <= max_size; ++n) sets.push_back(canonical_set(n));
  std::vector<FinSet> fsets;
  for (const auto& s : sets) fsets.push_back(f.on_object(s));

  // identity law
  for (std::size_t i = 0; i < sets.size(); ++i) {
    FinMap fid = FinMap::from_fn(fsets[i], fsets[i], [&](const Elem& u) {
      return f.map_elem(FinMap::identity(sets[i]), u);
    });
    if (!(fid == FinMap::identity(fsets[i]))) {
      rep.fail("identity-law", "F(id) != id on " + sets[i].str(), bound);
      return rep;
    }
  }
  rep.pass("identity-law", "all sets up to size " + std::to_string(max_size), bound);

  // composition law
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      for (std::size_t k = 0; k < sets.size(); ++k)
        for (const auto& fst : all_maps(sets[i], sets[j]))
          for (const auto& snd : all_maps(sets[j], sets[k])) {
            FinMap gf = compose(snd, fst);
            for (const auto& u : fsets[i]) {
              Elem via_composite = f.map_elem(gf, u);
              Elem via_parts = f.map_elem(snd, f.map_elem(fst, u));
              if (!(via_composite == via_parts)) {
                rep.fail("composition-law",
                         "F(g.f) != F(g).F(f) at u=" + u.str() +
                             " with f=" + fst.str() + " g=" + snd.str(),
                         bound);
                return rep;
              }
            }
          }
  rep.pass("composition-law",
           "all composable pairs up to size " + std::to_string(max_size), bound);
  return rep;
}

ConnectivityResult is_connected(const EndoFunctor& f) {
  const FinSet& f1 = f.declared_f_one;
  if (f1.size() >= 2)
    return {Connectivity::NotConnected,
            std::make_pair(f1.elems()[0], f1.elems()[1])};
  if (f.f_one_bound_limited) return {Connectivity::UnknownUnderBound, std::nullopt};
  if (f1.size() == 1) return {Connectivity::Connected, std::nullopt};
  // F(1) empty: the trivial functor, not connected, no two witnesses.
  return {Connectivity::NotConnected, std::nullopt};
}

std::map<Elem, FinSet> decompose_connected(const EndoFunctor& f, const FinSet& x) {
  FinMap bang = terminal_map(x);
  std::map<Elem, std::vector<Elem>> buckets;
  for (const auto& u : f.on_object(x)) buckets[f.map_elem(bang, u)].push_back(u);
  std::map<Elem, FinSet> out;
  for (auto& [e, members] : buckets) {
    if (!f.declared_f_one.contains(e))
      throw cat_error("decompose_connected: F(!_X) image " + e.str() +
                      " is not in the declared F(1)");
    out.emplace(e, FinSet(std::move(members)));
  }
  return out;
}

FinMap yoneda_iota(const EndoFunctor& f, const Elem& e, const FinSet& x) {
  if (!f.declared_f_one.contains(e))
    throw cat_error("yoneda_iota: " + e.str() + " is not an element of F(1)");
  FinSet fx = f.on_object(x);
  return FinMap::from_fn(x, std::move(fx), [&](const Elem& p) {
    return f.map_elem(point_map(p, x), e);
  });
}

std::optional<Elem> has_constant(const EndoFunctor& f) {
  // Any two points of any Y factor through the two-element set, so a
  // component fused there is fused everywhere (away from the empty set).
  FinSet two = canonical_set(2);
  FinMap pa = point_map(two.elems()[0], two);
  FinMap pb = point_map(two.elems()[1], two);
  for (const auto& e : f.declared_f_one)
    if (f.map_elem(pa, e) == f.map_elem(pb, e)) return e;
  return std::nullopt;
}

Report check_constant_map_preservation(const EndoFunctor& f, const FinSet& x,
                                       const FinSet& y, const Elem& value) {
  if (!y.contains(value))
    throw cat_error("check_constant_map_preservation: value not in target set");
  if (x.empty())
    throw cat_error("check_constant_map_preservation: source set must be nonempty");
  Report rep;
  rep.subject = f.name;
  std::string bound = f.bound_label();
  std::string ctx = "c_" + value.str() + ": " + x.str() + " -> " + y.str();

  FinMap cmap = FinMap::constant(x, y, value);
  FinMap fc = f.on_morphism(cmap);

  bool constant = true;
  for (const auto& v : fc.values())
    if (!(v == fc.values().front())) {
      constant = false;
      break;
    }

  ConnectivityResult conn = is_connected(f);
  if (conn.connected()) {
    FinMap iota = yoneda_iota(f, f.declared_f_one.elems()[0], y);
    FinMap expected = FinMap::constant(fc.dom(), fc.cod(), iota(value));
    if (fc == expected)
      rep.pass("constant-map-preservation", "F(" + ctx + ") = c_iota(y)", bound);
    else
      rep.fail("constant-map-preservation",
               "F(" + ctx + ") differs from c_iota(y): " + fc.str(), bound);
  } else if (constant) {
    rep.info("constant-map-image", "F(" + ctx + ") is constant", bound);
  } else {
    rep.info("constant-map-image", "F(" + ctx + ") is not constant: " + fc.str(),
             bound);
  }
  return rep;
}

Report check_identity_subfunctor_dichotomy(const EndoFunctor& f, int max_size) {
  Report rep;
  rep.subject = f.name;
  if (!is_connected(f).connected())
    throw cat_error("dichotomy check requires a connected functor");
  const Elem& e = f.declared_f_one.elems()[0];
  std::string bound = f.bound_label();

  bool injective = true;
  std::string noninj_witness;
  for (int n = 1; n <= max_size; ++n) {
    FinMap iota = yoneda_iota(f, e, canonical_set(n));
    if (!iota.is_injective()) {
      injective = false;
      noninj_witness = "iota not injective on " + canonical_set(n).str();
      break;
    }
  }
  std::optional<Elem> constant = has_constant(f);

  if (injective) {
    rep.pass("dichotomy",
             "identity-subfunctor branch: iota injective on all sets up to size " +
                 std::to_string(max_size),
             bound);
  } else if (constant) {
    rep.pass("dichotomy",
             "constant branch: " + noninj_witness + ", constant " + constant->str(),
             bound);
  } else {
    rep.fail("dichotomy", noninj_witness + " and no constant found", bound);
  }
  return rep;
}

Report check_naturality(const NatTrans& nt, int max_size) {
  Report rep;
  rep.subject = nt.target.name;
  std::string bound = nt.target.bound_label();

  auto src_object = [&](const FinSet& s) {
    return nt.source ? nt.source->on_object(s) : s;
  };
  auto src_map = [&](const FinMap& m, const Elem& u) {
    return nt.source ? nt.source->map_elem(m, u) : m(u);
  };

  for (int i = 0; i <= max_size; ++i)
    for (int j = 0; j <= max_size; ++j) {
      FinSet x = canonical_set(i);
      FinSet y = canonical_set(j);
      if (nt.constant_style && x.empty()) continue;
      FinMap cx = nt.component(x);
      FinMap cy = nt.component(y);
      for (const auto& f : all_maps(x, y)) {
        for (const auto& u : src_object(x)) {
          Elem lhs = nt.target.map_elem(f, cx(u));
          Elem rhs = cy(src_map(f, u));
          if (!(lhs == rhs)) {
            rep.fail("naturality",
                     "square fails at u=" + u.str() + " for f=" + f.str(), bound);
            return rep;
          }
        }
      }
    }
  rep.pass("naturality", "all squares up to size " + std::to_string(max_size),
           bound);
  return rep;
}

}  // namespace finmon
