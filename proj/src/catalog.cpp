#include "finmon/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace finmon {

namespace {

FinSet one_point_image(const Elem& e) { return FinSet({e}); }

}  // namespace

MonadData make_identity() {
  MonadData m;
  m.functor = identity_functor();
  m.unit_elem = [](const Elem& x) { return x; };
  m.mult_elem = [](const Elem& u) { return u; };
  return m;
}

MonadData make_maybe() {
  EndoFunctor f;
  f.name = "maybe";
  f.on_object = [](const FinSet& x) {
    std::vector<Elem> out;
    out.reserve(x.size() + 1);
    out.push_back(Elem::atom("none"));
    for (const auto& e : x) out.push_back(Elem::node("some", {e}));
    return FinSet(std::move(out));
  };
  f.map_elem = [](const FinMap& m, const Elem& u) {
    if (u.is_atom("none")) return u;
    return Elem::node("some", {m(u.children()[0])});
  };
  f.declared_f_empty = FinSet({Elem::atom("none")});
  f.declared_f_one = f.on_object(terminal_set());

  MonadData m;
  m.functor = std::move(f);
  m.unit_elem = [](const Elem& x) { return Elem::node("some", {x}); };
  m.mult_elem = [](const Elem& u) {
    if (u.is_atom("none")) return u;
    return u.children()[0];
  };
  return m;
}

MonadData make_list(int bound) {
  if (bound < 1) throw cat_error("make_list: bound must be >= 1");
  EndoFunctor f;
  f.name = "list-" + std::to_string(bound);
  f.finiteness = EndoFunctor::Finiteness::Bounded;
  f.bound = bound;
  f.on_object = [bound](const FinSet& x) {
    std::vector<Elem> out;
    std::vector<std::vector<Elem>> current{{}};
    out.push_back(Elem::list({}));
    for (int len = 1; len <= bound; ++len) {
      std::vector<std::vector<Elem>> next;
      for (const auto& prefix : current)
        for (const auto& e : x) {
          auto items = prefix;
          items.push_back(e);
          out.push_back(Elem::list(items));
          next.push_back(std::move(items));
        }
      current = std::move(next);
    }
    return FinSet(std::move(out));
  };
  f.map_elem = [](const FinMap& m, const Elem& u) {
    std::vector<Elem> items;
    items.reserve(u.children().size());
    for (const auto& e : u.children()) items.push_back(m(e));
    return Elem::list(std::move(items));
  };
  f.declared_f_empty = FinSet({Elem::list({})});
  f.declared_f_one = f.on_object(terminal_set());
  f.f_one_bound_limited = true;

  MonadData m;
  m.functor = std::move(f);
  m.unit_elem = [](const Elem& x) { return Elem::list({x}); };
  m.mult_elem = [bound](const Elem& u) {
    std::vector<Elem> flat;
    for (const auto& inner : u.children())
      for (const auto& e : inner.children()) flat.push_back(e);
    if (static_cast<int>(flat.size()) > bound)
      throw bound_error("list flatten of " + u.str() + " exceeds bound " +
                        std::to_string(bound));
    return Elem::list(std::move(flat));
  };
  return m;
}

namespace {

EndoFunctor powerset_functor(bool nonempty_only, std::string name) {
  EndoFunctor f;
  f.name = std::move(name);
  f.on_object = [nonempty_only](const FinSet& x) {
    auto subsets = all_subsets(x, nonempty_only);
    std::vector<Elem> out;
    out.reserve(subsets.size());
    for (const auto& s : subsets) out.push_back(s.as_elem());
    return FinSet(std::move(out));
  };
  f.map_elem = [](const FinMap& m, const Elem& u) {
    std::vector<Elem> image;
    image.reserve(u.children().size());
    for (const auto& e : u.children()) image.push_back(m(e));
    return Elem::set(std::move(image));  // direct image, dedup by set
  };
  f.declared_f_empty = f.on_object(FinSet{});
  f.declared_f_one = f.on_object(terminal_set());
  return f;
}

Elem union_of_members(const Elem& u) {
  std::vector<Elem> all;
  for (const auto& member : u.children())
    for (const auto& e : member.children()) all.push_back(e);
  return Elem::set(std::move(all));
}

}  // namespace

MonadData make_nonempty_powerset() {
  MonadData m;
  m.functor = powerset_functor(true, "nonempty-powerset");
  m.unit_elem = [](const Elem& x) { return Elem::set({x}); };
  m.mult_elem = union_of_members;
  return m;
}

MonadData make_full_powerset() {
  MonadData m;
  m.functor = powerset_functor(false, "full-powerset");
  m.unit_elem = [](const Elem& x) { return Elem::set({x}); };
  m.mult_elem = union_of_members;
  return m;
}

MonadData make_rect_band() {
  EndoFunctor f;
  f.name = "rect-band";
  f.on_object = [](const FinSet& x) {
    std::vector<Elem> out;
    out.reserve(x.size() * x.size());
    for (const auto& a : x)
      for (const auto& b : x) out.push_back(Elem::pair(a, b));
    return FinSet(std::move(out));
  };
  f.map_elem = [](const FinMap& m, const Elem& u) {
    return Elem::pair(m(u.left()), m(u.right()));
  };
  f.declared_f_empty = FinSet{};
  f.declared_f_one = one_point_image(Elem::pair(terminal_point(), terminal_point()));

  MonadData m;
  m.functor = std::move(f);
  m.unit_elem = [](const Elem& x) { return Elem::pair(x, x); };
  // ((a,b),(c,d)) -> (a,d)
  m.mult_elem = [](const Elem& u) {
    return Elem::pair(u.left().left(), u.right().right());
  };
  return m;
}

EndoFunctor make_diag_quotient() {
  EndoFunctor f;
  f.name = "diag-quotient";
  Elem bot = Elem::atom("bot");
  f.on_object = [bot](const FinSet& x) {
    if (x.empty()) return FinSet{};
    std::vector<Elem> out;
    out.push_back(bot);
    for (const auto& a : x)
      for (const auto& b : x)
        if (!(a == b)) out.push_back(Elem::pair(a, b));
    return FinSet(std::move(out));
  };
  f.map_elem = [bot](const FinMap& m, const Elem& u) {
    if (u == bot) return u;
    Elem l = m(u.left());
    Elem r = m(u.right());
    if (l == r) return bot;
    return Elem::pair(std::move(l), std::move(r));
  };
  f.declared_f_empty = FinSet{};
  f.declared_f_one = one_point_image(bot);
  return f;
}

void Catalog::add(CatalogEntry entry) {
  if (find(entry.name)) throw cat_error("catalog: duplicate name " + entry.name);
  if (!entry.restricted) {
    ConnectivityResult conn = is_connected(entry.functor);
    bool computed_connected = conn.connected();
    if (computed_connected != entry.connected)
      throw cat_error("catalog: declared connected=" +
                      std::string(entry.connected ? "yes" : "no") +
                      " does not match computed verdict for " + entry.name);
    bool computed_constant = has_constant(entry.functor).has_value();
    if (computed_constant != entry.constant)
      throw cat_error("catalog: declared constant=" +
                      std::string(entry.constant ? "yes" : "no") +
                      " does not match computed verdict for " + entry.name);
  }
  entries_.push_back(std::move(entry));
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

Catalog Catalog::builtin() {
  Catalog cat;
  auto add_monad = [&](MonadData m, bool connected, bool constant) {
    CatalogEntry e;
    e.name = m.functor.name;
    e.is_monad = true;
    e.connected = connected;
    e.constant = constant;
    e.functor = m.functor;
    e.monad = std::move(m);
    cat.add(std::move(e));
  };
  add_monad(make_identity(), true, false);
  add_monad(make_maybe(), false, true);
  add_monad(make_list(2), false, true);
  add_monad(make_nonempty_powerset(), true, false);
  add_monad(make_full_powerset(), false, true);
  add_monad(make_rect_band(), true, false);

  CatalogEntry t;
  t.name = "diag-quotient";
  t.is_monad = false;
  t.connected = true;
  t.constant = true;
  t.functor = make_diag_quotient();
  cat.add(std::move(t));
  return cat;
}

// ---------------------------------------------------------------------
// Custom functor-table documents

namespace {

using nlohmann::json;

struct MorphismEntry {
  FinMap map;
  FinMap fmap;
};

struct TableDoc {
  std::string name;
  std::map<std::string, FinSet> base_sets;
  std::map<std::string, FinSet> objects;  // keyed by base-set name
  std::vector<MorphismEntry> morphisms;
  std::map<Elem, Elem> unit;
  std::map<Elem, Elem> mult;
  std::optional<bool> declared_connected;
  std::optional<bool> declared_constant;
};

FinSet parse_elem_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw schema_error(where + ": expected an array");
  std::vector<Elem> elems;
  for (const auto& item : arr) {
    if (!item.is_string()) throw schema_error(where + ": expected string literals");
    elems.push_back(Elem::parse(item.get<std::string>()));
  }
  return FinSet(std::move(elems));
}

std::map<Elem, Elem> parse_elem_table(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw schema_error(where + ": expected an object");
  std::map<Elem, Elem> out;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) throw schema_error(where + ": expected string values");
    out.emplace(Elem::parse(key), Elem::parse(value.get<std::string>()));
  }
  return out;
}

FinMap table_to_map(const std::map<Elem, Elem>& table, const FinSet& dom,
                    const FinSet& cod, const std::string& where) {
  return FinMap::from_fn(dom, cod, [&](const Elem& x) {
    auto it = table.find(x);
    if (it == table.end())
      throw schema_error(where + ": missing entry for " + x.str());
    return it->second;
  });
}

TableDoc parse_doc(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.empty())
    throw schema_error("document must be a non-empty JSON object");
  TableDoc out;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw schema_error("missing string field: name");
  out.name = doc["name"].get<std::string>();
  if (out.name.empty()) throw schema_error("name must be non-empty");

  if (!doc.contains("base_sets") || !doc["base_sets"].is_object())
    throw schema_error("missing object field: base_sets");
  for (const auto& [sname, arr] : doc["base_sets"].items())
    out.base_sets.emplace(sname, parse_elem_array(arr, "base_sets." + sname));

  if (!doc.contains("objects") || !doc["objects"].is_object())
    throw schema_error("missing object field: objects");
  for (const auto& [sname, arr] : doc["objects"].items()) {
    if (!out.base_sets.count(sname))
      throw schema_error("objects references unknown base set " + sname);
    out.objects.emplace(sname, parse_elem_array(arr, "objects." + sname));
  }
  for (const auto& [sname, _] : out.base_sets)
    if (!out.objects.count(sname))
      throw schema_error("no object table for base set " + sname);

  if (doc.contains("morphisms")) {
    if (!doc["morphisms"].is_array())
      throw schema_error("morphisms must be an array");
    for (const auto& entry : doc["morphisms"]) {
      if (!entry.is_object() || !entry.contains("dom") || !entry.contains("cod") ||
          !entry.contains("map") || !entry.contains("fmap"))
        throw schema_error("morphism entries need dom, cod, map and fmap");
      std::string dn = entry["dom"].get<std::string>();
      std::string cn = entry["cod"].get<std::string>();
      if (!out.base_sets.count(dn) || !out.base_sets.count(cn))
        throw schema_error("morphism references unknown base set");
      auto map_table = parse_elem_table(entry["map"], "morphism map");
      auto fmap_table = parse_elem_table(entry["fmap"], "morphism fmap");
      FinMap map = table_to_map(map_table, out.base_sets.at(dn),
                                out.base_sets.at(cn), "morphism map");
      FinMap fmap = table_to_map(fmap_table, out.objects.at(dn),
                                 out.objects.at(cn), "morphism fmap");
      out.morphisms.push_back({std::move(map), std::move(fmap)});
    }
  }

  if (doc.contains("unit")) out.unit = parse_elem_table(doc["unit"], "unit");
  if (doc.contains("mult")) out.mult = parse_elem_table(doc["mult"], "mult");
  if (out.unit.empty() != out.mult.empty())
    throw schema_error("unit and mult tables must be given together");

  if (doc.contains("connected")) out.declared_connected = doc["connected"].get<bool>();
  if (doc.contains("has_constant"))
    out.declared_constant = doc["has_constant"].get<bool>();
  return out;
}

// Functoriality restricted to the listed tables: synthesized identities,
// and agreement on every composite that the document also lists.
void validate_tables(const TableDoc& doc) {
  for (const auto& m : doc.morphisms) {
    if (m.map.dom() == m.map.cod() && m.map == FinMap::identity(m.map.dom())) {
      if (!(m.fmap == FinMap::identity(m.fmap.dom())))
        throw cat_error("identity law fails: fmap of id on " + m.map.dom().str() +
                        " is not the identity");
    }
  }
  for (const auto& f : doc.morphisms)
    for (const auto& g : doc.morphisms) {
      if (!(f.map.cod() == g.map.dom())) continue;
      FinMap composite = compose(g.map, f.map);
      for (const auto& h : doc.morphisms) {
        if (!(h.map == composite)) continue;
        FinMap expected = compose(g.fmap, f.fmap);
        if (!(h.fmap == expected))
          throw cat_error("composition law fails: fmap of g.f differs from "
                          "fmap(g).fmap(f) for f=" + f.map.str() +
                          " g=" + g.map.str());
      }
    }
}

EndoFunctor build_functor(const std::shared_ptr<const TableDoc>& doc) {
  EndoFunctor f;
  f.name = doc->name;
  f.on_object = [doc](const FinSet& x) {
    for (const auto& [sname, s] : doc->base_sets)
      if (s == x) return doc->objects.at(sname);
    throw cat_error(doc->name + ": no object table for set " + x.str());
  };
  f.map_elem = [doc](const FinMap& m, const Elem& u) {
    if (m.dom() == m.cod() && m == FinMap::identity(m.dom())) return u;
    for (const auto& entry : doc->morphisms)
      if (entry.map == m) return entry.fmap(u);
    throw cat_error(doc->name + ": no fmap table for morphism " + m.str());
  };
  for (const auto& [sname, s] : doc->base_sets) {
    if (s.size() == 1) f.declared_f_one = doc->objects.at(sname);
    if (s.empty()) f.declared_f_empty = doc->objects.at(sname);
  }
  // without a listed one-element set, connectedness stays undecidable
  f.f_one_bound_limited = f.declared_f_one.empty();
  return f;
}

// Unit laws on every base set whose iota is available as a listed
// morphism. Returns the number of sets actually checked.
int validate_unit_laws(const TableDoc& doc) {
  auto unit_of = [&](const Elem& x) {
    auto it = doc.unit.find(x);
    if (it == doc.unit.end())
      throw schema_error("unit table missing entry for " + x.str());
    return it->second;
  };
  auto mult_of = [&](const Elem& u) {
    auto it = doc.mult.find(u);
    if (it == doc.mult.end())
      throw schema_error("mult table missing entry for " + u.str());
    return it->second;
  };

  int checked = 0;
  for (const auto& [sname, s] : doc.base_sets) {
    const FinSet& fs = doc.objects.at(sname);
    // find the listed morphism that realizes iota_S : S -> F(S)
    const MorphismEntry* iota = nullptr;
    for (const auto& m : doc.morphisms) {
      if (!(m.map.dom() == s)) continue;
      if (!(FinSet(m.map.cod().elems()) == fs)) continue;
      bool matches = true;
      for (const auto& x : s)
        if (doc.unit.count(x) == 0 || !(m.map(x) == doc.unit.at(x))) {
          matches = false;
          break;
        }
      if (matches) {
        iota = &m;
        break;
      }
    }
    if (!iota) continue;
    for (const auto& u : fs) {
      Elem lhs = mult_of(unit_of(u));
      if (!(lhs == u))
        throw cat_error("unit law fails on " + sname + ": mu(iota(" + u.str() +
                        ")) = " + lhs.str());
      Elem rhs = mult_of(iota->fmap(u));
      if (!(rhs == u))
        throw cat_error("unit law fails on " + sname + ": mu(F(iota)(" + u.str() +
                        ")) = " + rhs.str());
    }
    ++checked;
  }
  return checked;
}

}  // namespace

CatalogEntry load_custom(const std::string& json_text) {
  auto doc = std::make_shared<const TableDoc>(parse_doc(json_text));
  validate_tables(*doc);

  CatalogEntry entry;
  entry.name = doc->name;
  entry.restricted = true;
  entry.functor = build_functor(doc);

  ConnectivityResult conn = is_connected(entry.functor);
  entry.connected = conn.connected();
  if (doc->declared_connected && *doc->declared_connected != entry.connected)
    throw cat_error("declared connected flag does not match the object tables");
  try {
    entry.constant = has_constant(entry.functor).has_value();
  } catch (const cat_error&) {
    entry.constant = doc->declared_constant.value_or(false);
  }

  if (!doc->unit.empty()) {
    if (validate_unit_laws(*doc) == 0)
      throw schema_error("monad tables present but no base set has a listed "
                         "iota morphism to check the unit laws on");
    MonadData m;
    m.functor = entry.functor;
    m.unit_elem = [doc](const Elem& x) {
      auto it = doc->unit.find(x);
      if (it == doc->unit.end())
        throw cat_error("unit table missing entry for " + x.str());
      return it->second;
    };
    m.mult_elem = [doc](const Elem& u) {
      auto it = doc->mult.find(u);
      if (it == doc->mult.end())
        throw cat_error("mult table missing entry for " + u.str());
      return it->second;
    };
    entry.is_monad = true;
    entry.monad = std::move(m);
  }
  return entry;
}

CatalogEntry load_custom_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open document: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_custom(buf.str());
}

}  // namespace finmon
