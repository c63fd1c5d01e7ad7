#include "finmon/suite.hpp"

#include <sstream>

namespace finmon {

EndoFunctor make_mutant_functor() {
  EndoFunctor f = identity_functor();
  f.name = "mutant-constant-action";
  // identity maps act honestly, everything else collapses to the least
  // element of the target; F(swap.swap) = id then disagrees with
  // F(swap).F(swap)
  f.map_elem = [](const FinMap& m, const Elem& u) {
    if (m.dom() == m.cod() && m == FinMap::identity(m.dom())) return u;
    if (m.cod().empty()) throw cat_error("mutant: empty codomain");
    return m.cod().elems().front();
  };
  return f;
}

MonadData make_broken_rect_band() {
  MonadData m = make_rect_band();
  m.functor.name = "broken-rect-band";
  // wrong flattening: ((a,b),(c,d)) -> (b,d) instead of (a,d)
  m.mult_elem = [](const Elem& u) {
    return Elem::pair(u.left().right(), u.right().right());
  };
  return m;
}

namespace {

struct SuiteContext {
  int max_size;
  Catalog catalog = Catalog::builtin();

  const MonadData& monad(const char* name) const {
    return *catalog.find(name)->monad;
  }
  const EndoFunctor& functor(const char* name) const {
    return catalog.find(name)->functor;
  }
};

CriterionResult criterion(int id, std::string title, bool pass,
                          std::string detail) {
  return {id, std::move(title), pass ? "pass" : "fail", std::move(detail)};
}

CriterionResult vacuous(int id, std::string title, std::string why) {
  return {id, std::move(title), "vacuous-pass", std::move(why)};
}

// 1. connected monads: delta surjective and every (p,q) splits
CriterionResult c1(const SuiteContext& ctx) {
  std::string title = "connected monads preserve products, every pair splits";
  std::size_t splits = 0;
  for (const char* name : {"nonempty-powerset", "rect-band"}) {
    const MonadData& m = ctx.monad(name);
    for (int n1 = 1; n1 <= ctx.max_size; ++n1)
      for (int n2 = 1; n2 <= ctx.max_size; ++n2) {
        FinSet a1 = canonical_set(std::size_t(n1));
        FinSet a2 = canonical_set(std::size_t(n2));
        PreservationVerdict pv = check_weakly_preserves_product(m.functor, a1, a2);
        if (!pv.holds)
          return criterion(1, title, false,
                           std::string(name) + ": delta misses " +
                               pv.unhit->str() + " at sizes " +
                               std::to_string(n1) + "," + std::to_string(n2));
        for (const auto& p : m.functor.on_object(a1))
          for (const auto& q : m.functor.on_object(a2)) {
            try {
              SplitResult r = split_product(m, a1, a2, p, q);
              (void)r;
              ++splits;
            } catch (const cat_error& e) {
              return criterion(1, title, false,
                               std::string(name) + ": " + e.what());
            }
          }
      }
  }
  return criterion(1, title, true,
                   std::to_string(splits) + " splits verified, zero failures");
}

// 2. non-connected monads: concrete delta failure at |A1|=|A2|=2
CriterionResult c2(const SuiteContext& ctx) {
  std::string title = "non-connected monads exhibit a delta-surjectivity failure";
  if (ctx.max_size < 2) return vacuous(2, title, "needs sets of size 2");
  FinSet a = canonical_set(2);
  std::ostringstream detail;
  for (const char* name : {"maybe", "full-powerset", "list-2"}) {
    const EndoFunctor& f = ctx.functor(name);
    ConnectivityResult conn = is_connected(f);
    if (conn.verdict != Connectivity::NotConnected || !conn.witnesses)
      return criterion(2, title, false,
                       std::string(name) + " not reported as not_connected");
    auto unhit = first_unhit(delta(f, a, a));
    if (!unhit)
      return criterion(2, title, false,
                       std::string(name) + ": delta unexpectedly surjective");
    detail << name << " misses " << unhit->str() << "; ";
  }
  return criterion(2, title, true, detail.str());
}

// 3. free semilattice: F(4-set) covers all 9 targets from 15 sources
CriterionResult c3(const SuiteContext& ctx) {
  std::string title = "free semilattice: 15-source delta onto 9 targets";
  if (ctx.max_size < 2) return vacuous(3, title, "needs sets of size 2");
  const EndoFunctor& f = ctx.functor("nonempty-powerset");
  FinSet a = canonical_set(2);
  FinMap d = delta(f, a, a);
  bool ok = d.dom().size() == 15 && d.cod().size() == 9 && is_surjective(d);
  return criterion(3, title, ok,
                   "sources=" + std::to_string(d.dom().size()) +
                       " targets=" + std::to_string(d.cod().size()) +
                       (is_surjective(d) ? " all hit" : " not surjective"));
}

// 4. auxiliary lemma as explicit table equalities on every split
CriterionResult c4(const SuiteContext& ctx) {
  std::string title = "auxiliary lemma: F(pi1).tau = iota, F(pi2).tau = c_q";
  std::size_t tables = 0;
  for (const char* name : {"nonempty-powerset", "rect-band"}) {
    const MonadData& m = ctx.monad(name);
    for (int n1 = 1; n1 <= ctx.max_size; ++n1)
      for (int n2 = 1; n2 <= ctx.max_size; ++n2) {
        FinSet a1 = canonical_set(std::size_t(n1));
        FinSet a2 = canonical_set(std::size_t(n2));
        Cone prod = product(a1, a2);
        for (const auto& p : m.functor.on_object(a1))
          for (const auto& q : m.functor.on_object(a2)) {
            SplitResult r = split_product(m, a1, a2, p, q);
            for (const auto& [a, tau_a] : r.tau_trace) {
              if (!(m.functor.map_elem(prod.p1, tau_a) == m.unit_elem(a)))
                return criterion(4, title, false,
                                 std::string(name) + ": F(pi1)(tau(" + a.str() +
                                     ")) != iota(" + a.str() + ")");
              if (!(m.functor.map_elem(prod.p2, tau_a) == q))
                return criterion(4, title, false,
                                 std::string(name) + ": F(pi2)(tau(" + a.str() +
                                     ")) != " + q.str());
            }
            ++tables;
          }
      }
  }
  return criterion(4, title, true,
                   std::to_string(tables) + " tau tables verified");
}

// 5. unit laws for all five catalog monads
CriterionResult c5(const SuiteContext& ctx) {
  std::string title = "unit laws hold for all catalog monads";
  for (const auto& entry : ctx.catalog.entries()) {
    if (!entry.is_monad) continue;
    for (int n = 0; n <= ctx.max_size; ++n) {
      Report rep = check_unit_laws(*entry.monad, canonical_set(std::size_t(n)));
      if (!rep.ok())
        return criterion(5, title, false,
                         entry.name + ": " + rep.checks.back().witness);
    }
  }
  return criterion(5, title, true, "both composites are the identity, |X| <= " +
                                       std::to_string(ctx.max_size));
}

// 6. connected decomposition for bounded list and maybe
CriterionResult c6(const SuiteContext& ctx) {
  std::string title = "connected decomposition partitions F(X) and respects F(f)";
  for (const char* name : {"list-2", "maybe"}) {
    const EndoFunctor& f = ctx.functor(name);
    for (int i = 0; i <= ctx.max_size; ++i) {
      FinSet x = canonical_set(std::size_t(i));
      auto parts_x = decompose_connected(f, x);
      std::size_t total = 0;
      for (const auto& [e, comp] : parts_x) {
        if (comp.empty())
          return criterion(6, title, false,
                           std::string(name) + ": empty component at " + e.str());
        total += comp.size();
      }
      if (total != f.on_object(x).size())
        return criterion(6, title, false,
                         std::string(name) + ": components do not cover F(" +
                             x.str() + ")");
      for (int j = 0; j <= ctx.max_size; ++j) {
        FinSet y = canonical_set(std::size_t(j));
        auto parts_y = decompose_connected(f, y);
        for (const auto& map : all_maps(x, y))
          for (const auto& [e, comp] : parts_x)
            for (const auto& u : comp) {
              Elem v = f.map_elem(map, u);
              auto it = parts_y.find(e);
              if (it == parts_y.end() || !it->second.contains(v))
                return criterion(6, title, false,
                                 std::string(name) + ": F(f)(" + u.str() +
                                     ") leaves component " + e.str());
            }
      }
    }
  }
  return criterion(6, title, true, "partitions exact and closed under all maps");
}

// 7. constant-map lemma for connected functors; bounded list non-constant
CriterionResult c7(const SuiteContext& ctx) {
  std::string title = "connected functors send constant maps to constants";
  for (const char* name :
       {"identity", "nonempty-powerset", "rect-band", "diag-quotient"}) {
    const EndoFunctor& f = ctx.functor(name);
    for (int i = 1; i <= ctx.max_size; ++i)
      for (int j = 1; j <= ctx.max_size; ++j) {
        FinSet x = canonical_set(std::size_t(i));
        FinSet y = canonical_set(std::size_t(j));
        for (const auto& v : y) {
          Report rep = check_constant_map_preservation(f, x, y, v);
          if (!rep.ok())
            return criterion(7, title, false,
                             std::string(name) + ": " + rep.checks.back().witness);
        }
      }
  }
  if (ctx.max_size >= 2) {
    const EndoFunctor& list = ctx.functor("list-2");
    FinSet x = canonical_set(2);
    FinSet y = canonical_set(1);
    FinMap fc = list.on_morphism(FinMap::constant(x, y, y.elems()[0]));
    bool constant = true;
    for (const auto& v : fc.values())
      if (!(v == fc.values().front())) constant = false;
    if (constant)
      return criterion(7, title, false,
                       "bounded list F(c_y) unexpectedly constant");
  }
  return criterion(7, title, true,
                   "F(c_y) = c_iota(y) throughout; bounded list non-constant "
                   "as expected");
}

// 8. theorem-2 equivalence for every catalog functor, plus T specifics
CriterionResult c8(const SuiteContext& ctx) {
  std::string title = "equivalence of no-constant/products and "
                      "connected/constant-pullbacks";
  if (ctx.max_size < 2)
    return vacuous(8, title, "needs sets of size 2 to separate the clauses");
  for (const auto& entry : ctx.catalog.entries()) {
    Report rep = verify_theorem_equivalence(entry.functor, ctx.max_size);
    if (!rep.ok())
      return criterion(8, title, false,
                       entry.name + ": " + rep.checks.back().witness);
  }
  if (ctx.max_size >= 2) {
    const EndoFunctor& t = ctx.functor("diag-quotient");
    for (int n1 = 1; n1 <= ctx.max_size; ++n1)
      for (int n2 = 1; n2 <= ctx.max_size; ++n2) {
        PreservationVerdict pv = check_weakly_preserves_product(
            t, canonical_set(std::size_t(n1)), canonical_set(std::size_t(n2)));
        if (!pv.holds)
          return criterion(8, title, false,
                           "diag-quotient fails product preservation at sizes " +
                               std::to_string(n1) + "," + std::to_string(n2));
      }
    FinSet two = canonical_set(2);
    PreservationVerdict pb = check_weakly_preserves_constant_pullbacks(
        t, two, two, two, two.elems()[0], two.elems()[1]);
    if (pb.holds)
      return criterion(8, title, false,
                       "diag-quotient unexpectedly preserves the c_a/c_b "
                       "pullback");
  }
  return criterion(8, title, true,
                   "clauses agree for every catalog functor; diag-quotient "
                   "splits them as expected");
}

// 9. kernel-meet quotient counts for connected monads
CriterionResult c9(const SuiteContext& ctx) {
  std::string title = "kernel-meet quotient has |F(A)|*|F(B)| classes";
  for (const char* name : {"identity", "nonempty-powerset", "rect-band"}) {
    const MonadData& m = ctx.monad(name);
    for (int n1 = 1; n1 <= ctx.max_size; ++n1)
      for (int n2 = 1; n2 <= ctx.max_size; ++n2) {
        Report rep = quotient_iso_check(m, canonical_set(std::size_t(n1)),
                                        canonical_set(std::size_t(n2)));
        if (!rep.ok())
          return criterion(9, title, false,
                           std::string(name) + ": " + rep.checks.back().witness);
      }
  }
  if (ctx.max_size >= 2) {
    FinSet a = canonical_set(2);
    Cone prod = product(a, a);
    const MonadData& m = ctx.monad("nonempty-powerset");
    FinSet classes = kernel_meet_quotient(m.functor.on_morphism(prod.p1),
                                          m.functor.on_morphism(prod.p2));
    if (classes.size() != 9 || m.functor.on_object(prod.apex).size() != 15)
      return criterion(9, title, false,
                       "nonempty-powerset 2x2 expected 9 classes of 15 "
                       "elements, got " + std::to_string(classes.size()));
  }
  return criterion(9, title, true, "all class counts match the product");
}

// 10. mutant rejection with witnesses
CriterionResult c10(const SuiteContext& ctx) {
  std::string title = "broken functor and broken monad are rejected";
  if (ctx.max_size < 2)
    return vacuous(10, title, "mutant witnesses need sets of size 2");
  Report functor_rep = check_functor_laws(make_mutant_functor(), 2);
  bool functor_rejected =
      !functor_rep.ok() && !functor_rep.checks.back().witness.empty();
  Report monad_rep = check_unit_laws(make_broken_rect_band(), canonical_set(2));
  bool monad_rejected = !monad_rep.ok() && !monad_rep.checks.back().witness.empty();
  if (!functor_rejected)
    return criterion(10, title, false, "mutant functor slipped through");
  if (!monad_rejected)
    return criterion(10, title, false, "broken monad slipped through");
  return criterion(10, title, true,
                   functor_rep.checks.back().witness + "; " +
                       monad_rep.checks.back().witness);
}

}  // namespace

std::vector<CriterionResult> run_verification_suite(int max_size) {
  if (max_size < 1) throw cat_error("verification suite needs max_size >= 1");
  SuiteContext ctx{max_size};
  return {c1(ctx), c2(ctx), c3(ctx), c4(ctx), c5(ctx),
          c6(ctx), c7(ctx), c8(ctx), c9(ctx), c10(ctx)};
}

}  // namespace finmon
