#pragma once

#include "finmon/catalog.hpp"

namespace finmon {

struct CriterionResult {
  int id;
  std::string title;
  std::string verdict;  // "pass", "fail" or "vacuous-pass"
  std::string detail;

  bool ok() const { return verdict != "fail"; }
};

// The full verification suite over the built-in catalog: exhaustive
// checks of the splitting construction, both theorems, the decomposition
// and quotient results, and mutant rejection. max_size bounds the swept
// base-set sizes; 3 covers every nondegenerate branch.
std::vector<CriterionResult> run_verification_suite(int max_size = 3);

// Deliberately broken instances used to prove the law checkers can
// reject: a functor whose morphism action forgets everything but
// identities, and a rectangular band with the wrong multiplication.
EndoFunctor make_mutant_functor();
MonadData make_broken_rect_band();

}  // namespace finmon
