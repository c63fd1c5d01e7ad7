#pragma once

#include <string_view>

#include "finmon/monad.hpp"

namespace finmon {

MonadData make_identity();
MonadData make_maybe();
MonadData make_list(int bound);          // lists of length <= bound
MonadData make_nonempty_powerset();      // free semilattice
MonadData make_full_powerset();
MonadData make_rect_band();              // F(X) = X x X, mu((a,b),(c,d)) = (a,d)
EndoFunctor make_diag_quotient();        // T(X) = X^2 with the diagonal collapsed

struct CatalogEntry {
  std::string name;
  bool is_monad = false;
  bool connected = false;     // declared; validated against computed verdicts
  bool constant = false;      // declared has_constant
  // Custom table-defined entries are only evaluable on their listed sets,
  // so registration skips the global-verdict validation for them.
  bool restricted = false;
  EndoFunctor functor;
  std::optional<MonadData> monad;
};

class Catalog {
 public:
  // All built-in instances, flags validated.
  static Catalog builtin();

  // Validates declared connected/constant flags against the computed
  // verdicts (unless the entry is restricted); throws cat_error on
  // mismatch.
  void add(CatalogEntry entry);

  const CatalogEntry* find(std::string_view name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

// Parses and validates a functor-table document (JSON text). Runs the
// functor laws restricted to the listed sets and, when unit/mult tables
// are present, the unit laws; throws schema_error on malformed input and
// cat_error (with a witness) on law violations.
CatalogEntry load_custom(const std::string& json_text);
CatalogEntry load_custom_file(const std::string& path);

}  // namespace finmon
