#ifndef SDEPTH_TABLES_HPP
#define SDEPTH_TABLES_HPP

// Built-in expected census and gap tables, kept as a JSON document so the
// constants can be swapped for reconciliation experiments, plus the
// verification driver that reruns every desk-scale computation and diffs
// it against them.

#include <string>
#include <vector>

#include "sdepth/enumeration.hpp"

namespace sdepth {

const char* expected_tables_json();

struct TableCheck {
  std::string name;
  bool ok = false;
  std::string mode;    // split mode that matched (census checks)
  std::string detail;  // diff description on failure
};

struct VerifyReport {
  bool ok = true;
  std::vector<TableCheck> checks;
};

struct VerifyOptions {
  int jobs = 1;
  bool long_running = false;
  std::string tables_json;  // override for the built-in document
};

VerifyReport verify_tables(const VerifyOptions& opts = {});

}  // namespace sdepth

#endif
