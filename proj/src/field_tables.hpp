#pragma once

#include <vector>

namespace cyclocode::detail {

struct BaseFieldEntry {
  unsigned q;
  unsigned p;
  unsigned e;
  std::vector<unsigned> modulus;  // over GF(p), low first, monic; empty when e = 1
};

struct ExtensionEntry {
  unsigned q;
  unsigned m;
  std::vector<unsigned> modulus;  // over GF(q), low first, monic, degree m
};

const std::vector<BaseFieldEntry>& base_field_table();
const std::vector<ExtensionEntry>& extension_table();

}  // namespace cyclocode::detail
