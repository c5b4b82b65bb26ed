#pragma once

#include "supcalc/context.hpp"
#include "supcalc/proposition.hpp"
#include "supcalc/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supcalc {

struct CorpusEntry {
  std::string name;
  Term term;
  Context context;
  Proposition type;
};

/// Named closed well-typed terms over the non-negative rationals. Together
/// they use every typing rule and every rewrite rule, and include the
/// weighted-choice pair with equal matrices, the eta-expanded identity next to
/// the identity, and matrices encoded as terms.
const std::vector<CorpusEntry>& corpus();

/// Looks an entry up by name.
std::optional<CorpusEntry> corpus_entry(const std::string& name);

}  // namespace supcalc
