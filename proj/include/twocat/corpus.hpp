#pragma once

#include <string>
#include <vector>

#include "twocat/fin2cat.hpp"

namespace twocat {

// The default verification corpus: small 2-categories covering the gaunt,
// groupoidal, chaotic and mixed regimes.
std::vector<Fin2Category> default_corpus();

// Load every *.json in the directory (sorted by filename); throws
// SchemaError naming the file on malformed input, and rejects categories
// that fail the law validator.
std::vector<Fin2Category> corpus_load(const std::string& dir);
void corpus_save(const std::string& dir, const std::vector<Fin2Category>& corpus);

}  // namespace twocat
