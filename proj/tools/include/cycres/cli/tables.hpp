#pragma once

#include <cycres/cli/emit.hpp>

#include <string>
#include <vector>

namespace cycres::cli {

// Golden verification tables: reference values embedded as data, recomputed
// from scratch on every run and compared exactly.
std::vector<std::string> table_ids();
std::string table_description(const std::string& id);

// Recomputes the table; doc.pass is false on any mismatch (doc.diffs lists
// them).  Unknown ids raise DomainError.
TableDoc run_table(const std::string& id);

}  // namespace cycres::cli
