#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end, callable in-process for tests. Exit codes:
// 0 decided, 1 usage or parse error, 2 enumeration/weight cap exceeded,
// 3 solver/reference disagreement (compare only).

namespace votematch::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace votematch::cli
