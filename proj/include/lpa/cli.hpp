#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Run one toolkit command.  Returns the process exit code: 0 on success,
/// 1 on input syntax errors, 2 on domain precondition failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lpa::cli
