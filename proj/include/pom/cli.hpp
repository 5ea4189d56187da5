#pragma once
// Command-line front end.  Every verb produces a report
//   {"command": ..., "version": ..., "generated_at": ..., "results": ...}
// whose results block is a pure function of flags and seeds; only the
// timestamp varies between identical runs.  Exit status: 0 all checks pass,
// 1 a numeric check failed, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace pom::cli {

inline constexpr const char* version = "0.1.0";

// args excludes the program name, e.g. {"bounds", "--n", "2..4"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pom::cli
