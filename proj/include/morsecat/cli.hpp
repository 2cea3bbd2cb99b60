#pragma once

// The morsecat command line: classify, render and check. Exit codes are 0 on
// success, 1 on a failed check or unknown object, 2 on a usage error.

#include <ostream>
#include <string>

namespace morsecat::cli {

struct ClassifyOptions {
  int double_curves = 1;
  int budget = 4;
  std::string format = "text";
  int threads = 1;
};

struct RenderOptions {
  std::string target = "structure";
  std::string id;
  std::string out;  ///< empty writes to the output stream
};

struct CheckOptions {
  std::string catalog;  ///< optional JSON catalog to verify
  int threads = 1;
};

int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Short stable identifier of a canonical key (FNV-1a, 12 hex digits).
std::string short_digest(const std::string& key);

}  // namespace morsecat::cli
