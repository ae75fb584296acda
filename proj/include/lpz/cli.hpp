#pragma once

// Command-line front end: validate, render, table, relief, query, serve.

#include <ostream>

namespace lpz {

/// Exit status: 0 success, 1 invalid input or I/O failure, 2 usage error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lpz
