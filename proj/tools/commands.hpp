#pragma once

#include "context.hpp"
#include "json_io.hpp"

namespace cmpl::cli {

json cmd_cmpl(const Options& o, bool star);
json cmd_log_coeffs(const Options& o);
json cmd_log_eval(const Options& o);
json cmd_continue(const Options& o);
json cmd_torsion(const Options& o);
json cmd_check(const Options& o);
json cmd_euler(const Options& o);
json cmd_zeta(const Options& o);
json cmd_tmodule_show(const Options& o);

/// Runs the embedded invariant suite; prints a table and returns the exit code.
int cmd_selftest(const Options& o);

}  // namespace cmpl::cli
