#pragma once

#include "mwl/specfile.hpp"

namespace mwl {

// Command layer shared by the C API and the test suites. Outputs are
// deterministic ordered JSON; `ok == false` means a verification failure
// (exit code 1), errors are thrown as mwl::Error.
struct CommandResult {
    Json output;
    bool ok = true;
};

Json cmd_fibers(const CurveSpec& spec);
Json cmd_mw(const CurveSpec& spec, const std::vector<std::string>& basis,
            const std::vector<std::string>& targets);
CommandResult cmd_conic(const CurveSpec& spec, const std::string& point_name, const Json& r_poly,
                        const Json& b_literal);
CommandResult cmd_verify(const CurveSpec& spec, const std::string& kind);
CommandResult cmd_reproduce(const std::string& example_id);

const char* builtin_spec_text(const std::string& id); // nullptr when unknown
std::vector<std::string> builtin_spec_ids();

// point expressions: a name or {"combine": [[n, name], ...]}
Point resolve_point(const CurveSpec& spec, const Json& expr);

} // namespace mwl
