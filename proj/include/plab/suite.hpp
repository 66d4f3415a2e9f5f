#pragma once

#include "plab/report.hpp"
#include "plab/workspace.hpp"

namespace plab {

// Category a check op belongs to: "preLie", "averaging", "bialgebra",
// "cybe" or "rota-baxter". UnknownCheck for unknown ops.
std::string check_category(const std::string& op);

// The descriptors of a workspace filtered by a named preset. Presets select
// check lines by category; derive lines are always kept (later checks may
// depend on the objects they register). Preset "all" keeps everything.
std::vector<CheckDescriptor> preset_suite(const Workspace& ws, const std::string& preset);

// Executes descriptors in order; derive entries register their result back
// into the workspace under the declared name. UnknownObject / UnknownCheck
// on bad references.
Report run_suite(Workspace& ws, const std::vector<CheckDescriptor>& suite);

} // namespace plab
