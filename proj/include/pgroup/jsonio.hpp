#pragma once

#include <string>
#include <vector>

#include "group.hpp"
#include "presentation.hpp"
#include "suite.hpp"
#include "tensor.hpp"
#include "todd_coxeter.hpp"

namespace pgroup {

inline constexpr const char* kReportSchema = "pgroup/1";

// All serializers emit pretty-printed JSON with a trailing newline, field
// order fixed by construction, and no timing or host information, so a
// given input always produces byte-identical output.

std::string group_info_json(GroupPtr g);
std::string series_json(GroupPtr g);
std::string quotient_json(GroupPtr g, const std::string& by_label,
                          const Subgroup& n_sub, GroupPtr quotient);
std::string coset_table_json(const Presentation& p,
                             const std::vector<std::string>& subgroup_words,
                             const CosetTable& table);
std::string tensor_json(const TensorResult& t, bool include_presentation);
// `requested` is the suite name the user asked for (possibly "all").
std::string suite_reports_json(const std::string& requested,
                               const std::vector<SuiteReport>& reports,
                               int exit_code);

}  // namespace pgroup
