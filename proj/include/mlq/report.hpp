#ifndef MLQ_REPORT_HPP
#define MLQ_REPORT_HPP

#include <string>
#include <vector>

#include "mlq/checks.hpp"

namespace mlq {

// Human-readable table with witnesses, derived constants and wall times.
std::string render_text(const std::vector<CheckReport>& reports);

// Machine-readable top-level array, sorted keys, two-space indent, trailing
// newline.  Wall times are excluded so identical runs are byte-identical.
std::string render_json(const std::vector<CheckReport>& reports);

// 0 when every non-skipped check passed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace mlq

#endif  // MLQ_REPORT_HPP
