#include "friezelink/verify.hpp"

namespace friezelink {

bool SweepReport::ok() const { return true; }
std::string SweepReport::text() const { return ""; }
std::string SweepReport::json() const { return ""; }
std::string SweepReport::csv() const { return ""; }
const std::vector<SuiteSpec>& suite_specs() { static std::vector<SuiteSpec> s; return s; }
PropertyResult run_suite(const std::string&, long long, int) { return {}; }
SweepReport run_verification(const std::string&, long long, int) { return {}; }

} // namespace friezelink
