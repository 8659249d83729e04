#include "hyperharm/report.hpp"

#include <sstream>

#include "hyperharm/serialize.hpp"

namespace hyperharm {

int exit_code_for(ErrorKind kind) { return is_numerical(kind) ? kExitNumerical : kExitValidation; }

std::string summarize(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " on " << report.geometry.label() << ": "
      << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& a : report.assertions) {
    out << "  [" << (a.passed ? "pass" : "FAIL") << "] " << a.name << ": " << format_number(a.value)
        << " (limit " << format_number(a.limit) << ")";
    if (!a.detail.empty()) out << "  " << a.detail;
    out << "\n";
  }
  for (const auto& f : report.fits)
    out << "  fit " << f.name << ": slope " << format_number(f.slope) << ", expected "
        << format_number(f.expected) << "\n";
  out << "  records " << report.records.size() << ", max ratio " << format_number(report.max_ratio)
      << ", median ratio " << format_number(report.median_ratio) << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return out.str();
}

std::string summarize(const std::string& bound, const BoundReport& report) {
  std::ostringstream out;
  out << bound << " bound = " << format_number(report.value);
  if (!report.converged) out << " (not converged)";
  out << "\n";
  for (const auto& c : report.components)
    out << "  " << c.name << ": " << format_number(c.value) << " at " << format_number(c.argmax) << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace hyperharm
