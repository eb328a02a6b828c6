// Checks every registered closed form on the example curve and prints the report.

#include <iostream>

#include "conecurve/conecurve.hpp"

using namespace conecurve;

int main(int argc, char** argv) {
  const auto report = assess(CurveSource::example1(), default_specs(), GridSpec{}, TolerancePolicy{});
  const bool json = argc > 1 && std::string(argv[1]) == "--json";
  std::cout << render_report(report, json ? ReportFormat::Json : ReportFormat::Markdown);
}
