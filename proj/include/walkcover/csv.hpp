#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "walkcover/coverage.hpp"
#include "walkcover/oracle.hpp"

namespace walkcover {

// Floats in CSV output carry 12 significant digits.
inline std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline std::string coverage_csv(const CoverageResult& result) {
  std::string out = "step,start_mass,gamma,C\n";
  const CoverageTrace& trace = result.trace;
  for (std::size_t k = 0; k < trace.gamma.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(trace.start_mass[k]);
    out += ',';
    out += format_double(trace.gamma[k]);
    out += ',';
    out += format_double(trace.cumulative[k]);
    out += '\n';
  }
  return out;
}

// Truncated sweep entries leave the coverage_time field empty.
inline std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "p,coverage_time,baseline,r\n";
  for (const SweepPoint& point : sweep.points) {
    out += format_double(point.bias);
    out += ',';
    if (point.coverage_time) out += std::to_string(*point.coverage_time);
    out += ',';
    if (sweep.baseline) out += std::to_string(*sweep.baseline);
    out += ',';
    out += format_double(sweep.r);
    out += '\n';
  }
  return out;
}

inline std::string crossover_csv(const CrossoverResult& result) {
  std::string out = "iteration,lo,hi,bias,coverage_time,baseline\n";
  int iteration = 0;
  for (const BisectionIterate& it : result.iterates) {
    out += std::to_string(iteration++);
    out += ',';
    out += format_double(it.lo);
    out += ',';
    out += format_double(it.hi);
    out += ',';
    out += format_double(it.bias);
    out += ',';
    if (it.coverage_time) out += std::to_string(*it.coverage_time);
    out += ',';
    if (result.baseline) out += std::to_string(*result.baseline);
    out += '\n';
  }
  return out;
}

inline std::string size_sweep_csv(const std::vector<SizeSweepEntry>& entries) {
  std::string out = "size,crossover,baseline\n";
  for (const SizeSweepEntry& entry : entries) {
    out += std::to_string(entry.size);
    out += ',';
    if (entry.crossover.status == CrossoverStatus::Found)
      out += format_double(entry.crossover.bias);
    out += ',';
    if (entry.crossover.baseline)
      out += std::to_string(*entry.crossover.baseline);
    out += '\n';
  }
  return out;
}

inline std::string validation_csv(const ValidationReport& report) {
  std::string out =
      "step,macro_return,empirical_return,return_se,"
      "macro_covered,empirical_covered,covered_se,return_ok,covered_ok\n";
  for (const ValidationRow& row : report.rows) {
    out += std::to_string(row.step);
    out += ',';
    out += format_double(row.macro_return);
    out += ',';
    out += format_double(row.empirical_return);
    out += ',';
    out += format_double(row.return_se);
    out += ',';
    out += format_double(row.macro_covered);
    out += ',';
    out += format_double(row.empirical_covered);
    out += ',';
    out += format_double(row.covered_se);
    out += ',';
    out += row.return_ok ? '1' : '0';
    out += ',';
    out += row.covered_ok ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace walkcover
