#pragma once

#include <string>

#include "fnkgs/problems.hpp"
#include "fnkgs/runner.hpp"

namespace fnkgs {

// %.6e formatting; all writers are deterministic given the same inputs
// (cpu_seconds fields excepted).
std::string fmt_sci(double v);

void write_invariants_csv(const std::string& path, const RunResult& result);
void write_snapshots(const std::string& out_dir, const RunResult& result);
void write_convergence_csv(const std::string& path, const ConvergenceTable& table);
void write_compare_csv(const std::string& path, const std::vector<CompareRow>& rows);
void write_summary_json(const std::string& path, const ProblemSpec& prob,
                        const RunConfig& cfg, const RunResult& result);

}  // namespace fnkgs
