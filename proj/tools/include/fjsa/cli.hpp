#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fjsa::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBudget = 3,
  kInvariant = 4,
  kDiscrepancy = 5,
};

enum class Format { Json, Csv, Pretty };

struct RunConfig {
  std::string command;
  long d1 = 0;
  long d2 = 0;
  int order = 8;
  int max_degree = 4;
  int r_max = 3;
  int d_max = 5;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  Format format = Format::Pretty;
  std::size_t budget = 20'000'000;  ///< max stored entries of one relation matrix
  std::size_t chain_budget = 5'000'000;  ///< max chain monomials (homology)
  bool ungraded_signs = false;  ///< diagnostic: CE differential without Koszul signs
};

/// Parse argv-style arguments (without the program name) and execute.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Validate and dispatch; maps library exceptions to exit codes.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_solve_ab(const RunConfig& cfg, std::ostream& out);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fjsa::cli
