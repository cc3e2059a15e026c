#pragma once

#include <cstddef>
#include <string>

namespace radmom {

enum class OutputFormat { csv, svg };

struct RunConfig {
  int l_max = 20;
  std::size_t n_theta = 0; // 0 -> l_max + 1
  std::size_t n_phi = 0;   // 0 -> 2 l_max + 1
  double gamma_max = 8.0;
  std::size_t gamma_points = 1601; // must be odd
  double tolerance_scale = 1.0;
  std::string out;
  OutputFormat format = OutputFormat::csv;

  std::size_t theta_count() const { return n_theta ? n_theta : std::size_t(l_max + 1); }
  std::size_t phi_count() const { return n_phi ? n_phi : std::size_t(2 * l_max + 1); }

  // throws std::invalid_argument when the invariants fail
  void validate() const;
};

// Exit-code contract shared by all CLI commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;

} // namespace radmom
