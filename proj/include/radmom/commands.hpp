#pragma once

#include <iosfwd>
#include <string>

#include "radmom/config.hpp"

namespace radmom {

// Each command returns one of the exit_* codes and writes human-readable
// progress to `log`.  File output (when cfg.out is set) is deterministic.

int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_fig1(const RunConfig& cfg, std::ostream& log);
int cmd_fig2(const RunConfig& cfg, std::ostream& log);
int cmd_qcoeff(const RunConfig& cfg, int l, std::ostream& log);
// op_name in {Lx, Ly, Lz, erx, ery, erz, rPix, rPiy, rPiz}, or "all".
int cmd_spectrum_dump(const RunConfig& cfg, const std::string& op_name, std::ostream& log);

} // namespace radmom
