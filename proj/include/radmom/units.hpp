#pragma once

namespace radmom {

// Natural units throughout the library core.
inline constexpr double hbar = 1.0;

} // namespace radmom
