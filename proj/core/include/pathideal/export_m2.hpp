#ifndef PATHIDEAL_EXPORT_M2_HPP
#define PATHIDEAL_EXPORT_M2_HPP

#include <string>

#include "pathideal/engine.hpp"

namespace pathideal {

/// Self-contained Macaulay2 script: declares the polynomial ring, the t-path
/// ideal's generators verbatim, and pdim/regularity calls, with this
/// engine's expected values as comments for manual diffing.
std::string export_m2_script(const Graph& g, int t, const EngineConfig& cfg = {});

}  // namespace pathideal

#endif
