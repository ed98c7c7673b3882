#pragma once

#include <string>

#include "polygf/config.hpp"

namespace polygf {

// Complex arithmetic expressions such as "0.11+0.23i", "3tau/2+1/2", "-1/(2pi)".
// Identifiers: i, pi, tau (only when a value is supplied). Juxtaposition multiplies.
Complex parse_complex(const std::string& text);
Complex parse_complex(const std::string& text, Complex tau);

}  // namespace polygf
