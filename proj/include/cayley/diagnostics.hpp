#pragma once

#include <ostream>
#include <string_view>

namespace cayley {

// Diagnostics (warnings, normalization notices) go to a dedicated stream so
// they never mix with data output. Defaults to std::cerr; set to nullptr to
// silence.
void set_diag_stream(std::ostream* os);
std::ostream* diag_stream();
void warn(std::string_view msg);

} // namespace cayley
