#include "cayley/diagnostics.hpp"

#include <iostream>

namespace cayley {

namespace {
std::ostream* g_diag = &std::cerr;
} // namespace

void set_diag_stream(std::ostream* os) { g_diag = os; }

std::ostream* diag_stream() { return g_diag; }

void warn(std::string_view msg) {
    if (g_diag != nullptr) {
        (*g_diag) << "warning: " << msg << '\n';
    }
}

} // namespace cayley
