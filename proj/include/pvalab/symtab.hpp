#pragma once

#include <cstdint>
#include <string>

namespace pvalab {

// Interning table for unknown-function symbols (ansatz slots, Miura
// generator coefficients, ...). Append-only; ids are stable for the
// lifetime of the process and safe to share across threads.
std::int32_t intern_symbol(const std::string& name);
const std::string& symbol_name(std::int32_t id);

} // namespace pvalab
