#include "pvalab/symtab.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pvalab {

namespace {
std::mutex g_mutex;
std::deque<std::string> g_names;
std::unordered_map<std::string, std::int32_t> g_ids;
} // namespace

std::int32_t intern_symbol(const std::string& name) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_ids.find(name);
    if (it != g_ids.end()) return it->second;
    auto id = static_cast<std::int32_t>(g_names.size());
    g_names.push_back(name);
    g_ids.emplace(name, id);
    return id;
}

const std::string& symbol_name(std::int32_t id) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (id < 0 || static_cast<std::size_t>(id) >= g_names.size())
        throw std::out_of_range("symbol_name: unknown symbol id");
    return g_names[static_cast<std::size_t>(id)];
}

} // namespace pvalab
