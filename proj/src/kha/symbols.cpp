#include "kha/symbols.hpp"

#include <mutex>
#include <set>

namespace kha {

const std::string* intern_param(std::string_view name) {
    static std::mutex mu;
    static std::set<std::string> pool;  // node stability keeps pointers valid
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = pool.emplace(name);
    return &*it;
}

Sym sym_q() { return Sym::parameter("q"); }
Sym sym_p() { return Sym::parameter("p"); }

std::string to_string(const Sym& s) {
    if (s.is_param()) return *s.param;
    return "z[" + std::to_string(s.vertex) + "," + std::to_string(s.slot) + "]";
}

}  // namespace kha
