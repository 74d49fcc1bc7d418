#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kha {

// Vertex id reserved for auxiliary/formal variables (series arguments,
// zeta placeholders). Never used by quiver vertices.
inline constexpr int kAuxVertex = -1;

// Interns a parameter name and returns a stable pointer. Equal names always
// yield the same pointer, so symbol comparison can use pointer identity as
// a fast path.
const std::string* intern_param(std::string_view name);

// A symbol is either a torus-fixed-point variable z[vertex,slot] or a
// parameter symbol (q, p, t, q_e, ...). Variables order before parameters;
// variables by (vertex, slot), parameters by name. This is the canonical
// term order used everywhere for determinism.
struct Sym {
    std::int32_t vertex = 0;
    std::int32_t slot = 0;
    const std::string* param = nullptr;

    static Sym var(int vertex, int slot) {
        Sym s;
        s.vertex = vertex;
        s.slot = slot;
        return s;
    }
    static Sym parameter(std::string_view name) {
        Sym s;
        s.param = intern_param(name);
        return s;
    }

    bool is_param() const { return param != nullptr; }
    bool is_var() const { return param == nullptr; }

    bool operator==(const Sym& o) const {
        if (is_param() != o.is_param()) return false;
        if (is_param()) return param == o.param;
        return vertex == o.vertex && slot == o.slot;
    }
    bool operator!=(const Sym& o) const { return !(*this == o); }
    bool operator<(const Sym& o) const {
        if (is_var() != o.is_var()) return is_var();  // variables first
        if (is_var()) {
            if (vertex != o.vertex) return vertex < o.vertex;
            return slot < o.slot;
        }
        if (param == o.param) return false;
        return *param < *o.param;
    }
};

// Reserved parameter symbols.
Sym sym_q();
Sym sym_p();

std::string to_string(const Sym& s);

}  // namespace kha
