// vars.hpp - identifiers for the per-qubit error coordinates A_u, B_u, C_u, D_u.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qivar {

enum class VarKind : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

struct VarId {
  VarKind kind;
  int qubit;  // 0..4

  friend bool operator==(const VarId& x, const VarId& y) {
    return x.kind == y.kind && x.qubit == y.qubit;
  }
  friend bool operator<(const VarId& x, const VarId& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.qubit < y.qubit;
  }
};

using FlipSet = std::vector<VarId>;

inline char var_letter(VarKind k) { return "ABCD"[static_cast<int>(k)]; }

inline std::string var_name(const VarId& v) {
  return std::string(1, var_letter(v.kind)) + std::to_string(v.qubit);
}

// Parses names like "A0 B3 D4" or "A0,B3,D4" into a flip set.
inline FlipSet parse_flip_set(const std::string& text) {
  FlipSet out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == ',') continue;
    VarKind kind;
    switch (c) {
      case 'A': kind = VarKind::A; break;
      case 'B': kind = VarKind::B; break;
      case 'C': kind = VarKind::C; break;
      case 'D': kind = VarKind::D; break;
      default: throw std::invalid_argument("bad variable letter in flip set");
    }
    if (i + 1 >= text.size() || text[i + 1] < '0' || text[i + 1] > '4')
      throw std::invalid_argument("bad qubit index in flip set");
    out.push_back({kind, text[i + 1] - '0'});
    ++i;
  }
  return out;
}

}  // namespace qivar
