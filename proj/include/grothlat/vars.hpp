#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace grothlat {

// Variable universe: three indexed alphabets x1,x2,..., y1,..., z1,... plus
// the two global deformation parameters beta and q.  The numeric code makes
// VarId totally ordered with x < y < z < beta < q, which is the significance
// order used everywhere (monomial orders, serialization, swaps).

enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2, Beta = 3, Q = 4 };

struct VarId {
  std::uint16_t code = 0;  // kind << 12 | index

  constexpr VarId() = default;
  constexpr VarId(VarKind k, unsigned index)
      : code(static_cast<std::uint16_t>((static_cast<unsigned>(k) << 12) | index)) {}

  constexpr VarKind kind() const { return static_cast<VarKind>(code >> 12); }
  constexpr unsigned index() const { return code & 0x0fffu; }

  friend constexpr auto operator<=>(VarId a, VarId b) { return a.code <=> b.code; }
  friend constexpr bool operator==(VarId a, VarId b) { return a.code == b.code; }
};

constexpr VarId xvar(unsigned i) { return VarId(VarKind::X, i); }
constexpr VarId yvar(unsigned i) { return VarId(VarKind::Y, i); }
constexpr VarId zvar(unsigned i) { return VarId(VarKind::Z, i); }
constexpr VarId beta_var() { return VarId(VarKind::Beta, 0); }
constexpr VarId q_var() { return VarId(VarKind::Q, 0); }

std::string var_name(VarId v);                     // "x3", "beta", "q"
std::optional<VarId> parse_var(const std::string&);  // inverse of var_name

}  // namespace grothlat
