#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace mdlmon {

/// Proposition p_j of the temporal logic, j >= 1.
struct PropId {
  std::uint32_t index = 1;

  explicit PropId(std::uint32_t i) : index(i) {
    if (i == 0) throw std::invalid_argument("proposition index must be >= 1");
  }
  bool operator==(const PropId&) const = default;
  auto operator<=>(const PropId&) const = default;
  std::string name() const { return "p" + std::to_string(index); }
};

/// Monadic predicate P_j; indexes correspond one-to-one with PropId.
struct PredId {
  std::uint32_t index = 1;

  explicit PredId(std::uint32_t i) : index(i) {
    if (i == 0) throw std::invalid_argument("predicate index must be >= 1");
  }
  explicit PredId(PropId p) : index(p.index) {}
  PropId prop() const { return PropId(index); }
  bool operator==(const PredId&) const = default;
  auto operator<=>(const PredId&) const = default;
  std::string name() const { return "P" + std::to_string(index); }
};

/// First-order variable. Index 0 is the distinguished zero variable z.
struct VarId {
  std::uint32_t index = 0;

  constexpr VarId() = default;
  constexpr explicit VarId(std::uint32_t i) : index(i) {}
  bool is_zero_var() const { return index == 0; }
  bool operator==(const VarId&) const = default;
  auto operator<=>(const VarId&) const = default;
  std::string name() const { return index == 0 ? "z" : "v" + std::to_string(index); }
};

inline constexpr VarId kZeroVar{0};

/// Deterministic supply of fresh variables, handed out left to right.
class VarSupply {
public:
  explicit VarSupply(std::uint32_t first = 1) : next_(first == 0 ? 1 : first) {}
  VarId fresh() { return VarId(next_++); }
  std::uint32_t next_index() const { return next_; }

private:
  std::uint32_t next_;
};

}  // namespace mdlmon

template <>
struct std::hash<mdlmon::VarId> {
  std::size_t operator()(const mdlmon::VarId& v) const { return std::hash<std::uint32_t>{}(v.index); }
};
template <>
struct std::hash<mdlmon::PredId> {
  std::size_t operator()(const mdlmon::PredId& p) const { return std::hash<std::uint32_t>{}(p.index); }
};
template <>
struct std::hash<mdlmon::PropId> {
  std::size_t operator()(const mdlmon::PropId& p) const { return std::hash<std::uint32_t>{}(p.index); }
};
