#ifndef SEMISTAR_SRC_LATTICE_HPP
#define SEMISTAR_SRC_LATTICE_HPP

// Rules for the zero module and for K that every backend shares. Each helper
// returns nullopt when both operands are proper and the backend must decide.

#include <optional>

#include "semistar/module.hpp"

namespace semistar::detail {

inline std::optional<Module> trivial_add(const Module& a, const Module& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_field() || b.is_field()) return Module::field();
  return std::nullopt;
}

inline std::optional<Module> trivial_mul(const Module& a, const Module& b) {
  if (a.is_zero() || b.is_zero()) return Module::zero();
  if (a.is_field() || b.is_field()) return Module::field();
  return std::nullopt;
}

inline std::optional<Module> trivial_intersect(const Module& a, const Module& b) {
  if (a.is_zero() || b.is_zero()) return Module::zero();
  if (a.is_field()) return b;
  if (b.is_field()) return a;
  return std::nullopt;
}

inline std::optional<Module> trivial_colon(const Module& a, const Module& b) {
  if (b.is_zero()) return Module::field();
  if (a.is_zero()) return Module::zero();
  if (a.is_field()) return Module::field();
  if (b.is_field()) return Module::zero();
  return std::nullopt;
}

inline std::optional<bool> trivial_leq(const Module& a, const Module& b) {
  if (a.is_zero() || b.is_field()) return true;
  if (b.is_zero() || a.is_field()) return false;
  return std::nullopt;
}

}  // namespace semistar::detail

#endif
