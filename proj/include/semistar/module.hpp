#ifndef SEMISTAR_MODULE_HPP
#define SEMISTAR_MODULE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "semistar/element.hpp"

namespace semistar {

// Monomial D-submodule of K for D = k[[S]]: a set of integers bounded below
// and closed under +S. Members are `below` (sorted, all < threshold) together
// with every integer >= threshold; threshold = min + conductor.
struct SemigroupIdeal {
  int min = 0;
  int threshold = 0;
  std::vector<int> below;

  friend bool operator==(const SemigroupIdeal&, const SemigroupIdeal&) = default;
};

// Upward-closed set of values in Z or Z^2 (lex). Closed(g) = {v >= g};
// Limit(a) = {v : v.major > a} exists only in rank two.
struct ValueCut {
  enum class Kind { Closed, Limit };
  Kind kind = Kind::Closed;
  Exponent bound;

  friend bool operator==(const ValueCut&, const ValueCut&) = default;
};

// D-submodule of K for D = F_q + T F_{q^m}[[T]]: everything of T-degree >
// `degree` plus the elements of exact degree `degree` whose leading
// coefficient lies in the F_q-subspace `subspace` (bitmask over field codes).
struct PvdIdeal {
  int degree = 0;
  std::uint64_t subspace = 0;

  friend bool operator==(const PvdIdeal&, const PvdIdeal&) = default;
};

class Module {
 public:
  enum class Shape { Zero, Field, Proper };
  using Body = std::variant<std::monostate, SemigroupIdeal, ValueCut, PvdIdeal>;

  Module() = default;
  static Module zero() { return Module(Shape::Zero, {}); }
  static Module field() { return Module(Shape::Field, {}); }
  template <class T>
  static Module proper(T body) {
    return Module(Shape::Proper, Body(std::move(body)));
  }

  Shape shape() const noexcept { return shape_; }
  bool is_zero() const noexcept { return shape_ == Shape::Zero; }
  bool is_field() const noexcept { return shape_ == Shape::Field; }
  bool is_proper() const noexcept { return shape_ == Shape::Proper; }

  template <class T>
  const T& as() const {
    return std::get<T>(body_);
  }

  friend bool operator==(const Module&, const Module&) = default;

 private:
  Module(Shape s, Body b) : shape_(s), body_(std::move(b)) {}

  Shape shape_ = Shape::Zero;
  Body body_;
};

}  // namespace semistar

#endif
