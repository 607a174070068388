#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace cayley {

// Position within a triple.
enum class Component : std::size_t { kA = 0, kB = 1, kC = 2 };

inline constexpr std::array<Component, 3> kAllComponents = {
    Component::kA, Component::kB, Component::kC};

constexpr std::size_t index_of(Component c) {
  return static_cast<std::size_t>(c);
}

constexpr std::string_view name_of(Component c) {
  switch (c) {
    case Component::kA: return "a";
    case Component::kB: return "b";
    case Component::kC: return "c";
  }
  return "?";
}

std::optional<Component> parse_component(std::string_view text);

}  // namespace cayley
