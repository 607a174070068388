#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "cayley/integer.hpp"

namespace cayley {

// Minimal streaming writer for compact JSON. Integers of any size are written
// as bare decimal JSON numbers, which general-purpose JSON libraries cannot
// hold without truncation.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);

  JsonWriter& value(const Integer& v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(unsigned v) { return value(static_cast<std::uint64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

 private:
  void separate();

  std::ostream& out_;
  // One entry per open container: true once it holds at least one element.
  std::vector<bool> has_items_;
  bool after_key_ = false;
};

// Escapes a string for inclusion between JSON quotes.
std::string json_escape(std::string_view text);

}  // namespace cayley
