// Copyright 2026 The cypherdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYPHERDIFF_EXEC_PACKSTREAM_H_
#define CYPHERDIFF_EXEC_PACKSTREAM_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "cypherdiff/value.h"

namespace cypherdiff {

struct PackValue;
using PackList = std::vector<PackValue>;
using PackMap = std::vector<std::pair<std::string, PackValue>>;

struct PackStructure {
  std::uint8_t tag = 0;
  std::vector<PackValue> fields;
  bool operator==(const PackStructure&) const = default;
};

struct PackValue {
  std::variant<std::monostate, bool, std::int64_t, double, std::string, PackList,
               PackMap, PackStructure>
      data;

  PackValue() = default;
  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, PackValue>)
  PackValue(T v) : data(std::move(v)) {}  // NOLINT: implicit by design
  PackValue(int v) : data(static_cast<std::int64_t>(v)) {}
  PackValue(const char* s) : data(std::string(s)) {}

  bool operator==(const PackValue&) const = default;

  const PackMap* map() const { return std::get_if<PackMap>(&data); }
  const std::string* text() const { return std::get_if<std::string>(&data); }
  // Value under key in a map, or nullptr.
  const PackValue* get(const std::string& key) const;
};

class PackStreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void pack(const PackValue& value, std::vector<std::uint8_t>& out);
// Decodes one value starting at pos and advances pos past it.
PackValue unpack(std::span<const std::uint8_t> data, std::size_t& pos);

// Result-cell conversion: nodes and relationships become entity references.
Value to_value(const PackValue& value);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_PACKSTREAM_H_
