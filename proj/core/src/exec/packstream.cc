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

#include "cypherdiff/exec/packstream.h"

#include <bit>
#include <cstring>

#include "cypherdiff/exec/outcome.h"

namespace cypherdiff {
namespace {

void put_be(std::uint64_t v, int bytes, std::vector<std::uint8_t>& out) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_size(std::size_t n, std::uint8_t tiny, std::uint8_t m8, std::vector<std::uint8_t>& out,
              bool has_8bit = true) {
  if (n < 16) {
    out.push_back(static_cast<std::uint8_t>(tiny | n));
  } else if (has_8bit && n <= 0xFF) {
    out.push_back(m8);
    put_be(n, 1, out);
  } else if (n <= 0xFFFF) {
    out.push_back(static_cast<std::uint8_t>(m8 + 1));
    put_be(n, 2, out);
  } else {
    out.push_back(static_cast<std::uint8_t>(m8 + 2));
    put_be(n, 4, out);
  }
}

std::uint64_t get_be(std::span<const std::uint8_t> data, std::size_t& pos, int bytes) {
  if (pos + static_cast<std::size_t>(bytes) > data.size()) {
    throw PackStreamError("truncated PackStream value");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v = (v << 8) | data[pos++];
  return v;
}

std::string get_string(std::span<const std::uint8_t> data, std::size_t& pos, std::size_t n) {
  if (pos + n > data.size()) throw PackStreamError("truncated PackStream string");
  std::string s(reinterpret_cast<const char*>(data.data() + pos), n);
  pos += n;
  return s;
}

}  // namespace

const PackValue* PackValue::get(const std::string& key) const {
  const PackMap* m = map();
  if (!m) return nullptr;
  for (const auto& [k, v] : *m) {
    if (k == key) return &v;
  }
  return nullptr;
}

void pack(const PackValue& value, std::vector<std::uint8_t>& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out.push_back(0xC0);
        } else if constexpr (std::is_same_v<T, bool>) {
          out.push_back(v ? 0xC3 : 0xC2);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          if (v >= -16 && v <= 127) {
            out.push_back(static_cast<std::uint8_t>(v));
          } else if (v >= INT8_MIN && v <= INT8_MAX) {
            out.push_back(0xC8);
            put_be(static_cast<std::uint64_t>(v), 1, out);
          } else if (v >= INT16_MIN && v <= INT16_MAX) {
            out.push_back(0xC9);
            put_be(static_cast<std::uint64_t>(v), 2, out);
          } else if (v >= INT32_MIN && v <= INT32_MAX) {
            out.push_back(0xCA);
            put_be(static_cast<std::uint64_t>(v), 4, out);
          } else {
            out.push_back(0xCB);
            put_be(static_cast<std::uint64_t>(v), 8, out);
          }
        } else if constexpr (std::is_same_v<T, double>) {
          out.push_back(0xC1);
          put_be(std::bit_cast<std::uint64_t>(v), 8, out);
        } else if constexpr (std::is_same_v<T, std::string>) {
          put_size(v.size(), 0x80, 0xD0, out);
          out.insert(out.end(), v.begin(), v.end());
        } else if constexpr (std::is_same_v<T, PackList>) {
          put_size(v.size(), 0x90, 0xD4, out);
          for (const auto& e : v) pack(e, out);
        } else if constexpr (std::is_same_v<T, PackMap>) {
          put_size(v.size(), 0xA0, 0xD8, out);
          for (const auto& [k, e] : v) {
            pack(PackValue(k), out);
            pack(e, out);
          }
        } else {
          if (v.fields.size() >= 16) throw PackStreamError("structure too large");
          out.push_back(static_cast<std::uint8_t>(0xB0 | v.fields.size()));
          out.push_back(v.tag);
          for (const auto& e : v.fields) pack(e, out);
        }
      },
      value.data);
}

PackValue unpack(std::span<const std::uint8_t> data, std::size_t& pos) {
  if (pos >= data.size()) throw PackStreamError("truncated PackStream value");
  const std::uint8_t m = data[pos++];
  auto list_of = [&](std::size_t n) {
    PackList items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) items.push_back(unpack(data, pos));
    return PackValue(std::move(items));
  };
  auto map_of = [&](std::size_t n) {
    PackMap items;
    for (std::size_t i = 0; i < n; ++i) {
      PackValue key = unpack(data, pos);
      if (!key.text()) throw PackStreamError("non-string map key");
      items.emplace_back(*key.text(), unpack(data, pos));
    }
    return PackValue(std::move(items));
  };
  if (m <= 0x7F) return PackValue(static_cast<std::int64_t>(m));
  if (m >= 0xF0) return PackValue(static_cast<std::int64_t>(static_cast<std::int8_t>(m)));
  switch (m & 0xF0) {
    case 0x80: return PackValue(get_string(data, pos, m & 0x0F));
    case 0x90: return list_of(m & 0x0F);
    case 0xA0: return map_of(m & 0x0F);
    case 0xB0: {
      PackStructure s;
      s.tag = static_cast<std::uint8_t>(get_be(data, pos, 1));
      for (int i = 0; i < (m & 0x0F); ++i) s.fields.push_back(unpack(data, pos));
      return PackValue(std::move(s));
    }
    default: break;
  }
  switch (m) {
    case 0xC0: return PackValue();
    case 0xC1: return PackValue(std::bit_cast<double>(get_be(data, pos, 8)));
    case 0xC2: return PackValue(false);
    case 0xC3: return PackValue(true);
    case 0xC8: return PackValue(static_cast<std::int64_t>(static_cast<std::int8_t>(get_be(data, pos, 1))));
    case 0xC9: return PackValue(static_cast<std::int64_t>(static_cast<std::int16_t>(get_be(data, pos, 2))));
    case 0xCA: return PackValue(static_cast<std::int64_t>(static_cast<std::int32_t>(get_be(data, pos, 4))));
    case 0xCB: return PackValue(static_cast<std::int64_t>(get_be(data, pos, 8)));
    case 0xD0: return PackValue(get_string(data, pos, get_be(data, pos, 1)));
    case 0xD1: return PackValue(get_string(data, pos, get_be(data, pos, 2)));
    case 0xD2: return PackValue(get_string(data, pos, get_be(data, pos, 4)));
    case 0xD4: return list_of(get_be(data, pos, 1));
    case 0xD5: return list_of(get_be(data, pos, 2));
    case 0xD6: return list_of(get_be(data, pos, 4));
    case 0xD8: return map_of(get_be(data, pos, 1));
    case 0xD9: return map_of(get_be(data, pos, 2));
    case 0xDA: return map_of(get_be(data, pos, 4));
    default: break;
  }
  throw PackStreamError("unknown PackStream marker " + std::to_string(m));
}

Value to_value(const PackValue& value) {
  return std::visit(
      [](const auto& v) -> Value {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return Value::null();
        } else if constexpr (std::is_same_v<T, bool>) {
          return Value::boolean(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return Value::integer(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return Value::floating(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return Value::text(v);
        } else if constexpr (std::is_same_v<T, PackList>) {
          ValueList items;
          for (const auto& e : v) items.push_back(to_value(e));
          return Value::list(std::move(items));
        } else if constexpr (std::is_same_v<T, PackMap>) {
          throw PackStreamError("map values are not supported in results");
        } else {
          // Prefer the loader's id property over the engine's internal id.
          auto entity_id = [&](std::size_t props) -> const std::int64_t* {
            if (props < v.fields.size()) {
              if (const PackValue* p = v.fields[props].get(kEntityIdKey)) {
                if (const auto* i = std::get_if<std::int64_t>(&p->data)) return i;
              }
            }
            return v.fields.empty() ? nullptr
                                    : std::get_if<std::int64_t>(&v.fields[0].data);
          };
          if (v.tag == 0x4E) {
            if (const auto* id = entity_id(2)) return Value::node(*id);
          }
          if (v.tag == 0x52) {
            if (const auto* id = entity_id(4)) return Value::relationship(*id);
          }
          throw PackStreamError("unsupported structure tag " + std::to_string(v.tag));
        }
      },
      value.data);
}

}  // namespace cypherdiff
