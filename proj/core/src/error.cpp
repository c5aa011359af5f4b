#include "pfw/error.hpp"

#include <charconv>
#include <cstdint>
#include <mutex>

#include <nlohmann/json.hpp>

namespace pfw {

CapExceeded::CapExceeded(std::string const& what_cap, std::size_t limit, std::size_t needed)
    : Error("cap exceeded: " + what_cap + " (limit " + std::to_string(limit) + ", needed " +
            std::to_string(needed) + ")"),
      cap_(what_cap),
      limit_(limit) {}

namespace {

std::mutex caps_mutex;
Caps current_caps;

std::size_t* field(Caps& c, std::string_view key) {
  if (key == "max_ji") return &c.max_ji;
  if (key == "max_elements") return &c.max_elements;
  if (key == "max_congruences") return &c.max_congruences;
  if (key == "max_cideals") return &c.max_cideals;
  if (key == "max_universe") return &c.max_universe;
  if (key == "max_enum_size") return &c.max_enum_size;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Caps caps() {
  std::lock_guard lock(caps_mutex);
  return current_caps;
}

void set_caps(Caps const& c) {
  std::lock_guard lock(caps_mutex);
  current_caps = c;
}

Caps parse_caps(std::string_view text, Caps base) {
  text = trim(text);
  if (text.empty()) return base;
  if (text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(std::string("caps: ") + e.what());
    }
    for (auto const& [k, v] : j.items()) {
      std::size_t* f = field(base, k);
      if (f == nullptr) throw InvalidInput("caps: unknown key '" + k + "'");
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InvalidInput("caps: '" + k + "' must be a non-negative integer");
      *f = v.get<std::size_t>();
    }
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("caps: expected key=value, got '" + std::string(item) + "'");
    std::string_view key = trim(item.substr(0, eq));
    std::string_view val = trim(item.substr(eq + 1));
    std::size_t* f = field(base, key);
    if (f == nullptr) throw InvalidInput("caps: unknown key '" + std::string(key) + "'");
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc{} || ptr != val.data() + val.size())
      throw InvalidInput("caps: bad number for '" + std::string(key) + "'");
    *f = n;
  }
  return base;
}

}  // namespace pfw
