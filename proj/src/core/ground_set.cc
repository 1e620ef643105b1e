// Copyright 2026 The Authors.
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

#include "mlogic/ground_set.h"

#include <cctype>

#include "mlogic/errors.h"

namespace mlogic {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw ValidationError("element names must be nonempty");
    for (char c : n) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
        throw ValidationError("element name '" + n +
                              "' contains whitespace or '#'");
      }
    }
    if (!index_.emplace(n, i).second) {
      throw ValidationError("duplicate element name '" + n + "'");
    }
  }
}

std::optional<std::size_t> GroundSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) {
    throw DomainError("element '" + std::string(name) +
                      "' is not in the ground set");
  }
  return *i;
}

Subset GroundSet::subset(const std::vector<std::string>& names) const {
  Subset s(size());
  for (const auto& n : names) s.set(index_of(n));
  return s;
}

std::string GroundSet::format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += names_[i];
    first = false;
  });
  return out + "}";
}

std::string GroundSet::join(const Subset& s) const {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += names_[i];
  });
  return out;
}

}  // namespace mlogic
