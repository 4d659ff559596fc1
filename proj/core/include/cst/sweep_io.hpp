// Copyright 2026 The causal-switch-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CST_SWEEP_IO_HPP
#define CST_SWEEP_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "cst/experiments.hpp"
#include <nlohmann/json.hpp>

namespace cst {

inline constexpr std::string_view kVersion = "0.1.0";

/// Provenance embedded in every sweep file. Insertion order is preserved so
/// identical configurations produce identical bytes.
using SweepMeta = nlohmann::ordered_json;

/// Provenance as `# key: value` comment lines (one per top-level meta entry),
/// then one header row (axis names, each grid's value name, then `prob` when
/// the first grid carries a probability channel) and one row per cell. Floats
/// use 12 significant digits, null cells the literal `null`, LF endings, RFC
/// 4180 quoting for any field that needs it. All grids must share the same axes.
std::string to_csv(std::span<const SweepGrid> grids, const SweepMeta& meta = SweepMeta::object());

/// {"axes": {name: samples}, "value_name": first grid's name, "values": nested
/// arrays of the first grid, "series": {value_name: nested arrays} for every
/// grid, "prob": nested arrays (when present), "meta": meta}. Nulls are JSON null.
std::string to_json(std::span<const SweepGrid> grids, const SweepMeta& meta);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// RFC 4180 field quoting.
std::string csv_escape(std::string_view field);

/// 12 significant digits, shortest form.
std::string format_number(double v);

}  // namespace cst

#endif  // CST_SWEEP_IO_HPP
