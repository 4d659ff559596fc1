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

#include "cst/sweep_io.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "cst/error.hpp"

namespace cst {
namespace {

void require_shared_axes(std::span<const SweepGrid> grids) {
  if (grids.empty()) throw InvalidArgument("sweep output: no grids");
  for (const auto& g : grids) {
    g.validate();
    if (g.axes.size() != grids[0].axes.size()) throw InvalidArgument("sweep output: grids have different axes");
    for (std::size_t k = 0; k < g.axes.size(); ++k) {
      if (g.axes[k].name != grids[0].axes[k].name || g.axes[k].samples != grids[0].axes[k].samples) {
        throw InvalidArgument("sweep output: grids have different axes");
      }
    }
  }
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : "null"; }

nlohmann::ordered_json nested(const SweepGrid& g, const std::vector<std::optional<double>>& flat,
                              std::size_t axis, std::size_t& cursor) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.axes[axis].samples.size(); ++i) {
    if (axis + 1 == g.axes.size()) {
      const auto& v = flat[cursor++];
      arr.push_back(v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr));
    } else {
      arr.push_back(nested(g, flat, axis + 1, cursor));
    }
  }
  return arr;
}

nlohmann::ordered_json nested(const SweepGrid& g, const std::vector<std::optional<double>>& flat) {
  std::size_t cursor = 0;
  return nested(g, flat, 0, cursor);
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string to_csv(std::span<const SweepGrid> grids, const SweepMeta& meta) {
  require_shared_axes(grids);
  std::string out;
  if (meta.is_object()) {
    for (const auto& [key, value] : meta.items()) {
      out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }

  const SweepGrid& first = grids[0];
  const bool with_prob = !first.prob.empty();
  std::string header;
  for (const auto& a : first.axes) header += (header.empty() ? "" : ",") + csv_escape(a.name);
  for (const auto& g : grids) header += "," + csv_escape(g.value_name);
  if (with_prob) header += ",prob";
  out += header + "\n";

  for (std::size_t flat = 0; flat < first.cell_count(); ++flat) {
    std::string row;
    for (double x : first.coordinates(flat)) row += (row.empty() ? "" : ",") + format_number(x);
    for (const auto& g : grids) row += "," + cell(g.values[flat]);
    if (with_prob) row += "," + cell(first.prob[flat]);
    out += row + "\n";
  }
  return out;
}

std::string to_json(std::span<const SweepGrid> grids, const SweepMeta& meta) {
  require_shared_axes(grids);
  const SweepGrid& first = grids[0];
  nlohmann::ordered_json doc;
  doc["axes"] = nlohmann::ordered_json::object();
  for (const auto& a : first.axes) doc["axes"][a.name] = a.samples;
  doc["value_name"] = first.value_name;
  doc["values"] = nested(first, first.values);
  doc["series"] = nlohmann::ordered_json::object();
  for (const auto& g : grids) doc["series"][g.value_name] = nested(g, g.values);
  if (!first.prob.empty()) doc["prob"] = nested(first, first.prob);
  doc["meta"] = meta;
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace cst
