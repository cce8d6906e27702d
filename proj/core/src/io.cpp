/*
 * Copyright 2025 The critcover authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "critcover/geometry.hpp"
#include "json.hpp"

namespace critcover {

std::string placement_to_json(const Placement& placement,
                              const DiskSet& disks) {
  nlohmann::ordered_json j;
  j["region"] = {{"x", placement.region.x},
                 {"y", placement.region.y},
                 {"w", placement.region.w},
                 {"h", placement.region.h}};
  j["disks"] = disks.radii();
  auto centers = nlohmann::ordered_json::array();
  for (const PlacedDisk& pd : placement.items) {
    centers.push_back({pd.disk_index, pd.center.x, pd.center.y});
  }
  j["centers"] = std::move(centers);
  return j.dump();
}

void placement_from_json(const std::string& text, Placement& placement,
                         DiskSet& disks) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("placement JSON parse error: ") +
                                e.what());
  }
  try {
    const auto& region = j.at("region");
    placement.region.x = region.at("x").get<double>();
    placement.region.y = region.at("y").get<double>();
    placement.region.w = region.at("w").get<double>();
    placement.region.h = region.at("h").get<double>();
    disks = DiskSet(j.at("disks").get<std::vector<double>>());
    placement.items.clear();
    for (const auto& c : j.at("centers")) {
      if (!c.is_array() || c.size() != 3) {
        throw std::invalid_argument(
            "placement JSON: each center must be [index, x, y]");
      }
      PlacedDisk pd;
      pd.disk_index = c.at(0).get<std::size_t>();
      pd.center.x = c.at(1).get<double>();
      pd.center.y = c.at(2).get<double>();
      placement.items.push_back(pd);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("placement JSON schema error: ") +
                                e.what());
  }
}

std::string placement_to_svg(const Placement& placement, const DiskSet& disks,
                             const std::optional<Point>& witness) {
  const RectRegion& r = placement.region;
  // Leave room for disks overhanging the region.
  double max_r = 0.0;
  for (const PlacedDisk& pd : placement.items) {
    max_r = std::max(max_r, disks.radius(pd.disk_index));
  }
  const double pad = 0.05 * std::max(r.w, r.h) + max_r;
  const double vx = r.x - pad, vy = r.y - pad;
  const double vw = r.w + 2 * pad, vh = r.h + 2 * pad;
  const double scale = 640.0 / std::max(vw, vh);

  std::ostringstream os;
  os.precision(17);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << vw * scale << "\" height=\"" << vh * scale << "\" viewBox=\"" << vx
     << " " << vy << " " << vw << " " << vh << "\">\n"
     // Flip y so the y axis points up, as in world coordinates.
     << "<g transform=\"translate(0," << (2 * vy + vh)
     << ") scale(1,-1)\">\n";
  for (const PlacedDisk& pd : placement.items) {
    os << "<circle cx=\"" << pd.center.x << "\" cy=\"" << pd.center.y
       << "\" r=\"" << disks.radius(pd.disk_index)
       << "\" fill=\"#2b6cb0\" fill-opacity=\"0.35\" stroke=\"#2b6cb0\" "
          "stroke-width=\""
       << 0.002 * std::max(vw, vh) << "\"/>\n";
  }
  os << "<rect x=\"" << r.x << "\" y=\"" << r.y << "\" width=\"" << r.w
     << "\" height=\"" << r.h
     << "\" fill=\"none\" stroke=\"#1a202c\" stroke-width=\""
     << 0.004 * std::max(vw, vh) << "\"/>\n";
  if (witness) {
    os << "<circle cx=\"" << witness->x << "\" cy=\"" << witness->y
       << "\" r=\"" << 0.01 * std::max(vw, vh)
       << "\" fill=\"#c53030\" stroke=\"none\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace critcover
