/*
 Copyright 2026 reachkit contributors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "reachkit/artifacts.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace reachkit {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void append_row(std::string& out, const BoundarySample& s, int n,
                bool upper) {
  for (double sig : s.sigma.sigma) out += fmt(sig) + ",";
  out += upper ? "upper" : "lower";
  const Vector& x = upper ? s.x_upper : s.x_lower;
  const Vector& z = upper ? s.z_upper : s.z_lower;
  for (int k = 0; k < n; ++k) out += "," + fmt(x(k));
  for (int k = 0; k < n; ++k) out += "," + fmt(z(k));
  out += "\n";
}

}  // namespace

std::string canonical_json(const CanonicalForm& cf) {
  json doc;
  doc["M"] = matrix_rows(cf.M);
  doc["M_inv"] = matrix_rows(cf.M_inv);
  doc["c"] = std::vector<double>(cf.c.data(), cf.c.data() + cf.dim());
  doc["det_M"] = cf.det_M;
  json eigs = json::array();
  for (int i = 0; i < cf.eigs.size(); ++i)
    eigs.push_back({{"re", cf.eigs(i).real()}, {"im", cf.eigs(i).imag()}});
  doc["eigenvalues"] = eigs;
  doc["kernel_trivial"] = cf.kernel_trivial;
  return doc.dump(2) + "\n";
}

std::string boundary_csv(const std::vector<BoundarySample>& samples, int n) {
  std::string out;
  for (int k = 1; k < n; ++k) out += "sigma_" + std::to_string(k) + ",";
  out += "surface";
  for (int k = 1; k <= n; ++k) out += ",x_" + std::to_string(k);
  for (int k = 1; k <= n; ++k) out += ",z_" + std::to_string(k);
  out += "\n";
  for (const auto& s : samples) {
    append_row(out, s, n, true);
    append_row(out, s, n, false);
  }
  return out;
}

std::string boundary_json(const std::vector<BoundarySample>& samples, int n) {
  json doc = json::array();
  for (const auto& s : samples) {
    json item;
    item["sigma"] = s.sigma.sigma;
    item["x_upper"] = std::vector<double>(s.x_upper.data(), s.x_upper.data() + n);
    item["x_lower"] = std::vector<double>(s.x_lower.data(), s.x_lower.data() + n);
    item["z_upper"] = std::vector<double>(s.z_upper.data(), s.z_upper.data() + n);
    item["z_lower"] = std::vector<double>(s.z_lower.data(), s.z_lower.data() + n);
    doc.push_back(item);
  }
  return doc.dump(2) + "\n";
}

std::string volume_json(const VolumeResult& result) {
  json doc;
  doc["volume_Z"] = result.volume_Z;
  doc["volume_X"] = result.volume_X;
  doc["det_M"] = result.det_M;
  doc["sigma_grid"] = result.sigma_grid;
  doc["lambda_grid"] = result.lambda_grid;
  doc["dt"] = result.dt;
  return doc.dump(2) + "\n";
}

std::string containment_json(const ContainmentReport& report, double tol) {
  json doc;
  doc["samples"] = report.samples;
  doc["violations"] = report.violations;
  doc["worst_margin"] = report.worst_margin;
  doc["tol"] = tol;
  return doc.dump(2) + "\n";
}

std::string svg_polygon(const std::vector<Vector>& polygon) {
  if (polygon.empty())
    throw Error(ErrorCode::wrong_dimension, "empty polygon");
  for (const auto& p : polygon)
    if (p.size() != 2)
      throw Error(ErrorCode::wrong_dimension, "SVG emission needs 2D points");

  double min_x = polygon[0](0), max_x = min_x;
  double min_y = polygon[0](1), max_y = min_y;
  for (const auto& p : polygon) {
    min_x = std::min(min_x, p(0));
    max_x = std::max(max_x, p(0));
    min_y = std::min(min_y, p(1));
    max_y = std::max(max_y, p(1));
  }
  const double margin_x = 0.05 * std::max(max_x - min_x, 1e-9);
  const double margin_y = 0.05 * std::max(max_y - min_y, 1e-9);

  char buf[256];
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" ";
  std::snprintf(buf, sizeof(buf), "viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                min_x - margin_x, min_y - margin_y,
                (max_x - min_x) + 2 * margin_x,
                (max_y - min_y) + 2 * margin_y);
  out += buf;
  out += "<path d=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    // SVG y points down; the set is mirrored about the viewBox center line.
    const double y = (min_y + max_y) - polygon[i](1);
    std::snprintf(buf, sizeof(buf), "%c %.6f %.6f ", i == 0 ? 'M' : 'L',
                  polygon[i](0), y);
    out += buf;
  }
  out += "Z\" fill=\"#cccccc\" stroke=\"#333333\" stroke-width=\"0.5%\"/>\n";
  out += "</svg>\n";
  return out;
}

void emit_svg_polygon(const std::vector<Vector>& polygon,
                      const std::string& path) {
  write_text_file(path, svg_polygon(polygon));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::validation_error, "cannot open " + path);
  f << content;
}

}  // namespace reachkit
