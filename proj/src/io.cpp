#include "fvlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fvlab/errors.hpp"

namespace fvlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json verdict_json(const LimitVerdict& v) {
  nlohmann::json j;
  j["tag"] = std::string(tag_name(v.tag));
  if (v.value) j["value"] = number_or_null(*v.value);
  j["slope"] = number_or_null(v.slope);
  j["residual"] = number_or_null(v.residual);
  return j;
}

std::string trace_csv(const VariationTrace& t) {
  std::vector<std::vector<std::string>> rows;
  for (auto s : t.samples) rows.push_back({format_double(s.eps), format_double(s.value)});
  return csv_text({"eps", "value"}, rows);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace fvlab
