#include "halving/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace halving::io {

using nlohmann::json;

namespace {

Integer parse_integer(const json& v, const char* what) {
  if (!v.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
  const std::string s = v.get<std::string>();
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not a base-10 integer: '" + s + "'");
  }
  return z;
}

std::string axis_name(std::size_t j) {
  static const char* names[] = {"x", "y", "z", "w"};
  return j < 4 ? names[j] : "c" + std::to_string(j);
}

}  // namespace

std::string to_json(const PointSetArtifact& artifact) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dimension"] = artifact.dimension;
  doc["count"] = artifact.size();
  json coords = json::array();
  for (const auto& p : artifact.points) {
    json row = json::array();
    for (const auto& c : p.coords) row.push_back({c.get_num().get_str(), c.get_den().get_str()});
    coords.push_back(std::move(row));
  }
  doc["coordinates"] = std::move(coords);
  json prov;
  prov["construction"] = artifact.construction;
  prov["parameters"] = json::object();
  for (const auto& [k, v] : artifact.parameters) prov["parameters"][k] = v;
  prov["bold"] = artifact.bold;
  doc["provenance"] = std::move(prov);
  if (!artifact.claimed_halving.empty()) doc["claimed_halving"] = artifact.claimed_halving;
  return doc.dump(1) + "\n";
}

PointSetArtifact from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    PointSetArtifact art;
    art.dimension = doc.at("dimension").get<std::size_t>();
    if (art.dimension < 2) throw std::invalid_argument("dimension must be at least 2");
    const auto& coords = doc.at("coordinates");
    if (coords.size() != doc.at("count").get<std::size_t>()) {
      throw std::invalid_argument("count does not match the coordinate list");
    }
    for (const auto& row : coords) {
      if (row.size() != art.dimension) throw std::invalid_argument("point of the wrong dimension");
      Point p;
      for (const auto& pair : row) {
        if (!pair.is_array() || pair.size() != 2) {
          throw std::invalid_argument("coordinate must be [numerator, denominator]");
        }
        Integer num = parse_integer(pair[0], "numerator");
        Integer den = parse_integer(pair[1], "denominator");
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        p.coords.push_back(make_scalar(num, den));
      }
      art.points.push_back(std::move(p));
    }
    if (doc.contains("provenance")) {
      const auto& prov = doc["provenance"];
      art.construction = prov.value("construction", "");
      if (prov.contains("parameters")) {
        for (const auto& [k, v] : prov["parameters"].items()) {
          art.parameters[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      if (prov.contains("bold")) art.bold = prov["bold"].get<std::vector<std::size_t>>();
    }
    if (doc.contains("claimed_halving")) {
      art.claimed_halving = doc["claimed_halving"].get<std::vector<IndexTuple>>();
    }
    for (const auto& t : art.claimed_halving) {
      for (auto i : t) {
        if (i >= art.size()) throw std::invalid_argument("claimed index out of range");
      }
    }
    for (auto i : art.bold) {
      if (i >= art.size()) throw std::invalid_argument("bold index out of range");
    }
    return art;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed point-set document: ") + e.what());
  }
}

std::string to_csv(const PointSetArtifact& artifact, bool approx) {
  std::ostringstream os;
  os << "idx";
  for (std::size_t j = 0; j < artifact.dimension; ++j) {
    os << "," << axis_name(j) << "_num," << axis_name(j) << "_den";
  }
  if (approx) {
    for (std::size_t j = 0; j < artifact.dimension; ++j) os << "," << axis_name(j) << "_approx";
  }
  os << "\n";
  for (std::size_t i = 0; i < artifact.size(); ++i) {
    const Point& p = artifact.points[i];
    os << i;
    for (const auto& c : p.coords) os << "," << c.get_num().get_str() << "," << c.get_den().get_str();
    if (approx) {
      for (const auto& c : p.coords) os << "," << to_decimal(c, 17);
    }
    os << "\n";
  }
  return os.str();
}

std::string report_json(const VerificationReport& report) {
  json doc;
  doc["claim"] = report.claim;
  doc["passed"] = report.passed();
  doc["checked"] = report.checked;
  doc["violations"] = report.violations;
  doc["witnesses"] = report.witnesses;
  doc["metrics"] = report.metrics;
  doc["notes"] = report.notes;
  return doc.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace halving::io
