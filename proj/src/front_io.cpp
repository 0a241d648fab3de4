#include "hvbo/front_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hvbo {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

double parse_double(const std::string& tok) {
  std::string t = tok;
  const auto first = t.find_first_not_of(" \t\r");
  const auto last = t.find_last_not_of(" \t\r");
  if (first == std::string::npos) throw std::invalid_argument("empty numeric field");
  t = t.substr(first, last - first + 1);
  if (t == "inf" || t == "+inf") return kInf;
  if (t == "-inf") return -kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed numeric field: '" + t + "'");
  }
  if (used != t.size()) throw std::invalid_argument("malformed numeric field: '" + t + "'");
  return v;
}

}  // namespace

ObjVec parse_vector(const std::string& text) {
  ObjVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_double(tok));
  if (out.empty()) throw std::invalid_argument("empty vector");
  return out;
}

std::vector<ObjVec> parse_front_csv(std::istream& in) {
  std::vector<ObjVec> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    pts.push_back(parse_vector(line));
    if (pts.size() > 1 && pts.back().size() != pts.front().size()) {
      throw std::invalid_argument("front file: rows have differing lengths");
    }
  }
  if (pts.empty()) throw std::invalid_argument("front file: no points");
  return pts;
}

std::vector<ObjVec> parse_front_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty()) throw std::invalid_argument("front file: expected a non-empty JSON array");
  std::vector<ObjVec> pts;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("front file: expected an array of arrays");
    ObjVec p;
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument("front file: non-numeric entry");
      p.push_back(v.get<double>());
    }
    if (!pts.empty() && p.size() != pts.front().size()) {
      throw std::invalid_argument("front file: rows have differing lengths");
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<ObjVec> read_front_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open front file: " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_front_json(buf.str());
  }
  return parse_front_csv(in);
}

void write_front(std::ostream& out, const std::vector<ObjVec>& pts, const std::string& format) {
  if (format == "json") {
    out << "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << (i ? ",\n " : "\n ") << "[";
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        out << (k ? "," : "") << format_double(pts[i][k]);
      }
      out << "]";
    }
    out << "\n]\n";
    return;
  }
  if (format != "csv") throw std::invalid_argument("write_front: unknown format " + format);
  for (const auto& p : pts) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_double(p[k]);
    out << "\n";
  }
}

void write_boxes_csv(std::ostream& out, const BoxPartition& part) {
  for (int k = 1; k <= part.dim; ++k) out << "l_" << k << ",";
  for (int k = 1; k <= part.dim; ++k) out << "u_" << k << (k == part.dim ? "" : ",");
  out << "\n";
  for (const auto& b : part.boxes) {
    for (int k = 0; k < part.dim; ++k) out << format_double(b.lower[k]) << ",";
    for (int k = 0; k < part.dim; ++k) out << format_double(b.upper[k]) << (k == part.dim - 1 ? "" : ",");
    out << "\n";
  }
}

void write_boxes_json(std::ostream& out, const BoxPartition& part) {
  out << "{\"dim\":" << part.dim << ",\"source_front_size\":" << part.source_front_size << ",\"boxes\":[";
  for (std::size_t i = 0; i < part.boxes.size(); ++i) {
    const auto& b = part.boxes[i];
    out << (i ? ",\n " : "\n ") << "{\"lower\":[";
    for (int k = 0; k < part.dim; ++k) out << (k ? "," : "") << '"' << format_double(b.lower[k]) << '"';
    out << "],\"upper\":[";
    for (int k = 0; k < part.dim; ++k) out << (k ? "," : "") << '"' << format_double(b.upper[k]) << '"';
    out << "]}";
  }
  out << "\n]}\n";
}

}  // namespace hvbo
