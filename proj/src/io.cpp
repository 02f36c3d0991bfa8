#include "cblagrange/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cblagrange/errors.hpp"

namespace cblagrange::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("not a number: \"" + s + "\"");
  }
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("not an integer: \"" + s + "\"");
  }
  return v;
}

// Data rows of a CSV file with `columns` cells; a non-numeric first row is a header.
std::vector<std::vector<std::string>> read_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv(line);
    if (first) {
      first = false;
      const auto& c0 = cells.empty() ? std::string() : cells[0];
      if (!c0.empty() && (std::isalpha(static_cast<unsigned char>(c0[0])) != 0)) continue;
    }
    if (cells.size() != columns) {
      throw ValidationError(path + ": expected " + std::to_string(columns) + " columns in \"" +
                            line + "\"");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

json to_json(const RecurrenceCoeffs& c) {
  return {{"n", c.n()},
          {"a", std::vector<double>(c.a().begin(), c.a().end())},
          {"b", std::vector<double>(c.b().begin(), c.b().end())}};
}

RecurrenceCoeffs coeffs_from_json(const json& j) {
  const int n = field<int>(j, "n");
  auto a = field<std::vector<double>>(j, "a");
  auto b = field<std::vector<double>>(j, "b");
  if (n < 0 || a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("coefficient file: a and b must both have length n");
  }
  return RecurrenceCoeffs(std::move(a), std::move(b), 1e-12);
}

json to_json(const NodeSequence& nodes) {
  return {{"nodes", std::vector<double>(nodes.values().begin(), nodes.values().end())}};
}

NodeSequence nodes_from_json(const json& j) {
  return NodeSequence(field<std::vector<double>>(j, "nodes"));
}

json to_json(const CheckerboardSet& set) {
  json points = json::array();
  for (const auto& p : set.points) {
    points.push_back({{"r", p.r}, {"u", p.u}, {"x", p.x}, {"y", p.y}});
  }
  return {{"tau", set.tau}, {"points", std::move(points)}};
}

CheckerboardSet checkerboard_from_json(const json& j) {
  CheckerboardSet set;
  set.tau = field<int>(j, "tau");
  if (set.tau != 0 && set.tau != 1) throw ValidationError("tau must be 0 or 1");
  for (const auto& p : field<json>(j, "points")) {
    set.points.push_back(
        {field<int>(p, "r"), field<int>(p, "u"), field<double>(p, "x"), field<double>(p, "y")});
    if ((set.points.back().r + set.points.back().u) % 2 != set.tau) {
      throw ValidationError("checkerboard point parity does not match tau");
    }
  }
  return set;
}

json to_json(const GridInstance& grid) {
  return {{"n", grid.n()},
          {"sigma", grid.sigma()},
          {"xnodes", to_json(grid.xnodes())["nodes"]},
          {"ynodes", to_json(grid.ynodes())["nodes"]},
          {"xcoeffs", to_json(grid.xcoeffs())},
          {"ycoeffs", to_json(grid.ycoeffs())}};
}

GridInstance grid_from_json(const json& j) {
  return GridInstance(field<int>(j, "n"), field<int>(j, "sigma"),
                      NodeSequence(field<std::vector<double>>(j, "xnodes")),
                      NodeSequence(field<std::vector<double>>(j, "ynodes")),
                      coeffs_from_json(field<json>(j, "xcoeffs")),
                      coeffs_from_json(field<json>(j, "ycoeffs")));
}

json to_json(const QuotientBasis& q) {
  json out = json::array();
  const auto exps = monomial_exponents(q.elements.empty() ? 0 : q.elements.front().degree());
  for (const auto& e : q.elements) {
    json terms = json::object();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const double c = e.coeffs()[i];
      if (c != 0.0) terms[std::to_string(exps[i].first) + "," + std::to_string(exps[i].second)] = c;
    }
    out.push_back(std::move(terms));
  }
  return out;
}

json to_json(const VerifyReport& r) {
  json j = {{"rank", r.rank},
            {"N_tau", r.N_tau},
            {"M", r.M},
            {"nullspace_dim", r.nullspace_dim},
            {"combined_rank", r.combined_rank},
            {"span_equal", r.span_equal},
            {"max_delta_error", r.max_delta_error},
            {"passed", r.passed()}};
  if (r.oracle_checked) j["oracle_in_span"] = r.oracle_in_span;
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::map<std::pair<int, int>, double> read_samples_csv(const std::string& path) {
  std::map<std::pair<int, int>, double> out;
  for (const auto& row : read_csv(path, 3)) {
    const auto key = std::make_pair(parse_int(row[0]), parse_int(row[1]));
    if (!out.emplace(key, parse_double(row[2])).second) {
      throw ValidationError("duplicate sample for node (" + row[0] + ", " + row[1] + ")");
    }
  }
  return out;
}

std::vector<std::pair<double, double>> read_points_csv(const std::string& path) {
  std::vector<std::pair<double, double>> out;
  for (const auto& row : read_csv(path, 2)) out.emplace_back(parse_double(row[0]), parse_double(row[1]));
  return out;
}

}  // namespace cblagrange::io
