#include "hochster/scx_io.hpp"

#include <fstream>
#include <sstream>

#include "hochster/errors.hpp"

namespace hochster {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

SimplicialComplex read_scx(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int m = -1;
  std::vector<VertexSet> facets;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string token;
    if (!(line >> token)) continue;
    if (m < 0) {
      long long value = 0;
      if (token != "m" || !(line >> value)) parse_fail(line_no, "expected 'm <ground_size>'");
      if (value < 0 || value > max_ground_size)
        fail(ErrorCode::unsupported_size, "line " + std::to_string(line_no) + ": ground size " +
                                              std::to_string(value) + " outside 0.." + std::to_string(max_ground_size));
      if (line >> token) parse_fail(line_no, "unexpected token '" + token + "'");
      m = static_cast<int>(value);
      continue;
    }
    VertexSet facet;
    do {
      std::size_t used = 0;
      long long label = 0;
      try {
        label = std::stoll(token, &used);
      } catch (const std::exception&) {
        parse_fail(line_no, "not a vertex label: '" + token + "'");
      }
      if (used != token.size()) parse_fail(line_no, "not a vertex label: '" + token + "'");
      if (label < 1 || label > m)
        fail(ErrorCode::invalid_vertex, "line " + std::to_string(line_no) + ": label " + std::to_string(label) +
                                            " outside [" + std::to_string(m) + "]");
      facet.insert(static_cast<int>(label));
    } while (line >> token);
    facets.push_back(facet);
  }
  if (m < 0) parse_fail(line_no, "missing 'm <ground_size>' header");
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex parse_scx(const std::string& text) {
  std::istringstream in(text);
  return read_scx(in);
}

SimplicialComplex load_scx(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  return read_scx(in);
}

void write_scx(std::ostream& out, const SimplicialComplex& K) {
  out << "m " << K.ground_size() << '\n';
  for (VertexSet f : K.facets()) {
    bool first = true;
    for (int v : f.labels()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string to_scx(const SimplicialComplex& K) {
  std::ostringstream out;
  write_scx(out, K);
  return out.str();
}

}  // namespace hochster
