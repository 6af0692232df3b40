#include "hochster/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "hochster/constructions.hpp"
#include "hochster/errors.hpp"

namespace hochster {

namespace {

SimplicialComplex simplex(int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "simplex dimension must be >= 0");
  return SimplicialComplex::from_facets(n + 1, {VertexSet::full(n + 1)});
}

SimplicialComplex boundary_simplex(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "boundary_simplex needs n >= 1");
  std::vector<VertexSet> facets;
  for (int v = 1; v <= n + 1; ++v) facets.push_back(VertexSet::full(n + 1) - VertexSet::singleton(v));
  return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

SimplicialComplex polygon(int n) {
  if (n < 3) fail(ErrorCode::invalid_argument, "polygon needs n >= 3");
  std::vector<VertexSet> facets;
  for (int i = 1; i <= n; ++i) facets.push_back(VertexSet{i, i % n + 1});
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex bipyramid(int n) {
  if (n < 5) fail(ErrorCode::invalid_argument, "bipyramid needs n >= 5");
  return suspension(polygon(n - 2));
}

SimplicialComplex from_triples(int m, const std::vector<std::vector<int>>& triples) {
  std::vector<VertexSet> facets;
  for (const auto& t : triples) facets.push_back(VertexSet::from_labels(t));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex octahedron() {
  // Antipodal pairs {1,4}, {2,5}, {3,6}.
  std::vector<VertexSet> facets;
  for (int a : {1, 4})
    for (int b : {2, 5})
      for (int c : {3, 6}) facets.push_back(VertexSet{a, b, c});
  return SimplicialComplex::from_facets(6, std::move(facets));
}

SimplicialComplex icosahedron() {
  // 1 top, 2..6 upper ring, 7..11 lower ring, 12 bottom.
  std::vector<std::vector<int>> t;
  for (int k = 0; k < 5; ++k) {
    int u = 2 + k, u1 = 2 + (k + 1) % 5, l = 7 + k, l1 = 7 + (k + 1) % 5;
    t.push_back({1, u, u1});
    t.push_back({12, l, l1});
    t.push_back({u, u1, l});
    t.push_back({u1, l, l1});
  }
  return from_triples(12, t);
}

SimplicialComplex flag9() {
  return from_triples(9, {{1, 2, 5}, {1, 2, 8}, {1, 4, 8}, {2, 3, 6}, {2, 5, 6}, {3, 4, 7}, {3, 6, 7}, {4, 7, 8},
                          {5, 6, 9}, {6, 7, 9}, {7, 8, 9}});
}

SimplicialComplex torus7() {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    t.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return from_triples(7, t);
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  SimplicialComplex parse() {
    SimplicialComplex K = expression();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    return K;
  }

 private:
  struct Arg {
    bool is_number = false;
    int number = 0;
    SimplicialComplex complex;
  };

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::unknown_name, "zoo expression '" + text_ + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(const std::string& token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // ASCII digits or Unicode superscript digits.
  std::optional<int> number() {
    skip_space();
    static const char* superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    int value = 0;
    bool any = false;
    while (pos_ < text_.size()) {
      if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_++] - '0');
        any = true;
        continue;
      }
      bool matched = false;
      for (int d = 0; d < 10; ++d) {
        std::string s = superscripts[d];
        if (text_.compare(pos_, s.size(), s) == 0) {
          value = value * 10 + d;
          pos_ += s.size();
          matched = any = true;
          break;
        }
      }
      if (!matched) break;
    }
    if (!any) return std::nullopt;
    return value;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Arg argument() {
    std::size_t save = pos_;
    if (auto n = number()) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ')') return Arg{true, *n, {}};
    }
    pos_ = save;
    return Arg{false, 0, expression()};
  }

  std::vector<Arg> arguments() {
    std::vector<Arg> args;
    if (!consume("(")) return args;
    if (consume(")")) return args;
    do {
      args.push_back(argument());
    } while (consume(","));
    if (!consume(")")) error("expected ')'");
    return args;
  }

  static int want_number(const std::vector<Arg>& args, const std::string& name) {
    if (args.size() != 1 || !args[0].is_number)
      fail(ErrorCode::invalid_argument, name + " expects one integer argument");
    return args[0].number;
  }

  static std::vector<SimplicialComplex> want_complexes(const std::vector<Arg>& args, const std::string& name,
                                                       std::size_t min_count) {
    std::vector<SimplicialComplex> out;
    for (const auto& a : args) {
      if (a.is_number) fail(ErrorCode::invalid_argument, name + " expects complexes");
      out.push_back(a.complex);
    }
    if (out.size() < min_count) fail(ErrorCode::invalid_argument, name + " expects more arguments");
    return out;
  }

  SimplicialComplex expression() {
    if (consume("∂Δ")) {
      auto n = number();
      if (!n) error("expected dimension after ∂Δ");
      return boundary_simplex(*n);
    }
    if (consume("Δ")) {
      auto n = number();
      if (!n) error("expected dimension after Δ");
      return simplex(*n);
    }
    std::string name = identifier();
    if (name.empty()) error("expected a name");
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    // Names carrying a trailing size: B7, T4, O6, I12.
    if (name == "B" || name == "T" || name == "O" || name == "I" || name == "C" || name == "D") {
      auto n = number();
      if (!n) error("expected a size after " + name);
      if (name == "B") return bipyramid(*n);
      if (name == "T" && *n == 4) return boundary_simplex(3);
      if (name == "O" && *n == 6) return octahedron();
      if (name == "I" && *n == 12) return icosahedron();
      if ((name == "C" && *n == 8) || (name == "D" && *n == 20))
        fail(ErrorCode::invalid_argument, name + std::to_string(*n) + " is not simplicial; see polyhedron()");
      error("unknown polytope " + name + std::to_string(*n));
    }
    if (lower == "flag") {
      auto n = number();
      if (n && *n == 9) return flag9();
      error("unknown fixture");
    }
    if (lower == "torus") {
      auto n = number();
      if (n && *n == 7) return torus7();
      error("unknown fixture");
    }
    if (lower == "triangle") return polygon(3);
    if (lower == "square") return polygon(4);
    if (lower == "pentagon") return polygon(5);
    if (lower == "hexagon") return polygon(6);
    if (lower == "point") return simplex(0);
    if (lower == "empty") {
      auto args = arguments();
      return SimplicialComplex::empty(args.empty() ? 0 : want_number(args, name));
    }
    auto args = arguments();
    if (lower == "simplex") return simplex(want_number(args, name));
    if (lower == "boundary_simplex" || lower == "bd") return boundary_simplex(want_number(args, name));
    if (lower == "polygon") return polygon(want_number(args, name));
    if (lower == "bipyramid") return bipyramid(want_number(args, name));
    if (lower == "cone") return cone(want_complexes(args, name, 1).front());
    if (lower == "suspension" || lower == "suspend") return suspension(want_complexes(args, name, 1).front());
    if (lower == "join") {
      auto parts = want_complexes(args, name, 1);
      SimplicialComplex K = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) K = join(K, parts[i]);
      return K;
    }
    if (lower == "connected_sum" || lower == "csum") {
      auto parts = want_complexes(args, name, 1);
      SimplicialComplex K = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) K = connected_sum(K, parts[i]);
      return K;
    }
    error("unknown name '" + name + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SimplicialComplex zoo(const std::string& expression) { return Parser(expression).parse(); }

std::vector<std::string> zoo_names() {
  return {"simplex(n)", "boundary_simplex(n)", "polygon(n)", "bipyramid(n)", "Bn",     "T4",
          "O6",         "I12",                 "flag9",      "torus7",       "square", "pentagon",
          "join(a,b,...)", "cone(a)",          "suspension(a)", "connected_sum(a,b,...)", "∂Δn"};
}

PolyhedralData dual_polyhedron(const SimplicialComplex& K, const std::string& name) {
  PolyhedralData out;
  out.name = name;
  const auto& tri = K.facets();
  out.vertex_count = static_cast<int>(tri.size());
  out.is_simplicial = true;
  for (int v : K.vertices().labels()) {
    std::vector<int> around;
    for (int i = 0; i < static_cast<int>(tri.size()); ++i)
      if (tri[i].contains(v)) around.push_back(i);
    // Walk the triangles around v through shared edges.
    std::vector<int> cycle{around.front()};
    std::vector<bool> used(around.size(), false);
    used[0] = true;
    while (cycle.size() < around.size()) {
      VertexSet current = tri[cycle.back()];
      bool advanced = false;
      for (std::size_t j = 0; j < around.size(); ++j) {
        if (used[j] || (tri[around[j]] & current).size() != 2) continue;
        used[j] = true;
        cycle.push_back(around[j]);
        advanced = true;
        break;
      }
      if (!advanced) fail(ErrorCode::not_a_sphere, "vertex link is not a cycle");
    }
    for (int& c : cycle) ++c;
    if (cycle.size() != 3) out.is_simplicial = false;
    out.faces.push_back(cycle);
  }
  return out;
}

PolyhedralData polyhedron(const std::string& name) {
  auto from_complex = [&](const SimplicialComplex& K) {
    PolyhedralData out;
    out.name = name;
    out.vertex_count = K.ground_size();
    out.is_simplicial = true;
    for (VertexSet f : K.facets()) out.faces.push_back(f.labels());
    return out;
  };
  if (name == "T4") return from_complex(boundary_simplex(3));
  if (name == "O6") return from_complex(octahedron());
  if (name == "I12") return from_complex(icosahedron());
  if (name == "C8") return dual_polyhedron(octahedron(), name);
  if (name == "D20") return dual_polyhedron(icosahedron(), name);
  fail(ErrorCode::unknown_name, "unknown polyhedron '" + name + "'");
}

}  // namespace hochster
