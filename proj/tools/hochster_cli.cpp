// Batch front end for the hochster library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hochster/constructions.hpp"
#include "hochster/duality.hpp"
#include "hochster/flag.hpp"
#include "hochster/report.hpp"
#include "hochster/scx_io.hpp"
#include "hochster/sphere_decomposition.hpp"
#include "hochster/verification.hpp"
#include "hochster/zoo.hpp"

using namespace hochster;
using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verdict_false = 1, usage = 2, input_error = 3 };

struct Config {
  std::string coeff;  // empty: per-command default
  bool json = false;
  int jobs = 0;
  bool force = false;
  std::string output;
};

struct Inputs {
  std::vector<std::string> files;
  std::string which;
  std::string op;
  std::string simplex;
  std::string facets;
  std::string match;
};

SimplicialComplex load(const std::string& spec, const Config& cfg, bool enumerates_subsets) {
  SimplicialComplex K = spec.rfind("zoo:", 0) == 0 ? zoo(spec.substr(4)) : load_scx(spec);
  if (enumerates_subsets && K.ground_size() > 24 && !cfg.force)
    fail(ErrorCode::unsupported_size, "m = " + std::to_string(K.ground_size()) + " > 24 needs --force");
  return K;
}

Coefficients coefficients(const Config& cfg, const char* fallback) {
  return Coefficients::parse(cfg.coeff.empty() ? fallback : cfg.coeff);
}

VertexSet parse_simplex(const std::string& text) {
  std::vector<int> labels;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_argument, "bad vertex label '" + item + "' in '" + text + "'");
    }
  }
  if (labels.empty()) fail(ErrorCode::invalid_argument, "empty simplex");
  return VertexSet::from_labels(labels);
}

// "a:b,c:d" with a ∈ f2, b ∈ f1.
FacetMatching parse_matching(const std::string& text) {
  FacetMatching out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::invalid_argument, "matching entries look like 4:1");
    out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return out;
}

std::optional<GluingChoice> parse_gluing(const Inputs& in) {
  if (in.facets.empty()) {
    if (!in.match.empty()) fail(ErrorCode::invalid_argument, "--match needs --facets");
    return std::nullopt;
  }
  const auto semi = in.facets.find_first_of(";/");
  if (semi == std::string::npos) fail(ErrorCode::invalid_argument, "--facets looks like 1,2,3;1,2,4 or 1,2,3/1,2,4");
  GluingChoice g;
  g.f1 = parse_simplex(in.facets.substr(0, semi));
  g.f2 = parse_simplex(in.facets.substr(semi + 1));
  g.matching = in.match.empty() ? order_preserving_matching(g.f2, g.f1) : parse_matching(in.match);
  return g;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

ordered_json parse_json(const std::string& s) { return ordered_json::parse(s); }

ordered_json terms_json(const std::vector<SphereProductTerm>& terms) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b, c] : terms) out.push_back({a, b, c});
  return out;
}

std::string terms_text(const std::vector<SphereProductTerm>& terms) {
  if (terms.empty()) return "(none)";
  std::string s;
  for (const auto& [a, b, c] : terms)
    s += (s.empty() ? "" : " # ") + (c == 1 ? "" : std::to_string(c) + "·") + "S^" + std::to_string(a) + "×S^" +
         std::to_string(b);
  return s;
}

// --- subcommands -------------------------------------------------------------

int cmd_info(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto K = load(in.files.at(0), cfg, false);
  const auto f = f_vector(K);
  const bool sphere2 = K.dimension() == 2 && is_two_sphere(K);
  const bool homology_sphere = is_gorenstein_star(K, Coefficients::rationals()).value;
  const char* sphere = sphere2 ? "2-sphere" : homology_sphere ? "rational homology sphere" : "not a sphere";
  std::vector<int> fv(f.begin(), f.end());
  if (cfg.json) {
    out << ordered_json{{"m", K.ground_size()},
                        {"vertices", K.vertex_count()},
                        {"ghost_vertices", K.ghost_vertices().labels()},
                        {"dim", K.dimension()},
                        {"facets", K.facets().size()},
                        {"f_vector", fv},
                        {"euler_characteristic", euler_characteristic(K)},
                        {"pure", is_pure(K)},
                        {"flag", is_flag(K)},
                        {"missing_faces", missing_faces(K).size()},
                        {"closed_pseudomanifold", is_closed_pseudomanifold(K)},
                        {"two_sphere", sphere2},
                        {"rational_homology_sphere", homology_sphere},
                        {"cone", is_cone(K)}}
               .dump(2)
        << '\n';
    return ok;
  }
  out << "m=" << K.ground_size() << " vertices=" << K.vertex_count() << " ghosts=" << K.ghost_vertices().size()
      << " dim=" << K.dimension() << " facets=" << K.facets().size() << '\n'
      << "f-vector: " << join_ints(fv) << "  euler=" << euler_characteristic(K) << '\n'
      << "pure=" << (is_pure(K) ? "true" : "false") << " flag=" << (is_flag(K) ? "true" : "false")
      << " missing_faces=" << missing_faces(K).size() << '\n'
      << "closed_pseudomanifold=" << (is_closed_pseudomanifold(K) ? "true" : "false")
      << " sphere=" << sphere << " cone=" << (is_cone(K) ? "true" : "false") << '\n';
  return ok;
}

int cmd_betti(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto K = load(in.files.at(0), cfg, true);
  const auto coeff = coefficients(cfg, "z");
  if (cfg.json) {
    out << complex_report_json(K, coeff, cfg.jobs) << '\n';
    return ok;
  }
  const auto b = bigraded_betti(K, coeff, cfg.jobs);
  const auto torsion = b.torsion();
  out << "degree  rank  torsion   (coefficients " << coeff.to_string() << ")\n";
  for (auto [p, r] : b.betti()) {
    out << std::setw(6) << p << std::setw(6) << r;
    if (auto it = torsion.find(p); it != torsion.end())
      for (const auto& t : it->second) out << "  Z/" << t.get_str();
    out << '\n';
  }
  for (const auto& [p, factors] : torsion)
    if (!b.betti().count(p)) {
      out << std::setw(6) << p << std::setw(6) << 0;
      for (const auto& t : factors) out << "  Z/" << t.get_str();
      out << '\n';
    }
  return ok;
}

int cmd_bigraded(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto K = load(in.files.at(0), cfg, true);
  const auto coeff = coefficients(cfg, "z");
  const auto b = bigraded_betti(K, coeff, cfg.jobs);
  if (cfg.json) {
    out << bigraded_json(b) << '\n';
    return ok;
  }
  out << "J  d  rank  degree  tor(-i,2|J|)\n";
  for (const auto& e : b.entries) {
    out << e.J.to_string() << "  " << e.d << "  " << e.rank << "  " << e.total_degree() << "  (" << -e.tor_i() << ","
        << 2 * e.J.size() << ")";
    for (const auto& t : e.torsion) out << "  Z/" << t.get_str();
    out << '\n';
  }
  return ok;
}

template <class R>
int ring_over(const R& F, const SimplicialComplex& K, const Config& cfg, std::ostream& out) {
  const HochsterRing<R> H(K, F, cfg.jobs);
  const auto A = H.to_algebra(cfg.jobs);
  if (cfg.json) {
    ordered_json j = parse_json(algebra_to_json(A));
    if constexpr (R::is_field) j["fingerprint"] = parse_json(fingerprint_json(H.fingerprint(false, cfg.jobs)));
    out << j.dump(2) << '\n';
    return ok;
  }
  out << "basis (" << A.dimension() << " elements over " << F.name() << "):\n";
  for (int i = 0; i < A.dimension(); ++i) out << "  e" << i << "  deg " << A.degree(i) << "  " << A.basis(i).label << '\n';
  out << "nonzero products:\n";
  for (int i = 0; i < A.dimension(); ++i)
    for (const auto& [j, v] : A.row(i)) {
      out << "  e" << i << " * e" << j << " =";
      for (const auto& [k, c] : v) out << ' ' << F.format(c) << "·e" << k;
      out << '\n';
    }
  if constexpr (R::is_field)
    out << "fingerprint: " << H.fingerprint(false, cfg.jobs).to_string() << '\n';
  else
    out << "fingerprint: " << fingerprint(A).to_string() << '\n';
  return ok;
}

int cmd_ring(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto K = load(in.files.at(0), cfg, true);
  return dispatch(coefficients(cfg, "q"), [&](const auto& F) { return ring_over(F, K, cfg, out); });
}

int cmd_check(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto K = load(in.files.at(0), cfg, in.which != "flag" && in.which != "lbc");
  const auto coeff = coefficients(cfg, "q");
  bool verdict = false;
  ordered_json detail = ordered_json::object();
  std::string text;
  if (in.which == "gorenstein") {
    const auto g = is_gorenstein_star(K, coeff);
    const bool cross = cross_validate_gorenstein(K, coeff, cfg.jobs);
    verdict = g.value;
    detail["cross_validated"] = cross == verdict;
    if (g.witness) detail["witness"] = g.witness->labels();
    if (!g.reason.empty()) detail["reason"] = g.reason;
    text = g.reason;
  } else if (in.which == "flag") {
    verdict = is_flag(K);
    ordered_json mf = ordered_json::array();
    for (VertexSet f : missing_faces(K))
      if (f.size() > 2) mf.push_back(f.labels());
    detail["non_edge_missing_faces"] = mf;
    detail["cross_validated"] = is_flag_by_cliques(K) == verdict;
  } else if (in.which == "pairing") {
    try {
      verdict = dispatch_field(coeff, [&](const auto& F) {
        return poincare_pairing_check(HochsterRing<std::decay_t<decltype(F)>>(K, F, cfg.jobs));
      });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_poincare_candidate) throw;
      detail["reason"] = e.what();
      text = e.what();
    }
  } else if (in.which == "lbc") {
    const auto r = lbc_report(K);
    verdict = r.holds;
    detail = {{"applicable", r.applicable}, {"edges", r.edges}, {"bound", r.bound}, {"tight", r.tight}};
    text = r.applicable ? "edges " + std::to_string(r.edges) + ", bound " + std::to_string(r.bound) +
                              (r.tight ? ", tight" : "")
                        : "not a closed pseudomanifold";
  } else if (in.which == "generation") {
    const auto r = dispatch_field(coeff, [&](const auto& F) {
      return generation_by_degree_one(HochsterRing<std::decay_t<decltype(F)>>(K, F, cfg.jobs));
    });
    verdict = r.degree_one_generated;
    detail["degree_three_generated"] = r.h3_generated;
    if (r.failing_subset) {
      detail["failing_subset"] = r.failing_subset->labels();
      detail["products_rank"] = r.failing_rank;
      detail["dimension"] = r.failing_dimension;
      const auto sweep = partition_sweep(K, cfg.jobs);
      detail["divisions"] = sweep.divisions;
      detail["divisions_with_both_sides_disconnected"] = sweep.both_connected_components;
      text = "H~^1 on " + r.failing_subset->to_string() + " has dimension " + std::to_string(r.failing_dimension) +
             " but products reach rank " + std::to_string(r.failing_rank) + "; " + std::to_string(sweep.divisions) +
             " divisions checked, " + std::to_string(sweep.both_connected_components) +
             " with H~^0 nonzero on both sides";
    }
  } else if (in.which == "h3") {
    const long long r = rank_h3_invariant(K);
    verdict = true;
    detail["rank"] = r;
    text = "rank H^3 = " + std::to_string(r);
  } else {
    fail(ErrorCode::invalid_argument, "unknown check '" + in.which + "'");
  }
  if (cfg.json) {
    out << ordered_json{{"check", in.which}, {"verdict", verdict}, {"detail", detail}}.dump(2) << '\n';
  } else {
    out << in.which << ": " << (verdict ? "true" : "false");
    if (!text.empty()) out << "  (" << text << ")";
    out << '\n';
  }
  return verdict ? ok : verdict_false;
}

int cmd_op(const Inputs& in, const Config& cfg, std::ostream& out) {
  auto arg = [&](std::size_t i) { return load(in.files.at(i), cfg, false); };
  SimplicialComplex result;
  if (in.op == "connect-sum") {
    const auto g = parse_gluing(in);
    result = g ? connected_sum(arg(0), g->f1, arg(1), g->f2, g->matching) : connected_sum(arg(0), arg(1));
  } else if (in.op == "stellar") {
    if (in.simplex.empty()) fail(ErrorCode::invalid_argument, "stellar needs --simplex");
    result = stellar_subdivision(arg(0), parse_simplex(in.simplex));
  } else if (in.op == "join") {
    result = join(arg(0), arg(1));
  } else if (in.op == "cone") {
    result = cone(arg(0));
  } else if (in.op == "suspend") {
    result = suspension(arg(0));
  } else {
    fail(ErrorCode::invalid_argument, "unknown operation '" + in.op + "'");
  }
  write_scx(out, result);
  return ok;
}

int cmd_verify(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto coeff = coefficients(cfg, "q");
  if (!coeff.is_field()) fail(ErrorCode::invalid_argument, "verification compares rings over a field");
  VerifyStatus status = VerifyStatus::skipped;
  ordered_json j;
  std::ostringstream text;
  if (in.which == "thm4") {
    const auto r = verify_thm4(load(in.files.at(0), cfg, true), load(in.files.at(1), cfg, true), parse_gluing(in), coeff,
                               cfg.jobs);
    status = r.status;
    j = {{"m1", r.m1}, {"m2", r.m2}, {"n", r.n}, {"sphere_terms", terms_json(r.sphere_terms)}};
    text << "m1=" << r.m1 << " m2=" << r.m2 << " n=" << r.n << "\nM = " << terms_text(r.sphere_terms) << '\n';
    if (status != VerifyStatus::skipped) {
      j["direct"] = parse_json(fingerprint_json(r.direct));
      j["formula"] = parse_json(fingerprint_json(r.formula));
      text << "direct:  " << r.direct.to_string() << "\nformula: " << r.formula.to_string() << '\n';
    }
    if (!r.reason.empty()) j["reason"] = r.reason, text << r.reason << '\n';
  } else if (in.which == "thm5") {
    if (in.simplex.empty()) fail(ErrorCode::invalid_argument, "thm5 needs --simplex");
    const auto r = verify_thm5(load(in.files.at(0), cfg, true), parse_simplex(in.simplex), coeff, cfg.jobs);
    status = r.status;
    std::vector<int> f(r.f.begin(), r.f.end());
    j = {{"m", r.m}, {"n", r.n}, {"s", r.s}, {"certified_by", to_string(r.certified_by)}, {"f", f},
         {"sphere_terms", terms_json(r.sphere_terms)}};
    text << "m=" << r.m << " n=" << r.n << " s=" << r.s << " hypothesis: " << to_string(r.certified_by) << '\n'
         << "f = " << join_ints(f) << "\nY = " << terms_text(r.sphere_terms) << '\n';
    if (status != VerifyStatus::skipped) {
      j["direct"] = parse_json(fingerprint_json(r.direct));
      j["formula"] = parse_json(fingerprint_json(r.formula));
      text << "direct:  " << r.direct.to_string() << "\nformula: " << r.formula.to_string() << '\n';
    }
    if (r.example_terms) {
      j["example_terms"] = terms_json(*r.example_terms);
      j["example_match"] = *r.example_match;
      text << "worked example: " << terms_text(*r.example_terms) << (*r.example_match ? "  (matches)" : "  (differs)")
           << '\n';
    }
    if (!r.reason.empty()) j["reason"] = r.reason, text << r.reason << '\n';
  } else if (in.which == "simplex-sum") {
    const auto r = verify_boundary_simplex_sum(load(in.files.at(0), cfg, true), coeff, cfg.jobs);
    status = r.pass ? VerifyStatus::pass : VerifyStatus::fail;
    j = {{"via_thm4", parse_json(fingerprint_json(r.via_thm4))},
         {"via_gyration", parse_json(fingerprint_json(r.via_gyration))},
         {"direct", parse_json(fingerprint_json(r.direct))}};
    text << "thm4:     " << r.via_thm4.to_string() << "\ngyration: " << r.via_gyration.to_string()
         << "\ndirect:   " << r.direct.to_string() << '\n';
  } else {
    fail(ErrorCode::invalid_argument, "unknown verification '" + in.which + "'");
  }
  if (cfg.json) {
    ordered_json head{{"verify", in.which}, {"status", to_string(status)}};
    head.update(j);
    out << head.dump(2) << '\n';
  } else {
    out << text.str() << to_string(status) << '\n';
  }
  return status == VerifyStatus::fail ? verdict_false : ok;
}

ordered_json decomposition_json(const DecompositionReport& r) {
  ordered_json factors = ordered_json::array();
  for (std::size_t i = 0; i < r.factors.size(); ++i)
    factors.push_back({{"vertices", r.factors[i].vertex_count()},
                       {"facets", r.factors[i].facets().size()},
                       {"fingerprint_mod_top", parse_json(fingerprint_json(r.fingerprints[i]))}});
  return {{"factors", factors}, {"prime", r.prime}};
}

void decomposition_text(const DecompositionReport& r, std::ostream& out) {
  out << r.factors.size() << " factor(s)" << (r.prime ? ", prime" : "") << '\n';
  for (std::size_t i = 0; i < r.factors.size(); ++i)
    out << "  [" << i + 1 << "] vertices=" << r.factors[i].vertex_count() << " facets=" << r.factors[i].facets().size()
        << "  " << r.fingerprints[i].to_string() << '\n';
}

int cmd_decompose(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto r = decompose_sphere(load(in.files.at(0), cfg, true), cfg.jobs);
  if (cfg.json)
    out << decomposition_json(r).dump(2) << '\n';
  else
    decomposition_text(r, out);
  return ok;
}

int cmd_compare(const Inputs& in, const Config& cfg, std::ostream& out) {
  const auto r = compare_spheres(load(in.files.at(0), cfg, true), load(in.files.at(1), cfg, true), cfg.jobs);
  const bool match = r.same_count && r.matching.has_value();
  if (cfg.json) {
    ordered_json j{{"a", decomposition_json(r.a)},
                   {"b", decomposition_json(r.b)},
                   {"same_count", r.same_count},
                   {"match", match},
                   {"ring_fingerprints_equal", r.ring_fingerprints_equal}};
    if (r.matching) j["permutation"] = *r.matching;
    out << j.dump(2) << '\n';
  } else {
    out << "A: ";
    decomposition_text(r.a, out);
    out << "B: ";
    decomposition_text(r.b, out);
    out << "factor counts " << (r.same_count ? "agree" : "differ") << "; matching "
        << (match ? "found: " + join_ints(*r.matching) : std::string("none")) << "; whole rings "
        << (r.ring_fingerprints_equal ? "agree" : "differ") << '\n';
  }
  return match ? ok : verdict_false;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return usage;
    case ErrorCode::unknown_name:
    case ErrorCode::parse_error:
    case ErrorCode::invalid_vertex:
    case ErrorCode::invalid_complex:
    case ErrorCode::not_a_simplex:
    case ErrorCode::not_found:
    case ErrorCode::unsupported_size:
    case ErrorCode::invalid_connected_sum:
    case ErrorCode::not_a_sphere:
    case ErrorCode::not_a_pseudomanifold:
    case ErrorCode::no_fundamental_class:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::torsion_unsupported:
    case ErrorCode::not_poincare_candidate:
      return input_error;
    default: return verdict_false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment-angle complex cohomology and ring verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Config cfg;
  Inputs in;
  app.add_option("--coeff", cfg.coeff, "Coefficients: z, q or fp:P");
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default: $HOCHSTER_JOBS or hardware)");
  app.add_flag("--force", cfg.force, "Allow ground sets larger than 24");
  app.add_option("-o,--output", cfg.output, "Write output to a file");

  auto input_help = "Complex: a .scx path or zoo:NAME";
  auto* info = app.add_subcommand("info", "f-vector and combinatorial flags");
  info->add_option("input", in.files, input_help)->required()->expected(1);
  auto* betti = app.add_subcommand("betti", "Betti numbers and torsion of the moment-angle complex");
  betti->add_option("input", in.files, input_help)->required()->expected(1);
  auto* bigraded = app.add_subcommand("bigraded", "Contributions of full subcomplexes");
  bigraded->add_option("input", in.files, input_help)->required()->expected(1);
  auto* ring = app.add_subcommand("ring", "Multiplication table and fingerprint");
  ring->add_option("input", in.files, input_help)->required()->expected(1);
  auto* check = app.add_subcommand("check", "gorenstein | flag | pairing | lbc | generation | h3");
  check->add_option("which", in.which)->required();
  check->add_option("input", in.files, input_help)->required()->expected(1);
  auto* op = app.add_subcommand("op", "connect-sum | stellar | join | cone | suspend; writes .scx");
  op->add_option("operation", in.op)->required();
  op->add_option("inputs", in.files, "One or two complexes")->required()->expected(1, 2);
  op->add_option("--simplex", in.simplex, "Simplex as comma-separated labels");
  op->add_option("--facets", in.facets, "Glued facets 'f1;f2' or 'f1/f2', e.g. 1,2,3/1,2,3");
  op->add_option("--match", in.match, "Bijection f2 → f1 as 'a:b,...'");
  auto* verify = app.add_subcommand("verify", "thm4 A B | thm5 K --simplex σ | simplex-sum K");
  verify->add_option("which", in.which)->required();
  verify->add_option("inputs", in.files, "One or two complexes")->required()->expected(1, 2);
  verify->add_option("--simplex", in.simplex, "Simplex as comma-separated labels");
  verify->add_option("--facets", in.facets, "Glued facets 'f1;f2' or 'f1/f2'");
  verify->add_option("--match", in.match, "Bijection f2 → f1 as 'a:b,...'");
  auto* decompose = app.add_subcommand("decompose", "Irreducible factors of a 2-sphere");
  decompose->add_option("input", in.files, input_help)->required()->expected(1);
  auto* compare = app.add_subcommand("compare", "Match irreducible factors of two 2-spheres");
  compare->add_option("inputs", in.files, "Two complexes")->required()->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }
  if (cfg.jobs <= 0) cfg.jobs = default_jobs();

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return input_error;
    }
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;
  try {
    if (*info) return cmd_info(in, cfg, out);
    if (*betti) return cmd_betti(in, cfg, out);
    if (*bigraded) return cmd_bigraded(in, cfg, out);
    if (*ring) return cmd_ring(in, cfg, out);
    if (*check) return cmd_check(in, cfg, out);
    if (*op) return cmd_op(in, cfg, out);
    if (*verify) return cmd_verify(in, cfg, out);
    if (*decompose) return cmd_decompose(in, cfg, out);
    if (*compare) return cmd_compare(in, cfg, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::out_of_range&) {
    std::cerr << "error: missing input argument\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
