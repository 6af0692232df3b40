#include "hochster/report.hpp"

#include <json.hpp>

#include "hochster/duality.hpp"

namespace hochster {

using nlohmann::ordered_json;

namespace {

ordered_json labels_json(VertexSet s) { return s.labels(); }

ordered_json bigraded_value(const BigradedBetti& b) {
  ordered_json rows = ordered_json::array();
  for (const auto& e : b.entries) {
    ordered_json row{{"J", labels_json(e.J)}, {"d", e.d}, {"rank", e.rank}};
    if (!e.torsion.empty()) {
      ordered_json t = ordered_json::array();
      for (const auto& f : e.torsion) t.push_back(f.get_str());
      row["torsion"] = t;
    }
    row["degree"] = e.total_degree();
    row["tor"] = {-e.tor_i(), 2 * e.J.size()};
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json fingerprint_value(const RingFingerprint& fp) {
  ordered_json hilbert = ordered_json::object(), mult = ordered_json::array(), dec = ordered_json::object();
  for (auto [d, n] : fp.hilbert) hilbert[std::to_string(d)] = n;
  for (const auto& [key, r] : fp.mult_rank) mult.push_back({key.first, key.second, r});
  for (auto [d, n] : fp.decomposable) dec[std::to_string(d)] = n;
  return {{"hilbert", hilbert}, {"mult_rank", mult}, {"decomposable", dec}};
}

template <class R>
std::string algebra_json(const GradedAlgebra<R>& A) {
  const R& F = A.field();
  ordered_json basis = ordered_json::array(), products = ordered_json::array();
  for (const auto& e : A.basis()) basis.push_back({{"deg", e.degree}, {"label", e.label}});
  for (int i = 0; i < A.dimension(); ++i)
    for (const auto& [j, v] : A.row(i)) {
      ordered_json coeffs = ordered_json::array();
      for (const auto& [k, c] : v) coeffs.push_back({k, F.format(c)});
      products.push_back({i, j, coeffs});
    }
  return ordered_json{{"field", F.name()}, {"basis", basis}, {"products", products}}.dump(2);
}

}  // namespace

std::string complex_report_json(const SimplicialComplex& K, const Coefficients& coeff, int jobs) {
  const BigradedBetti b = bigraded_betti(K, coeff, jobs);
  ordered_json torsion = ordered_json::object();
  for (const auto& [p, factors] : b.torsion()) {
    ordered_json t = ordered_json::array();
    for (const auto& f : factors) t.push_back(f.get_str());
    torsion[std::to_string(p)] = t;
  }
  bool pairing = false;
  try {
    pairing = poincare_pairing_check(HochsterRing<Rationals>(K, Rationals{}, jobs));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_poincare_candidate) throw;
  }
  const LbcReport lbc = lbc_report(K);
  ordered_json checks{{"gorenstein", is_gorenstein_star(K, coeff).value},
                      {"flag", is_flag(K)},
                      {"poincare_pairing", pairing},
                      {"lbc", lbc.applicable ? ordered_json(lbc.holds) : ordered_json(nullptr)}};
  ordered_json out{{"m", K.ground_size()},
                   {"dim", K.dimension()},
                   {"coefficients", coeff.to_string()},
                   {"betti", b.betti_vector()},
                   {"torsion", torsion},
                   {"bigraded", bigraded_value(b)},
                   {"checks", checks}};
  return out.dump(2);
}

std::string bigraded_json(const BigradedBetti& b) { return bigraded_value(b).dump(2); }
std::string fingerprint_json(const RingFingerprint& fp) { return fingerprint_value(fp).dump(2); }

std::string algebra_to_json(const GradedAlgebra<Rationals>& A) { return algebra_json(A); }
std::string algebra_to_json(const GradedAlgebra<PrimeField>& A) { return algebra_json(A); }
std::string algebra_to_json(const GradedAlgebra<Integers>& A) { return algebra_json(A); }

GradedAlgebra<Rationals> algebra_from_json(const std::string& text) {
  GradedAlgebra<Rationals> A;
  try {
    const auto j = ordered_json::parse(text);
    for (const auto& e : j.at("basis")) A.add_basis(e.at("deg").get<int>(), e.value("label", std::string{}));
    std::vector<std::tuple<int, int, SparseVec<Rationals>>> entries;
    for (const auto& p : j.at("products")) {
      SparseVec<Rationals> v;
      for (const auto& c : p.at(2)) v.emplace_back(c.at(0).get<int>(), Rational(mpq_class(c.at(1).get<std::string>())));
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      entries.emplace_back(p.at(0).get<int>(), p.at(1).get<int>(), std::move(v));
    }
    for (auto& [i, j2, v] : entries) {
      if (i < 0 || j2 < 0 || i >= A.dimension() || j2 >= A.dimension())
        fail(ErrorCode::parse_error, "product index out of range");
      for (const auto& [k, c] : v)
        if (k < 0 || k >= A.dimension()) fail(ErrorCode::parse_error, "coefficient index out of range");
      A.set_product(i, j2, std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("algebra JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(ErrorCode::parse_error, std::string("algebra JSON coefficient: ") + e.what());
  }
  return A;
}

}  // namespace hochster
