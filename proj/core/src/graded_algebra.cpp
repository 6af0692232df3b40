#include "hochster/graded_algebra.hpp"

#include <sstream>

namespace hochster {

std::string RingFingerprint::to_string() const {
  std::ostringstream out;
  out << "hilbert{";
  const char* sep = "";
  for (auto [d, n] : hilbert) {
    out << sep << d << ':' << n;
    sep = ", ";
  }
  out << "} mult{";
  sep = "";
  for (const auto& [key, r] : mult_rank) {
    out << sep << '(' << key.first << ',' << key.second << "):" << r;
    sep = ", ";
  }
  out << "} decomposable{";
  sep = "";
  for (auto [d, n] : decomposable) {
    out << sep << d << ':' << n;
    sep = ", ";
  }
  out << '}';
  return out.str();
}

GradedAlgebra<Rationals> to_rationals(const GradedAlgebra<Integers>& A) {
  GradedAlgebra<Rationals> Q;
  for (const auto& e : A.basis()) Q.add_basis(e.degree, e.label);
  for (int i = 0; i < A.dimension(); ++i)
    for (const auto& [j, v] : A.row(i)) {
      SparseVec<Rationals> w;
      w.reserve(v.size());
      for (const auto& [k, c] : v) w.emplace_back(k, Rational(mpq_class(c)));
      Q.set_product(i, j, std::move(w));
    }
  return Q;
}

RingFingerprint fingerprint(const GradedAlgebra<Integers>& A) { return fingerprint(to_rationals(A)); }

}  // namespace hochster
