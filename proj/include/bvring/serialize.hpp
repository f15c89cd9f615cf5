#pragma once

// Stable JSON encodings. Keys keep insertion order and rationals are strings
// "p/q" with an explicit denominator, so identical inputs give identical bytes.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "bvring/checks.hpp"
#include "bvring/linalg.hpp"
#include "bvring/ring.hpp"
#include "bvring/spectral.hpp"

namespace bvring {

using Json = nlohmann::ordered_json;

inline Json monomial_json(const Monomial& m) {
  Json tau = Json::array(), l = Json::array(), o = Json::array();
  for (auto [a, b] : m.tau) tau.push_back({a, b});
  for (auto [j, s] : m.l) l.push_back({s, j});
  for (int k : m.o) o.push_back(k);
  Json j;
  j["tau_pairs"] = std::move(tau);
  j["l_factors"] = std::move(l);
  j["o_indices"] = std::move(o);
  return j;
}

/// {"n":…, "terms":[{"coef":"p/q","tau_pairs":…,"l_factors":[[s,i],…],"o_indices":…}]}
inline Json element_json(const RingElement& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json t;
    t["coef"] = to_pq_string(c);
    const Json mono = monomial_json(m);
    for (const auto& [k, v] : mono.items()) t[k] = v;
    terms.push_back(std::move(t));
  }
  Json j;
  j["n"] = a.params().n();
  j["terms"] = std::move(terms);
  return j;
}

/// Inverse of element_json. The "n" field must match the parameters.
inline RingElement element_from_json(const Json& j, const RingParams& p) {
  if (j.at("n").get<int>() != p.n()) throw std::invalid_argument("element JSON has a different n");
  RingElement::Terms terms;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& pr : t.at("tau_pairs")) m.tau.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
    for (const auto& lf : t.at("l_factors")) m.l.emplace_back(lf.at(1).get<int>(), lf.at(0).get<int>());
    for (const auto& k : t.at("o_indices")) m.o.push_back(k.get<int>());
    m.canonicalize();
    RingElement::validate(p, m);
    terms.add_term(m, parse_rational(t.at("coef").get<std::string>()));
  }
  return RingElement(p, std::move(terms));
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_pq_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Evaluated Gram matrix: plain JSON integers when every entry is integral
/// (always the case for integer x), "p/q" strings otherwise.
inline Json gram_json(const GramMatrix& g) {
  const Matrix m = g.evaluated();
  bool integral = true;
  for (std::size_t i = 0; i < m.rows() && integral; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)) || !m(i, j).get_num().fits_slong_p()) {
        integral = false;
        break;
      }
    }
  }
  if (!integral) return matrix_json(m);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_num().get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json matching_json(const PerfectMatching& pm) {
  Json j = Json::array();
  for (auto [a, b] : pm.pairs()) j.push_back({a, b});
  return j;
}

inline Json tau_vector_json(const TauVector& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v) {
    Json t;
    t["coef"] = to_pq_string(c);
    t["tau_pairs"] = matching_json(m);
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Json report_json(const KernelGenReport& r) {
  Json j;
  j["kernel_dim"] = r.kernel_dim;
  j["slice_rank"] = r.slice_rank;
  j["equal"] = r.equal;
  return j;
}

inline Json report_json(const PerfectPairingReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["rank"] = r.rank;
  j["kernel_dim"] = r.kernel_dim;
  j["slice_size"] = r.slice_size;
  j["slice_rank"] = r.slice_rank;
  j["kernel_in_ideal"] = r.kernel_in_ideal;
  j["ideal_in_kernel"] = r.ideal_in_kernel;
  j["passed"] = r.passed();
  return j;
}

inline Json report_json(const RelationReport& r) {
  Json j;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

inline Json report_json(const BlockStructureReport& r) {
  Json j;
  j["pairs_checked"] = r.pairs_checked;
  j["nonzero"] = r.nonzero;
  j["support_exceptions"] = r.support_exceptions;
  j["value_mismatches"] = r.value_mismatches;
  j["passed"] = r.passed();
  return j;
}

inline Json report_json(const KimuraIdentityReport& r) {
  Json j;
  j["x"] = r.x;
  j["terms"] = r.terms;
  j["equal"] = r.equal;
  return j;
}

inline Json block_json(const SpechtBlock& b) {
  Json j;
  j["shape"] = b.shape.parts();
  j["dim"] = b.hook_dim;
  j["standard_tableaux"] = b.tableaux;
  j["phi_rank"] = b.phi_rank;
  j["eigenvalue"] = b.eigenvalue ? Json(to_pq_string(*b.eigenvalue)) : Json(nullptr);
  j["predicted_zero"] = b.predicted_zero;
  j["consistent"] = b.consistent();
  return j;
}

inline Json report_json(const EigenReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(block_json(b));
  Json j;
  j["d"] = r.d;
  j["x"] = to_pq_string(r.x);
  j["blocks"] = std::move(blocks);
  j["kernel_dim"] = r.kernel_dim;
  j["predicted_dim"] = r.predicted_dim;
  j["passed"] = r.passed();
  return j;
}

}  // namespace bvring
