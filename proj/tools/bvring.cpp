// bvring: command-line front end for the tautological ring engine.
//
// Exit status: 0 success / check passed, 1 check failed, 2 usage, parse,
// range or resource error. In json mode stdout carries exactly one document.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bvring/bvring.hpp"

namespace {

using namespace bvring;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Flags shared by all subcommands.
struct RunConfig {
  std::optional<int> n;
  std::optional<int> rho;
  std::vector<std::string> degrees;
  std::optional<std::string> x;
  std::optional<int> k3;
  std::optional<int> d;
  std::optional<int> m;
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 20140101;
  int samples = 25;
  bool exponents = false;
  std::string check;
  std::vector<std::string> exprs;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_degrees(const RunConfig& cfg) {
  std::vector<Rational> out;
  for (const auto& item : cfg.degrees) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) out.push_back(parse_rational(tok));
    }
  }
  return out;
}

bool has_ring_flags(const RunConfig& cfg) { return cfg.rho || !cfg.degrees.empty() || cfg.x || cfg.k3; }

/// Resolves --rho/--deg/--x/--k3. x defaults to 22 - rho.
RingParams ring_params(const RunConfig& cfg, int n) {
  auto degrees = parse_degrees(cfg);
  const int rho = static_cast<int>(degrees.size());
  if (cfg.k3 && cfg.x) throw UsageError("--k3 and --x are mutually exclusive");
  if (cfg.k3 && *cfg.k3 != rho) {
    throw UsageError("--k3 " + std::to_string(*cfg.k3) + " needs exactly that many --deg values, got " + std::to_string(rho));
  }
  if (cfg.rho && *cfg.rho != rho) {
    throw UsageError("--rho " + std::to_string(*cfg.rho) + " needs exactly that many --deg values, got " + std::to_string(rho));
  }
  if (cfg.x) return RingParams(n, std::move(degrees), parse_rational(*cfg.x));
  return RingParams::k3(n, std::move(degrees));
}

RingParams ring_params(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  return ring_params(cfg, *cfg.n);
}

int require_d(const RunConfig& cfg) {
  if (!cfg.d) throw UsageError("--d is required");
  return *cfg.d;
}

Rational require_x(const RunConfig& cfg) {
  if (!cfg.x) throw UsageError("--x is required");
  return parse_rational(*cfg.x);
}

int require_int_x(const RunConfig& cfg) { return require_positive_integer(require_x(cfg)); }

std::string read_expr(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

bool json_mode(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const RunConfig& cfg, const Json& doc, const std::string& text) {
  if (json_mode(cfg)) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

std::string element_out(const RunConfig& cfg, const RingElement& e) {
  return cfg.format == "expr" ? to_expr_string(e) : to_text(e);
}

// ---------------------------------------------------------------------------

int cmd_normalize(const RunConfig& cfg) {
  const RingParams p = ring_params(cfg);
  const RingElement e = evaluate(read_expr(cfg.exprs.at(0)), p);
  emit(cfg, element_json(e), element_out(cfg, e));
  return kOk;
}

int cmd_pair(const RunConfig& cfg) {
  if (cfg.exprs.size() != 2) throw UsageError("pair takes two expressions");
  if (cfg.exprs[0] == "-" && cfg.exprs[1] == "-") throw UsageError("only one expression may come from stdin");
  const RingParams p = ring_params(cfg);
  const Rational v = pair(evaluate(read_expr(cfg.exprs[0]), p), evaluate(read_expr(cfg.exprs[1]), p));
  Json doc;
  doc["pair"] = to_pq_string(v);
  emit(cfg, doc, v.get_str());
  return kOk;
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
    s += "\n";
  }
  return s;
}

std::string matching_text(const PerfectMatching& pm) {
  std::string s;
  for (auto [a, b] : pm.pairs()) s += (s.empty() ? "" : "·") + ("τ_{" + std::to_string(a) + "," + std::to_string(b) + "}");
  return s.empty() ? "1" : s;
}

std::string tau_vector_text(const TauVector& v) {
  std::string s;
  for (const auto& [m, c] : v) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) s += mag.get_str() + "·";
    s += matching_text(m);
  }
  return s.empty() ? "0" : s;
}

int cmd_gram(const RunConfig& cfg) {
  const GramMatrix g = build_gram(require_d(cfg), require_x(cfg), Bounds::from_env(), cfg.threads);
  if (cfg.exponents) {
    Json doc = g.exponents();
    std::string text;
    for (const auto& row : g.exponents()) {
      for (std::size_t j = 0; j < row.size(); ++j) text += (j ? " " : "") + std::to_string(row[j]);
      text += "\n";
    }
    emit(cfg, doc, text);
  } else {
    emit(cfg, gram_json(g), matrix_text(g.evaluated()));
  }
  return kOk;
}

int cmd_kernel(const RunConfig& cfg) {
  const GramMatrix g = build_gram(require_d(cfg), require_x(cfg), Bounds::from_env(), cfg.threads);
  const auto basis = kernel_basis(g);
  Json doc;
  doc["d"] = g.d();
  doc["x"] = to_pq_string(g.x());
  doc["basis_size"] = g.size();
  doc["kernel_dim"] = basis.size();
  Json vecs = Json::array();
  std::string text = "kernel dimension " + std::to_string(basis.size()) + " of " + std::to_string(g.size()) + "\n";
  for (const auto& v : basis) {
    vecs.push_back(tau_vector_json(v));
    text += tau_vector_text(v) + "\n";
  }
  doc["basis"] = std::move(vecs);
  emit(cfg, doc, text);
  return kOk;
}

std::string eigen_text(const EigenReport& r) {
  std::string s = "d=" + std::to_string(r.d) + " x=" + r.x.get_str() + "\n";
  for (const auto& b : r.blocks) {
    s += "  " + b.shape.to_string() + " dim " + std::to_string(b.hook_dim) + " phi-rank " + std::to_string(b.phi_rank) +
         " eigenvalue " + (b.eigenvalue ? b.eigenvalue->get_str() : std::string("none")) +
         (b.consistent() ? " ok" : " MISMATCH") + "\n";
  }
  s += "kernel dim " + std::to_string(r.kernel_dim) + " (predicted " + std::to_string(r.predicted_dim) + ")\n";
  return s;
}

int cmd_specht(const RunConfig& cfg) {
  const Bounds bounds = Bounds::from_env();
  const auto rep = check_eigen(require_d(cfg), require_x(cfg), bounds);
  emit(cfg, report_json(rep), eigen_text(rep));
  return rep.passed() ? kOk : kCheckFailed;
}

int cmd_kimura(const RunConfig& cfg) {
  const int x = require_int_x(cfg);
  if (!cfg.m) {
    const RingElement e = kimura_relation(x);
    emit(cfg, element_json(e), element_out(cfg, e));
    return kOk;
  }
  const RingParams p(cfg.n.value_or(2 * (x + 1)), parse_degrees(cfg), x);
  const auto slice = kimura_ideal_slice(p, *cfg.m);
  std::vector<Vector> coords;
  const auto basis = enumerate_monomials(p, *cfg.m);
  Bounds::from_env().check(basis.size(), "ideal slice");
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Json elems = Json::array();
  std::string text;
  for (const auto& e : slice) {
    Vector v(basis.size());
    for (const auto& [mono, c] : e.terms()) v[index.at(mono)] = c;
    coords.push_back(std::move(v));
    elems.push_back(element_json(e));
    text += element_out(cfg, e) + "\n";
  }
  const std::size_t r = span_rank(coords, basis.size());
  Json doc;
  doc["n"] = p.n();
  doc["m"] = *cfg.m;
  doc["x"] = x;
  doc["size"] = slice.size();
  doc["rank"] = r;
  doc["elements"] = std::move(elems);
  emit(cfg, doc, text + "size " + std::to_string(slice.size()) + ", rank " + std::to_string(r) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

std::string relation_text(const std::string& what, const RelationReport& r) {
  return what + ": " + std::to_string(r.instances) + " instances, " + std::to_string(r.failures) + " failures\n";
}

int verify_bv_relations(const RunConfig& cfg) {
  const RingParams p = ring_params(cfg, cfg.n.value_or(3));
  const auto rel = check_bv_relations(p);
  const auto axioms = check_ring_axioms(p, cfg.seed, cfg.samples);
  const bool ok = rel.passed() && axioms.passed();
  Json doc;
  doc["relations"] = report_json(rel);
  doc["ring_axioms"] = report_json(axioms);
  doc["passed"] = ok;
  emit(cfg, doc, relation_text("relations", rel) + relation_text("ring axioms", axioms));
  return ok ? kOk : kCheckFailed;
}

int verify_delta_closure(const RunConfig& cfg) {
  std::vector<RingParams> cases;
  const int n = cfg.n.value_or(3);
  if (has_ring_flags(cfg)) {
    cases.push_back(ring_params(cfg, n));
  } else {
    cases.push_back(RingParams::k3(n, {}));
    cases.push_back(RingParams::k3(n, {2}));
    cases.push_back(RingParams::k3(n, {2, -2}));
  }
  bool ok = true;
  Json arr = Json::array();
  std::string text;
  for (const auto& p : cases) {
    const auto r = check_delta_closure(p);
    ok = ok && r.passed();
    Json j;
    j["rho"] = p.rho();
    j["x"] = to_pq_string(p.x());
    const Json body = report_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    arr.push_back(std::move(j));
    text += relation_text("rho=" + std::to_string(p.rho()), r);
  }
  Json doc;
  doc["cases"] = std::move(arr);
  doc["passed"] = ok;
  emit(cfg, doc, text);
  return ok ? kOk : kCheckFailed;
}

int verify_block_structure(const RunConfig& cfg) {
  std::vector<RingParams> cases;
  if (cfg.n) {
    cases.push_back(has_ring_flags(cfg) ? ring_params(cfg, *cfg.n) : RingParams(*cfg.n, {}, 3));
  } else {
    for (int n = 1; n <= 4; ++n) {
      cases.emplace_back(n, std::vector<Rational>{}, 3);
      cases.emplace_back(n, std::vector<Rational>{2}, 3);
    }
  }
  bool ok = true;
  BlockStructureReport total;
  for (const auto& p : cases) {
    Bounds::from_env().check(enumerate_monomials(p, p.n()).size(), "block-structure check");
    const auto r = check_block_structure(p);
    total.pairs_checked += r.pairs_checked;
    total.nonzero += r.nonzero;
    total.support_exceptions += r.support_exceptions;
    total.value_mismatches += r.value_mismatches;
    ok = ok && r.passed();
  }
  Json doc = report_json(total);
  doc["passed"] = ok;
  emit(cfg, doc,
       std::to_string(total.pairs_checked) + " pairs, " + std::to_string(total.nonzero) + " nonzero, " +
           std::to_string(total.support_exceptions) + " support exceptions, " + std::to_string(total.value_mismatches) +
           " value mismatches\n");
  return ok ? kOk : kCheckFailed;
}

int verify_kernel_gen(const RunConfig& cfg) {
  const auto r = verify_kernel_generated(require_d(cfg), require_int_x(cfg), Bounds::from_env());
  emit(cfg, report_json(r),
       "kernel dim " + std::to_string(r.kernel_dim) + ", slice rank " + std::to_string(r.slice_rank) + ", predicted " +
           std::to_string(r.predicted_dim) + (r.equal ? ", equal\n" : ", NOT equal\n"));
  return r.passed() ? kOk : kCheckFailed;
}

int verify_kimura_identity(const RunConfig& cfg) {
  const auto r = check_kimura_identity(require_int_x(cfg));
  emit(cfg, report_json(r), std::string("phi(E_T) = (x+1)! * Kimura relation: ") + (r.equal ? "yes\n" : "no\n"));
  return r.equal ? kOk : kCheckFailed;
}

int verify_perfect_pairing_cmd(const RunConfig& cfg) {
  const RingParams p = ring_params(cfg);
  const Bounds bounds = Bounds::from_env();
  std::vector<int> ms;
  if (cfg.m) {
    ms.push_back(*cfg.m);
  } else {
    for (int m = 0; m <= 2 * p.n(); ++m) ms.push_back(m);
  }
  bool ok = true;
  Json arr = Json::array();
  std::string text;
  for (int m : ms) {
    const auto r = verify_perfect_pairing(p, m, bounds);
    ok = ok && r.passed();
    arr.push_back(report_json(r));
    text += "m=" + std::to_string(m) + ": rank " + std::to_string(r.rank) + "/" + std::to_string(r.rows) +
            ", kernel " + std::to_string(r.kernel_dim) + ", slice rank " + std::to_string(r.slice_rank) +
            (r.passed() ? " ok\n" : " FAIL\n");
  }
  Json doc;
  doc["degrees"] = std::move(arr);
  doc["passed"] = ok;
  emit(cfg, doc, text);
  return ok ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.check == "bv-relations") return verify_bv_relations(cfg);
  if (cfg.check == "delta-closure") return verify_delta_closure(cfg);
  if (cfg.check == "block-structure") return verify_block_structure(cfg);
  if (cfg.check == "eigen") return cmd_specht(cfg);
  if (cfg.check == "kernel-gen") return verify_kernel_gen(cfg);
  if (cfg.check == "kimura-identity") return verify_kimura_identity(cfg);
  if (cfg.check == "perfect-pairing") return verify_perfect_pairing_cmd(cfg);
  throw UsageError("unknown check '" + cfg.check + "'");
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "number of factors of S");
  sub->add_option("--rho", cfg.rho, "number of divisor classes (must match --deg)");
  sub->add_option("--deg", cfg.degrees, "self-intersection numbers d_s (repeat or comma-separate)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sub->add_option("--x", cfg.x, "transcendental rank parameter (rational)");
  sub->add_option("--k3", cfg.k3, "K3 convention: rho with x = 22 - rho");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "expr"}));
  sub->add_option("--threads", cfg.threads, "worker threads for Gram entries");
  sub->add_option("--seed", cfg.seed, "seed for sampled property checks");
}

int report_error(const RunConfig& cfg, const std::string& msg, std::optional<std::size_t> offset = std::nullopt) {
  std::cerr << "bvring: " << msg << "\n";
  if (json_mode(cfg)) {
    Json doc;
    doc["error"] = msg;
    if (offset) doc["offset"] = *offset;
    std::cout << doc.dump() << "\n";
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the tautological ring of powers of a K3 surface"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* normalize = app.add_subcommand("normalize", "reduce an expression to canonical form");
  add_common(normalize, cfg);
  normalize->add_option("expr", cfg.exprs, "expression, or - for stdin")->required()->expected(1);

  auto* pair_cmd = app.add_subcommand("pair", "intersection pairing of two homogeneous expressions");
  add_common(pair_cmd, cfg);
  pair_cmd->add_option("exprs", cfg.exprs, "two expressions")->required()->expected(2);

  auto* gram = app.add_subcommand("gram", "Gram matrix T_{d/2}(x) on perfect matchings of {1..d}");
  add_common(gram, cfg);
  gram->add_option("--d", cfg.d, "even ground-set size")->required();
  gram->add_flag("--exponents", cfg.exponents, "print loop-count exponents instead of values");

  auto* kernel_cmd = app.add_subcommand("kernel", "exact kernel basis of T_{d/2}(x)");
  add_common(kernel_cmd, cfg);
  kernel_cmd->add_option("--d", cfg.d, "even ground-set size")->required();

  auto* specht = app.add_subcommand("specht", "Specht eigenspaces of T_{d/2}(x)");
  add_common(specht, cfg);
  specht->add_option("--d", cfg.d, "even ground-set size")->required();

  auto* kimura = app.add_subcommand("kimura", "Kimura relation, or its ideal slice with --m");
  add_common(kimura, cfg);
  kimura->add_option("--m", cfg.m, "codegree of the ideal slice");

  auto* verify = app.add_subcommand("verify", "run a verification check");
  add_common(verify, cfg);
  verify->add_option("--check", cfg.check, "check name")
      ->required()
      ->check(CLI::IsMember({"bv-relations", "delta-closure", "block-structure", "eigen", "kernel-gen",
                             "kimura-identity", "perfect-pairing"}));
  verify->add_option("--d", cfg.d, "even ground-set size");
  verify->add_option("--m", cfg.m, "codegree (perfect-pairing; all if omitted)");
  verify->add_option("--samples", cfg.samples, "sampled ring-axiom checks (bv-relations)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*normalize) return cmd_normalize(cfg);
    if (*pair_cmd) return cmd_pair(cfg);
    if (*gram) return cmd_gram(cfg);
    if (*kernel_cmd) return cmd_kernel(cfg);
    if (*specht) return cmd_specht(cfg);
    if (*kimura) return cmd_kimura(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ParseError& e) {
    return report_error(cfg, e.what(), e.offset());
  } catch (const std::exception& e) {
    return report_error(cfg, e.what());
  }
  return kUsage;
}
