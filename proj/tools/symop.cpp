#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symop/coeffs.hpp"
#include "symop/expr.hpp"
#include "symop/identities.hpp"
#include "symop/operators.hpp"
#include "symop/skew_rules.hpp"

using namespace symop;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

// Exit code 1 is reserved for verification failures.
struct VerificationFailed {};

std::string shape_text(const SkewShape& s) {
  return s.inner().empty() ? to_string(s.outer()) : to_string(s.outer()) + "/" + to_string(s.inner());
}

// Signed skew terms as parseable text: `-sk[2,1] + sk[3,1/1]`.
std::string terms_text(const std::vector<SkewTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const SkewTerm& t : terms) {
    const bool neg = t.coefficient < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const Integer mag = abs(t.coefficient);
    if (mag != 1) out += mag.get_str() + "*";
    out += "sk[" + shape_text(t.shape) + "]";
  }
  return out;
}

json terms_json(const std::vector<SkewTerm>& terms) {
  json out = json::array();
  for (const SkewTerm& t : terms)
    out.push_back({{"coef", t.coefficient.get_str()}, {"outer", t.shape.outer().vec()}, {"inner", t.shape.inner().vec()}});
  return out;
}

void print(const Options& o, const SymFunc& f) {
  if (o.json()) std::cout << to_json(f).dump() << "\n";
  else std::cout << to_string(f) << "\n";
}

void print_value(const Options& o, const Integer& v) {
  if (o.json()) std::cout << json{{"value", v.get_str()}}.dump() << "\n";
  else std::cout << v.get_str() << "\n";
}

void print_expansion(const Options& o, const SkewExpansion& x, bool terms, bool collapsed) {
  if (o.json()) {
    json j;
    if (terms) j["terms"] = terms_json(x.terms);
    if (collapsed) j["collapsed"] = to_json(x.collapsed);
    std::cout << j.dump() << "\n";
    return;
  }
  if (terms) std::cout << terms_text(x.terms) << "\n";
  if (collapsed) std::cout << to_string(x.collapsed) << "\n";
}

std::string rows_text(const Filling& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + std::to_string(row[i]);
  }
  return out;
}

json tableau_json(const Filling& t) {
  return {{"shape", shape_text(t.shape())}, {"rows", t.rows()}};
}

void run_jdt(const Options& o, const Partition& alpha, const Partition& theta, int max_entry, bool trace) {
  const JdtBijectionResult r = verify_jdt_bijection(alpha, theta, max_entry);
  const char* names[] = {"a", "b", "c"};
  json j = {{"report", to_json(r.report)}, {"k", r.k}};
  j["addrestrict"] = json::array();
  j["addcomplement"] = json::array();
  for (const Partition& p : r.addrestrict) j["addrestrict"].push_back(to_string(p));
  for (const Partition& p : r.addcomplement) j["addcomplement"].push_back(to_string(p));
  for (int c = 0; c < 3; ++c) {
    json shapes = json::array();
    for (const auto& [g, d] : r.case_shapes[c]) shapes.push_back(to_string(g) + "/" + to_string(d));
    j["cases"][names[c]] = {{"count", r.case_counts[c]}, {"shapes", shapes}};
  }
  if (trace) {
    const int bound = max_entry > 0 ? max_entry : std::max(alpha.size(), 1);
    json slides = json::array();
    for (const Partition& gamma : add_set(alpha))
      for (const Partition& delta : r.addrestrict) {
        const Cell b = SkewShape(delta, theta).cells().front();
        const Cell c = SkewShape(gamma, alpha).cells().front();
        for (const Ssyt& t : enumerate_ssyt_bounded(SkewShape(gamma, delta), bound)) {
          const SlideResult s = jdt_slide(t, b);
          const int kind = !s.vacated ? 0 : (*s.vacated == c ? 2 : 1);
          json step = {{"before", tableau_json(t)}, {"hole", {b.row, b.col}}, {"after", tableau_json(s.tableau)},
                       {"case", names[kind]}};
          step["vacated"] = s.vacated ? json{s.vacated->row, s.vacated->col} : json(nullptr);
          slides.push_back(std::move(step));
        }
      }
    j["slides"] = std::move(slides);
  }
  if (o.json()) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(r.report) << "\n";
    std::cout << "k=" << r.k << " addrestrict=" << j["addrestrict"].dump() << " addcomplement=" << j["addcomplement"].dump()
              << "\n";
    for (int c = 0; c < 3; ++c)
      std::cout << "case " << names[c] << ": " << r.case_counts[c] << " tableaux, shapes " << j["cases"][names[c]]["shapes"].dump()
                << "\n";
    if (trace)
      for (const json& s : j["slides"])
        std::cout << s["case"].get<std::string>() << ": " << s["before"]["shape"].get<std::string>() << " -> "
                  << s["after"]["shape"].get<std::string>() << "\n";
  }
  if (!r.report.passed()) throw VerificationFailed{};
}

void print_matrix(const Options& o, const TruncatedMatrix& m) {
  if (o.json()) {
    std::cout << to_json(m).dump() << "\n";
    return;
  }
  std::cout << "cols:";
  for (const Partition& c : m.cols) std::cout << " [" << to_string(c) << "]";
  std::cout << "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::cout << "[" << to_string(m.rows[i]) << "]:";
    for (const Rational& x : m.entries[i]) std::cout << " " << x.get_str();
    std::cout << "\n";
  }
}

void run_verify(const Options& o, const std::string& id, const SuiteBounds& bounds, const std::string& params,
                unsigned threads) {
  std::vector<VerificationReport> reports;
  if (!params.empty()) {
    if (id == "all") throw std::invalid_argument("--params needs a single identity id");
    const IdentityEntry& e = catalog_entry(id);
    reports.push_back(verify_instance(e, parse_params(params, e.integer_params), bounds));
  } else if (id == "all") {
    reports = run_suite(bounds, threads);
  } else {
    reports.push_back(run_entry(catalog_entry(id), bounds, threads));
  }
  bool ok = true;
  json j = json::array();
  for (const VerificationReport& r : reports) {
    ok = ok && r.passed();
    if (o.json()) j.push_back(to_json(r));
    else std::cout << to_string(r) << "\n";
  }
  if (o.json()) std::cout << json{{"passed", ok}, {"reports", j}}.dump() << "\n";
  if (!ok) throw VerificationFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetric function calculator"};
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(1);

  std::string a, b, c;
  int k = 0;

  auto* expand = app.add_subcommand("expand", "evaluate an expression");
  std::string basis = "s";
  expand->add_option("expr", a)->required();
  expand->add_option("--basis", basis, "output basis")->check(CLI::IsMember({"s", "h", "e", "p"}));

  auto* kron = app.add_subcommand("kron", "Kronecker product of two expressions");
  kron->add_option("f", a)->required();
  kron->add_option("g", b)->required();

  auto* skew_cmd = app.add_subcommand("skew", "skew Schur function, e.g. 3,1/1");
  skew_cmd->add_option("shape", a)->required();

  auto* lr = app.add_subcommand("lrcoeff", "c^nu_{lambda,mu}");
  lr->add_option("nu", a)->required();
  lr->add_option("lambda", b)->required();
  lr->add_option("mu", c)->required();

  auto* kc = app.add_subcommand("kroncoeff", "g_{lambda,mu,nu}");
  kc->add_option("lambda", a)->required();
  kc->add_option("mu", b)->required();
  kc->add_option("nu", c)->required();

  auto* ch = app.add_subcommand("char", "character value chi^lambda(rho)");
  ch->add_option("lambda", a)->required();
  ch->add_option("rho", b)->required();

  auto* verify = app.add_subcommand("verify", "verify identities by exhaustion");
  SuiteBounds bounds;
  std::string params;
  unsigned threads = 0;
  verify->add_option("id", a, "catalog id or all")->required();
  verify->add_option("--max-ab", bounds.max_ab)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-g", bounds.max_g)->check(CLI::NonNegativeNumber);
  verify->add_option("--params", params, "single instance, e.g. \"alpha=2,1 beta=1\"");
  verify->add_option("--threads", threads, "worker threads (default SYMOP_THREADS or 1)");

  auto* list = app.add_subcommand("list", "list catalog entries");

  auto* skewlr = app.add_subcommand("skewlr", "skew Littlewood-Richardson expansion of s_a s_b");
  bool only_terms = false, only_collapsed = false;
  skewlr->add_option("a", a)->required();
  skewlr->add_option("b", b)->required();
  auto* t_flag = skewlr->add_flag("--terms", only_terms, "signed skew terms only");
  skewlr->add_flag("--collapsed", only_collapsed, "Schur expansion only")->excludes(t_flag);

  auto* pieri = app.add_subcommand("skewpieri", "s_(k) times a skew Schur function");
  pieri->add_option("k", k)->required()->check(CLI::NonNegativeNumber);
  pieri->add_option("shape", a)->required();
  bool pieri_terms = false, pieri_collapsed = false;
  auto* pt_flag = pieri->add_flag("--terms", pieri_terms);
  pieri->add_flag("--collapsed", pieri_collapsed)->excludes(pt_flag);

  auto* corners = app.add_subcommand("skewcorners", "s_{alpha/theta} * s_(n-k-1,1) by the corners formula");
  corners->add_option("alpha", a)->required();
  corners->add_option("theta", b)->required();

  auto* matrix = app.add_subcommand("matrix", "truncated matrix of an operator expression");
  int dom = 3;
  matrix->add_option("op", a)->required();
  matrix->add_option("--dom", dom, "domain degree bound")->check(CLI::NonNegativeNumber);

  auto* rank_cmd = app.add_subcommand("rank", "rank of stacked truncated operator matrices");
  std::vector<std::string> ops;
  rank_cmd->add_option("ops", ops)->required();
  rank_cmd->add_option("--dom", dom)->check(CLI::NonNegativeNumber);

  auto* apply_cmd = app.add_subcommand("apply", "apply an operator expression");
  apply_cmd->add_option("op", a)->required();
  apply_cmd->add_option("expr", b)->required();

  auto* jdt = app.add_subcommand("jdt", "jeu de taquin case classification for alpha, theta");
  int max_entry = 0;
  bool trace = false;
  jdt->add_option("alpha", a)->required();
  jdt->add_option("theta", b)->required();
  jdt->add_option("--max-entry", max_entry)->check(CLI::NonNegativeNumber);
  jdt->add_flag("--trace", trace, "list every slide");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) {
      // A leading '{' means the serialized JSON form.
      const SymFunc f = a.starts_with('{') ? symfunc_from_json(json::parse(a)) : evaluate(a);
      print(o, to_basis(f, parse_basis(basis)));
    } else if (*kron) {
      print(o, to_schur(kronecker(evaluate(a), evaluate(b))));
    } else if (*skew_cmd) {
      print(o, skew_schur(parse_skew_shape(a)));
    } else if (*lr) {
      print_value(o, lr_coeff(parse_partition(a), parse_partition(b), parse_partition(c)));
    } else if (*kc) {
      print_value(o, kron_coeff(parse_partition(a), parse_partition(b), parse_partition(c)));
    } else if (*ch) {
      print_value(o, mn_character(parse_partition(a), parse_partition(b)));
    } else if (*verify) {
      run_verify(o, a, bounds, params, threads);
    } else if (*list) {
      json j = json::array();
      for (const IdentityEntry& e : catalog()) {
        if (o.json())
          j.push_back({{"id", e.id}, {"statement", e.statement}, {"ranges", e.ranges}});
        else
          std::cout << e.id << "  " << e.statement << "  [" << e.ranges << "]\n";
      }
      if (o.json()) std::cout << j.dump() << "\n";
    } else if (*skewlr) {
      print_expansion(o, skew_lr_product(parse_skew_shape(a), parse_skew_shape(b)), !only_collapsed, !only_terms);
    } else if (*pieri) {
      print_expansion(o, skew_pieri(k, parse_skew_shape(a)), !pieri_collapsed, !pieri_terms);
    } else if (*corners) {
      print(o, skew_corners_rhs(parse_partition(a), parse_partition(b)));
    } else if (*matrix) {
      print_matrix(o, matrix_of(evaluate_operator(a), dom));
    } else if (*rank_cmd) {
      std::vector<OperatorExpr> exprs;
      for (const std::string& s : ops) exprs.push_back(evaluate_operator(s));
      const int r = stacked_rank(exprs, dom);
      const bool indep = r == static_cast<int>(exprs.size());
      if (o.json())
        std::cout << json{{"rank", r}, {"count", exprs.size()}, {"independent", indep}, {"dom", dom}}.dump() << "\n";
      else
        std::cout << "rank=" << r << " of " << exprs.size() << ": "
                  << (indep ? "independent" : "dependent at this truncation") << "\n";
    } else if (*apply_cmd) {
      print(o, apply(evaluate_operator(a), evaluate(b)));
    } else if (*jdt) {
      run_jdt(o, parse_partition(a), parse_partition(b), max_entry, trace);
    }
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
