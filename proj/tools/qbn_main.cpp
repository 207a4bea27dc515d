#include <qbn/canon.hpp>
#include <qbn/classify.hpp>
#include <qbn/cyclo.hpp>
#include <qbn/enumerate.hpp>
#include <qbn/graph.hpp>
#include <qbn/kernel.hpp>
#include <qbn/spec.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitNut = 0;
constexpr int kExitNotNut = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string format = "text";
  int threads = 1;
};

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitInvalid;
}

int reject_csv(const std::string& subcommand) {
  return fail("--format csv is not available for " + subcommand);
}

void spec_fields(ordered_json& j, const qbn::BicirculantSpec& s) {
  j["class"] = qbn::class_name(s.tag);
  j["m"] = s.m;
  j["a"] = s.a;
  j["b"] = s.b;
  if (s.c) j["c"] = *s.c;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(const std::string& text, const Options& opt) {
  qbn::Verdict v = qbn::classify(qbn::parse_spec(text));
  if (opt.format == "json") {
    ordered_json j;
    spec_fields(j, v.spec);
    j["is_nut"] = v.is_nut;
    j["reason"] = v.reason.str();
    if (v.reason.witness_f) j["witness_f"] = *v.reason.witness_f;
    print_json(j);
  } else if (opt.format == "csv") {
    std::cout << "class,m,a,b,c,is_nut,reason,witness_f\n";
    std::cout << qbn::class_name(v.spec.tag) << "," << v.spec.m << ","
              << v.spec.a << "," << v.spec.b << ",";
    if (v.spec.c) std::cout << *v.spec.c;
    std::cout << "," << (v.is_nut ? "true" : "false") << "," << v.reason.str()
              << ",";
    if (v.reason.witness_f) std::cout << *v.reason.witness_f;
    std::cout << "\n";
  } else {
    std::cout << qbn::to_string(v.spec)
              << " is_nut=" << (v.is_nut ? "true" : "false")
              << " reason=" << v.reason.str();
    if (v.reason.witness_f) std::cout << " witness_f=" << *v.reason.witness_f;
    std::cout << "\n";
  }
  return v.is_nut ? kExitNut : kExitNotNut;
}

int run_oracle(const std::string& text, const Options& opt) {
  if (opt.format == "csv") return reject_csv("oracle");
  qbn::BicirculantSpec s = qbn::parse_spec(text);
  qbn::Graph g = qbn::build_graph(s);
  qbn::KernelBasis kb = qbn::kernel_basis(qbn::adjacency_matrix(g));
  bool nut = kb.dim == 1;
  if (nut)
    for (const qbn::Rat& x : kb.vectors[0])
      if (x == 0) {
        nut = false;
        break;
      }
  if (opt.format == "json") {
    ordered_json j;
    spec_fields(j, s);
    j["dim"] = kb.dim;
    j["rank"] = kb.rank;
    j["is_nut"] = nut;
    ordered_json vecs = ordered_json::array();
    for (const auto& vec : kb.vectors) {
      ordered_json row = ordered_json::array();
      for (const qbn::Rat& x : vec) row.push_back(x.str());
      vecs.push_back(std::move(row));
    }
    j["vectors"] = std::move(vecs);
    print_json(j);
  } else {
    std::cout << qbn::to_string(s) << " dim=" << kb.dim << " rank=" << kb.rank
              << " is_nut=" << (nut ? "true" : "false") << "\n";
    for (const auto& vec : kb.vectors) {
      for (std::size_t i = 0; i < vec.size(); ++i)
        std::cout << (i ? " " : "") << vec[i].str();
      std::cout << "\n";
    }
  }
  return nut ? kExitNut : kExitNotNut;
}

ordered_json counts_json(long n, const qbn::ClassCounts& cc,
                         const char* cls = nullptr) {
  ordered_json j;
  j["n"] = n;
  if (cls) j["class"] = cls;
  j["C"] = cc.connected;
  j["B"] = cc.nonbipartite;
  j["N"] = cc.nut;
  j["V"] = cc.vertex_transitive;
  j["Z"] = cc.circulant;
  return j;
}

int run_enumerate(long max_order, const Options& opt) {
  std::vector<qbn::TableRow> rows;
  for (long n = 8; n <= max_order; n += 2)
    rows.push_back(qbn::table_row(n, opt.threads));
  if (opt.format == "json") {
    ordered_json j;
    ordered_json agg = ordered_json::array();
    for (const auto& r : rows) agg.push_back(counts_json(r.n, r.total));
    j["aggregate"] = std::move(agg);
    ordered_json per = ordered_json::array();
    for (const auto& r : rows)
      for (int t = 0; t < 3; ++t) {
        if (!r.class_present[t]) continue;
        per.push_back(counts_json(
            r.n, r.per_class[t],
            qbn::class_name(static_cast<qbn::ClassTag>(t))));
      }
    j["per_class"] = std::move(per);
    print_json(j);
  } else {
    std::cout << qbn::table_csv(rows) << "\n" << qbn::per_class_csv(rows);
  }
  return 0;
}

int run_crosscheck(long max_order, const Options& opt) {
  if (opt.format == "csv") return reject_csv("crosscheck");
  qbn::CrosscheckReport rep = qbn::crosscheck(max_order, opt.threads);
  if (opt.format == "json") {
    ordered_json j;
    j["specs_checked"] = rep.specs_checked;
    j["divisor_comparisons"] = rep.divisor_comparisons;
    j["finite_set_comparisons"] = rep.finite_set_comparisons;
    j["multiplicity_comparisons"] = rep.multiplicity_comparisons;
    j["disagreements"] = rep.disagreements;
    print_json(j);
  } else {
    std::cout << "specs checked: " << rep.specs_checked << "\n"
              << "divisor scan comparisons: " << rep.divisor_comparisons
              << "\n"
              << "finite-set comparisons: " << rep.finite_set_comparisons
              << "\n"
              << "zero-multiplicity comparisons: "
              << rep.multiplicity_comparisons << "\n"
              << "disagreements: " << rep.disagreements.size() << "\n";
    for (const std::string& d : rep.disagreements)
      std::cout << "  " << d << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_residue_search(long f, bool raw, const Options& opt) {
  if (raw) {
    auto hits = qbn::residue_search_raw(f);
    if (opt.format == "json") {
      ordered_json j;
      j["f"] = f;
      ordered_json arr = ordered_json::array();
      for (const auto& h : hits) arr.push_back({h[0], h[1], h[2]});
      j["raw"] = std::move(arr);
      print_json(j);
    } else {
      if (opt.format == "csv") std::cout << "a,b,c\n";
      for (const auto& h : hits)
        std::cout << h[0] << "," << h[1] << "," << h[2] << "\n";
    }
    return 0;
  }
  auto triples = qbn::residue_search(f);
  if (opt.format == "json") {
    ordered_json j;
    j["f"] = f;
    ordered_json arr = ordered_json::array();
    for (const auto& t : triples) arr.push_back({t.s, t.d, t.c});
    j["triples"] = std::move(arr);
    print_json(j);
  } else {
    if (opt.format == "csv") std::cout << "a_plus_b,a_minus_b,c\n";
    for (const auto& t : triples)
      std::cout << t.s << "," << t.d << "," << t.c << "\n";
  }
  return 0;
}

int run_poly(const std::string& kind, const std::vector<long>& params,
             std::optional<long> phi_f, const Options& opt) {
  if (opt.format == "csv") return reject_csv("poly");
  qbn::IntPolynomial p;
  std::string label;
  if (kind == "R" || kind == "Q" || kind == "B3") {
    if (params.size() != 2)
      return fail("poly " + kind + " takes two parameters a b");
    long a = params[0], b = params[1];
    p = kind == "R"   ? qbn::poly_R(a, b)
        : kind == "Q" ? qbn::poly_Q(a, b)
                      : qbn::poly_B3(a, b);
    label = "poly_" + kind + "(" + std::to_string(a) + "," +
            std::to_string(b) + ")";
  } else if (kind == "P") {
    if (params.size() != 3) return fail("poly P takes three parameters a b c");
    p = qbn::poly_P(params[0], params[1], params[2]);
    label = "poly_P(" + std::to_string(params[0]) + "," +
            std::to_string(params[1]) + "," + std::to_string(params[2]) + ")";
  } else {
    return fail("unknown polynomial kind '" + kind + "' (use R, Q, P or B3)");
  }

  std::optional<bool> divides;
  std::optional<long> quotient_degree;
  if (phi_f) {
    divides = qbn::divides_cyclotomic(*phi_f, p);
    if (*divides && p.degree() >= 0)
      quotient_degree = p.degree() - qbn::cyclotomic(*phi_f).degree();
  }

  if (opt.format == "json") {
    ordered_json j;
    j["kind"] = kind;
    j["params"] = params;
    j["poly"] = p.str();
    if (phi_f) {
      j["phi_f"] = *phi_f;
      j["phi"] = qbn::cyclotomic(*phi_f).str();
      j["divides"] = *divides;
      if (quotient_degree) j["quotient_degree"] = *quotient_degree;
    }
    print_json(j);
  } else {
    std::cout << label << " = " << p.str() << "\n";
    if (phi_f) {
      std::cout << "Phi_" << *phi_f << " = " << qbn::cyclotomic(*phi_f).str()
                << "\n";
      std::cout << "divides: " << (*divides ? "true" : "false") << "\n";
      if (quotient_degree)
        std::cout << "quotient degree: " << *quotient_degree << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quartic bicirculant nut graph toolkit.\n"
      "Exit codes: 0 nut (or success), 1 not-nut (or failed check), "
      "2 invalid input."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads,
                 "Worker thread count (QBN_THREADS overrides)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string spec_text;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Decide nut / not-nut for a spec like \"B2(24;4,6,3)\"");
  classify_cmd->add_option("spec", spec_text, "Bicirculant spec")->required();

  std::string oracle_text;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exact kernel dimension and basis for a spec's graph");
  oracle_cmd->add_option("spec", oracle_text, "Bicirculant spec")->required();

  long enum_max = 0;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Census of orders 8..max-order");
  enumerate_cmd->add_option("--max-order", enum_max, "Largest order")
      ->required()
      ->check(CLI::Range(8l, 50l));

  long check_max = 0;
  auto* crosscheck_cmd = app.add_subcommand(
      "crosscheck", "Compare classifier, divisor scan and kernel oracle");
  crosscheck_cmd->add_option("--max-order", check_max, "Largest order")
      ->required()
      ->check(CLI::Range(0l, 50l));

  long residue_f = 0;
  bool residue_raw = false;
  auto* residue_cmd = app.add_subcommand(
      "residue-search", "Residue triples defeating divisibility at f");
  residue_cmd->add_option("f", residue_f, "Divisor from the finite pool")
      ->required();
  residue_cmd->add_flag("--raw", residue_raw, "Print raw (a,b,c) hits");

  std::string poly_kind;
  std::vector<long> poly_params;
  std::optional<long> poly_phi;
  auto* poly_cmd = app.add_subcommand(
      "poly", "Print a class polynomial, optionally with Phi_f divisibility");
  poly_cmd->add_option("kind", poly_kind, "R, Q, P or B3")->required();
  poly_cmd->add_option("params", poly_params, "a b for R/Q/B3, a b c for P")
      ->required()
      ->expected(2, 3);
  long phi_value = 0;
  auto* phi_opt =
      poly_cmd->add_option("--phi", phi_value, "Test divisibility by Phi_f")
          ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  if (*phi_opt) poly_phi = phi_value;

  try {
    if (classify_cmd->parsed()) return run_classify(spec_text, opt);
    if (oracle_cmd->parsed()) return run_oracle(oracle_text, opt);
    if (enumerate_cmd->parsed()) return run_enumerate(enum_max, opt);
    if (crosscheck_cmd->parsed()) return run_crosscheck(check_max, opt);
    if (residue_cmd->parsed())
      return run_residue_search(residue_f, residue_raw, opt);
    if (poly_cmd->parsed())
      return run_poly(poly_kind, poly_params, poly_phi, opt);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return kExitInvalid;
}
