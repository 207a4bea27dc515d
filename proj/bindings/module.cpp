#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <qbn/canon.hpp>
#include <qbn/classify.hpp>
#include <qbn/cyclo.hpp>
#include <qbn/enumerate.hpp>
#include <qbn/graph.hpp>
#include <qbn/kernel.hpp>
#include <qbn/spec.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

qbn::BicirculantSpec spec_of(const std::string& text) {
  return qbn::parse_spec(text);
}

qbn::IntPolynomial poly_of(const std::string& kind, long a, long b,
                           std::optional<long> c) {
  if (kind == "R") return qbn::poly_R(a, b);
  if (kind == "Q") return qbn::poly_Q(a, b);
  if (kind == "B3") return qbn::poly_B3(a, b);
  if (kind == "P") {
    if (!c) throw std::invalid_argument("polynomial P needs parameter c");
    return qbn::poly_P(a, b, *c);
  }
  throw std::invalid_argument("unknown polynomial kind '" + kind +
                              "' (use R, Q, P or B3)");
}

py::dict counts_dict(const qbn::ClassCounts& cc) {
  py::dict d;
  d["C"] = cc.connected;
  d["B"] = cc.nonbipartite;
  d["N"] = cc.nut;
  d["V"] = cc.vertex_transitive;
  d["Z"] = cc.circulant;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Exact arithmetic for quartic bicirculant nut graph classification";

  mod.def(
      "normalize",
      [](const std::string& text) {
        return qbn::to_string(qbn::normalize_spec(qbn::parse_spec_raw(text)));
      },
      py::arg("spec"),
      "Canonical parameter form of an isomorphic graph's spec; accepts "
      "out-of-range parameters");

  mod.def(
      "classify",
      [](const std::string& text) {
        qbn::Verdict v = qbn::classify(spec_of(text));
        py::dict d;
        d["class"] = std::string(qbn::class_name(v.spec.tag));
        d["m"] = v.spec.m;
        d["a"] = v.spec.a;
        d["b"] = v.spec.b;
        if (v.spec.c) d["c"] = *v.spec.c;
        d["is_nut"] = v.is_nut;
        d["reason"] = v.reason.str();
        if (v.reason.witness_f) d["witness_f"] = *v.reason.witness_f;
        return d;
      },
      py::arg("spec"), "Arithmetic nut / not-nut verdict with reason");

  mod.def(
      "is_nut",
      [](const std::string& text) {
        return qbn::nut_oracle(qbn::build_graph(spec_of(text)));
      },
      py::arg("spec"), "Exact kernel oracle: dimension 1 and no zero entry");

  mod.def(
      "kernel",
      [](const std::string& text) {
        qbn::KernelBasis kb =
            qbn::kernel_basis(qbn::adjacency_matrix(qbn::build_graph(spec_of(text))));
        py::dict d;
        d["dim"] = kb.dim;
        d["rank"] = kb.rank;
        std::vector<std::vector<std::string>> vecs;
        vecs.reserve(kb.vectors.size());
        for (const auto& v : kb.vectors) {
          std::vector<std::string> row;
          row.reserve(v.size());
          for (const qbn::Rat& x : v) row.push_back(x.str());
          vecs.push_back(std::move(row));
        }
        d["vectors"] = vecs;
        return d;
      },
      py::arg("spec"),
      "Exact rational kernel basis; entries as decimal strings, p/q form");

  mod.def(
      "edges",
      [](const std::string& text) {
        qbn::Graph g = qbn::build_graph(spec_of(text));
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < g.n; ++u)
          for (int v : g.adj[u])
            if (u < v) out.emplace_back(u, v);
        return out;
      },
      py::arg("spec"),
      "Edge list; vertices 0..m-1 are the x orbit, m..2m-1 the y orbit");

  mod.def(
      "nut_via_divisors",
      [](const std::string& text) {
        qbn::DivisorVerdict dv = qbn::nut_via_divisors(spec_of(text));
        py::dict d;
        d["is_nut"] = dv.is_nut;
        if (dv.witness_f) d["witness_f"] = *dv.witness_f;
        return d;
      },
      py::arg("spec"), "Divisor-polynomial scan; witness_f when not-nut");

  mod.def(
      "nut_via_finite_sets",
      [](const std::string& text) -> std::string {
        switch (qbn::nut_via_finite_sets(spec_of(text))) {
          case qbn::FiniteSetResult::Nut:
            return "nut";
          case qbn::FiniteSetResult::NotNut:
            return "not-nut";
          default:
            return "not-applicable";
        }
      },
      py::arg("spec"), "Finite divisor-set scan for B1/B2");

  mod.def(
      "zero_multiplicity",
      [](const std::string& text) {
        qbn::ZeroSpectrumReport r = qbn::zero_multiplicity(spec_of(text));
        py::dict d;
        d["multiplicity"] = r.multiplicity;
        d["satisfied_divisors"] = r.satisfied_divisors;
        return d;
      },
      py::arg("spec"), "Exact multiplicity of adjacency eigenvalue zero");

  mod.def(
      "cyclotomic", [](long f) { return qbn::cyclotomic(f).str(); },
      py::arg("f"), "The f-th cyclotomic polynomial as text");

  mod.def(
      "class_poly",
      [](const std::string& kind, long a, long b, std::optional<long> c) {
        return poly_of(kind, a, b, c).str();
      },
      py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("c") = py::none(),
      "Class polynomial R/Q/P/B3 as text");

  mod.def(
      "poly_divides",
      [](long f, const std::string& kind, long a, long b,
         std::optional<long> c) {
        return qbn::divides_cyclotomic(f, poly_of(kind, a, b, c));
      },
      py::arg("f"), py::arg("kind"), py::arg("a"), py::arg("b"),
      py::arg("c") = py::none(),
      "Whether Phi_f divides the given class polynomial");

  mod.def(
      "residue_search",
      [](long f) {
        std::vector<std::tuple<long, long, long>> out;
        for (const qbn::ResidueTriple& t : qbn::residue_search(f))
          out.emplace_back(t.s, t.d, t.c);
        return out;
      },
      py::arg("f"),
      "Deduplicated ((a+b) mod f, (a-b) mod f, c mod f) divisibility hits");

  mod.def(
      "gen_specs",
      [](const std::string& cls, long n) {
        auto tag = qbn::class_from_name(cls);
        if (!tag) throw std::invalid_argument("unknown class name '" + cls + "'");
        std::vector<std::string> out;
        for (const qbn::BicirculantSpec& s : qbn::gen_specs(*tag, n))
          out.push_back(qbn::to_string(s));
        return out;
      },
      py::arg("cls"), py::arg("n"),
      "All connected canonical-range specs of one class and order");

  mod.def(
      "certificate",
      [](const std::string& text) {
        qbn::Certificate c =
            qbn::canonical_certificate(qbn::build_graph(spec_of(text)));
        return py::bytes(reinterpret_cast<const char*>(c.bytes.data()),
                         c.bytes.size());
      },
      py::arg("spec"),
      "Canonical certificate; equal bytes identify isomorphic graphs");

  mod.def(
      "is_vertex_transitive",
      [](const std::string& text) {
        return qbn::is_vertex_transitive(qbn::build_graph(spec_of(text)));
      },
      py::arg("spec"));

  mod.def(
      "is_circulant",
      [](const std::string& text) {
        return qbn::is_circulant(qbn::build_graph(spec_of(text)));
      },
      py::arg("spec"));

  mod.def(
      "table_row",
      [](long n, int threads) {
        qbn::TableRow r = qbn::table_row(n, threads);
        py::dict d;
        d["n"] = r.n;
        d["total"] = counts_dict(r.total);
        py::dict per;
        for (int t = 0; t < 3; ++t) {
          if (!r.class_present[t]) continue;
          per[qbn::class_name(static_cast<qbn::ClassTag>(t))] =
              counts_dict(r.per_class[t]);
        }
        d["per_class"] = per;
        return d;
      },
      py::arg("n"), py::arg("threads") = 1,
      "Census row: C, B, N, V, Z aggregate and per class");

  mod.def(
      "crosscheck",
      [](long n_max, int threads) {
        qbn::CrosscheckReport r = qbn::crosscheck(n_max, threads);
        py::dict d;
        d["specs_checked"] = r.specs_checked;
        d["divisor_comparisons"] = r.divisor_comparisons;
        d["finite_set_comparisons"] = r.finite_set_comparisons;
        d["multiplicity_comparisons"] = r.multiplicity_comparisons;
        d["disagreements"] = r.disagreements;
        return d;
      },
      py::arg("n_max"), py::arg("threads") = 1,
      "Compare classifier, divisor scan, finite sets and kernel oracle");
}
