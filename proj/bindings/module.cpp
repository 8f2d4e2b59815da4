#include "wg/catalan.hpp"
#include "wg/errors.hpp"
#include "wg/exact.hpp"
#include "wg/graph.hpp"
#include "wg/harness.hpp"
#include "wg/process.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wg;

namespace {

py::object py_int(const Int &v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object py_fraction(const Rat &v) {
    return py::module_::import("fractions").attr("Fraction")(rat_to_string(v));
}

Rat rat_from_obj(const py::object &obj) {
    return parse_rational(py::str(obj).cast<std::string>());
}

Partition partition_from_list(const std::vector<int> &parts) { return Partition(parts); }

Permutation perm_from_obj(const py::object &obj, int degree_hint) {
    if (py::isinstance<py::str>(obj))
        return parse_permutation(obj.cast<std::string>(), degree_hint);
    return Permutation(obj.cast<std::vector<int>>());
}

Permutation pad_degree(const Permutation &p, int m) {
    std::vector<int> img = p.one_line();
    for (int i = p.degree() + 1; i <= m; ++i)
        img.push_back(i);
    return Permutation(std::move(img));
}

Pairing pairing_from_obj(const py::object &obj) {
    if (py::isinstance<py::str>(obj))
        return parse_pairing(obj.cast<std::string>());
    auto pairs = obj.cast<std::vector<std::pair<int, int>>>();
    std::vector<int> partner(2 * pairs.size(), 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > static_cast<int>(partner.size()) ||
            b > static_cast<int>(partner.size()))
            throw DomainError("pairing: entry out of range");
        partner[a - 1] = b;
        partner[b - 1] = a;
    }
    return Pairing(std::move(partner));
}

py::dict table_to_dict(const WgTable &table) {
    py::dict out;
    for (int k = 0; k <= table.n; ++k)
        for (const auto &[klass, value] : table.levels[k]) {
            py::tuple key(klass.parts().size());
            for (size_t i = 0; i < klass.parts().size(); ++i)
                key[i] = klass.parts()[i];
            out[key] = py_fraction(value);
        }
    return out;
}

py::list report_to_pylist(const std::vector<BoundCheckResult> &rows) {
    py::list out;
    for (const auto &r : rows) {
        py::dict d;
        d["claim"] = r.claim;
        d["n"] = r.n;
        d["N"] = r.N;
        d["label"] = r.label;
        d["exact"] = r.exact;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["satisfied"] = r.satisfied;
        d["hypothesis_met"] = r.hypothesis_met;
        d["slack_ratio"] = r.slack_ratio;
        d["note"] = r.note;
        out.append(std::move(d));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Weingarten calculus: path counting, exact values, the "
              "Weingarten process and bound certification";

    py::register_exception<ParseError>(m, "WgParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "WgDomainError", PyExc_ValueError);
    py::register_exception<CapError>(m, "WgCapError", PyExc_OverflowError);
    py::register_exception<SingularError>(m, "WgSingularError", PyExc_ArithmeticError);

    m.def("catalan", [](int k) { return py_int(catalan(k)); }, py::arg("k"),
          "Exact k-th Catalan number");
    m.def("moebius", [](const std::vector<int> &parts) {
              return py_int(moebius(partition_from_list(parts)));
          },
          py::arg("parts"), "Signed Moebius value of a cycle type");
    m.def("catalan_quotient_max",
          [](int k) { return py_fraction(catalan_quotient_max(k)); }, py::arg("k"));

    m.def("norm", [](const py::object &sigma) { return perm_from_obj(sigma, 0).norm(); },
          py::arg("sigma"), "n minus the number of cycles");
    m.def("cycle_type", [](const py::object &sigma) {
              return perm_from_obj(sigma, 0).cycle_type().parts();
          },
          py::arg("sigma"));
    m.def("compose", [](const py::object &a, const py::object &b) {
              Permutation pa = perm_from_obj(a, 0);
              Permutation pb = perm_from_obj(b, 0);
              int m_deg = std::max(pa.degree(), pb.degree());
              return compose(pad_degree(pa, m_deg), pad_degree(pb, m_deg)).one_line();
          },
          py::arg("a"), py::arg("b"), "(a*b)(i) = a(b(i)), one-line output");
    m.def("coset_type", [](const py::object &pi) {
              return pairing_from_obj(pi).coset_type().parts();
          },
          py::arg("pi"));

    m.def("count_paths_unitary",
          [](const py::object &sigma, int g) {
              return py_int(count_paths_unitary(perm_from_obj(sigma, 0), g));
          },
          py::arg("sigma"), py::arg("g") = 0);
    m.def("count_paths_unitary_class",
          [](const std::vector<int> &parts, int g) {
              return py_int(count_paths_unitary(partition_from_list(parts), g));
          },
          py::arg("parts"), py::arg("g") = 0);
    m.def("count_paths_orthogonal",
          [](const py::object &pi, int g1, int g2) {
              return py_int(count_paths_orthogonal(pairing_from_obj(pi), g1, g2));
          },
          py::arg("pi"), py::arg("g1") = 0, py::arg("g2") = 0);

    m.def("wg_unitary",
          [](int n, const py::object &N, const std::string &method) {
              WgTable t = method == "gram" ? wg_unitary_gram(n, rat_from_obj(N))
                                           : wg_unitary_recursion(n, rat_from_obj(N));
              return table_to_dict(t);
          },
          py::arg("n"), py::arg("N"), py::arg("method") = "recursion",
          "Exact table {cycle_type_tuple: Fraction} for all levels <= n");
    m.def("wg_orthogonal",
          [](int n, const py::object &N) {
              return table_to_dict(wg_orthogonal_gram(n, rat_from_obj(N)));
          },
          py::arg("n"), py::arg("N"));
    m.def("wg_symplectic_magnitudes",
          [](int n, long N) { return table_to_dict(wg_symplectic_magnitudes(n, Int(N))); },
          py::arg("n"), py::arg("N"), "Magnitudes |Wg^SP_N| = |Wg^O_{2N}|; signs unresolved");
    m.def("wg_full_cycle",
          [](int n, const py::object &N) { return py_fraction(wg_full_cycle(n, rat_from_obj(N))); },
          py::arg("n"), py::arg("N"));
    m.def("wg_unitary_series",
          [](const py::object &sigma, const py::object &N, int g_max) {
              SeriesApproximation s =
                  wg_unitary_series(perm_from_obj(sigma, 0), rat_from_obj(N), g_max);
              return py::make_tuple(py_fraction(s.partial), py_fraction(s.tail));
          },
          py::arg("sigma"), py::arg("N"), py::arg("g_max") = 6,
          "(partial, tail): |N^{n+|s|} Wg - partial| <= tail");

    m.def("sample_trace",
          [](const std::string &group, const py::object &start, std::uint64_t seed) {
              Rng rng = Rng::for_stream(seed, 0);
              ProcessTrace trace;
              if (parse_group(group) == MatrixGroup::Unitary) {
                  if (py::isinstance<py::str>(start))
                      trace = run_wp_unitary(parse_permutation(start.cast<std::string>()), rng);
                  else
                      trace = run_wp_unitary(partition_from_list(start.cast<std::vector<int>>()),
                                             rng);
              } else {
                  if (py::isinstance<py::str>(start))
                      trace = run_wp_orthogonal(parse_pairing(start.cast<std::string>()), rng);
                  else
                      trace = run_wp_orthogonal(
                          partition_from_list(start.cast<std::vector<int>>()), rng);
              }
              py::list rows;
              for (size_t t = 0; t < trace.level.size(); ++t) {
                  py::dict d;
                  d["t"] = t;
                  d["n"] = trace.level[t];
                  d["state"] = trace.orthogonal ? to_string(trace.pair_states[t])
                                                : to_cycle_string(trace.perm_states[t]);
                  d["L"] = trace.longest[t];
                  d["C"] = trace.pivot_len[t];
                  d["pivotal"] = static_cast<bool>(trace.pivotal[t]);
                  rows.append(std::move(d));
              }
              return rows;
          },
          py::arg("group"), py::arg("start"), py::arg("seed") = 1,
          "One trajectory as a list of per-step dicts; deterministic in the seed");

    m.def("estimate",
          [](const std::string &stat, const std::vector<int> &lam, long samples,
             std::uint64_t seed, const std::string &exponent, int i, int t) {
              Partition lambda = partition_from_list(lam);
              EstimatorReport rep;
              if (stat == "Lsum")
                  rep = estimate_L_power_sum(lambda,
                                             exponent == "1" ? PowerExponent::One
                                                             : PowerExponent::ThreeHalves,
                                             samples, seed);
              else if (stat == "T")
                  rep = estimate_time_to_halve(lambda, samples, seed);
              else if (stat == "Titail")
                  rep = estimate_Ti_tail(lambda, i, t, samples, seed);
              else
                  throw ParseError("estimate: unknown stat '" + stat + "'");
              py::dict d;
              d["estimate"] = rep.estimate;
              d["std_error"] = rep.std_error;
              d["samples"] = rep.samples;
              d["seed"] = rep.seed;
              d["hypotheses_met"] = rep.hypotheses_met;
              d["flag"] = rep.flag;
              return d;
          },
          py::arg("stat"), py::arg("lam"), py::arg("samples") = 1000, py::arg("seed") = 1,
          py::arg("exponent") = "3/2", py::arg("i") = 0, py::arg("t") = 20);

    m.def("verify",
          [](const std::string &claim, int n, const py::object &N, long samples,
             std::uint64_t seed, const std::vector<int> &lam) {
              std::vector<BoundCheckResult> rows;
              if (claim == "main")
                  rows = check_theorem_main(n, rat_from_obj(N));
              else if (claim == "orth")
                  rows = check_theorem_orthogonal(n, rat_from_obj(N));
              else if (claim == "small")
                  rows = check_small_perm(n, 2, {rat_from_obj(N)});
              else if (claim == "log")
                  rows = check_log_bound(n, rat_from_obj(N));
              else if (claim == "paths")
                  rows = check_path_ratio_bounds(n, samples, seed);
              else if (claim == "process")
                  rows = check_process(partition_from_list(lam), samples, seed);
              else
                  throw ParseError("verify: unknown claim '" + claim + "'");
              return report_to_pylist(rows);
          },
          py::arg("claim"), py::arg("n") = 0, py::arg("N") = py::str("1"),
          py::arg("samples") = 1000, py::arg("seed") = 1,
          py::arg("lam") = std::vector<int>{});

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
