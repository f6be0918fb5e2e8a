// Python bindings: a thin layer over the C++ core for interactive use and
// the smoke tests. Exact integers cross the boundary as Python ints (via
// their decimal string), everything else as native floats/dicts.

#include "limdist/cases.hpp"
#include "limdist/edge.hpp"
#include "limdist/expansion.hpp"
#include "limdist/hypothesis.hpp"
#include "limdist/sampler.hpp"
#include "limdist/tables.hpp"
#include "limdist/validate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace limdist;

namespace {

py::int_ to_py(const Int& v) { return py::cast<py::int_>(py::str(v.get_str())); }

py::list row_counts(const std::string& case_tag, int n) {
    const ExactTable t = length_counts_table(case_from_name(case_tag), n);
    py::list out;
    for (int l = 1; l <= n; ++l) out.append(to_py(t.count(n, l)));
    return out;
}

py::int_ exact_count(const std::string& case_tag, int n, int l) {
    return to_py(length_counts_table(case_from_name(case_tag), n).count(n, l));
}

py::dict sample_histogram(const std::string& case_tag, int n, long long samples,
                          std::uint64_t seed, int threads) {
    const Histogram h = simulate_lengths(case_from_name(case_tag), n, samples, seed, threads);
    py::dict out;
    for (const auto& [l, c] : h.counts) out[py::int_(l)] = py::int_(c);
    return out;
}

py::list validate(const std::string& suite, const std::string& data_dir, int threads) {
    py::list out;
    for (const CheckResult& r : run_validation_suite(suite, data_dir, threads)) {
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["suite"] = r.suite;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_limdist, m) {
    m.doc() = "Longest monotone subsequences of random involutions: exact finite-n "
              "distributions, soft/hard-edge limit laws, and asymptotic expansions";

    m.attr("CASES") = py::make_tuple("incr-fpf", "decr-fpf", "inv");

    m.def("exact_count", &exact_count, py::arg("case"), py::arg("n"), py::arg("l"),
          "Exact number of size-n involutions of the case with (half-)length l");
    m.def("row_counts", &row_counts, py::arg("case"), py::arg("n"),
          "Exact counts for l = 1..n as a list of Python ints");

    m.def("tracy_widom_cdf", &tracy_widom_cdf, py::arg("beta"), py::arg("t"),
          "Soft-edge limit law F_beta(t), beta in {1, 2, 4}");
    m.def("tw_derivative", &tw_derivative, py::arg("beta"), py::arg("k"), py::arg("t"),
          "k-th derivative of F_beta, k = 1..7");
    m.def("tw_moment", &tw_moment, py::arg("beta"), py::arg("j"),
          "Moment of the limit law, int t^j dF_beta(t)");
    m.def("hard_edge_gap", &hard_edge_gap, py::arg("beta"), py::arg("s"), py::arg("a"),
          py::arg("quad_nodes") = 160, "Hard-edge gap probability E_beta(s; a)");
    m.def(
        "poissonized_cdf",
        [](const std::string& c, int l, double r) {
            return poissonized_cdf(case_from_name(c), l, r);
        },
        py::arg("case"), py::arg("l"), py::arg("r"),
        "Poissonized length CDF at intensity r via the hard edge");

    m.def(
        "cdf_expansion",
        [](const std::string& c, long n, long l, int m) {
            return cdf_expansion(case_from_name(c), n, l, m);
        },
        py::arg("case"), py::arg("n"), py::arg("l"), py::arg("m"),
        "Finite-n CDF expansion truncated after order m");
    m.def(
        "pdf_expansion",
        [](const std::string& c, long n, long l, int m) {
            return pdf_expansion(case_from_name(c), n, l, m);
        },
        py::arg("case"), py::arg("n"), py::arg("l"), py::arg("m"),
        "Finite-n density expansion truncated after order m");
    m.def(
        "mean_variance",
        [](const std::string& c, long n, int m) {
            const MeanVar mv = mean_variance_expansion(case_from_name(c), n, m);
            return py::make_tuple(mv.mean, mv.variance);
        },
        py::arg("case"), py::arg("n"), py::arg("m"),
        "(mean, variance) of the length expansion truncated after order m");

    m.def("sample_histogram", &sample_histogram, py::arg("case"), py::arg("n"),
          py::arg("samples"), py::arg("seed"), py::arg("threads") = 1,
          "Monte Carlo histogram {observed length: count}");

    m.def(
        "reconstruct_coefficients",
        [](double z, int j, long long max_den) {
            return reconstruct_coefficients(z, j, max_den).to_json();
        },
        py::arg("z"), py::arg("j"), py::arg("max_den") = 10000,
        "Rational reconstruction report of the determinant-expansion ansatz (JSON)");

    m.def("validate", &validate, py::arg("suite") = "all", py::arg("data_dir") = "data",
          py::arg("threads") = 1, "Run the validation suite; list of per-check dicts");
}
