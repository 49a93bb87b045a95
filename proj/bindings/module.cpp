#include "torictool/monoid.hpp"
#include "torictool/report.hpp"
#include "torictool/toric.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace torictool;

namespace {

RunOptions options_from_kwargs(long max_degree, long precision, bool strict, bool diagonalizable,
                               int coordinate, const std::string &time, const std::string &theta,
                               const std::map<std::string, std::string> &symbol_values) {
    RunOptions o;
    o.max_degree = Int(max_degree);
    o.precision = precision;
    o.strict = strict;
    o.diagonalizable = diagonalizable;
    o.coordinate = coordinate;
    o.time = time;
    o.theta = theta;
    o.symbol_values = symbol_values;
    return o;
}

std::string run_json(const std::string &command, const std::string &primary,
                     const std::optional<std::string> &phases, long max_degree, long precision,
                     bool strict, bool diagonalizable, int coordinate, const std::string &time,
                     const std::string &theta, const std::map<std::string, std::string> &symbol_values) {
    RunOptions o = options_from_kwargs(max_degree, precision, strict, diagonalizable, coordinate, time,
                                       theta, symbol_values);
    return run_command(command, primary, phases, o).dump(2);
}

std::vector<std::vector<long>> to_long_rows(const std::vector<IntVec> &rows) {
    std::vector<std::vector<long>> out;
    for (auto &r : rows) {
        std::vector<long> v;
        for (auto &x : r) v.push_back((long)x);
        out.push_back(std::move(v));
    }
    return out;
}

IntMat rows_to_mat(const std::vector<std::vector<long>> &rows, int cols_hint) {
    if (rows.empty()) return IntMat(0, cols_hint);
    IntMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

PYBIND11_MODULE(_torictool, m) {
    m.doc() = "toric degree / torsion / resonance workbench";

    m.def("run", &run_json, py::arg("command"), py::arg("input"), py::arg("phases") = py::none(),
          py::arg("max_degree") = 6, py::arg("precision") = 256, py::arg("strict") = false,
          py::arg("diagonalizable") = true, py::arg("coordinate") = 0, py::arg("time") = "1",
          py::arg("theta") = "", py::arg("symbol_values") = std::map<std::string, std::string>{},
          "run a CLI command on file text; returns the JSON report as a string");

    m.def(
        "toric_degree",
        [](const std::string &text) { return toric_analysis(parse_phase_file(text)).degree; },
        py::arg("phase_file_text"));

    m.def(
        "torsion",
        [](const std::string &text) {
            TorsionReport t = torsion(parse_phase_file(text));
            return py::make_tuple((long)t.m, (long)t.q, (long)t.tau);
        },
        py::arg("phase_file_text"), "returns (m, q, tau)");

    m.def(
        "classification",
        [](const std::string &text) { return torsion_kind_name(classify(parse_phase_file(text)).kind); },
        py::arg("phase_file_text"));

    m.def(
        "resonances",
        [](const std::string &text, int j, long max_degree) {
            auto out = enumerate_resonances(parse_phase_file(text), j, Int(max_degree));
            return to_long_rows(out);
        },
        py::arg("phase_file_text"), py::arg("coordinate"), py::arg("max_degree") = 6);

    m.def(
        "hilbert_basis",
        [](const std::vector<std::vector<long>> &equations, int n) {
            auto d = hilbert_basis(rows_to_mat(equations, n));
            return to_long_rows(d.generators);
        },
        py::arg("equations"), py::arg("n"));

    m.def(
        "paper_minimals",
        [](const std::vector<std::vector<long>> &lattice_basis, int n) {
            LatticeBasis L;
            L.ambient = n;
            for (auto &r : lattice_basis) {
                IntVec v;
                for (long x : r) v.push_back(x);
                L.basis.push_back(std::move(v));
            }
            auto mins = paper_minimal_elements(L);
            std::vector<std::vector<long>> out;
            for (auto &mm : mins.elements) {
                std::vector<long> v;
                for (auto &x : mm.element) v.push_back((long)x);
                out.push_back(std::move(v));
            }
            return out;
        },
        py::arg("lattice_basis"), py::arg("n"));

    m.def(
        "cominimals",
        [](const std::vector<std::vector<long>> &lattice_basis, int n, long bound) {
            LatticeBasis L;
            L.ambient = n;
            for (auto &r : lattice_basis) {
                IntVec v;
                for (long x : r) v.push_back(x);
                L.basis.push_back(std::move(v));
            }
            auto mins = paper_minimal_elements(L);
            Int b = bound > 0 ? Int(bound) : default_cominimal_bound(L, mins);
            auto com = cominimal_elements(L, mins, b);
            return py::make_tuple(to_long_rows(com.elements), com.certified);
        },
        py::arg("lattice_basis"), py::arg("n"), py::arg("bound") = 0,
        "bound = 0 selects the default (n+1) * delta * maxdeg search bound");
}
