// Copyright 2026 The chandisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chandisc/channels.h"
#include "chandisc/discrim.h"
#include "chandisc/error.h"
#include "chandisc/oracle.h"
#include "chandisc/perfect.h"
#include "chandisc/sphereopt.h"

namespace py = pybind11;
using namespace chandisc;

namespace {

using CArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw Error(ErrorKind::DimensionMismatch, "expected a square matrix");
    }
    size_t d = static_cast<size_t>(a.shape(0));
    return ComplexMatrix(d, std::vector<complex>(a.data(), a.data() + d * d));
}

CArray from_matrix(const ComplexMatrix &m) {
    size_t d = m.dim();
    CArray out({d, d});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

KrausChannel to_kraus(const std::vector<CArray> &ops) {
    std::vector<ComplexMatrix> mats;
    for (const auto &op : ops) {
        mats.push_back(to_matrix(op));
    }
    return KrausChannel(std::move(mats));
}

std::vector<CArray> from_kraus(const KrausChannel &ch) {
    std::vector<CArray> out;
    for (const auto &op : ch.ops()) {
        out.push_back(from_matrix(op));
    }
    return out;
}

RealMatrix3 to_matrix3(const RArray &a) {
    if (a.ndim() != 2 || a.shape(0) != 3 || a.shape(1) != 3) {
        throw Error(ErrorKind::DimensionMismatch, "expected a 3x3 matrix");
    }
    RealMatrix3 m;
    std::copy(a.data(), a.data() + 9, m.a.begin());
    return m;
}

RArray from_matrix3(const RealMatrix3 &m) {
    RArray out({3, 3});
    std::copy(m.a.begin(), m.a.end(), out.mutable_data());
    return out;
}

py::dict result_dict(const DiscriminationResult &r) {
    py::dict d;
    d["p_error"] = r.p_error;
    d["regime"] = std::string(regime_name(r.regime));
    d["optimal_bloch"] = r.optimal_bloch ? py::cast(*r.optimal_bloch) : py::none();
    d["trace_norm_at_opt"] = r.trace_norm_at_opt;
    return d;
}

py::dict verdict_dict(const PerfectVerdict &v) {
    py::dict d;
    d["verdict"] = std::string(verdict_name(v.distinguishable));
    d["strategy"] = std::string(strategy_name(v.strategy));
    d["method"] = std::string(method_name(v.method));
    d["certificate"] = v.certificate ? py::cast(*v.certificate) : py::none();
    d["residual"] = v.residual;
    return d;
}

}  // namespace

PYBIND11_MODULE(_chandisc, m) {
    m.doc() = "Minimum-error discrimination of quantum channels.";
    py::register_exception<Error>(m, "ChandiscError", PyExc_ValueError);

    m.def("named_channel", [](const std::string &name, double param) { return from_kraus(named_channel(name, param)); },
          py::arg("name"), py::arg("param"), "Kraus operators of a named qubit channel.");
    m.def(
        "kraus_to_affine",
        [](const std::vector<CArray> &ops) {
            auto a = kraus_to_affine(to_kraus(ops));
            return py::make_tuple(from_matrix3(a.m()), py::cast(a.c()));
        },
        py::arg("ops"), "Bloch representation (M, c) of a qubit channel.");
    m.def(
        "pauli_to_affine",
        [](const PauliProbs &q) {
            auto a = pauli_to_affine(GpcChannel::pauli(q));
            return py::make_tuple(from_matrix3(a.m()), py::cast(a.c()));
        },
        py::arg("q"));
    m.def(
        "maximize_on_sphere",
        [](const RArray &mm, const Vec3 &c) {
            auto r = maximize_on_sphere(to_matrix3(mm), c);
            py::dict d;
            d["value"] = r.value;
            d["argmax"] = r.argmax;
            d["multiplier"] = r.multiplier;
            d["hard_case"] = r.hard_case;
            return d;
        },
        py::arg("m"), py::arg("c"), "Global maximum of |m r + c| over unit vectors r.");
    m.def(
        "grid_oracle", [](const RArray &mm, const Vec3 &c, size_t n) { return grid_oracle(to_matrix3(mm), c, n); },
        py::arg("m"), py::arg("c"), py::arg("n") = 100000);
    m.def(
        "min_error_probability",
        [](const RArray &m1, const Vec3 &c1, const RArray &m2, const Vec3 &c2, double p1) {
            return result_dict(min_error_probability(AffineChannel(to_matrix3(m1), c1),
                                                     AffineChannel(to_matrix3(m2), c2), PriorPair::from_p1(p1)));
        },
        py::arg("m1"), py::arg("c1"), py::arg("m2"), py::arg("c2"), py::arg("p1") = 0.5,
        "Minimum error probability for two qubit channels in Bloch form.");
    m.def(
        "min_error_kraus",
        [](const std::vector<CArray> &e1, const std::vector<CArray> &e2, double p1) {
            return result_dict(min_error_probability(kraus_to_affine(to_kraus(e1)), kraus_to_affine(to_kraus(e2)),
                                                     PriorPair::from_p1(p1)));
        },
        py::arg("e1"), py::arg("e2"), py::arg("p1") = 0.5);
    m.def(
        "pauli_closed_form",
        [](const PauliProbs &q1, const PauliProbs &q2, double p1) {
            return result_dict(pauli_closed_form(q1, q2, PriorPair::from_p1(p1)));
        },
        py::arg("q1"), py::arg("q2"), py::arg("p1") = 0.5);
    m.def(
        "pauli_sacchi_form",
        [](const PauliProbs &q1, const PauliProbs &q2, double p1) {
            return pauli_sacchi_form(q1, q2, PriorPair::from_p1(p1));
        },
        py::arg("q1"), py::arg("q2"), py::arg("p1") = 0.5);
    m.def(
        "unitary_perfect",
        [](const CArray &u1, const CArray &u2) { return verdict_dict(unitary_perfect(to_matrix(u1), to_matrix(u2))); },
        py::arg("u1"), py::arg("u2"));
    m.def(
        "gpc_perfect_entangled",
        [](size_t d, const std::vector<double> &q1, const std::vector<double> &q2) {
            return verdict_dict(gpc_perfect_entangled(GpcChannel::weyl(d, q1), GpcChannel::weyl(d, q2)));
        },
        py::arg("d"), py::arg("q1"), py::arg("q2"), "Entangled-probe decision for Weyl-basis channels.");
    m.def(
        "qubit_product_perfect",
        [](const std::vector<CArray> &e1, const std::vector<CArray> &e2) {
            return verdict_dict(qubit_product_perfect(to_kraus(e1), to_kraus(e2)));
        },
        py::arg("e1"), py::arg("e2"));
    m.def(
        "sampled_min_error",
        [](const std::vector<CArray> &e1, const std::vector<CArray> &e2, double p1, size_t n, bool entangled,
           uint64_t seed) {
            auto r = sampled_min_error(to_kraus(e1), to_kraus(e2), PriorPair::from_p1(p1), n, entangled, seed);
            py::dict d;
            d["p_error_estimate"] = r.p_error_estimate;
            d["best_input"] = r.best_input;
            d["samples"] = r.samples;
            d["entangled"] = r.entangled;
            return d;
        },
        py::arg("e1"), py::arg("e2"), py::arg("p1") = 0.5, py::arg("n") = 10000, py::arg("entangled") = false,
        py::arg("seed") = 0, "Brute-force Helstrom error over random and fixed probe states.");
}
