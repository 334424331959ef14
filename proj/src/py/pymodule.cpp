#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mq/error.hpp"
#include "mq/families.hpp"
#include "mq/io.hpp"
#include "mq/quiver.hpp"
#include "mq/rational.hpp"
#include "mq/rtrivial.hpp"

namespace py = pybind11;

namespace {

struct PyMonoid {
  mq::Analysis A;

  explicit PyMonoid(mq::MonoidTable M) : A(mq::analyze(std::move(M))) {}

  int size() const { return A.M.n; }
  int identity() const { return A.M.identity; }
  int mul(int a, int b) const { return A.M.at(a, b); }
  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(A.M.n, std::vector<int>(A.M.n));
    for (int a = 0; a < A.M.n; ++a)
      for (int b = 0; b < A.M.n; ++b) t[a][b] = A.M.at(a, b);
    return t;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (int m = 0; m < A.M.n; ++m) out.push_back(A.M.label(m));
    return out;
  }

  py::dict classify() const {
    py::dict d;
    for (auto& [name, val] : mq::flag_list(A.flags)) d[name.c_str()] = val;
    return d;
  }

  py::dict green_summary() const {
    py::dict d;
    d["r_classes"] = A.green.numR;
    d["l_classes"] = A.green.numL;
    d["j_classes"] = A.green.numJ;
    d["idempotents"] = mq::idempotents(A.M);
    return d;
  }

  py::dict lattice() const {
    py::dict d;
    d["size"] = A.lattice.k;
    d["idempotents"] = A.lattice.idem;
    d["sigma"] = A.lattice.sigma;
    std::vector<std::vector<bool>> leq(A.lattice.k,
                                       std::vector<bool>(A.lattice.k));
    for (int a = 0; a < A.lattice.k; ++a)
      for (int b = 0; b < A.lattice.k; ++b) leq[a][b] = A.lattice.le(a, b);
    d["leq"] = leq;
    d["moebius"] = A.lattice.mu;
    return d;
  }

  py::dict quiver(const std::string& engine, int jobs,
                  std::optional<std::int64_t> prime, bool check) const {
    auto e = mq::engine_from_name(engine);
    if (!e) throw mq::Error(mq::ErrorKind::BadInput, "unknown engine");
    mq::QuiverOptions opt;
    opt.jobs = jobs;
    opt.prime = prime;
    mq::QuiverGraph Q = mq::quiver(A, *e, opt);
    if (check)
      for (mq::Engine other : mq::applicable_engines(A.flags))
        if (!(mq::quiver(A, other, opt) == Q))
          throw mq::Error(mq::ErrorKind::Internal, "engine disagreement");
    py::list verts;
    for (const auto& v : Q.vertices) {
      py::dict jv;
      jv["lattice"] = v.lattice;
      jv["irrep"] = v.irrep;
      jv["degree"] = v.degree;
      jv["label"] = v.label;
      verts.append(jv);
    }
    py::dict d;
    d["vertices"] = verts;
    d["arrows"] = Q.arrows;
    return d;
  }

  std::vector<std::vector<long long>> cartan() const {
    return mq::cartan(A.M, A.green, A.lattice).c;
  }

  std::vector<int> projective_dimensions() const {
    auto T = mq::tilde_L_classes(A.M, A.green, A.lattice);
    std::vector<int> dims;
    for (const auto& cls : T.members)
      dims.push_back(static_cast<int>(cls.size()));
    return dims;
  }

  bool oracle_check() const {
    mq::QuiverGraph Q = mq::quiver(A);
    return mq::quiver_ext1_oracle(A) == Q && mq::quiver_gabriel_oracle(A) == Q;
  }

  std::string to_json() const { return mq::monoid_to_json(A.M); }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quivers and structure of finite monoid algebras";

  py::register_exception<mq::Error>(m, "MonoidError");

  py::class_<PyMonoid>(m, "Monoid")
      .def(py::init([](const std::vector<std::vector<int>>& table) {
             return PyMonoid(mq::from_table(table));
           }),
           py::arg("table"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return PyMonoid(mq::monoid_from_json(text));
                  })
      .def_static(
          "family",
          [](const std::string& name, const std::vector<std::string>& args) {
            return PyMonoid(mq::gen_family(name, args));
          },
          py::arg("name"), py::arg("args") = std::vector<std::string>{})
      .def_property_readonly("n", &PyMonoid::size)
      .def_property_readonly("identity", &PyMonoid::identity)
      .def("mul", &PyMonoid::mul)
      .def("table", &PyMonoid::table)
      .def("labels", &PyMonoid::labels)
      .def("classify", &PyMonoid::classify)
      .def("green", &PyMonoid::green_summary)
      .def("lattice", &PyMonoid::lattice)
      .def("quiver", &PyMonoid::quiver, py::arg("engine") = "auto",
           py::arg("jobs") = 1, py::arg("prime") = std::nullopt,
           py::arg("check") = false)
      .def("cartan", &PyMonoid::cartan)
      .def("projective_dimensions", &PyMonoid::projective_dimensions)
      .def("oracle_check", &PyMonoid::oracle_check)
      .def("to_json", &PyMonoid::to_json);

  m.def("families", &mq::family_names, "names of the built-in families");
}
