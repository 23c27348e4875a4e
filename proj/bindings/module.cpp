#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqid/binary.hpp"
#include "sqid/catalecticant.hpp"
#include "sqid/contact.hpp"
#include "sqid/rng.hpp"
#include "sqid/secant.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
      return d;
    }
    case nlohmann::ordered_json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(json_to_py(v));
      return l;
    }
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

py::object report_to_py(const std::string& json_text) {
  return json_to_py(nlohmann::ordered_json::parse(json_text));
}

sqid::HessianMode hessian_from_string(const std::string& s) {
  if (s == "combo") return sqid::HessianMode::RandomCombination;
  if (s == "full") return sqid::HessianMode::FullStack;
  throw sqid::Error("unknown hessian mode: " + s);
}

std::vector<std::vector<sqid::fe_t>> matrix_to_lists(const sqid::FMatrix& m) {
  std::vector<std::vector<sqid::fe_t>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].assign(m.row(i).begin(), m.row(i).end());
  }
  return out;
}

std::vector<sqid::HomogeneousPoly> factors_from_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
    std::uint32_t p) {
  sqid::Modulus mod(p);
  auto basis = sqid::GradedBasis::shared(1, 1);
  std::vector<sqid::HomogeneousPoly> factors;
  factors.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    factors.push_back(sqid::HomogeneousPoly::from_coeffs(
        basis, mod, {mod.reduce(a), mod.reduce(b)}));
  }
  return factors;
}

std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact modular certification of dimension and orthogonal identifiability "
      "for sums-of-squares decompositions of homogeneous forms.";

  py::register_exception<sqid::Error>(m, "Error");

  py::class_<sqid::HomogeneousPoly>(m, "Poly")
      .def_static(
          "from_terms",
          [](int n, int d, std::uint32_t p,
             const std::vector<std::pair<std::vector<int>, std::int64_t>>&
                 terms) {
            sqid::Modulus mod(p);
            sqid::HomogeneousPoly f = sqid::HomogeneousPoly::zero(n, d, mod);
            for (const auto& [exp, c] : terms) {
              f.add_term(sqid::Monomial(exp), mod.reduce(c));
            }
            return f;
          },
          py::arg("n"), py::arg("d"), py::arg("p"), py::arg("terms"),
          "Build a polynomial from (exponent vector, coefficient) pairs.")
      .def_static("from_json", &sqid::HomogeneousPoly::parse_json,
                  py::arg("text"))
      .def_static(
          "random",
          [](int n, int d, std::uint32_t p, std::uint64_t seed) {
            sqid::Modulus mod(p);
            sqid::ResidueStream rng(seed);
            return sqid::HomogeneousPoly::random(n, d, mod, rng);
          },
          py::arg("n"), py::arg("d"), py::arg("p"), py::arg("seed") = 0,
          "Dense polynomial with seeded uniform coefficients.")
      .def_property_readonly("n", &sqid::HomogeneousPoly::n)
      .def_property_readonly("degree", &sqid::HomogeneousPoly::degree)
      .def_property_readonly(
          "p", [](const sqid::HomogeneousPoly& f) { return f.modulus().p(); })
      .def("coeffs",
           [](const sqid::HomogeneousPoly& f) {
             return std::vector<sqid::fe_t>(f.coeffs().begin(),
                                            f.coeffs().end());
           })
      .def("to_json", &sqid::HomogeneousPoly::to_json)
      .def("is_zero", &sqid::HomogeneousPoly::is_zero)
      .def("__mul__",
           [](const sqid::HomogeneousPoly& f, const sqid::HomogeneousPoly& g) {
             return mul(f, g);
           })
      .def("__add__",
           [](const sqid::HomogeneousPoly& f, const sqid::HomogeneousPoly& g) {
             return f + g;
           })
      .def("__eq__",
           [](const sqid::HomogeneousPoly& f, const sqid::HomogeneousPoly& g) {
             return f == g;
           });

  m.def("contract", &sqid::contract, py::arg("dual"), py::arg("f"),
        "Apolar contraction of f by a dual form.");

  m.def(
      "expected_dim",
      [](int n, int d, int r) { return sqid::expected_dim({n, d, r}); },
      py::arg("n"), py::arg("d"), py::arg("r"));
  m.def("generic_rank", &sqid::generic_rank, py::arg("d"), py::arg("n"));
  m.def(
      "square_space_dim",
      [](int n, int d) { return sqid::SecantParams{n, d, 1}.square_space_dim(); },
      py::arg("n"), py::arg("d"));
  m.def(
      "ambient_dim",
      [](int n, int d) { return sqid::SecantParams{n, d, 1}.ambient_dim(); },
      py::arg("n"), py::arg("d"));

  m.def(
      "terracini_rank",
      [](const std::vector<sqid::HomogeneousPoly>& f_list) {
        return sqid::terracini_matrix(f_list).rank();
      },
      py::arg("f_list"));

  m.def(
      "dimension_sample",
      [](int n, int d, int r, std::uint32_t p, std::uint64_t seed, int trials) {
        sqid::Modulus mod(p);
        return report_to_py(
            sqid::secant_dim_sample({n, d, r}, mod, seed, trials).to_json());
      },
      py::arg("n"), py::arg("d"), py::arg("r"), py::arg("p") = 101,
      py::arg("seed") = 0, py::arg("trials") = 3);

  m.def(
      "generic_identifiability",
      [](int n, int d, int r, std::uint32_t p, std::uint64_t seed, int trials,
         const std::string& hessian) {
        sqid::Modulus mod(p);
        return report_to_py(
            sqid::generic_identifiability({n, d, r}, mod, seed, trials,
                                          hessian_from_string(hessian))
                .to_json());
      },
      py::arg("n"), py::arg("d"), py::arg("r"), py::arg("p") = 101,
      py::arg("seed") = 0, py::arg("trials") = 3, py::arg("hessian") = "combo");

  m.def(
      "specific_identifiability",
      [](const std::vector<sqid::HomogeneousPoly>& f_list,
         const std::string& hessian, std::uint64_t seed) {
        return report_to_py(
            sqid::specific_identifiability(f_list, hessian_from_string(hessian),
                                           seed)
                .to_json());
      },
      py::arg("f_list"), py::arg("hessian") = "combo", py::arg("seed") = 0);

  m.def(
      "hyperplane_count",
      [](const std::vector<sqid::HomogeneousPoly>& f_list) {
        return sqid::hyperplane_basis(f_list).size();
      },
      py::arg("f_list"));

  m.def(
      "contact_locus_dim",
      [](const std::vector<sqid::HomogeneousPoly>& f_list,
         const std::string& hessian, std::uint64_t seed) {
        return sqid::contact_locus_dim(sqid::make_contact_data(f_list),
                                       hessian_from_string(hessian), seed);
      },
      py::arg("f_list"), py::arg("hessian") = "full", py::arg("seed") = 0);

  m.def(
      "middle_cat_rank",
      [](const sqid::HomogeneousPoly& f) { return sqid::middle_cat_rank(f); },
      py::arg("f"));
  m.def(
      "catalecticant_matrix",
      [](const sqid::HomogeneousPoly& f, int i) {
        return matrix_to_lists(sqid::catalecticant(f, i).matrix);
      },
      py::arg("f"), py::arg("i"));
  m.def("containment_check", &sqid::containment_check, py::arg("f_list"),
        py::arg("H"));

  m.def(
      "bdp_bound_check",
      [](int n, int r, int d) {
        sqid::BdpCheck c = sqid::bdp_bound_check(n, r, d);
        py::dict out;
        out["applicable"] = c.applicable;
        out["satisfied"] = c.satisfied;
        out["certifies"] = c.certifies();
        return out;
      },
      py::arg("n"), py::arg("r"), py::arg("d"));
  m.def("bop2_bound_check", &sqid::bop2_bound_check, py::arg("n"), py::arg("r"),
        py::arg("d"));

  m.def(
      "binary_orbits",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
         std::uint32_t p) {
        std::vector<sqid::HomogeneousPoly> factors =
            factors_from_pairs(pairs, p);
        sqid::HomogeneousPoly product = sqid::HomogeneousPoly::monomial_form(
            sqid::Monomial({0, 0}), factors.front().modulus());
        for (const auto& l : factors) product = mul(product, l);
        py::list rows;
        for (const sqid::Decomposition& dec :
             sqid::orbit_decompositions(factors)) {
          py::dict row;
          py::list summands;
          for (const auto& f : dec.summands) {
            summands.append(std::vector<sqid::fe_t>(f.coeffs().begin(),
                                                    f.coeffs().end()));
          }
          row["summands"] = summands;
          row["verifies"] = sqid::verify_decomposition(product, dec);
          row["gram_hash"] = hash_hex(sqid::gram_invariant(dec).hash());
          rows.append(row);
        }
        return rows;
      },
      py::arg("factors"), py::arg("p") = 101,
      "Orbit representatives of two-square decompositions of a factored "
      "binary form; factors are [a, b] pairs meaning a*x + b*y.");

  m.def(
      "random_orthogonal",
      [](int r, std::uint32_t p, std::uint64_t seed) {
        sqid::Modulus mod(p);
        return matrix_to_lists(sqid::random_orthogonal(r, mod, seed));
      },
      py::arg("r"), py::arg("p") = 101, py::arg("seed") = 0);
}
