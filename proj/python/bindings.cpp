#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threedist/errors.hpp"
#include "threedist/farey.hpp"
#include "threedist/json_io.hpp"
#include "threedist/oracle.hpp"
#include "threedist/render.hpp"
#include "threedist/temperament.hpp"
#include "threedist/three_distance.hpp"
#include "threedist/three_gap.hpp"

namespace py = pybind11;
namespace td = threedist;
namespace json = threedist::json;

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
PYBIND11_MODULE(_threedist, m) {
  m.doc() = "Three distance and three gap computations";

  static py::exception<td::Error> error(m, "ThreeDistError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const td::Error& e) {
      py::set_error(error, (std::string(e.kind_name()) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "decompose",
      [](const std::string& alpha, std::int64_t n, int precision) {
        return json::partition(td::decompose(td::real_value(alpha, precision), n)).dump();
      },
      py::arg("alpha"), py::arg("n"), py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "intervals",
      [](const std::string& alpha, std::int64_t n, int precision) {
        return json::intervals(td::interval_sequence(td::real_value(alpha, precision), n)).dump();
      },
      py::arg("alpha"), py::arg("n"), py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "census",
      [](const std::string& alpha, std::int64_t n, int precision) {
        return json::census(td::length_census(td::decompose(td::real_value(alpha, precision), n))).dump();
      },
      py::arg("alpha"), py::arg("n"), py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "brute_lengths",
      [](const std::string& alpha, std::int64_t n) {
        return json::census(td::oracle::brute_lengths(td::real_value(alpha), n)).dump();
      },
      py::arg("alpha"), py::arg("n"));

  m.def(
      "gap_structure",
      [](const std::string& alpha, const std::string& beta, int precision, std::int64_t scan_cap) {
        return json::gap_structure(td::gap_structure(td::real_value(alpha, precision),
                                                     td::parse_unit_ratio(beta), scan_cap))
            .dump();
      },
      py::arg("alpha"), py::arg("beta"), py::arg("precision") = td::kDefaultPrecisionBits,
      py::arg("scan_cap") = td::kDefaultScanCap);

  m.def(
      "hits",
      [](const std::string& alpha, const std::string& beta, std::int64_t i_max, int precision) {
        return td::hits(td::real_value(alpha, precision), td::parse_unit_ratio(beta), i_max);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("i_max"),
      py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "empirical_frequencies",
      [](const std::string& alpha, const std::string& beta, std::int64_t n_indices, int precision) {
        return json::frequencies(td::empirical_frequencies(td::real_value(alpha, precision),
                                                            td::parse_unit_ratio(beta), n_indices))
            .dump();
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n_indices"),
      py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "farey_sequence",
      [](std::int64_t n) {
        std::vector<std::string> out;
        for (const auto& r : td::farey_sequence(n)) out.push_back(r.to_string());
        return out;
      },
      py::arg("n"));

  m.def(
      "farey_neighbors",
      [](const std::string& alpha, std::int64_t n, int precision) {
        const auto location = td::farey_neighbors(td::real_value(alpha, precision), n);
        if (const auto* member = std::get_if<td::ExactMember>(&location)) {
          return json::Json{{"exact_member", json::rational(member->value)}}.dump();
        }
        return json::Json{{"pair", json::farey_pair(std::get<td::FareyPair>(location))}}.dump();
      },
      py::arg("alpha"), py::arg("n"), py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "two_length_orders",
      [](const std::string& alpha, std::int64_t n_max, int precision) {
        return td::two_length_orders(td::real_value(alpha, precision), n_max);
      },
      py::arg("alpha"), py::arg("n_max"), py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "temperament",
      [](const std::string& generator, const std::vector<std::int64_t>& counts, int precision) {
        return json::temperament(td::temperament_report(td::real_value(generator, precision), counts))
            .dump();
      },
      py::arg("generator") = "log2_3_frac",
      py::arg("counts") = std::vector<std::int64_t>{2, 3, 5, 7, 12, 17},
      py::arg("precision") = td::kDefaultPrecisionBits);

  m.def(
      "render_un_map",
      [](std::int64_t n, bool farey_verticals, std::int64_t width, std::int64_t height) {
        return td::render_un_map(td::UnMapSpec::make(n, farey_verticals, width, height));
      },
      py::arg("n"), py::arg("farey_verticals") = false, py::arg("width") = 480,
      py::arg("height") = 480);

  m.def(
      "render_partition_strip",
      [](const std::string& alpha, std::int64_t n, std::int64_t width, int precision) {
        return td::render_partition_strip(td::real_value(alpha, precision), n, width);
      },
      py::arg("alpha"), py::arg("n"), py::arg("width") = 800,
      py::arg("precision") = td::kDefaultPrecisionBits);
}
