#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alopc/cop.hpp"
#include "alopc/error_index.hpp"
#include "alopc/errors.hpp"
#include "alopc/inconsistency.hpp"
#include "alopc/io.hpp"
#include "alopc/pc_matrix.hpp"
#include "alopc/priority.hpp"
#include "alopc/tolerance.hpp"

namespace py = pybind11;
using namespace alopc;

namespace {

std::vector<std::vector<double>> entries_of(const PcMatrix& m) {
  std::vector<std::vector<double>> rows(m.size(), std::vector<double>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(alopc, m) {
  m.doc() = "Pairwise comparison matrices over abelian linearly ordered groups: "
            "priority vectors, inconsistency indices and order-preservation "
            "audits/certificates.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<MismatchError>(m, "MismatchError", base);
  py::register_exception<NoTriadsError>(m, "NoTriadsError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  m.attr("TOL") = kTol;
  m.attr("TRIAD_TOL") = kTriadTol;

  py::enum_<GroupId>(m, "GroupId")
      .value("additive", GroupId::additive)
      .value("multiplicative", GroupId::multiplicative)
      .value("fuzzy_additive", GroupId::fuzzy_additive)
      .value("fuzzy_multiplicative", GroupId::fuzzy_multiplicative);

  py::enum_<Method>(m, "Method")
      .value("ggmm", Method::ggmm)
      .value("gmm", Method::gmm)
      .value("evm", Method::evm)
      .value("external", Method::external);

  py::enum_<CertKind>(m, "CertKind")
      .value("theorem1", CertKind::theorem1)
      .value("theorem2_pop", CertKind::theorem2_pop)
      .value("theorem2_poip", CertKind::theorem2_poip)
      .value("theorem3_pop", CertKind::theorem3_pop)
      .value("theorem3_poip", CertKind::theorem3_poip);

  py::class_<AloGroup, std::unique_ptr<AloGroup, py::nodelete>>(m, "Group")
      .def_static("of", py::overload_cast<std::string_view>(&AloGroup::of),
                  py::return_value_policy::reference, py::arg("name"))
      .def_static("of_id", py::overload_cast<GroupId>(&AloGroup::of),
                  py::return_value_policy::reference, py::arg("id"))
      .def_property_readonly("id", &AloGroup::id)
      .def_property_readonly("name",
                             [](const AloGroup& g) { return std::string(g.name()); })
      .def_property_readonly("identity", &AloGroup::identity)
      .def("contains", &AloGroup::contains, py::arg("a"))
      .def("combine", &AloGroup::combine, py::arg("a"), py::arg("b"))
      .def("inverse", &AloGroup::inverse, py::arg("a"))
      .def("divide", &AloGroup::divide, py::arg("a"), py::arg("b"))
      .def("power", &AloGroup::power, py::arg("a"), py::arg("n"))
      .def("root", &AloGroup::root, py::arg("a"), py::arg("n"))
      .def("norm", &AloGroup::norm, py::arg("a"))
      .def("distance", &AloGroup::distance, py::arg("a"), py::arg("b"))
      .def("to_param", &AloGroup::to_param, py::arg("a"))
      .def("from_param", &AloGroup::from_param, py::arg("t"))
      .def("__repr__",
           [](const AloGroup& g) { return "Group(" + std::string(g.name()) + ")"; });

  py::class_<Triad>(m, "Triad")
      .def_readonly("i", &Triad::i)
      .def_readonly("j", &Triad::j)
      .def_readonly("k", &Triad::k)
      .def("__repr__", [](const Triad& t) {
        return "Triad(" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " +
               std::to_string(t.k) + ")";
      });

  py::class_<ConsistencyWitness>(m, "ConsistencyWitness")
      .def_readonly("triad", &ConsistencyWitness::triad)
      .def_readonly("product", &ConsistencyWitness::product)
      .def_readonly("deviation", &ConsistencyWitness::deviation);

  py::class_<PcMatrix>(m, "PcMatrix")
      .def_static(
          "build",
          [](const std::string& group, const std::vector<std::vector<double>>& rows,
             std::vector<std::string> labels) {
            return PcMatrix::build(AloGroup::of(group), rows, std::move(labels));
          },
          py::arg("group"), py::arg("entries"),
          py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "from_weights",
          [](const std::string& group, const std::vector<double>& weights,
             std::vector<std::string> labels) {
            return PcMatrix::from_weights(AloGroup::of(group), weights,
                                          std::move(labels));
          },
          py::arg("group"), py::arg("weights"),
          py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("n", &PcMatrix::size)
      .def_property_readonly("group", &PcMatrix::group,
                             py::return_value_policy::reference)
      .def_property_readonly("labels", &PcMatrix::labels)
      .def("at", &PcMatrix::at, py::arg("i"), py::arg("j"))
      .def("entries", &entries_of)
      .def("triads", &PcMatrix::triads)
      .def("triad_product", &PcMatrix::triad_product, py::arg("triad"))
      .def("is_consistent", &PcMatrix::is_consistent, py::arg("tol") = kTriadTol)
      .def("consistency_witness", &PcMatrix::consistency_witness,
           py::arg("tol") = kTriadTol)
      .def("with_entry", &PcMatrix::with_entry, py::arg("i"), py::arg("j"),
           py::arg("value"))
      .def("__repr__", [](const PcMatrix& mat) {
        return "PcMatrix(" + std::string(mat.group().name()) + ", n=" +
               std::to_string(mat.size()) + ")";
      });

  py::class_<PriorityVector>(m, "PriorityVector")
      .def_readonly("group", &PriorityVector::group)
      .def_readonly("weights", &PriorityVector::weights)
      .def_readonly("method", &PriorityVector::method)
      .def_readonly("scale", &PriorityVector::scale)
      .def("ratio", &PriorityVector::ratio, py::arg("i"), py::arg("j"));

  m.def(
      "external_vector",
      [](const std::string& group, std::vector<double> weights) {
        return external_vector(AloGroup::of(group), std::move(weights));
      },
      py::arg("group"), py::arg("weights"));
  m.def("ggmm", &ggmm, py::arg("matrix"));
  m.def("gmm", &gmm, py::arg("matrix"));
  m.def("sum_normalized", &sum_normalized, py::arg("vector"));

  py::class_<EvmResult>(m, "EvmResult")
      .def_readonly("vector", &EvmResult::vector)
      .def_readonly("lambda_max", &EvmResult::lambda_max)
      .def_readonly("iterations", &EvmResult::iterations);
  m.def("evm", &evm, py::arg("matrix"), py::arg("tol") = 1e-12,
        py::arg("max_iterations") = 10000);

  py::class_<ErrorReport>(m, "ErrorReport")
      .def_readonly("global_", &ErrorReport::global)
      .def_property_readonly(
          "argmax", [](const ErrorReport& r) { return std::pair(r.argmax_i, r.argmax_j); })
      .def("at", &ErrorReport::at, py::arg("i"), py::arg("j"));
  m.def("local_error", &local_error, py::arg("matrix"), py::arg("weights"),
        py::arg("i"), py::arg("j"));
  m.def("pair_error", &pair_error, py::arg("matrix"), py::arg("weights"),
        py::arg("i"), py::arg("j"));
  m.def("global_error", &global_error, py::arg("matrix"), py::arg("weights"));

  py::class_<SandwichBounds>(m, "SandwichBounds")
      .def_readonly("lower", &SandwichBounds::lower)
      .def_readonly("upper", &SandwichBounds::upper);
  m.def("lemma3_bounds",
        py::overload_cast<const PcMatrix&, const PriorityVector&, int, int>(
            &lemma3_bounds),
        py::arg("matrix"), py::arg("weights"), py::arg("i"), py::arg("j"));

  py::class_<TriadAssessment>(m, "TriadAssessment")
      .def_readonly("triad", &TriadAssessment::triad)
      .def_readonly("product", &TriadAssessment::product)
      .def_readonly("eta", &TriadAssessment::eta);

  py::class_<InconsistencyReport>(m, "InconsistencyReport")
      .def_readonly("gi", &InconsistencyReport::gi)
      .def_readonly("argmax", &InconsistencyReport::argmax)
      .def_readonly("per_triad", &InconsistencyReport::per_triad)
      .def_readonly("ki", &InconsistencyReport::ki)
      .def_readonly("ci", &InconsistencyReport::ci)
      .def_readonly("lambda_max", &InconsistencyReport::lambda_max);
  m.def("triad_eta", &triad_eta, py::arg("matrix"), py::arg("i"), py::arg("j"),
        py::arg("k"));
  m.def("gi", &gi, py::arg("matrix"));
  m.def("gi_report", &gi_report, py::arg("matrix"));
  m.def("ki", &ki, py::arg("matrix"));
  m.def("ci", &ci, py::arg("matrix"));
  m.def("analyze", &analyze, py::arg("matrix"));

  py::class_<PopEntry>(m, "PopEntry")
      .def_readonly("i", &PopEntry::i)
      .def_readonly("j", &PopEntry::j)
      .def_readonly("entry", &PopEntry::entry)
      .def_readonly("weight_ratio", &PopEntry::weight_ratio)
      .def_readonly("satisfied", &PopEntry::satisfied);

  py::class_<PoipEntry>(m, "PoipEntry")
      .def_readonly("i", &PoipEntry::i)
      .def_readonly("j", &PoipEntry::j)
      .def_readonly("k", &PoipEntry::k)
      .def_readonly("l", &PoipEntry::l)
      .def_readonly("entry_ij", &PoipEntry::entry_ij)
      .def_readonly("entry_kl", &PoipEntry::entry_kl)
      .def_readonly("ratio_ij", &PoipEntry::ratio_ij)
      .def_readonly("ratio_kl", &PoipEntry::ratio_kl)
      .def_readonly("satisfied", &PoipEntry::satisfied);

  py::class_<CopReport>(m, "CopReport")
      .def_readonly("pop_checked", &CopReport::pop_checked)
      .def_readonly("pop_ties", &CopReport::pop_ties)
      .def_readonly("poip_checked", &CopReport::poip_checked)
      .def("pop_violations", &CopReport::pop_violations)
      .def("poip_violations", &CopReport::poip_violations)
      .def("satisfied", &CopReport::satisfied);
  m.def("audit_pop", &audit_pop, py::arg("matrix"), py::arg("weights"));
  m.def("audit_poip", &audit_poip, py::arg("matrix"), py::arg("weights"));
  m.def("audit", &audit, py::arg("matrix"), py::arg("weights"));

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("kind", &Certificate::kind)
      .def_readonly("subject", &Certificate::subject)
      .def_readonly("threshold", &Certificate::threshold)
      .def_readonly("margin", &Certificate::margin);
  m.def("check_theorem1", &check_theorem1, py::arg("matrix"), py::arg("weights"));
  m.def("certify_theorem2", &certify_theorem2, py::arg("matrix"),
        py::arg("weights"));
  m.def("certify_theorem3", &certify_theorem3, py::arg("matrix"));

  m.def("parse_json_matrix", &parse_json_matrix, py::arg("text"));
  m.def("parse_csv_matrix", &parse_csv_matrix, py::arg("text"));
  m.def("to_json", &to_json, py::arg("matrix"));
  m.def("to_csv", &to_csv, py::arg("matrix"));
  m.def(
      "load_matrix",
      [](const std::string& path) { return load_matrix(path); },
      py::arg("path"));
}
