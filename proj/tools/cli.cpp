#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "alopc/cop.hpp"
#include "alopc/error_index.hpp"
#include "alopc/errors.hpp"
#include "alopc/inconsistency.hpp"
#include "alopc/io.hpp"
#include "alopc/priority.hpp"
#include "alopc/simulate.hpp"

namespace alopc::cli {

namespace {

using nlohmann::json;

// Text mode displays 6 significant digits; JSON carries full precision.
std::string sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

PcMatrix load_input(const RunConfig& config) {
  if (config.input_path.empty()) throw Error("missing input file");
  PcMatrix matrix = load_matrix(config.input_path);
  if (!config.group.empty() &&
      group_id_from_string(config.group) != matrix.group().id()) {
    throw MismatchError("--group " + config.group +
                        " does not match the file's group \"" +
                        std::string(matrix.group().name()) + "\"");
  }
  return matrix;
}

struct DerivedWeights {
  PriorityVector vector;
  std::optional<double> lambda_max;
  std::optional<int> iterations;
};

DerivedWeights derive(const PcMatrix& matrix, const std::string& method_name) {
  switch (method_from_string(method_name)) {
    case Method::ggmm:
      return {ggmm(matrix), std::nullopt, std::nullopt};
    case Method::gmm:
      return {gmm(matrix), std::nullopt, std::nullopt};
    case Method::evm: {
      EvmResult r = evm(matrix);
      return {std::move(r.vector), r.lambda_max, r.iterations};
    }
    case Method::external:
      break;
  }
  throw Error("method must be ggmm, gmm or evm");
}

std::string pair_label(const PcMatrix& m, int i, int j) {
  return "(" + m.labels()[i] + ", " + m.labels()[j] + ")";
}

json json_of(const PcMatrix& m, const PopEntry& p) {
  return json{{"i", p.i},
              {"j", p.j},
              {"labels", {m.labels()[p.i], m.labels()[p.j]}},
              {"entry", p.entry},
              {"weight_ratio", p.weight_ratio},
              {"satisfied", p.satisfied}};
}

json json_of(const PcMatrix& m, const PoipEntry& q) {
  return json{{"i", q.i},
              {"j", q.j},
              {"k", q.k},
              {"l", q.l},
              {"labels",
               {m.labels()[q.i], m.labels()[q.j], m.labels()[q.k], m.labels()[q.l]}},
              {"entry_ij", q.entry_ij},
              {"entry_kl", q.entry_kl},
              {"ratio_ij", q.ratio_ij},
              {"ratio_kl", q.ratio_kl},
              {"satisfied", q.satisfied}};
}

json json_of(const Certificate& cert) {
  return json{{"kind", std::string(to_string(cert.kind))},
              {"subject", cert.subject},
              {"threshold", cert.threshold},
              {"margin", cert.margin}};
}

void print_weight_lines(const PcMatrix& matrix, const PriorityVector& v,
                        std::ostream& out) {
  for (int i = 0; i < matrix.size(); ++i) {
    out << "  " << matrix.labels()[i] << ": " << sig6(v.weights[i]) << "\n";
  }
}

}  // namespace

int run_rank(const RunConfig& config, std::ostream& out) {
  const PcMatrix matrix = load_input(config);
  const DerivedWeights result = derive(matrix, config.method);
  const PriorityVector& v = result.vector;

  std::optional<PriorityVector> normalized;
  if (v.method == Method::ggmm &&
      matrix.group().id() == GroupId::multiplicative) {
    normalized = sum_normalized(v);
  }

  if (config.format == Format::json) {
    json doc{{"group", std::string(matrix.group().name())},
             {"method", std::string(to_string(v.method))},
             {"labels", matrix.labels()},
             {"weights", v.weights},
             {"scale", v.scale}};
    if (normalized) doc["weights_normalized"] = normalized->weights;
    if (result.lambda_max) {
      doc["lambda_max"] = *result.lambda_max;
      doc["iterations"] = *result.iterations;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "group: " << matrix.group().name()
        << "   method: " << to_string(v.method) << "\n";
    out << "weights (scale " << sig6(v.scale) << "):\n";
    print_weight_lines(matrix, v, out);
    if (normalized) {
      out << "weights, sum-to-one:\n";
      print_weight_lines(matrix, *normalized, out);
    }
    if (result.lambda_max) {
      out << "lambda_max: " << sig6(*result.lambda_max) << " ("
          << *result.iterations << " iterations)\n";
    }
  }
  return kExitOk;
}

int run_audit(const RunConfig& config, std::ostream& out) {
  const PcMatrix matrix = load_input(config);
  const DerivedWeights result = derive(matrix, config.method);
  const PriorityVector& v = result.vector;

  const ErrorReport errors = global_error(matrix, v);
  std::optional<InconsistencyReport> inconsistency;
  if (matrix.size() >= 3) inconsistency = analyze(matrix);
  const CopReport cop = audit(matrix, v);
  const auto witness = matrix.consistency_witness();

  if (config.format == Format::json) {
    json doc{{"group", std::string(matrix.group().name())},
             {"labels", matrix.labels()},
             {"method", std::string(to_string(v.method))},
             {"weights", v.weights},
             {"consistent", !witness.has_value()}};
    json per_pair = json::array();
    for (int i = 0; i < matrix.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < matrix.size(); ++j) row.push_back(errors.at(i, j));
      per_pair.push_back(std::move(row));
    }
    doc["global_error"] = {{"value", errors.global},
                           {"argmax", {errors.argmax_i, errors.argmax_j}},
                           {"per_pair", std::move(per_pair)}};
    if (inconsistency) {
      json inc{{"gi", inconsistency->gi},
               {"worst_triad",
                {inconsistency->argmax.i, inconsistency->argmax.j,
                 inconsistency->argmax.k}}};
      if (inconsistency->ki) inc["ki"] = *inconsistency->ki;
      if (inconsistency->ci) inc["ci"] = *inconsistency->ci;
      if (inconsistency->lambda_max) inc["lambda_max"] = *inconsistency->lambda_max;
      doc["inconsistency"] = std::move(inc);
    } else {
      doc["inconsistency"] = nullptr;  // no triads for n = 2
    }
    json pop_v = json::array(), poip_v = json::array(), ties = json::array();
    for (const PopEntry& p : cop.pop_violations()) pop_v.push_back(json_of(matrix, p));
    for (const PoipEntry& q : cop.poip_violations())
      poip_v.push_back(json_of(matrix, q));
    for (auto [i, j] : cop.pop_ties) ties.push_back(json::array({i, j}));
    doc["cop"] = {{"satisfied", cop.satisfied()},
                  {"pop_checked", cop.pop_checked.size()},
                  {"pop_violations", std::move(pop_v)},
                  {"pop_ties", std::move(ties)},
                  {"poip_checked", cop.poip_checked.size()},
                  {"poip_violations", std::move(poip_v)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "group: " << matrix.group().name() << "   n: " << matrix.size()
        << "   method: " << to_string(v.method) << "\n";
    out << "weights:\n";
    print_weight_lines(matrix, v, out);
    out << "global error: " << sig6(errors.global) << "   attained at "
        << pair_label(matrix, errors.argmax_i, errors.argmax_j) << "\n";
    out << "pair errors:\n";
    char cell[48];
    for (int i = 0; i < matrix.size(); ++i) {
      std::snprintf(cell, sizeof(cell), "  %-6s", matrix.labels()[i].c_str());
      out << cell;
      for (int j = 0; j < matrix.size(); ++j) {
        std::snprintf(cell, sizeof(cell), " %11s", sig6(errors.at(i, j)).c_str());
        out << cell;
      }
      out << "\n";
    }
    if (inconsistency) {
      out << "GI: " << sig6(inconsistency->gi) << "   worst triad: ("
          << matrix.labels()[inconsistency->argmax.i] << ", "
          << matrix.labels()[inconsistency->argmax.j] << ", "
          << matrix.labels()[inconsistency->argmax.k] << ")\n";
      if (inconsistency->ki) out << "KI: " << sig6(*inconsistency->ki) << "\n";
      if (inconsistency->ci) {
        out << "CI: " << sig6(*inconsistency->ci)
            << "   lambda_max: " << sig6(*inconsistency->lambda_max) << "\n";
      }
    } else {
      out << "GI: undefined (no triads for n = 2)\n";
    }
    out << "consistent: " << (witness ? "no" : "yes") << "\n";
    out << "POP:  checked " << cop.pop_checked.size() << ", ties "
        << cop.pop_ties.size() << ", violations " << cop.pop_violation_count()
        << "\n";
    for (const PopEntry& p : cop.pop_violations()) {
      out << "  violation " << pair_label(matrix, p.i, p.j) << ": entry "
          << sig6(p.entry) << " but weight ratio " << sig6(p.weight_ratio) << "\n";
    }
    out << "POIP: checked " << cop.poip_checked.size() << ", violations "
        << cop.poip_violation_count() << "\n";
    for (const PoipEntry& q : cop.poip_violations()) {
      out << "  violation " << pair_label(matrix, q.i, q.j) << " vs "
          << pair_label(matrix, q.k, q.l) << ": entries " << sig6(q.entry_ij)
          << " > " << sig6(q.entry_kl) << " but ratios " << sig6(q.ratio_ij)
          << " <= " << sig6(q.ratio_kl) << "\n";
    }
    out << "satisfied: " << (cop.satisfied() ? "yes" : "no") << "\n";
  }
  return cop.satisfied() ? kExitOk : kExitViolations;
}

int run_certify(const RunConfig& config, std::ostream& out) {
  const PcMatrix matrix = load_input(config);
  const PriorityVector v = ggmm(matrix);
  const ErrorReport errors = global_error(matrix, v);
  const CopReport cop = audit(matrix, v);

  std::vector<Certificate> certs;
  if (auto blanket = check_theorem1(matrix, v)) certs.push_back(*blanket);
  const auto threshold_certs = certify_theorem2(matrix, v);
  certs.insert(certs.end(), threshold_certs.begin(), threshold_certs.end());
  std::optional<double> threshold3;
  if (matrix.group().id() == GroupId::multiplicative && matrix.size() >= 3) {
    threshold3 = 1.0 / (1.0 - ki(matrix));
    const auto extra = certify_theorem3(matrix);
    certs.insert(certs.end(), extra.begin(), extra.end());
  }

  const Certificate* unsound = find_unsound(certs, cop);
  if (unsound) {
    throw Error("internal error: certificate " +
                std::string(to_string(unsound->kind)) + " failed its audit");
  }

  if (config.format == Format::json) {
    json cert_list = json::array();
    for (const Certificate& cert : certs) cert_list.push_back(json_of(cert));
    json doc{{"group", std::string(matrix.group().name())},
             {"labels", matrix.labels()},
             {"method", "ggmm"},
             {"weights", v.weights},
             {"thresholds", {{"theorem2", errors.global}}},
             {"certificates", std::move(cert_list)},
             {"audit",
              {{"sound", true},
               {"pop_violations", cop.pop_violation_count()},
               {"poip_violations", cop.poip_violation_count()},
               {"satisfied", cop.satisfied()}}}};
    if (threshold3) doc["thresholds"]["theorem3"] = *threshold3;
    out << doc.dump(2) << "\n";
  } else {
    out << "group: " << matrix.group().name() << "   n: " << matrix.size()
        << "   weights: ggmm\n";
    out << "threshold theorem2 (global error): " << sig6(errors.global) << "\n";
    if (threshold3) {
      out << "threshold theorem3 (1/(1-KI)): " << sig6(*threshold3) << "\n";
    }
    out << "certificates: " << certs.size() << "\n";
    for (const Certificate& cert : certs) {
      out << "  " << to_string(cert.kind);
      if (cert.subject.size() == 2) {
        out << " " << pair_label(matrix, cert.subject[0], cert.subject[1]);
      } else if (cert.subject.size() == 4) {
        out << " " << pair_label(matrix, cert.subject[0], cert.subject[1]) << " vs "
            << pair_label(matrix, cert.subject[2], cert.subject[3]);
      } else {
        out << " (all pairs and quadruples)";
      }
      out << "  threshold " << sig6(cert.threshold) << "  margin "
          << sig6(cert.margin) << "\n";
    }
    out << "audit cross-check: all certificates sound\n";
    out << "POP violations: " << cop.pop_violation_count()
        << ", POIP violations: " << cop.poip_violation_count() << "\n";
    out << "satisfied: " << (cop.satisfied() ? "yes" : "no") << "\n";
  }
  return cop.satisfied() ? kExitOk : kExitViolations;
}

int run_convert(const RunConfig& config, std::ostream& out) {
  if (config.input_path.empty()) throw Error("missing input file");
  const PcMatrix matrix = load_matrix(config.input_path);

  std::string target = config.convert_to;
  if (target.empty() && !config.output_path.empty()) {
    const auto ext = std::filesystem::path(config.output_path).extension().string();
    if (ext == ".json") target = "json";
    if (ext == ".csv") target = "csv";
  }
  if (target.empty()) {
    const auto ext = std::filesystem::path(config.input_path).extension().string();
    target = (ext == ".json") ? "csv" : "json";
  }
  if (target == "json") {
    out << to_json(matrix);
  } else if (target == "csv") {
    out << to_csv(matrix);
  } else {
    throw Error("conversion target must be json or csv, got \"" + target + "\"");
  }
  return kExitOk;
}

int run_simulate(const RunConfig& config, std::ostream& out) {
  if (config.group.empty()) throw Error("simulate requires --group");
  SimulateConfig sim;
  sim.group = group_id_from_string(config.group);
  sim.trials = config.trials;
  sim.n = config.size;
  sim.seed = config.seed;
  const AloGroup& group = AloGroup::of(sim.group);
  sim.bound =
      std::isnan(config.bound) ? group.from_param(0.7) : config.bound;
  const auto stats = run_simulation(sim);
  out << simulation_csv(stats);
  return kExitOk;
}

int dispatch(const std::string& subcommand, const RunConfig& config,
             std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output_path.empty()) {
      file.open(config.output_path, std::ios::binary);
      if (!file) throw Error("cannot open \"" + config.output_path + "\" for writing");
      sink = &file;
    }
    if (subcommand == "rank") return run_rank(config, *sink);
    if (subcommand == "audit") return run_audit(config, *sink);
    if (subcommand == "certify") return run_certify(config, *sink);
    if (subcommand == "convert") return run_convert(config, *sink);
    if (subcommand == "simulate") return run_simulate(config, *sink);
    throw Error("unknown subcommand \"" + subcommand + "\"");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace alopc::cli
