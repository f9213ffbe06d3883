#include "nestedrisk/json_io.hpp"

#include <stdexcept>

namespace nestedrisk {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& why) {
  throw std::invalid_argument("schema error in field '" + field + "': " + why);
}

const json& require(const json& j, const char* field) {
  if (!j.contains(field)) schema_error(field, "missing");
  return j.at(field);
}

Value value_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return Value{j.get<double>()};
  if (j.is_array()) {
    Value v;
    for (const auto& e : j) {
      if (!e.is_number()) schema_error(field, "vector entries must be numbers");
      v.push_back(e.get<double>());
    }
    if (v.empty()) schema_error(field, "empty vector value");
    return v;
  }
  schema_error(field, "expected a number or a vector of numbers");
}

json value_to_json(const Value& v) {
  if (v.size() == 1) return v.front();
  return json(v);
}

std::string element_label(const json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number() || j.is_array()) return j.dump();
  schema_error(field, "expected a label, number, or vector");
}

}  // namespace

json extreal_to_json(const ExtReal& u) {
  if (u.is_pos_inf()) return "+inf";
  if (u.is_neg_inf()) return "-inf";
  return u.finite_value();
}

ExtReal extreal_from_json(const json& j) {
  if (j.is_number()) return ExtReal(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return ExtReal::pos_infinity();
    if (s == "-inf") return ExtReal::neg_infinity();
    schema_error("extreal", "unrecognized string '" + s + "' (want \"+inf\" or \"-inf\")");
  }
  schema_error("extreal", "expected a number or an infinity string");
}

FiniteProbSpace space_from_json(const json& j) {
  const json& atoms = require(j, "atoms");
  const json& weights = require(j, "weights");
  if (!atoms.is_array() || !weights.is_array()) {
    schema_error("atoms/weights", "expected arrays");
  }
  std::vector<std::string> labels;
  for (const auto& a : atoms) labels.push_back(element_label(a, "atoms"));
  std::vector<double> w;
  for (const auto& e : weights) {
    if (!e.is_number()) schema_error("weights", "entries must be numbers");
    w.push_back(e.get<double>());
  }
  return FiniteProbSpace(std::move(labels), std::move(w));
}

json space_to_json(const FiniteProbSpace& space) {
  return json{{"atoms", space.atoms}, {"weights", space.weights}};
}

Partition partition_from_json(const json& j, std::size_t n_atoms) {
  auto read_index_sets = [](const json& arr, const char* field) {
    if (!arr.is_array()) schema_error(field, "expected an array of index arrays");
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& s : arr) {
      if (!s.is_array()) schema_error(field, "each entry must be an index array");
      std::vector<std::size_t> indices;
      for (const auto& i : s) {
        if (!i.is_number_unsigned()) schema_error(field, "indices must be nonnegative integers");
        indices.push_back(i.get<std::size_t>());
      }
      sets.push_back(std::move(indices));
    }
    return sets;
  };

  if (j.contains("blocks")) {
    Partition p(read_index_sets(j.at("blocks"), "blocks"));
    p.validate(n_atoms);
    return p;
  }
  if (j.contains("sets")) {
    return partition_from_sigma_field(read_index_sets(j.at("sets"), "sets"), n_atoms);
  }
  schema_error("blocks", "partition file needs \"blocks\" or a sigma-field \"sets\"");
}

json partition_to_json(const Partition& p) { return json{{"blocks", p.blocks}}; }

RandomVariable rv_from_json(const json& j) {
  const json& arr = j.is_array() ? j : require(j, "values");
  if (!arr.is_array()) schema_error("values", "expected an array of numbers");
  std::vector<double> v;
  for (const auto& e : arr) {
    if (!e.is_number()) schema_error("values", "entries must be numbers");
    v.push_back(e.get<double>());
  }
  return RandomVariable(std::move(v));
}

AggregatorFactorPair pair_from_json(const json& j) {
  AggregatorFactorPair pair;
  const json& heads = require(j, "heads");
  const json& tails = require(j, "tails");
  if (!heads.is_array() || !tails.is_array()) schema_error("heads/tails", "expected arrays");
  bool numeric_heads = true;
  for (const auto& h : heads) {
    pair.heads.push_back(element_label(h, "heads"));
    numeric_heads = numeric_heads && (h.is_number() || h.is_array());
  }
  if (numeric_heads) {
    for (const auto& h : heads) pair.head_values.push_back(value_from_json(h, "heads"));
  }
  for (const auto& t : tails) pair.tails.push_back(element_label(t, "tails"));

  const json& factor = require(j, "factor");
  if (!factor.is_object()) schema_error("factor", "expected an object keyed by tail");
  pair.factor.resize(pair.tails.size());
  for (std::size_t t = 0; t < pair.tails.size(); ++t) {
    if (!factor.contains(pair.tails[t])) {
      schema_error("factor", "missing entry for tail '" + pair.tails[t] + "'");
    }
    pair.factor[t] = value_from_json(factor.at(pair.tails[t]), "factor");
  }

  const json& aggregator = require(j, "aggregator");
  if (!aggregator.is_object()) {
    schema_error("aggregator", "expected an object keyed by \"(head,tail)\"");
  }
  pair.aggregator.assign(pair.heads.size(), std::vector<Value>(pair.tails.size()));
  for (std::size_t h = 0; h < pair.heads.size(); ++h) {
    for (std::size_t t = 0; t < pair.tails.size(); ++t) {
      const std::string key = "(" + pair.heads[h] + "," + pair.tails[t] + ")";
      if (!aggregator.contains(key)) {
        schema_error("aggregator", "missing entry for key '" + key + "'");
      }
      pair.aggregator[h][t] = value_from_json(aggregator.at(key), "aggregator");
    }
  }
  pair.validate();
  return pair;
}

DecomposableSystem system_from_json(const json& j) {
  DecomposableSystem sys;
  sys.nx = require(j, "X").get<std::size_t>();
  sys.ny = require(j, "Y").get<std::size_t>();
  sys.nz = require(j, "Z").get<std::size_t>();
  sys.nyp = require(j, "Yp").get<std::size_t>();
  sys.theta_xz = require(j, "theta_xz").get<std::vector<std::vector<std::size_t>>>();
  sys.theta_x = require(j, "theta_x").get<std::vector<std::size_t>>();
  sys.theta_z = require(j, "theta_z").get<std::vector<std::size_t>>();
  const json& phi = require(j, "phi");
  if (!phi.is_array()) schema_error("phi", "expected a matrix");
  for (const auto& row : phi) {
    std::vector<ExtReal> r;
    for (const auto& e : row) r.push_back(extreal_from_json(e));
    sys.phi.push_back(std::move(r));
  }
  sys.validate();
  return sys;
}

ExtFn extfn_from_json(const json& j) {
  const json& arr = j.is_array() ? j : require(j, "values");
  if (!arr.is_array()) schema_error("values", "expected an array");
  ExtFn f;
  for (const auto& e : arr) f.push_back(extreal_from_json(e));
  return f;
}

json verdict_to_json(const Verdict& v, const AggregatorFactorPair& pair) {
  json out{{"outcome", v.pass ? "pass" : "fail"}, {"detail", v.detail}};
  if (v.triple) {
    out["witness"] = {{"kind", "triple"},
                      {"head", pair.heads[v.triple->head]},
                      {"tail", pair.tails[v.triple->tail]},
                      {"tail_prime", pair.tails[v.triple->tail_prime]}};
  }
  if (v.quad) {
    out["witness"] = {{"kind", "quad"},
                      {"head", pair.heads[v.quad->head]},
                      {"head_prime", pair.heads[v.quad->head_prime]},
                      {"tail", pair.tails[v.quad->tail]},
                      {"tail_prime", pair.tails[v.quad->tail_prime]}};
  }
  if (v.cell) {
    json values = json::array();
    for (const auto& val : v.cell->values) values.push_back(value_to_json(val));
    out["witness"] = {{"kind", "cell"},
                      {"head", pair.heads[v.cell->head]},
                      {"image_class", v.cell->image_class},
                      {"values", values}};
  }
  if (v.discrepancy) out["discrepancy"] = *v.discrepancy;
  if (!v.warnings.empty()) out["warnings"] = v.warnings;
  return out;
}

json property_verdict_to_json(const PropertyVerdict& v) {
  json out{{"outcome", v.pass ? "pass" : "fail"},
           {"detail", v.detail},
           {"samples_run", v.samples_run}};
  if (v.witness) {
    out["witness"] = {{"args_a", v.witness->args_a},
                      {"args_b", v.witness->args_b},
                      {"lhs", v.witness->lhs},
                      {"rhs", v.witness->rhs},
                      {"gap", v.witness->gap}};
  }
  return out;
}

json acceptance_verdict_to_json(const AcceptanceVerdict& v) {
  json out{{"outcome", v.pass ? "pass" : "fail"},
           {"detail", v.detail},
           {"pointwise_pass", v.pointwise_pass},
           {"minkowski_pass", v.minkowski_pass},
           {"guarded_fraction", v.guarded_fraction}};
  if (v.pointwise_witness) out["pointwise_witness"] = *v.pointwise_witness;
  if (v.minkowski_witness) out["minkowski_witness"] = *v.minkowski_witness;
  return out;
}

json conjugacy_verdict_to_json(const ConjugacyVerdict& v) {
  json out{{"outcome", v.pass ? "pass" : "fail"}, {"detail", v.detail}};
  if (v.witness_x) {
    out["witness"] = {{"x", *v.witness_x},
                      {"lhs", extreal_to_json(v.lhs)},
                      {"rhs", extreal_to_json(v.rhs)}};
    if (v.witness_y) out["witness"]["y"] = *v.witness_y;
  }
  if (v.reading_ambiguous) out["reading_ambiguous"] = true;
  return out;
}

}  // namespace nestedrisk
