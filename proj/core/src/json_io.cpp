#include "dpc/json_io.hpp"

#include <algorithm>
#include <string>

#include "dpc/errors.hpp"

namespace dpc {

namespace {

double number_field(const json& j, const char* name) {
  const json& v = j.at(name);
  if (!v.is_number()) {
    throw DomainError(std::string("field '") + name + "' must be a number");
  }
  return v.get<double>();
}

std::int64_t int_field(const json& j, const char* name) {
  const json& v = j.at(name);
  if (!v.is_number_integer()) {
    throw DomainError(std::string("field '") + name + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::uint64_t seed_field(const json& j, const char* name) {
  const json& v = j.at(name);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0)) {
    throw DomainError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

void require_fields(const json& j, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional) {
  if (!j.is_object()) {
    throw DomainError("expected a JSON object");
  }
  for (const std::string& name : required) {
    if (!j.contains(name)) {
      throw DomainError("missing required field '" + name + "'");
    }
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) {
      throw DomainError("unknown field '" + key + "'");
    }
  }
}

json to_json(const LossyChannelParams& ch) {
  return json{{"eta", ch.transmissivity()}, {"n_e", ch.environment_photons().value()}};
}

json to_json(const AmplifierChannelParams& ch) {
  return json{{"kappa", ch.gain()}, {"n_e", ch.environment_photons().value()}};
}

json to_json(const SignalParams& sig) {
  return json{{"n_a", sig.input_photons().value()}, {"n_s", sig.interference_photons().value()}};
}

json to_json(const ClassicalDpcInstance& inst) {
  return json{{"p", inst.input_power()}, {"q", inst.interference_power()},
              {"n", inst.noise_variance()}};
}

json to_json(const SweepResult& sweep) {
  json points = json::array();
  for (const RatePoint& point : sweep.points) {
    points.push_back(json{{"t", point.t.value()}, {"rate", point.rate}});
  }
  return json{{"grid_step", sweep.grid_step},
              {"argmax_t", sweep.argmax_t},
              {"max_rate", sweep.max_rate},
              {"points", std::move(points)}};
}

json to_json(const CostaMiEstimate& estimate) {
  return json{{"estimate", estimate.estimate},
              {"std_error", estimate.std_error},
              {"mi_uy", estimate.mi_uy},
              {"mi_us", estimate.mi_us},
              {"mi_us_std_error", estimate.mi_us_std_error},
              {"xs_covariance", estimate.xs_covariance},
              {"num_samples", estimate.num_samples},
              {"num_batches", estimate.num_batches},
              {"seed", estimate.seed}};
}

json to_json(const ModuloDemoResult& result) {
  return json{{"ser_with_interference", result.ser_with_interference},
              {"ser_without", result.ser_without},
              {"errors_with", result.errors_with},
              {"errors_without", result.errors_without},
              {"num_symbols", result.num_symbols},
              {"seed", result.seed}};
}

json to_json(const GpStrategy& strategy) {
  return json{{"u_given_s", strategy.u_given_s}, {"x_map", strategy.x_map}};
}

json to_json(const GpSearchResult& result) {
  return json{{"best_rate", result.best_rate},
              {"best_strategy", to_json(result.best_strategy)},
              {"maps_enumerated", result.maps_enumerated}};
}

LossyChannelParams lossy_channel_from_json(const json& j) {
  require_fields(j, {"eta", "n_e"});
  return LossyChannelParams(number_field(j, "eta"), PhotonNumber(number_field(j, "n_e")));
}

AmplifierChannelParams amplifier_channel_from_json(const json& j) {
  require_fields(j, {"kappa", "n_e"});
  return AmplifierChannelParams(number_field(j, "kappa"), PhotonNumber(number_field(j, "n_e")));
}

SignalParams signal_params_from_json(const json& j) {
  require_fields(j, {"n_a", "n_s"});
  return SignalParams(PhotonNumber(number_field(j, "n_a")),
                      PhotonNumber(number_field(j, "n_s")));
}

ClassicalDpcInstance dpc_instance_from_json(const json& j) {
  require_fields(j, {"p", "q", "n"});
  return ClassicalDpcInstance(number_field(j, "p"), number_field(j, "q"), number_field(j, "n"));
}

McConfig mc_config_from_json(const json& j) {
  require_fields(j, {"seed", "num_samples", "inst", "t"}, {"num_batches"});
  McConfig cfg{seed_field(j, "seed"), int_field(j, "num_samples"),
               dpc_instance_from_json(j.at("inst")), DpcCoefficient(number_field(j, "t"))};
  if (j.contains("num_batches")) {
    cfg.num_batches = static_cast<int>(int_field(j, "num_batches"));
  }
  return cfg;
}

ModuloDemoConfig modulo_config_from_json(const json& j) {
  require_fields(j, {"seed", "num_symbols", "constellation_size", "cell_width", "noise_std",
                     "interference_std"});
  ModuloDemoConfig cfg;
  cfg.seed = seed_field(j, "seed");
  cfg.num_symbols = int_field(j, "num_symbols");
  cfg.constellation_size = static_cast<int>(int_field(j, "constellation_size"));
  cfg.cell_width = number_field(j, "cell_width");
  cfg.noise_std = number_field(j, "noise_std");
  cfg.interference_std = number_field(j, "interference_std");
  return cfg;
}

DiscreteGpInstance gp_instance_from_json(const json& j) {
  require_fields(j, {"s_dist", "channel", "u_size"});
  const json& s_dist = j.at("s_dist");
  const json& channel = j.at("channel");
  if (!s_dist.is_array() || !channel.is_array()) {
    throw DomainError("'s_dist' and 'channel' must be arrays");
  }
  try {
    return DiscreteGpInstance(s_dist.get<std::vector<double>>(),
                              channel.get<std::vector<std::vector<std::vector<double>>>>(),
                              static_cast<int>(int_field(j, "u_size")));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed oracle instance: ") + e.what());
  }
}

}  // namespace dpc
