#pragma once

#include <json.hpp>

#include "dpc/channels.hpp"
#include "dpc/gp_oracle.hpp"
#include "dpc/mcsim.hpp"
#include "dpc/optimize.hpp"

namespace dpc {

using json = nlohmann::json;

/// Strict object validation for config files: every required field present,
/// nothing outside required + optional. Throws DomainError otherwise.
void require_fields(const json& j, const std::vector<std::string>& required,
                    const std::vector<std::string>& optional = {});

json to_json(const LossyChannelParams& ch);
json to_json(const AmplifierChannelParams& ch);
json to_json(const SignalParams& sig);
json to_json(const ClassicalDpcInstance& inst);
json to_json(const SweepResult& sweep);
json to_json(const CostaMiEstimate& estimate);
json to_json(const ModuloDemoResult& result);
json to_json(const GpStrategy& strategy);
json to_json(const GpSearchResult& result);

LossyChannelParams lossy_channel_from_json(const json& j);
AmplifierChannelParams amplifier_channel_from_json(const json& j);
SignalParams signal_params_from_json(const json& j);
ClassicalDpcInstance dpc_instance_from_json(const json& j);
McConfig mc_config_from_json(const json& j);
ModuloDemoConfig modulo_config_from_json(const json& j);

/// Oracle instance description: {"s_dist": [...], "channel": [[[...]]],
/// "u_size": k} with the channel indexed [s][x][y].
DiscreteGpInstance gp_instance_from_json(const json& j);

}  // namespace dpc
