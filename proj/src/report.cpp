// SPDX-License-Identifier: Apache-2.0
//
// elasim - lens-focusing antenna array link-level simulation library
// Copyright (C) 2026 The elasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "elasim/report.hpp"

#include <charconv>
#include <set>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace elasim
{

    std::string format_double(double value, int precision)
    {
        if (precision < 1)
            throw std::invalid_argument("precision must be at least 1");
        char buffer[64];
        const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                          std::chars_format::general, precision);
        if (result.ec != std::errc{})
            throw std::runtime_error("numeric formatting failed");
        return std::string(buffer, result.ptr);
    }

    std::string rate_curve_to_csv(const RateCurve& curve)
    {
        std::string out = "M,rate_conventional_mean,rate_conventional_stderr,"
                          "rate_lensed_mean,rate_lensed_stderr,n_trials\n";
        for (std::size_t j = 0; j < curve.m_values.size(); ++j)
        {
            out += std::to_string(curve.m_values[j]);
            out += ',';
            out += format_double(curve.conventional_mean[j]);
            out += ',';
            out += format_double(curve.conventional_stderr[j]);
            out += ',';
            out += format_double(curve.lensed_mean[j]);
            out += ',';
            out += format_double(curve.lensed_stderr[j]);
            out += ',';
            out += std::to_string(curve.n_trials);
            out += '\n';
        }
        return out;
    }

    std::string config_to_json_string(const ScenarioConfig& config, int indent)
    {
        nlohmann::ordered_json j;
        j["antennas"] = config.n_antennas;
        j["spacing"] = config.spacing;
        j["beamwidth"] = config.beamwidth;
        j["aperture"] = config.aperture;
        j["angular_spread"] = config.angular_spread;
        j["snr_db"] = config.snr_db;
        j["paths"] = config.n_paths;
        j["trials"] = config.n_trials;
        j["seed"] = config.master_seed;
        j["M"] = config.m_values;
        return j.dump(indent);
    }

    ScenarioConfig config_from_json_string(const std::string& text, const ScenarioConfig& base)
    {
        nlohmann::json parsed;
        try
        {
            parsed = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception& e)
        {
            throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
        }
        if (parsed.is_object() && parsed.contains("config"))
            parsed = parsed.at("config");
        if (!parsed.is_object())
            throw std::invalid_argument("config must be a JSON object");

        static const std::set<std::string> known = {"antennas", "spacing",  "beamwidth",
                                                    "aperture", "angular_spread", "snr_db",
                                                    "paths",    "trials",   "seed",
                                                    "M"};
        for (const auto& [key, value] : parsed.items())
        {
            (void)value;
            if (known.find(key) == known.end())
                throw std::invalid_argument("unknown config key: " + key);
        }

        ScenarioConfig config = base;
        try
        {
            if (parsed.contains("antennas"))
                config.n_antennas = parsed.at("antennas").get<int>();
            if (parsed.contains("spacing"))
                config.spacing = parsed.at("spacing").get<double>();
            if (parsed.contains("beamwidth"))
                config.beamwidth = parsed.at("beamwidth").get<double>();
            if (parsed.contains("aperture"))
                config.aperture = parsed.at("aperture").get<double>();
            if (parsed.contains("angular_spread"))
                config.angular_spread = parsed.at("angular_spread").get<double>();
            if (parsed.contains("snr_db"))
                config.snr_db = parsed.at("snr_db").get<double>();
            if (parsed.contains("paths"))
                config.n_paths = parsed.at("paths").get<int>();
            if (parsed.contains("trials"))
                config.n_trials = parsed.at("trials").get<int>();
            if (parsed.contains("seed"))
                config.master_seed = parsed.at("seed").get<std::uint64_t>();
            if (parsed.contains("M"))
                config.m_values = parsed.at("M").get<std::vector<int>>();
        }
        catch (const nlohmann::json::exception& e)
        {
            throw std::invalid_argument(std::string("config value has wrong type: ") + e.what());
        }
        config.validate();
        return config;
    }

} // namespace elasim
