/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>
#include <vector>

#include "hda/net/network.hpp"

namespace hda::net {

/// "FNN1" parameter file: magic, version, layer dims, activation tags,
/// weights/biases layer-major, then normalization statistics. Little-endian
/// 8-byte floats throughout; round trips are bitwise.
std::vector<std::uint8_t> serialize(const NetParams& params);
NetParams deserialize(const std::vector<std::uint8_t>& bytes,
                      const std::string& name = "<buffer>");

void save_net(const NetParams& params, const std::string& path);
NetParams load_net(const std::string& path);

}  // namespace hda::net
