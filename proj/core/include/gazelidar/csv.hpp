// Copyright 2026 The gazelidar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Minimal helpers for the flat, unquoted CSV files this project reads and writes.
namespace gazelidar::csv
{

std::vector<std::string_view> split(std::string_view line, char sep = ',');

std::optional<double> parse_double(std::string_view field);
std::optional<std::uint64_t> parse_uint(std::string_view field);

void strip_line_ending(std::string & line);
void strip_bom(std::string & line);

}  // namespace gazelidar::csv
