// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON files for games, joint distributions and orbit distributions.
//
//   game:          {"m": 2, "A": [[4, 1], [5, 0]], "labels": ["Wimpy", "Macho"]}
//   distribution:  {"m": 2, "P": [["1/4", "1/4"], ["1/4", "1/4"]]}
//   orbit:         {"m": 2, "N": 3, "weights": [{"k": [1, 2], "w": "1/2"}, ...]}
//
// Matrix entries and weights are JSON numbers (integers, or decimals read as
// the exact decimal fraction) or strings "p/q". Writers always emit strings.

#ifndef XEQ_IO_H_
#define XEQ_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "xeq/game.h"
#include "xeq/n_exchangeable.h"

namespace xeq {

// All parsers throw ParseError with a message naming the offending field.
SymmetricGame parse_game(std::string_view json);
JointDistribution parse_distribution(std::string_view json);
OrbitDistribution parse_orbit_distribution(std::string_view json);

std::string to_json(const SymmetricGame& game);
std::string to_json(const JointDistribution& dist);
std::string to_json(const OrbitDistribution& dist);

// Whole file as text; ParseError when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

SymmetricGame load_game(const std::filesystem::path& path);
JointDistribution load_distribution(const std::filesystem::path& path);
OrbitDistribution load_orbit_distribution(const std::filesystem::path& path);

}  // namespace xeq

#endif  // XEQ_IO_H_
