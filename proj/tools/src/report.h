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


// JSON views of library results and the text renderer used for reports.
// Strategy indices in reports are 1-based.

#ifndef XEQ_TOOLS_REPORT_H_
#define XEQ_TOOLS_REPORT_H_

#include <nlohmann/json.hpp>

#include <string>

#include "xeq/exchangeability.h"
#include "xeq/game.h"
#include "xeq/lp.h"
#include "xeq/n_exchangeable.h"
#include "xeq/nash.h"
#include "xeq/rational.h"
#include "xeq/xe_optimizer.h"

namespace xeq::cli {

using nlohmann::json;

json rational_json(const Rational& q);
json vector_json(const RationalVector& v);
json matrix_json(const RationalMatrix& a);
json matrix_json(const RealMatrix& a);
json game_json(const SymmetricGame& game);
json orbit_json(const OrbitDistribution& d);
json farkas_json(const FarkasCertificate& cert);
json exchangeability_json(const ExchangeabilityVerdict& v);
json membership_json(const MembershipVerdict& v);
json optimization_json(const OptimizationResult& r);
json symmetric_nash_json(const SymmetricNashEnumeration& e);
json nash_json(const NashEnumeration& e);

// Indented key: value lines; scalar arrays inline, matrices one row a line.
std::string render_text(const json& report);

}  // namespace xeq::cli

#endif  // XEQ_TOOLS_REPORT_H_
