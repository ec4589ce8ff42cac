// Copyright 2026 The hvskit Authors
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

#include <string>

#include <json.hpp>

#include "hvskit/cobordism.hpp"
#include "hvskit/hvs.hpp"
#include "hvskit/seifert.hpp"

// JSON encoding of every input and report. Scalars travel as strings
// ("3/4", "1-2*i"); integers are accepted for matrix entries too. Parse
// errors carry a JSON pointer to the offending field.
namespace hvskit::io {

using Json = nlohmann::json;

Json parse_text(const std::string& text);

Json to_json(const GMatrix& m);
Json to_json(const QMatrix& m);
Json to_json(const Spectrum& sp);
Json to_json(const Hvs& v);
Json to_json(const BlockSpec& spec);
Json to_json(const FibredLinkData& fl);
Json to_json(const FracturedData& fd);
Json to_json(const PlumbingGraph& g);
Json to_json(const DeformationScenario& ds);
Json to_json(const CobordismInvariants& ci);

Hvs hvs_from_json(const Json& j);
BlockSpec blocks_from_json(const Json& j);
FibredLinkData fibred_from_json(const Json& j);
FracturedData fractured_from_json(const Json& j);
PlumbingGraph plumbing_from_json(const Json& j);
DeformationScenario scenario_from_json(const Json& j);
Spectrum spectrum_from_json(const Json& j);

/// Linking input {"clk": matrix}; the diagonal is ignored.
QMatrix linking_from_json(const Json& j);

struct MurasugiInput {
  long sig0 = 0, sig1 = 0, null0 = 0, null1 = 0;
  CobordismInvariants ci;
};
MurasugiInput murasugi_from_json(const Json& j);

// reports
Json report_json(const HvsValidation& r);
Json report_json(const SignatureProfile& p);
Json report_json(const JordanData& jd);
Json report_json(const SpectrumSolve& s);
Json report_json(const CheckReport& r);
Json report_json(const LinkingReport& r);
Json report_json(const TwistReport& r);
Json report_json(const PlumbingInvariants& p);
Json report_json(const MurasugiReport& r);
Json report_json(const SemicontReport& r);
Json report_json(const FracturedSpectrum& fs, const FracturedData& fd);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace hvskit::io
