// Copyright 2026 The tdlo developers
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

#ifndef TDLO_IO_HPP
#define TDLO_IO_HPP

#include <array>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "tdlo/decomp.hpp"
#include "tdlo/gaussian.hpp"
#include "tdlo/homodyne.hpp"
#include "tdlo/metrics.hpp"
#include "tdlo/timeline.hpp"

namespace tdlo::io {

using json = nlohmann::json;

// Complex matrices serialize as nested JSON rows of [re, im] pairs,
// row-major.
json complex_matrix_to_json(const MatrixXcd& m);
MatrixXcd complex_matrix_from_json(const json& j);

// {dim, layers: [[{m, omega, phi}, ...], ...], alphas: [...]}
json plan_to_json(const DecompositionPlan& plan);
DecompositionPlan plan_from_json(const json& j);

json timeline_to_json(const ControlTimeline& t);
ControlTimeline timeline_from_json(const json& j);

json covariance_to_json(const CovarianceMatrix& g);
CovarianceMatrix covariance_from_json(const json& j);

/// CSV with header x1,p1,...,xN,pN and one row per quadrature.
std::string covariance_to_csv(const CovarianceMatrix& g);
CovarianceMatrix covariance_from_csv(const std::string& text);

/// Element list in the covariance-plot layout: {row, col, labels, value}.
json covariance_element_list(const CovarianceMatrix& g);

/// CSV with columns basis,q1,..,qN; one block of rows per basis set.
std::string samples_to_csv(const std::array<BasisSamples, 5>& sets);
std::array<BasisSamples, 5> samples_from_csv(const std::string& text);

json inseparability_to_json(const InseparabilityReport& report);

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a temporary file and rename, so readers never observe partial
/// content.
void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content);

/// FNV-1a hash of a string, hex-encoded; used for config provenance.
std::string fnv1a_hex(const std::string& text);

}  // namespace tdlo::io

#endif  // TDLO_IO_HPP
