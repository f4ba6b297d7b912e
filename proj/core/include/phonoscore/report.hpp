// core/include/phonoscore/report.hpp

// Copyright 2026  Phonoscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONOSCORE_REPORT_HPP_
#define PHONOSCORE_REPORT_HPP_

#include <optional>
#include <string>

#include "phonoscore/metrics.hpp"

namespace phonoscore {

enum class ReportFormat { Json, Tsv, Pretty };

std::optional<ReportFormat> ReportFormatFromName(const std::string& name);

struct RenderOptions {
  bool color = false;  // ANSI colors in pretty output; tags otherwise
};

// json: complete versioned document, numbers at full precision.
// tsv:   fixed columns id/wer/cer/fer/ter/worst_f/worst_t, 4 decimals,
//        "--" for undefined values.
// pretty: side-by-side reference/hypothesis with per-word error tags.
std::string render(const UtteranceReport& report, ReportFormat format,
                   const RenderOptions& options = {});
std::string render(const CorpusReport& report, ReportFormat format,
                   const RenderOptions& options = {});

}  // namespace phonoscore

#endif  // PHONOSCORE_REPORT_HPP_
