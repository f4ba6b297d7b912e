// core/src/report.cpp

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

#include "phonoscore/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "phonoscore/error.hpp"

namespace phonoscore {

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string fixed4(const std::optional<double>& value) {
  if (!value) return "--";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *value);
  return buf;
}

ordered_json opt_number(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

// Per-dimension block keyed by abbreviation, in slot order.  Dimensions the
// reference never activates and no indel touches are left out entirely.
ordered_json per_feature_json(const MetricCounts& counts,
                              const std::vector<FeatureDimension>& dimensions) {
  ordered_json out = ordered_json::object();
  for (const FeatureDimension& dim : dimensions) {
    auto it = counts.per_dimension.find(dim.index);
    if (it == counts.per_dimension.end()) continue;
    const DimStat& stat = it->second;
    if (stat.ref_active == 0 && stat.error_count == 0.0) continue;
    out[dim.abbr] = {{"errors", stat.error_count},
                     {"ref_active", stat.ref_active},
                     {"rate", opt_number(stat.rate())}};
  }
  return out;
}

ordered_json per_tone_json(const MetricCounts& counts) {
  ordered_json out = ordered_json::object();
  for (const auto& [cat, stat] : counts.per_tone_category) {
    out[ToneCategoryName(cat)] = {{"errors", stat.error_count},
                                  {"ref_count", stat.ref_count},
                                  {"rate", opt_number(stat.rate())}};
  }
  return out;
}

ordered_json counts_json(const MetricCounts& c) {
  return {{"wer_errors", c.wer_errors},
          {"wer_ref_words", c.wer_ref_words},
          {"cer_errors", c.cer_errors},
          {"cer_ref_chars", c.cer_ref_chars},
          {"fer_cost", c.fer_cost},
          {"fer_ref_segments", c.fer_ref_segments},
          {"ter_errors", c.ter_errors},
          {"ter_ref_tonebearing", c.ter_ref_tonebearing},
          {"ter_hyp_insertions", c.ter_hyp_insertions},
          {"tone_restricted_cost", c.tone_restricted_cost}};
}

ordered_json alignment_json(const Alignment& a) {
  ordered_json ops = ordered_json::array();
  for (const EditOp& op : a.ops) {
    ordered_json o;
    o["op"] = EditOpKindName(op.kind);
    o["ref"] = op.ref_index >= 0 ? ordered_json(op.ref_index) : ordered_json(nullptr);
    o["hyp"] = op.hyp_index >= 0 ? ordered_json(op.hyp_index) : ordered_json(nullptr);
    o["cost"] = op.cost;
    ops.push_back(std::move(o));
  }
  return {{"total_cost", a.total_cost},
          {"ref_len", a.ref_len},
          {"hyp_len", a.hyp_len},
          {"ops", std::move(ops)}};
}

ordered_json words_json(const std::vector<WordClassification>& words) {
  ordered_json out = ordered_json::array();
  for (const WordClassification& w : words) {
    ordered_json o;
    o["ref"] = w.ref_word ? ordered_json(*w.ref_word) : ordered_json(nullptr);
    o["hyp"] = w.hyp_word ? ordered_json(*w.hyp_word) : ordered_json(nullptr);
    o["category"] = WordCategoryName(w.category);
    out.push_back(std::move(o));
  }
  return out;
}

ordered_json utterance_json(const UtteranceReport& r) {
  ordered_json j;
  j["id"] = r.utterance_id;
  j["ref_words"] = r.ref_words;
  j["hyp_words"] = r.hyp_words;
  j["counts"] = counts_json(r.counts);
  j["rates"] = {{"wer", opt_number(r.wer)},
                {"cer", opt_number(r.cer)},
                {"fer", opt_number(r.fer)},
                {"ter", opt_number(r.ter)}};
  j["worst_feature"] = r.worst_feature ? ordered_json(*r.worst_feature) : ordered_json(nullptr);
  j["worst_tone"] = r.worst_tone ? ordered_json(ToneCategoryName(*r.worst_tone))
                                 : ordered_json(nullptr);
  j["per_feature"] = per_feature_json(r.counts, r.dimensions);
  j["per_tone"] = per_tone_json(r.counts);
  j["words"] = words_json(r.word_classifications);
  j["word_alignment"] = alignment_json(r.word_alignment);
  j["feature_alignment"] = alignment_json(r.feature_alignment);
  j["warnings"] = r.warnings;
  return j;
}

constexpr const char* kTsvHeader = "id\twer\tcer\tfer\tter\tworst_f\tworst_t\n";

std::string tsv_row(const std::string& id, const std::optional<double>& wer,
                    const std::optional<double>& cer, const std::optional<double>& fer,
                    const std::optional<double>& ter,
                    const std::optional<std::string>& worst_feature,
                    const std::optional<ToneCategory>& worst_tone) {
  std::ostringstream out;
  out << id << '\t' << fixed4(wer) << '\t' << fixed4(cer) << '\t' << fixed4(fer)
      << '\t' << fixed4(ter) << '\t' << worst_feature.value_or("--") << '\t'
      << (worst_tone ? ToneCategoryName(*worst_tone) : "--") << '\n';
  return out.str();
}

const char* category_tag(WordCategory c) {
  switch (c) {
    case WordCategory::Correct: return "ok";
    case WordCategory::ToneErrorOnly: return "tone";
    case WordCategory::FeaturalError: return "feat";
    case WordCategory::Mixed: return "mixed";
    case WordCategory::Deletion: return "del";
    case WordCategory::Insertion: return "ins";
  }
  return "ok";
}

const char* category_ansi(WordCategory c) {
  switch (c) {
    case WordCategory::Correct: return "\x1b[32m";        // green
    case WordCategory::ToneErrorOnly: return "\x1b[31m";  // red
    case WordCategory::FeaturalError: return "\x1b[33m";  // yellow
    case WordCategory::Mixed: return "\x1b[35m";          // magenta
    case WordCategory::Deletion:
    case WordCategory::Insertion: return "\x1b[34m";      // blue
  }
  return "";
}

std::string annotated_word(const std::string& word, WordCategory category,
                           bool color) {
  if (color)
    return std::string(category_ansi(category)) + word + "\x1b[0m";
  return word + "[" + category_tag(category) + "]";
}

void pretty_utterance(const UtteranceReport& r, const RenderOptions& options,
                      std::ostringstream& out) {
  out << "== " << (r.utterance_id.empty() ? "(utterance)" : r.utterance_id) << '\n';
  out << "REF:";
  for (const std::string& w : r.ref_words) out << ' ' << w;
  out << '\n';
  out << "HYP:";
  for (const WordClassification& wc : r.word_classifications) {
    if (wc.category == WordCategory::Deletion) {
      out << ' ' << annotated_word("*", wc.category, options.color);
    } else if (wc.hyp_word) {
      out << ' ' << annotated_word(*wc.hyp_word, wc.category, options.color);
    }
  }
  out << '\n';
  out << "WER " << fixed4(r.wer) << " (" << r.counts.wer_errors << '/'
      << r.counts.wer_ref_words << ")  CER " << fixed4(r.cer) << " ("
      << r.counts.cer_errors << '/' << r.counts.cer_ref_chars << ")  FER "
      << fixed4(r.fer) << " (" << r.counts.fer_cost << '/'
      << r.counts.fer_ref_segments << ")  TER " << fixed4(r.ter);
  if (r.ter)
    out << " (" << r.counts.ter_errors << '/' << r.counts.ter_ref_tonebearing << ")";
  out << '\n';
  out << "worst feature: " << r.worst_feature.value_or("--") << "  worst tone: "
      << (r.worst_tone ? ToneCategoryName(*r.worst_tone) : "--") << '\n';
  for (const std::string& w : r.warnings) out << "warning: " << w << '\n';
}

}  // namespace

std::optional<ReportFormat> ReportFormatFromName(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "pretty") return ReportFormat::Pretty;
  return std::nullopt;
}

std::string render(const UtteranceReport& report, ReportFormat format,
                   const RenderOptions& options) {
  switch (format) {
    case ReportFormat::Json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "utterance";
      j["utterance"] = utterance_json(report);
      return j.dump(2) + "\n";
    }
    case ReportFormat::Tsv:
      return std::string(kTsvHeader) +
             tsv_row(report.utterance_id, report.wer, report.cer, report.fer,
                     report.ter, report.worst_feature, report.worst_tone);
    case ReportFormat::Pretty: {
      std::ostringstream out;
      pretty_utterance(report, options, out);
      return out.str();
    }
  }
  throw Error("unknown report format");
}

std::string render(const CorpusReport& report, ReportFormat format,
                   const RenderOptions& options) {
  switch (format) {
    case ReportFormat::Json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "corpus";
      j["language"] = report.language_id;
      j["num_utterances"] = report.num_utterances;
      j["min_support"] = report.min_support;
      j["counts"] = counts_json(report.counts);
      j["rates"] = {{"wer", opt_number(report.wer)},
                    {"cer", opt_number(report.cer)},
                    {"fer", opt_number(report.fer)},
                    {"ter", opt_number(report.ter)}};
      j["worst_feature"] =
          report.worst_feature ? ordered_json(*report.worst_feature) : ordered_json(nullptr);
      j["worst_tone"] = report.worst_tone
                            ? ordered_json(ToneCategoryName(*report.worst_tone))
                            : ordered_json(nullptr);
      j["per_feature"] = per_feature_json(report.counts, report.dimensions);
      j["per_tone"] = per_tone_json(report.counts);
      ordered_json utts = ordered_json::array();
      for (const UtteranceReport& u : report.utterances)
        utts.push_back(utterance_json(u));
      j["utterances"] = std::move(utts);
      return j.dump(2) + "\n";
    }
    case ReportFormat::Tsv: {
      std::ostringstream out;
      out << kTsvHeader;
      for (const UtteranceReport& u : report.utterances)
        out << tsv_row(u.utterance_id, u.wer, u.cer, u.fer, u.ter, u.worst_feature,
                       u.worst_tone);
      out << tsv_row("ALL", report.wer, report.cer, report.fer, report.ter,
                     report.worst_feature, report.worst_tone);
      return out.str();
    }
    case ReportFormat::Pretty: {
      std::ostringstream out;
      out << "corpus: " << report.language_id << ", " << report.num_utterances
          << " utterance" << (report.num_utterances == 1 ? "" : "s") << '\n';
      out << "WER " << fixed4(report.wer) << "  CER " << fixed4(report.cer)
          << "  FER " << fixed4(report.fer) << "  TER " << fixed4(report.ter) << '\n';
      out << "worst feature: " << report.worst_feature.value_or("--")
          << "  worst tone: "
          << (report.worst_tone ? ToneCategoryName(*report.worst_tone) : "--") << '\n';
      if (!report.counts.per_tone_category.empty()) {
        out << "per tone:";
        for (const auto& [cat, stat] : report.counts.per_tone_category) {
          out << "  " << ToneCategoryName(cat) << ' ' << fixed4(stat.rate()) << " ("
              << stat.error_count << '/' << stat.ref_count << ')';
        }
        out << '\n';
      }
      for (const UtteranceReport& u : report.utterances) {
        out << '\n';
        pretty_utterance(u, options, out);
      }
      return out.str();
    }
  }
  throw Error("unknown report format");
}

}  // namespace phonoscore
