// core/include/phonoscore/metrics.hpp

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

#ifndef PHONOSCORE_METRICS_HPP_
#define PHONOSCORE_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phonoscore/alignment.hpp"
#include "phonoscore/profile.hpp"
#include "phonoscore/segmenter.hpp"

namespace phonoscore {

// A rate with a zero denominator is undefined and reported as absent,
// never coerced to 0 or 1.
inline std::optional<double> safe_rate(double num, long long den) {
  if (den <= 0) return std::nullopt;
  return num / static_cast<double>(den);
}

struct DimStat {
  double error_count = 0.0;   // mismatch columns + indels touching this dim
  long long ref_active = 0;   // reference segments with a non-zero value
  std::optional<double> rate() const { return safe_rate(error_count, ref_active); }
};

struct ToneStat {
  long long error_count = 0;
  long long ref_count = 0;
  std::optional<double> rate() const {
    return safe_rate(static_cast<double>(error_count), ref_count);
  }
};

// Numerators and denominators behind every reported rate.  Corpus results
// are micro-averages: sums of these fields across utterances.
struct MetricCounts {
  long long wer_errors = 0, wer_ref_words = 0;
  long long cer_errors = 0, cer_ref_chars = 0;
  double fer_cost = 0.0;
  long long fer_ref_segments = 0;
  long long ter_errors = 0, ter_ref_tonebearing = 0;
  // Tone-bearing hypothesis insertions; tracked separately, not part of
  // the headline reference-anchored TER.
  long long ter_hyp_insertions = 0;
  // Eq-style distance restricted to tone dimensions, summed over aligned
  // columns.  Secondary diagnostic next to the categorical TER.
  double tone_restricted_cost = 0.0;
  std::map<int, DimStat> per_dimension;
  std::map<ToneCategory, ToneStat> per_tone_category;

  void accumulate(const MetricCounts& other);

  std::optional<double> wer() const { return safe_rate(static_cast<double>(wer_errors), wer_ref_words); }
  std::optional<double> cer() const { return safe_rate(static_cast<double>(cer_errors), cer_ref_chars); }
  std::optional<double> fer() const { return safe_rate(fer_cost, fer_ref_segments); }
  std::optional<double> ter() const { return safe_rate(static_cast<double>(ter_errors), ter_ref_tonebearing); }
};

enum class WordCategory { Correct, ToneErrorOnly, FeaturalError, Mixed, Deletion, Insertion };

const char* WordCategoryName(WordCategory c);

struct WordClassification {
  std::optional<std::string> ref_word;
  std::optional<std::string> hyp_word;
  WordCategory category = WordCategory::Correct;
};

struct UtteranceReport {
  std::string utterance_id;
  MetricCounts counts;
  std::optional<double> wer, cer, fer, ter;
  std::optional<std::string> worst_feature;  // dimension abbr, tones excluded
  std::optional<ToneCategory> worst_tone;
  Alignment word_alignment;
  Alignment feature_alignment;
  std::vector<WordClassification> word_classifications;
  std::vector<std::string> ref_words, hyp_words;
  std::vector<std::string> warnings;
  // Dimension metadata of the profile the report was produced under, so
  // renderers can name per-dimension entries without the profile at hand.
  std::vector<FeatureDimension> dimensions;
};

struct CorpusReport {
  std::string language_id;
  long long num_utterances = 0;
  MetricCounts counts;  // sums of the per-utterance counts
  std::optional<double> wer, cer, fer, ter;
  std::optional<std::string> worst_feature;
  std::optional<ToneCategory> worst_tone;
  int min_support = 1;
  std::vector<UtteranceReport> utterances;  // kept only when requested
  std::vector<FeatureDimension> dimensions;
};

struct RateResult {
  long long errors = 0;
  long long denominator = 0;
  std::optional<double> rate;
  Alignment alignment;
};

// Word error rate: unit-cost edit distance over word tokens divided by the
// reference word count.  May exceed 1 when the hypothesis inserts words.
RateResult wer(const std::vector<std::string>& ref_words,
               const std::vector<std::string>& hyp_words);

// Character error rate over char units (combining marks attached, single
// inter-word spaces included).
RateResult cer(const std::vector<std::string>& ref_units,
               const std::vector<std::string>& hyp_units);

struct FerResult {
  double cost = 0.0;
  long long ref_segments = 0;
  std::optional<double> rate;
  Alignment alignment;
};

// Feature error rate: NW alignment cost over realized vectors divided by
// the reference segment count.  Operates on the flattened utterance.
FerResult fer(std::span<const Segment> ref, std::span<const Segment> hyp,
              double indel_cost = 1.0);

struct TerResult {
  long long errors = 0;
  long long tone_bearing_refs = 0;
  long long hyp_insertions = 0;
  double tone_restricted_cost = 0.0;
  std::optional<double> rate;
  std::map<ToneCategory, ToneStat> per_category;
};

// Tone error rate: the fraction of tone-bearing reference segments that
// are deleted or aligned to a segment with a different tone category.
TerResult ter(const Alignment& feature_alignment, std::span<const Segment> ref,
              std::span<const Segment> hyp, const LanguageProfile& profile);

// Per-dimension error rates.  A substitution column counts against every
// masked dimension whose values differ; an indel counts against every
// dimension active in the lost/spurious segment.  Denominators are
// reference activity counts, so rates can exceed 1.
std::map<int, DimStat> per_feature_fer(const Alignment& feature_alignment,
                                       std::span<const Segment> ref,
                                       std::span<const Segment> hyp);

struct WorstEntries {
  std::optional<std::string> feature;  // abbr
  std::optional<ToneCategory> tone;
};

// Highest-rate non-tone dimension with denominator >= min_support (ties
// broken by dimension index) and highest-rate tone category.
WorstEntries worst_entries(const std::map<int, DimStat>& per_dimension,
                           const std::map<ToneCategory, ToneStat>& per_tone,
                           int min_support, const LanguageProfile& profile);

struct EvalOptions {
  double indel_cost = 1.0;
  bool strict = false;
  // Support threshold for the utterance-level worst-feature pick; corpus
  // aggregation applies its own (usually larger) threshold.
  int min_support = 1;
  const Lexicon* lexicon = nullptr;
  std::string utterance_id;
};

// Runs segmentation, both alignments and every metric for one
// reference/hypothesis pair.  Pure: identical inputs give identical
// reports.
UtteranceReport evaluate_utterance(std::string_view ref_raw,
                                   std::string_view hyp_raw,
                                   const LanguageProfile& profile,
                                   const EvalOptions& options = {});

// Micro-averaged corpus aggregation: numerators and denominators are
// summed in input order, then rates and worst entries are recomputed.
CorpusReport aggregate_corpus(std::vector<UtteranceReport> reports,
                              const LanguageProfile& profile,
                              int min_support = 5,
                              bool retain_utterances = false);

// Word-level error typing for annotated output: substituted word pairs are
// sub-aligned at segment level and classified as tone-error-only, featural,
// or mixed; unpaired words are deletions/insertions.
std::vector<WordClassification> classify_words(const Alignment& word_alignment,
                                               const NormalizedUtterance& ref,
                                               const NormalizedUtterance& hyp,
                                               const LanguageProfile& profile,
                                               double indel_cost = 1.0);

}  // namespace phonoscore

#endif  // PHONOSCORE_METRICS_HPP_
