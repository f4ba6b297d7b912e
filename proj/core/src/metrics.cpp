// core/src/metrics.cpp

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

#include "phonoscore/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "phonoscore/error.hpp"

namespace phonoscore {

const char* WordCategoryName(WordCategory c) {
  switch (c) {
    case WordCategory::Correct: return "correct";
    case WordCategory::ToneErrorOnly: return "tone-error-only";
    case WordCategory::FeaturalError: return "featural-error";
    case WordCategory::Mixed: return "mixed";
    case WordCategory::Deletion: return "deletion";
    case WordCategory::Insertion: return "insertion";
  }
  return "correct";
}

void MetricCounts::accumulate(const MetricCounts& other) {
  wer_errors += other.wer_errors;
  wer_ref_words += other.wer_ref_words;
  cer_errors += other.cer_errors;
  cer_ref_chars += other.cer_ref_chars;
  fer_cost += other.fer_cost;
  fer_ref_segments += other.fer_ref_segments;
  ter_errors += other.ter_errors;
  ter_ref_tonebearing += other.ter_ref_tonebearing;
  ter_hyp_insertions += other.ter_hyp_insertions;
  tone_restricted_cost += other.tone_restricted_cost;
  for (const auto& [dim, stat] : other.per_dimension) {
    DimStat& mine = per_dimension[dim];
    mine.error_count += stat.error_count;
    mine.ref_active += stat.ref_active;
  }
  for (const auto& [cat, stat] : other.per_tone_category) {
    ToneStat& mine = per_tone_category[cat];
    mine.error_count += stat.error_count;
    mine.ref_count += stat.ref_count;
  }
}

RateResult wer(const std::vector<std::string>& ref_words,
               const std::vector<std::string>& hyp_words) {
  RateResult r;
  r.alignment = levenshtein_align(ref_words, hyp_words);
  r.errors = std::llround(r.alignment.total_cost);
  r.denominator = static_cast<long long>(ref_words.size());
  r.rate = safe_rate(static_cast<double>(r.errors), r.denominator);
  return r;
}

RateResult cer(const std::vector<std::string>& ref_units,
               const std::vector<std::string>& hyp_units) {
  RateResult r;
  r.alignment = levenshtein_align(ref_units, hyp_units);
  r.errors = std::llround(r.alignment.total_cost);
  r.denominator = static_cast<long long>(ref_units.size());
  r.rate = safe_rate(static_cast<double>(r.errors), r.denominator);
  return r;
}

namespace {

std::vector<FeatureVector> vectors_of(std::span<const Segment> segments) {
  std::vector<FeatureVector> v;
  v.reserve(segments.size());
  for (const Segment& s : segments) v.push_back(s.vec);
  return v;
}

std::vector<int> tone_dim_list(const LanguageProfile& profile) {
  std::vector<int> dims;
  for (const auto& [cat, idx] : profile.tone_rules.tone_dims) dims.push_back(idx);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

FerResult fer(std::span<const Segment> ref, std::span<const Segment> hyp,
              double indel_cost) {
  FerResult r;
  const auto rv = vectors_of(ref);
  const auto hv = vectors_of(hyp);
  r.alignment = nw_align(rv, hv, indel_cost);
  r.cost = r.alignment.total_cost;
  r.ref_segments = static_cast<long long>(ref.size());
  r.rate = safe_rate(r.cost, r.ref_segments);
  return r;
}

TerResult ter(const Alignment& feature_alignment, std::span<const Segment> ref,
              std::span<const Segment> hyp, const LanguageProfile& profile) {
  TerResult r;
  for (const auto& [cat, idx] : profile.tone_rules.tone_dims)
    r.per_category[cat];  // report a row even when the category never occurs
  const std::vector<int> tone_dims = tone_dim_list(profile);

  for (const EditOp& op : feature_alignment.ops) {
    switch (op.kind) {
      case EditOpKind::Match:
      case EditOpKind::Substitute: {
        const Segment& rs = ref[op.ref_index];
        const Segment& hs = hyp[op.hyp_index];
        r.tone_restricted_cost += masked_distance_over(rs.vec, hs.vec, tone_dims);
        if (rs.tone == ToneCategory::None) break;
        ++r.tone_bearing_refs;
        ToneStat& stat = r.per_category[rs.tone];
        ++stat.ref_count;
        if (hs.tone != rs.tone) {
          ++r.errors;
          ++stat.error_count;
        }
        break;
      }
      case EditOpKind::Delete: {
        const Segment& rs = ref[op.ref_index];
        if (rs.tone == ToneCategory::None) break;
        ++r.tone_bearing_refs;
        ToneStat& stat = r.per_category[rs.tone];
        ++stat.ref_count;
        ++r.errors;
        ++stat.error_count;
        break;
      }
      case EditOpKind::Insert: {
        // Spurious tone bearers are tallied but kept out of the headline
        // reference-anchored rate.
        if (hyp[op.hyp_index].tone != ToneCategory::None) ++r.hyp_insertions;
        break;
      }
    }
  }
  r.rate = safe_rate(static_cast<double>(r.errors), r.tone_bearing_refs);
  return r;
}

std::map<int, DimStat> per_feature_fer(const Alignment& feature_alignment,
                                       std::span<const Segment> ref,
                                       std::span<const Segment> hyp) {
  std::map<int, DimStat> stats;
  for (const Segment& s : ref)
    for (int d = 0; d < kFeatureDims; ++d)
      if (s.vec.v[d] != 0) ++stats[d].ref_active;

  for (const EditOp& op : feature_alignment.ops) {
    switch (op.kind) {
      case EditOpKind::Match:
        break;
      case EditOpKind::Substitute: {
        const FeatureVector& rv = ref[op.ref_index].vec;
        const FeatureVector& hv = hyp[op.hyp_index].vec;
        for (int d = 0; d < kFeatureDims; ++d)
          if ((rv.v[d] != 0 || hv.v[d] != 0) && rv.v[d] != hv.v[d])
            stats[d].error_count += 1.0;
        break;
      }
      case EditOpKind::Delete: {
        const FeatureVector& rv = ref[op.ref_index].vec;
        for (int d = 0; d < kFeatureDims; ++d)
          if (rv.v[d] != 0) stats[d].error_count += 1.0;
        break;
      }
      case EditOpKind::Insert: {
        const FeatureVector& hv = hyp[op.hyp_index].vec;
        for (int d = 0; d < kFeatureDims; ++d)
          if (hv.v[d] != 0) stats[d].error_count += 1.0;
        break;
      }
    }
  }
  return stats;
}

WorstEntries worst_entries(const std::map<int, DimStat>& per_dimension,
                           const std::map<ToneCategory, ToneStat>& per_tone,
                           int min_support, const LanguageProfile& profile) {
  WorstEntries out;
  double best_rate = -1.0;
  for (const FeatureDimension& dim : profile.dimensions) {
    if (dim.is_tone) continue;
    auto it = per_dimension.find(dim.index);
    if (it == per_dimension.end()) continue;
    if (it->second.ref_active < min_support) continue;
    auto rate = it->second.rate();
    if (rate && *rate > best_rate) {
      best_rate = *rate;
      out.feature = dim.abbr;
    }
  }
  double best_tone_rate = -1.0;
  for (const auto& [cat, stat] : per_tone) {
    auto rate = stat.rate();
    if (rate && *rate > best_tone_rate) {
      best_tone_rate = *rate;
      out.tone = cat;
    }
  }
  return out;
}

std::vector<WordClassification> classify_words(const Alignment& word_alignment,
                                               const NormalizedUtterance& ref,
                                               const NormalizedUtterance& hyp,
                                               const LanguageProfile& profile,
                                               double indel_cost) {
  std::vector<WordClassification> out;
  out.reserve(word_alignment.ops.size());

  std::vector<int> tone_dims_mask(kFeatureDims, 0);
  for (const FeatureDimension& dim : profile.dimensions)
    if (dim.is_tone && dim.index >= 0 && dim.index < kFeatureDims)
      tone_dims_mask[dim.index] = 1;

  for (const EditOp& op : word_alignment.ops) {
    WordClassification wc;
    switch (op.kind) {
      case EditOpKind::Match:
        wc.ref_word = ref.words[op.ref_index];
        wc.hyp_word = hyp.words[op.hyp_index];
        wc.category = WordCategory::Correct;
        break;
      case EditOpKind::Delete:
        wc.ref_word = ref.words[op.ref_index];
        wc.category = WordCategory::Deletion;
        break;
      case EditOpKind::Insert:
        wc.hyp_word = hyp.words[op.hyp_index];
        wc.category = WordCategory::Insertion;
        break;
      case EditOpKind::Substitute: {
        wc.ref_word = ref.words[op.ref_index];
        wc.hyp_word = hyp.words[op.hyp_index];
        const auto& rsegs = ref.word_segments[op.ref_index];
        const auto& hsegs = hyp.word_segments[op.hyp_index];
        const Alignment sub =
            nw_align(vectors_of(rsegs), vectors_of(hsegs), indel_cost);
        bool has_indel = false, tone_diff = false, feat_diff = false;
        for (const EditOp& sop : sub.ops) {
          if (sop.kind == EditOpKind::Delete || sop.kind == EditOpKind::Insert) {
            has_indel = true;
            continue;
          }
          const Segment& rs = rsegs[sop.ref_index];
          const Segment& hs = hsegs[sop.hyp_index];
          if (rs.tone != hs.tone) tone_diff = true;
          for (int d = 0; d < kFeatureDims && !feat_diff; ++d) {
            if (tone_dims_mask[d]) continue;
            if ((rs.vec.v[d] != 0 || hs.vec.v[d] != 0) && rs.vec.v[d] != hs.vec.v[d])
              feat_diff = true;
          }
        }
        if (has_indel || (tone_diff && feat_diff)) {
          wc.category = WordCategory::Mixed;
        } else if (tone_diff) {
          wc.category = WordCategory::ToneErrorOnly;
        } else if (feat_diff) {
          wc.category = WordCategory::FeaturalError;
        } else {
          // Featurally identical despite the lexical mismatch (homophonous
          // labels such as s/sh share one vector row).
          wc.category = WordCategory::Correct;
        }
        break;
      }
    }
    out.push_back(std::move(wc));
  }
  return out;
}

UtteranceReport evaluate_utterance(std::string_view ref_raw,
                                   std::string_view hyp_raw,
                                   const LanguageProfile& profile,
                                   const EvalOptions& options) {
  UtteranceReport report;
  report.utterance_id = options.utterance_id;

  NormalizedUtterance ref_u, hyp_u;
  if (options.lexicon != nullptr) {
    if (profile.input_mode != InputMode::PhonemicTokens)
      throw Error("a pronunciation lexicon requires a phonemic-tokens profile");
    for (auto* side : {&ref_u, &hyp_u}) {
      const std::string_view raw = side == &ref_u ? ref_raw : hyp_raw;
      side->text = normalize_text(raw, profile);
      side->words.clear();
      {
        std::string w;
        for (const char c : side->text) {
          if (c == ' ') {
            if (!w.empty()) side->words.push_back(std::move(w));
            w.clear();
          } else {
            w.push_back(c);
          }
        }
        if (!w.empty()) side->words.push_back(std::move(w));
      }
      side->units = char_units(side->text);
      side->word_segments = phonemize_with_lexicon(side->words, *options.lexicon,
                                                   profile, &report.warnings);
    }
  } else {
    ref_u = segment_utterance(ref_raw, profile, options.strict);
    hyp_u = segment_utterance(hyp_raw, profile, options.strict);
  }

  report.ref_words = ref_u.words;
  report.hyp_words = hyp_u.words;
  report.dimensions = profile.dimensions;
  if (ref_u.words.empty())
    report.warnings.push_back("empty reference: rates are undefined");

  const RateResult w = wer(ref_u.words, hyp_u.words);
  report.word_alignment = w.alignment;
  report.counts.wer_errors = w.errors;
  report.counts.wer_ref_words = w.denominator;
  report.wer = w.rate;

  const RateResult c = cer(ref_u.units, hyp_u.units);
  report.counts.cer_errors = c.errors;
  report.counts.cer_ref_chars = c.denominator;
  report.cer = c.rate;

  const std::vector<Segment> flat_ref = ref_u.flat_segments();
  const std::vector<Segment> flat_hyp = hyp_u.flat_segments();
  const FerResult f = fer(flat_ref, flat_hyp, options.indel_cost);
  report.feature_alignment = f.alignment;
  report.counts.fer_cost = f.cost;
  report.counts.fer_ref_segments = f.ref_segments;
  report.fer = f.rate;

  if (profile.tonal()) {
    const TerResult t = ter(f.alignment, flat_ref, flat_hyp, profile);
    report.counts.ter_errors = t.errors;
    report.counts.ter_ref_tonebearing = t.tone_bearing_refs;
    report.counts.ter_hyp_insertions = t.hyp_insertions;
    report.counts.tone_restricted_cost = t.tone_restricted_cost;
    report.counts.per_tone_category = t.per_category;
    report.ter = t.rate;
  }

  report.counts.per_dimension = per_feature_fer(f.alignment, flat_ref, flat_hyp);
  const WorstEntries worst =
      worst_entries(report.counts.per_dimension, report.counts.per_tone_category,
                    options.min_support, profile);
  report.worst_feature = worst.feature;
  report.worst_tone = worst.tone;

  report.word_classifications =
      classify_words(w.alignment, ref_u, hyp_u, profile, options.indel_cost);
  return report;
}

CorpusReport aggregate_corpus(std::vector<UtteranceReport> reports,
                              const LanguageProfile& profile, int min_support,
                              bool retain_utterances) {
  if (reports.empty()) throw Error("no utterances to aggregate");
  CorpusReport corpus;
  corpus.language_id = profile.language_id;
  corpus.min_support = min_support;
  corpus.num_utterances = static_cast<long long>(reports.size());
  corpus.dimensions = profile.dimensions;
  for (const UtteranceReport& r : reports) corpus.counts.accumulate(r.counts);
  corpus.wer = corpus.counts.wer();
  corpus.cer = corpus.counts.cer();
  corpus.fer = corpus.counts.fer();
  corpus.ter = profile.tonal() ? corpus.counts.ter() : std::nullopt;
  const WorstEntries worst = worst_entries(
      corpus.counts.per_dimension, corpus.counts.per_tone_category, min_support, profile);
  corpus.worst_feature = worst.feature;
  corpus.worst_tone = worst.tone;
  if (retain_utterances) corpus.utterances = std::move(reports);
  return corpus;
}

}  // namespace phonoscore
