// core/src/runner.cpp

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

#include "phonoscore/runner.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "phonoscore/error.hpp"
#include "phonoscore/metrics.hpp"

namespace phonoscore {

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (text.size() >= 3 && text[0] == '\xEF' && text[1] == '\xBB' && text[2] == '\xBF')
    text.erase(0, 3);  // byte-order mark
  return text;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_corpus_file(
    const std::string& path, InputFormat format) {
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  std::vector<std::pair<std::string, std::string>> entries;
  entries.reserve(lines.size());
  if (format == InputFormat::Lines) {
    for (size_t i = 0; i < lines.size(); ++i)
      entries.emplace_back(std::to_string(i + 1), lines[i]);
    return entries;
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const size_t tab = lines[i].find('\t');
    if (tab == std::string::npos)
      throw Error("'" + path + "' line " + std::to_string(i + 1) +
                  ": keyed-tsv lines must be id<TAB>text");
    entries.emplace_back(lines[i].substr(0, tab), lines[i].substr(tab + 1));
  }
  return entries;
}

std::vector<CorpusPair> pair_corpora(const std::string& ref_path,
                                     const std::string& hyp_path,
                                     InputFormat format) {
  const auto ref_entries = read_corpus_file(ref_path, format);
  const auto hyp_entries = read_corpus_file(hyp_path, format);
  std::vector<CorpusPair> pairs;
  pairs.reserve(ref_entries.size());

  if (format == InputFormat::Lines) {
    if (ref_entries.size() != hyp_entries.size())
      throw Error("line count mismatch: '" + ref_path + "' has " +
                  std::to_string(ref_entries.size()) + " lines, '" + hyp_path +
                  "' has " + std::to_string(hyp_entries.size()));
    for (size_t i = 0; i < ref_entries.size(); ++i)
      pairs.push_back({ref_entries[i].first, ref_entries[i].second,
                       hyp_entries[i].second});
    return pairs;
  }

  std::map<std::string, std::string> hyp_by_id;
  for (const auto& [id, text] : hyp_entries) {
    if (!hyp_by_id.emplace(id, text).second)
      throw Error("duplicate key '" + id + "' in '" + hyp_path + "'");
  }
  std::set<std::string> ref_ids;
  for (const auto& [id, text] : ref_entries) {
    if (!ref_ids.insert(id).second)
      throw Error("duplicate key '" + id + "' in '" + ref_path + "'");
  }
  for (const auto& [id, text] : hyp_entries) {
    if (!ref_ids.count(id))
      throw Error("missing key: hypothesis '" + id + "' has no reference entry");
  }
  for (const auto& [id, text] : ref_entries) {
    auto it = hyp_by_id.find(id);
    // A reference without a hypothesis scores against the empty string.
    pairs.push_back({id, text, it == hyp_by_id.end() ? std::string() : it->second});
  }
  return pairs;
}

CorpusReport evaluate_corpus(const RunConfig& config) {
  if (config.indel_cost <= 0.0) throw Error("indel cost must be positive");
  if (config.worker_count < 1) throw Error("worker count must be at least 1");

  const LanguageProfile profile = load_profile(config.profile_source);

  Lexicon lexicon;
  bool have_lexicon = false;
  if (config.lexicon_path) {
    if (profile.input_mode != InputMode::PhonemicTokens)
      throw Error("--lexicon requires a phonemic-tokens profile (e.g. english)");
    lexicon = load_lexicon(*config.lexicon_path);
    have_lexicon = true;
  }

  const std::vector<CorpusPair> pairs =
      pair_corpora(config.ref_path, config.hyp_path, config.input_format);

  std::vector<UtteranceReport> reports(pairs.size());
  auto evaluate_one = [&](size_t i) {
    EvalOptions options;
    options.indel_cost = config.indel_cost;
    options.strict = config.strict;
    options.min_support = 1;  // corpus-level worst uses config.min_support
    options.lexicon = have_lexicon ? &lexicon : nullptr;
    options.utterance_id = pairs[i].id;
    try {
      reports[i] = evaluate_utterance(pairs[i].ref, pairs[i].hyp, profile, options);
    } catch (const Error& e) {
      throw Error("utterance '" + pairs[i].id + "': " + e.what());
    }
  };

  if (config.worker_count == 1 || pairs.size() <= 1) {
    for (size_t i = 0; i < pairs.size(); ++i) evaluate_one(i);
  } else {
    const int workers =
        std::min<int>(config.worker_count, static_cast<int>(pairs.size()));
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> failures(pairs.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < reports.size(); i = next.fetch_add(1)) {
          try {
            evaluate_one(i);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& failure : failures)
      if (failure) std::rethrow_exception(failure);
  }

  return aggregate_corpus(std::move(reports), profile, config.min_support,
                          config.per_utterance);
}

int run_eval(const RunConfig& config, std::ostream& out) {
  const CorpusReport report = evaluate_corpus(config);
  RenderOptions render_options;
  render_options.color = config.color;
  out << render(report, config.output_format, render_options);
  return 0;
}

int run_segment(const std::string& text, const std::string& profile_source,
                bool strict, std::ostream& out) {
  const LanguageProfile profile = load_profile(profile_source);
  const NormalizedUtterance u = segment_utterance(text, profile, strict);
  for (size_t w = 0; w < u.words.size(); ++w) {
    out << "word: " << u.words[w] << '\n';
    for (const Segment& s : u.word_segments[w]) {
      out << "  " << (s.known ? s.label : "UNKNOWN(" + s.label + ")") << '\t'
          << ToneCategoryName(s.tone) << "\t[";
      for (int d = 0; d < kFeatureDims; ++d) {
        if (d) out << ' ';
        out << static_cast<int>(s.vec.v[d]);
      }
      out << "]\n";
    }
  }
  return 0;
}

int run_profile_validate(const std::string& path, std::ostream& out) {
  std::string text;
  try {
    text = is_builtin_profile(path) ? builtin_profile_text(path)
                                    : read_text_file(path);
  } catch (const Error& e) {
    out << e.what() << '\n';
    return 1;
  }

  std::vector<Diagnostic> diags;
  try {
    const LanguageProfile profile = parse_profile(text, &diags);
    const auto more = validate_profile(profile);
    diags.insert(diags.end(), more.begin(), more.end());
  } catch (const Error& e) {
    out << e.what() << '\n';
    return 1;
  }

  for (const Diagnostic& d : diags) out << d.location << ": " << d.message << '\n';
  if (diags.empty()) {
    out << "ok\n";
    return 0;
  }
  return 1;
}

}  // namespace phonoscore
