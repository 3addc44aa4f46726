#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "treeline/arrangement.hpp"
#include "treeline/conllu.hpp"
#include "treeline/rational.hpp"
#include "treeline/tree.hpp"

namespace treeline {

// Everything measured about one sentence: the word order is the arrangement,
// the annotated root is the projective root.
struct SentenceMetrics {
    std::string sent_id;
    std::int32_t n = 0;
    std::int64_t sum_lengths = 0;
    std::int64_t crossings = 0;
    bool planar = false;
    bool projective = false;
    Rational mean_length;                 // sum_lengths / (n - 1)
    Rational expected_mean_unconstrained; // baselines, same normalization
    Rational expected_mean_planar;
    Rational expected_mean_projective;    // for the annotated root
};

// Errors with undefined_value when the sentence has fewer than two tokens.
SentenceMetrics sentence_metrics(const Sentence& sentence);

struct LengthRow {
    std::int32_t n = 0;
    std::int64_t count = 0;
    Rational mean_length;           // average of per-sentence means
    Rational expected_mean_length;  // average of the matching baseline
};

// Group by sentence length the sentences satisfying the constraint (none
// keeps all) and average the observed means and the constraint's own
// baseline.  Rows come out sorted by n.
std::vector<LengthRow> aggregate_by_length(std::span<const SentenceMetrics> metrics,
                                           Constraint constraint);

struct Coverage {
    std::int64_t sentences = 0;
    Rational pct_projective;  // percentages, exact
    Rational pct_planar;
};

Coverage coverage_table(std::span<const SentenceMetrics> metrics);

// CSV writers; all decimals use the shared 6-digit rendering.
void write_metrics_csv(std::ostream& out, const std::string& lang,
                       std::span<const SentenceMetrics> metrics);
void write_aggregate_csv(std::ostream& out, const std::string& lang,
                         std::span<const SentenceMetrics> metrics);
void write_coverage_header(std::ostream& out);
void write_coverage_row(std::ostream& out, const std::string& lang, const Coverage& coverage);

// Full per-file pipeline: parse, strip punctuation, keep sentences with at
// least two tokens, measure.  Diagnostics from dropped sentences are
// appended.  The arrangement identity "projective implies planar" is
// asserted for every sentence.
struct TreebankSummary {
    std::string lang;
    std::int64_t sentences_seen = 0;
    std::int64_t sentences_kept = 0;
    std::vector<SentenceMetrics> metrics;
    std::vector<Diagnostic> diagnostics;
};

TreebankSummary analyze_stream(std::istream& in, const std::string& lang);

}  // namespace treeline
