#include "treeline/treebank.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <ostream>

#include "treeline/error.hpp"
#include "treeline/expectations.hpp"

namespace treeline {

SentenceMetrics sentence_metrics(const Sentence& sentence) {
    std::int32_t n = sentence.size();
    if (n < 2)
        fail(ErrorKind::undefined_value, "metrics undefined for sentences of fewer than two tokens");

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    Vertex root = -1;
    for (const Token& token : sentence.tokens) {
        if (token.head == 0)
            root = token.id - 1;
        else
            edges.emplace_back(token.head, token.id);
    }
    FreeTree tree = from_edge_list(n, edges);
    RootedTree rooted = root_at(tree, root);
    Arrangement order = Arrangement::identity(n);  // word order is the arrangement

    SentenceMetrics m;
    m.sent_id = sentence.sent_id;
    m.n = n;
    m.sum_lengths = sum_edge_lengths(tree, order);
    m.crossings = count_crossings(tree, order);
    m.planar = m.crossings == 0;
    m.projective = is_projective(rooted, order);
    assert(!m.projective || m.planar);
    m.mean_length = make_rational(m.sum_lengths, n - 1);
    Rational scale = make_rational(1, n - 1);
    m.expected_mean_unconstrained = expected_D_unconstrained(n) * scale;
    m.expected_mean_planar = expected_D_planar(tree) * scale;
    m.expected_mean_projective = expected_D_projective(rooted) * scale;
    return m;
}

namespace {

bool satisfies(const SentenceMetrics& m, Constraint constraint) {
    switch (constraint) {
        case Constraint::none: return true;
        case Constraint::planar: return m.planar;
        case Constraint::projective: return m.projective;
    }
    return false;
}

const Rational& baseline(const SentenceMetrics& m, Constraint constraint) {
    switch (constraint) {
        case Constraint::none: return m.expected_mean_unconstrained;
        case Constraint::planar: return m.expected_mean_planar;
        case Constraint::projective: return m.expected_mean_projective;
    }
    return m.expected_mean_unconstrained;
}

}  // namespace

std::vector<LengthRow> aggregate_by_length(std::span<const SentenceMetrics> metrics,
                                           Constraint constraint) {
    struct Bucket {
        std::int64_t count = 0;
        Rational mean_sum;
        Rational baseline_sum;
    };
    std::map<std::int32_t, Bucket> buckets;
    for (const SentenceMetrics& m : metrics) {
        if (!satisfies(m, constraint)) continue;
        Bucket& bucket = buckets[m.n];
        ++bucket.count;
        bucket.mean_sum += m.mean_length;
        bucket.baseline_sum += baseline(m, constraint);
    }
    std::vector<LengthRow> rows;
    rows.reserve(buckets.size());
    for (auto& [n, bucket] : buckets) {
        LengthRow row;
        row.n = n;
        row.count = bucket.count;
        row.mean_length = bucket.mean_sum / static_cast<long>(bucket.count);
        row.expected_mean_length = bucket.baseline_sum / static_cast<long>(bucket.count);
        rows.push_back(std::move(row));
    }
    return rows;
}

Coverage coverage_table(std::span<const SentenceMetrics> metrics) {
    Coverage coverage;
    coverage.sentences = static_cast<std::int64_t>(metrics.size());
    if (metrics.empty()) {
        coverage.pct_projective = 0;
        coverage.pct_planar = 0;
        return coverage;
    }
    std::int64_t projective = 0, planar = 0;
    for (const SentenceMetrics& m : metrics) {
        projective += m.projective;
        planar += m.planar;
    }
    coverage.pct_projective = make_rational(100 * projective, coverage.sentences);
    coverage.pct_planar = make_rational(100 * planar, coverage.sentences);
    return coverage;
}

void write_metrics_csv(std::ostream& out, const std::string& lang,
                       std::span<const SentenceMetrics> metrics) {
    out << "lang,sent_id,n,sum_lengths,crossings,planar,projective,mean_d,"
           "expected_mean_d_none,expected_mean_d_planar,expected_mean_d_projective\n";
    for (const SentenceMetrics& m : metrics) {
        out << lang << ',' << m.sent_id << ',' << m.n << ',' << m.sum_lengths << ','
            << m.crossings << ',' << (m.planar ? "true" : "false") << ','
            << (m.projective ? "true" : "false") << ',' << format_decimal(m.mean_length) << ','
            << format_decimal(m.expected_mean_unconstrained) << ','
            << format_decimal(m.expected_mean_planar) << ','
            << format_decimal(m.expected_mean_projective) << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const std::string& lang,
                         std::span<const SentenceMetrics> metrics) {
    out << "lang,n,count,constraint,mean_d,expected_mean_d\n";
    for (Constraint constraint :
         {Constraint::none, Constraint::planar, Constraint::projective}) {
        for (const LengthRow& row : aggregate_by_length(metrics, constraint)) {
            out << lang << ',' << row.n << ',' << row.count << ',' << to_string(constraint)
                << ',' << format_decimal(row.mean_length) << ','
                << format_decimal(row.expected_mean_length) << '\n';
        }
    }
}

void write_coverage_header(std::ostream& out) {
    out << "lang,pct_projective,pct_planar\n";
}

void write_coverage_row(std::ostream& out, const std::string& lang, const Coverage& coverage) {
    out << lang << ',' << format_decimal(coverage.pct_projective) << ','
        << format_decimal(coverage.pct_planar) << '\n';
}

TreebankSummary analyze_stream(std::istream& in, const std::string& lang) {
    TreebankSummary summary;
    summary.lang = lang;
    ParseResult parsed = parse_conllu(in);
    summary.sentences_seen = parsed.sentences_seen;
    summary.diagnostics = std::move(parsed.diagnostics);

    for (Sentence& sentence : parsed.sentences) {
        std::string why;
        if (!strip_punctuation(sentence, why)) {
            summary.diagnostics.push_back(
                {sentence.first_line, "sentence dropped: " + why});
            continue;
        }
        summary.metrics.push_back(sentence_metrics(sentence));
        ++summary.sentences_kept;
    }
    return summary;
}

}  // namespace treeline
