#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace treeline {

// One syntactic word.  Multiword range lines and empty nodes are dropped at
// parse time, so ids are always plain integers.
struct Token {
    std::int32_t id = 0;    // 1-based within the sentence
    std::string form;
    std::string upos;
    std::int32_t head = 0;  // 0 marks the root
    std::string deprel;
};

struct Sentence {
    std::string sent_id;  // from "# sent_id = ..." when present
    std::string text;     // from "# text = ..." when present
    std::vector<Token> tokens;
    std::int64_t first_line = 0;

    std::int32_t size() const { return static_cast<std::int32_t>(tokens.size()); }
};

struct Diagnostic {
    std::int64_t line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<Sentence> sentences;   // only sentences that validated as trees
    std::vector<Diagnostic> diagnostics;
    std::int64_t sentences_seen = 0;   // including dropped ones
};

// Tab-separated, ten columns per token line, '#' comments, blank line ends a
// sentence.  Malformed sentences are skipped with a diagnostic carrying the
// line number; the stream itself failing mid-read raises io_error.
ParseResult parse_conllu(std::istream& in);

// Remove punctuation tokens (UPOS == "PUNCT").  Dependents of a removed
// token re-attach to the nearest non-punctuation ancestor, or become the
// root when the whole ancestor chain is punctuation.  Ids are renumbered to
// stay contiguous.  Returns false (with a message) when the result is no
// longer a valid tree of at least two tokens.
bool strip_punctuation(Sentence& sentence, std::string& why_dropped);

}  // namespace treeline
