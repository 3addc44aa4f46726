#include "treeline/conllu.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "treeline/error.hpp"

namespace treeline {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

bool parse_int(const std::string& text, std::int64_t& value) {
    if (text.empty()) return false;
    std::size_t used = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == text.size();
}

// The sentence is kept only if its heads define a tree: ids contiguous from
// 1, heads in range, exactly one root, no cycles.
bool validate_sentence(const Sentence& sentence, std::string& why) {
    std::int32_t n = sentence.size();
    if (n == 0) {
        why = "empty sentence";
        return false;
    }
    for (std::int32_t i = 0; i < n; ++i) {
        if (sentence.tokens[i].id != i + 1) {
            why = "token ids are not contiguous from 1";
            return false;
        }
    }
    std::int32_t roots = 0;
    for (const Token& token : sentence.tokens) {
        if (token.head < 0 || token.head > n) {
            why = "head " + std::to_string(token.head) + " out of range";
            return false;
        }
        if (token.head == token.id) {
            why = "token " + std::to_string(token.id) + " is its own head";
            return false;
        }
        if (token.head == 0) ++roots;
    }
    if (roots != 1) {
        why = std::to_string(roots) + " roots, expected exactly 1";
        return false;
    }
    // Walking up from every token must reach the root; a revisit is a cycle.
    std::vector<std::int8_t> state(static_cast<std::size_t>(n) + 1, 0);  // 0 new, 1 active, 2 done
    for (std::int32_t start = 1; start <= n; ++start) {
        std::int32_t u = start;
        std::vector<std::int32_t> chain;
        while (u != 0 && state[u] == 0) {
            state[u] = 1;
            chain.push_back(u);
            u = sentence.tokens[u - 1].head;
        }
        if (u != 0 && state[u] == 1) {
            why = "head cycle through token " + std::to_string(u);
            return false;
        }
        for (std::int32_t v : chain) state[v] = 2;
    }
    return true;
}

}  // namespace

ParseResult parse_conllu(std::istream& in) {
    ParseResult result;
    Sentence current;
    bool in_sentence = false;
    std::int64_t line_number = 0;
    bool current_broken = false;

    auto flush = [&]() {
        if (!in_sentence) return;
        ++result.sentences_seen;
        if (!current_broken) {
            std::string why;
            if (validate_sentence(current, why)) {
                result.sentences.push_back(std::move(current));
            } else {
                result.diagnostics.push_back({current.first_line, "sentence dropped: " + why});
            }
        }
        current = Sentence{};
        in_sentence = false;
        current_broken = false;
    };

    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') {
            if (!in_sentence) {
                in_sentence = true;
                current.first_line = line_number;
            }
            std::size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                std::string value = line.substr(eq + 1);
                auto trim = [](std::string& s) {
                    s.erase(0, s.find_first_not_of(" \t"));
                    s.erase(s.find_last_not_of(" \t") + 1);
                };
                trim(key);
                trim(value);
                if (key == "sent_id") current.sent_id = value;
                if (key == "text") current.text = value;
            }
            continue;
        }

        if (!in_sentence) {
            in_sentence = true;
            current.first_line = line_number;
        }
        if (current_broken) continue;

        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 10) {
            result.diagnostics.push_back(
                {line_number, "sentence dropped: expected 10 tab-separated fields, got " +
                                  std::to_string(fields.size())});
            current_broken = true;
            continue;
        }
        const std::string& id_field = fields[0];
        // Multiword ranges ("3-4") and empty nodes ("3.1") carry no tree
        // structure of their own.
        if (id_field.find('-') != std::string::npos || id_field.find('.') != std::string::npos)
            continue;

        std::int64_t id = 0, head = 0;
        if (!parse_int(id_field, id) || id < 1) {
            result.diagnostics.push_back({line_number, "sentence dropped: bad token id '" +
                                                           id_field + "'"});
            current_broken = true;
            continue;
        }
        if (!parse_int(fields[6], head) || head < 0) {
            result.diagnostics.push_back({line_number, "sentence dropped: bad head '" +
                                                           fields[6] + "'"});
            current_broken = true;
            continue;
        }
        Token token;
        token.id = static_cast<std::int32_t>(id);
        token.form = fields[1];
        token.upos = fields[3];
        token.head = static_cast<std::int32_t>(head);
        token.deprel = fields[7];
        current.tokens.push_back(std::move(token));
    }
    if (in.bad()) fail(ErrorKind::io_error, "stream failed while reading");
    flush();
    return result;
}

bool strip_punctuation(Sentence& sentence, std::string& why_dropped) {
    std::int32_t n = sentence.size();
    std::vector<char> punct(static_cast<std::size_t>(n) + 1, 0);
    for (const Token& token : sentence.tokens)
        if (token.upos == "PUNCT") punct[token.id] = 1;

    // New contiguous ids for survivors.
    std::vector<std::int32_t> new_id(static_cast<std::size_t>(n) + 1, 0);
    std::int32_t kept = 0;
    for (const Token& token : sentence.tokens)
        if (!punct[token.id]) new_id[token.id] = ++kept;

    if (kept < 2) {
        why_dropped = "fewer than two tokens after punctuation removal";
        return false;
    }

    std::vector<Token> survivors;
    survivors.reserve(static_cast<std::size_t>(kept));
    for (const Token& token : sentence.tokens) {
        if (punct[token.id]) continue;
        Token moved = token;
        // Climb past removed ancestors; land on the first kept one, or
        // become the root when the chain is punctuation all the way up.
        // The step bound keeps an unvalidated head cycle from spinning.
        std::int32_t head = token.head;
        std::int32_t steps = 0;
        while (head != 0 && punct[head]) {
            head = sentence.tokens[head - 1].head;
            if (++steps > n) {
                why_dropped = "head cycle among punctuation tokens";
                return false;
            }
        }
        moved.head = head == 0 ? 0 : new_id[head];
        moved.id = new_id[token.id];
        survivors.push_back(std::move(moved));
    }
    sentence.tokens = std::move(survivors);

    if (!validate_sentence(sentence, why_dropped)) return false;
    return true;
}

}  // namespace treeline
