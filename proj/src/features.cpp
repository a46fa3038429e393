#include "checkit/features.hpp"

#include "checkit/error.hpp"
#include "checkit/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <unordered_map>

namespace checkit::features {

using util::is_digit;
using util::is_letter;
using util::is_lower;
using util::is_space;
using util::is_upper;

// ---- tokenization --------------------------------------------------------------

std::size_t TokenizedText::word_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences)
        for (const auto& tok : s)
            if (tok.is_word()) ++n;
    return n;
}

std::size_t TokenizedText::token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
}

namespace {

CasingClass classify_casing(const std::vector<char32_t>& cps) {
    std::size_t letters = 0, uppers = 0, lowers = 0;
    bool first_is_upper = false;
    bool seen_letter = false;
    for (char32_t c : cps) {
        if (is_letter(c)) {
            if (!seen_letter) {
                first_is_upper = is_upper(c);
                seen_letter = true;
            }
            ++letters;
            if (is_upper(c)) ++uppers;
            if (is_lower(c)) ++lowers;
        }
    }
    if (letters == 0) return CasingClass::Other;
    if (uppers == letters && letters >= 2) return CasingClass::AllCaps;
    if (first_is_upper && lowers + uppers == letters) return CasingClass::InitialCap;
    if (lowers == letters) return CasingClass::Lower;
    return CasingClass::Other;
}

std::string lowercase_cps(const std::vector<char32_t>& cps) {
    std::string out;
    for (char32_t c : cps) util::encode_utf8(util::to_lower(c), out);
    return out;
}

bool is_contraction_suffix(std::string_view letters) {
    return letters == "s" || letters == "t" || letters == "m" || letters == "d" ||
           letters == "re" || letters == "ll" || letters == "ve" || letters == "em";
}

Token make_token(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end,
                 bool is_punct) {
    Token tok;
    std::vector<char32_t> slice(cps.begin() + static_cast<std::ptrdiff_t>(begin),
                                cps.begin() + static_cast<std::ptrdiff_t>(end));
    for (char32_t c : slice) util::encode_utf8(c, tok.text);
    tok.lower = lowercase_cps(slice);
    tok.is_punct = is_punct;
    tok.casing = is_punct ? CasingClass::Other : classify_casing(slice);
    if (!is_punct) {
        bool has_letter = false;
        for (char32_t c : slice)
            if (is_letter(c)) has_letter = true;
        tok.syllables = has_letter ? count_syllables(tok.lower) : 0;
    }
    return tok;
}

bool token_has_alnum(const Token& tok) {
    std::size_t i = 0;
    while (i < tok.text.size()) {
        char32_t c = util::decode_utf8(tok.text, i);
        if (is_letter(c) || is_digit(c)) return true;
    }
    return false;
}

} // namespace

TokenizedText tokenize(std::string_view text) {
    TokenizedText t;
    t.raw = std::string(text);
    if (!text.empty()) {
        t.lines = 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    }
    const std::vector<char32_t> cps = util::to_codepoints(text);
    const std::size_t n = cps.size();

    std::vector<std::vector<Token>> scanned;
    std::vector<Token> cur;
    auto close = [&]() {
        if (!cur.empty()) {
            scanned.push_back(std::move(cur));
            cur.clear();
        }
    };

    std::size_t i = 0;
    while (i < n) {
        char32_t c = cps[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_letter(c) || is_digit(c)) {
            std::size_t j = i;
            while (j < n) {
                char32_t cj = cps[j];
                if (is_letter(cj) || is_digit(cj)) {
                    ++j;
                } else if ((cj == '.' || cj == ',') && j > i && is_digit(cps[j - 1]) &&
                           j + 1 < n && is_digit(cps[j + 1])) {
                    ++j; // decimal point / thousands separator inside a number
                } else {
                    break;
                }
            }
            cur.push_back(make_token(cps, i, j, /*is_punct=*/false));
            i = j;
            continue;
        }
        if (c == '\'' || c == 0x2019) { // straight or curly apostrophe
            std::size_t j = i + 1;
            while (j < n && is_letter(cps[j])) ++j;
            std::string letters;
            for (std::size_t k = i + 1; k < j; ++k)
                util::encode_utf8(util::to_lower(cps[k]), letters);
            if (is_contraction_suffix(letters)) {
                Token tok = make_token(cps, i, j, /*is_punct=*/false);
                // normalize the curly apostrophe so "’s" and "'s" unify
                if (c == 0x2019) {
                    tok.lower = "'" + letters;
                }
                cur.push_back(std::move(tok));
                i = j;
                continue;
            }
        }
        // punctuation: collapse same-character runs into one token
        std::size_t j = i;
        while (j < n && cps[j] == c) ++j;
        cur.push_back(make_token(cps, i, j, /*is_punct=*/true));
        bool terminal = (c == '.' || c == '!' || c == '?' || c == 0x2026);
        if (terminal && (j >= n || is_space(cps[j]))) close();
        i = j;
    }
    close();

    // sentences must contain at least one word token; punctuation-only
    // fragments attach to a neighboring sentence
    std::vector<Token> pending;
    for (auto& sentence : scanned) {
        bool has_word = false;
        for (const auto& tok : sentence)
            if (tok.is_word() && token_has_alnum(tok)) has_word = true;
        if (has_word) {
            if (!pending.empty()) {
                sentence.insert(sentence.begin(), pending.begin(), pending.end());
                pending.clear();
            }
            t.sentences.push_back(std::move(sentence));
        } else if (!t.sentences.empty()) {
            auto& back = t.sentences.back();
            back.insert(back.end(), sentence.begin(), sentence.end());
        } else {
            pending.insert(pending.end(), sentence.begin(), sentence.end());
        }
    }
    return t;
}

int count_syllables(std::string_view word) {
    // vowel groups over the letters only; aeiouy are vowels
    std::string letters;
    std::size_t i = 0;
    while (i < word.size()) {
        char32_t c = util::decode_utf8(word, i);
        char32_t low = util::to_lower(c);
        if (is_letter(low) && low < 0x80) letters += static_cast<char>(low);
        else if (is_letter(low)) letters += 'x'; // non-ASCII letters: consonant-like
    }
    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : letters) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    // trailing silent 'e' forms its own group and is dropped unless it is the
    // only group
    if (letters.size() >= 2 && letters.back() == 'e' && !is_vowel(letters[letters.size() - 2]) &&
        groups > 1)
        --groups;
    return groups < 1 ? 1 : groups;
}

void apply_stopwords(TokenizedText& t, const ingest::Lexicon& stopwords) {
    for (auto& sentence : t.sentences)
        for (auto& tok : sentence)
            if (tok.is_word()) tok.is_stopword = stopwords.contains(tok.lower);
}

// ---- scope statistics -------------------------------------------------------------

namespace {

constexpr const char* kAsciiSymbols = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
constexpr std::size_t kSymbolCount = 32;

int symbol_index(char32_t c) {
    if (c < 0x21 || c > 0x7E) return -1;
    const char* p = std::strchr(kAsciiSymbols, static_cast<char>(c));
    return p ? static_cast<int>(p - kAsciiSymbols) : -1;
}

struct ScopeStats {
    // character level (code points; chars excludes line breaks)
    std::size_t chars = 0;
    std::size_t letters = 0;
    std::size_t upper_letters = 0;
    std::size_t digits = 0;
    std::size_t whitespace = 0;
    std::size_t punct_chars = 0;
    std::array<std::size_t, kSymbolCount> symbols{};
    std::size_t quotes = 0;
    std::size_t ellipses = 0;
    std::size_t lines = 0;

    // token / sentence level
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t word_chars = 0;
    std::size_t allcaps_words = 0;
    std::size_t words_initial_upper = 0;
    std::size_t sent_start_lower = 0;
    std::size_t sent_start_upper = 0;
    std::size_t stopword_count = 0;
    std::size_t negation_count = 0;
    std::unordered_map<std::string, std::size_t> pos_counts;

    // complexity
    std::size_t syllables = 0;
    std::size_t complex_words = 0;  // more than 3 syllables
    std::size_t polysyllables = 0;  // 3 or more syllables
    std::size_t long_words = 0;     // more than 6 characters
    std::size_t alpha_tokens = 0;
    std::size_t unique_words = 0;
    std::size_t hapax = 0;
    std::size_t dis = 0;

    // psychological
    std::size_t pos_opinion = 0;
    std::size_t neg_opinion = 0;
    std::size_t moral = 0;
    std::size_t afinn_matched = 0;
    std::size_t afinn_positive = 0;
    std::size_t afinn_negative = 0;
    double afinn_total = 0.0;
    double avg_afinn = 0.0;

    double colon_count() const { return static_cast<double>(symbols[symbol_index(':')]); }
};

double safe_div(double a, double b) { return b == 0.0 ? 0.0 : a / b; }

ScopeStats compute_stats(const TokenizedText& t, const LexiconSet& lex) {
    ScopeStats s;
    s.lines = t.lines;

    // character-level pass over the raw text
    const std::string& raw = t.raw;
    std::size_t i = 0;
    std::size_t dot_run = 0;
    auto flush_dots = [&]() {
        if (dot_run >= 3) ++s.ellipses;
        dot_run = 0;
    };
    while (i < raw.size()) {
        char32_t c = util::decode_utf8(raw, i);
        if (c == '.') ++dot_run;
        else flush_dots();
        if (c == '\n' || c == '\r') {
            ++s.whitespace;
            continue; // line breaks are not content characters
        }
        ++s.chars;
        if (is_letter(c)) {
            ++s.letters;
            if (is_upper(c)) ++s.upper_letters;
        } else if (is_digit(c)) {
            ++s.digits;
        } else if (is_space(c)) {
            ++s.whitespace;
        } else {
            ++s.punct_chars;
            int idx = symbol_index(c);
            if (idx >= 0) ++s.symbols[static_cast<std::size_t>(idx)];
        }
        if (c == '"' || c == 0x201C || c == 0x201D || c == 0xAB || c == 0xBB) ++s.quotes;
        if (c == 0x2026) ++s.ellipses;
    }
    flush_dots();

    // token / sentence pass
    s.sentences = t.sentences.size();
    std::unordered_map<std::string, std::size_t> word_freq;
    for (const auto& sentence : t.sentences) {
        bool start_seen = false;
        double sentence_afinn = 0.0;
        for (const auto& tok : sentence) {
            if (tok.is_punct) continue;
            ++s.words;
            std::size_t tok_cps = util::to_codepoints(tok.text).size();
            s.word_chars += tok_cps;
            if (tok_cps > 6) ++s.long_words;
            if (!start_seen) {
                start_seen = true;
                std::size_t k = 0;
                char32_t first = util::decode_utf8(tok.text, k);
                if (is_lower(first)) ++s.sent_start_lower;
                else if (is_upper(first)) ++s.sent_start_upper;
            }
            if (tok.casing == CasingClass::AllCaps) ++s.allcaps_words;
            {
                std::size_t k = 0;
                char32_t first = util::decode_utf8(tok.text, k);
                if (is_upper(first)) ++s.words_initial_upper;
            }
            if (lex.stopwords.contains(tok.lower)) ++s.stopword_count;
            if (lex.negations.contains(tok.lower) || tok.lower == "'t") ++s.negation_count;
            if (!tok.pos.empty()) ++s.pos_counts[tok.pos];

            if (tok.syllables > 0) {
                s.syllables += static_cast<std::size_t>(tok.syllables);
                if (tok.syllables > 3) ++s.complex_words;
                if (tok.syllables >= 3) ++s.polysyllables;
            }

            bool alphabetic = true;
            {
                std::size_t k = 0;
                while (k < tok.text.size()) {
                    char32_t c = util::decode_utf8(tok.text, k);
                    if (!is_letter(c)) alphabetic = false;
                }
            }
            if (alphabetic) {
                ++s.alpha_tokens;
                ++word_freq[tok.lower];
            }

            if (lex.positive_opinion.contains(tok.lower)) ++s.pos_opinion;
            if (lex.negative_opinion.contains(tok.lower)) ++s.neg_opinion;
            if (lex.moral_foundation.contains(tok.lower)) ++s.moral;
            auto af = lex.afinn.entries.find(tok.lower);
            if (af != lex.afinn.entries.end()) {
                ++s.afinn_matched;
                if (af->second > 0) ++s.afinn_positive;
                if (af->second < 0) ++s.afinn_negative;
                sentence_afinn += af->second;
            }
        }
        s.afinn_total += sentence_afinn;
    }
    s.avg_afinn = safe_div(s.afinn_total, static_cast<double>(s.sentences));

    s.unique_words = word_freq.size();
    for (const auto& [word, freq] : word_freq) {
        if (freq == 1) ++s.hapax;
        if (freq == 2) ++s.dis;
    }
    return s;
}

struct ReadabilityCounts {
    double words = 0, sentences = 0, syllables = 0, complex_words = 0, polysyllables = 0;
};

Readability readability_from_counts(const ReadabilityCounts& c) {
    Readability r;
    if (c.sentences < 1 || c.words < 1) return r;
    r.gunning_fog = 0.4 * (c.words / c.sentences + 100.0 * c.complex_words / c.words);
    r.flesch_kincaid = 0.39 * (c.words / c.sentences) + 11.8 * (c.syllables / c.words) - 15.59;
    r.smog = 1.0430 * std::sqrt(c.polysyllables * 30.0 / c.sentences) + 3.1291;
    return r;
}

// ---- feature registry ----------------------------------------------------------

using Extractor = std::function<double(const ScopeStats&)>;

struct FeatureSpec {
    std::string name;
    FeatureKind kind;
    Extractor get;
};

std::vector<FeatureSpec> build_feature_specs() {
    std::vector<FeatureSpec> specs;
    auto add = [&](std::string name, FeatureKind kind, Extractor get) {
        specs.push_back({std::move(name), kind, std::move(get)});
    };
    auto d = [](std::size_t v) { return static_cast<double>(v); };

    // stylistic core (30)
    add("Total number of lines", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.lines); });
    add("Avg. number of stop-words per sentence", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.stopword_count), d(s.sentences)); });
    add("Ratio of uppercase letters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.upper_letters), d(s.letters)); });
    add("Ratio of alphabetic letters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.letters), d(s.chars)); });
    add("Ratio of digits", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.digits), d(s.chars)); });
    add("Avg. number of uppercase words per sentence", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.allcaps_words), d(s.sentences)); });
    add("Avg. number of characters per word", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.word_chars), d(s.words)); });
    add("Total number of characters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.chars); });
    add("Total number of words beginning with uppercase letter", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.words_initial_upper); });
    add("Avg. number of sentences beginning with lowercase letter", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.sent_start_lower), d(s.sentences)); });
    add("Avg. number of sentences beginning with uppercase letter", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.sent_start_upper), d(s.sentences)); });
    add("Number of colon or ellipsis", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return s.colon_count() + d(s.ellipses); });
    add("Number of quotes", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.quotes); });
    add("Number of negations", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.negation_count); });
    add("Avg. number of negations per sentence", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.negation_count), d(s.sentences)); });
    add("Total number of words", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.words); });
    add("Total number of sentences", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.sentences); });
    add("Avg. number of words per sentence", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.words), d(s.sentences)); });
    add("Number of all-uppercase words", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.allcaps_words); });
    add("Ratio of all-uppercase words", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.allcaps_words), d(s.words)); });
    add("Number of stop-words", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.stopword_count); });
    add("Ratio of stop-words", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.stopword_count), d(s.words)); });
    add("Number of punctuation characters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.punct_chars); });
    add("Ratio of punctuation characters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.punct_chars), d(s.chars)); });
    add("Avg. number of punctuation characters per sentence", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.punct_chars), d(s.sentences)); });
    add("Number of uppercase letters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.upper_letters); });
    add("Number of alphabetic letters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.letters); });
    add("Number of digits", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.digits); });
    add("Ratio of words beginning with uppercase letter", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return safe_div(d(s.words_initial_upper), d(s.words)); });
    add("Number of whitespace characters", FeatureKind::Stylistic,
        [d](const ScopeStats& s) { return d(s.whitespace); });

    // complexity (18)
    auto counts = [](const ScopeStats& s) {
        ReadabilityCounts c;
        c.words = static_cast<double>(s.words);
        c.sentences = static_cast<double>(s.sentences);
        c.syllables = static_cast<double>(s.syllables);
        c.complex_words = static_cast<double>(s.complex_words);
        c.polysyllables = static_cast<double>(s.polysyllables);
        return c;
    };
    add("Gunning Fog index", FeatureKind::Complexity,
        [counts](const ScopeStats& s) { return readability_from_counts(counts(s)).gunning_fog; });
    add("SMOG grade", FeatureKind::Complexity,
        [counts](const ScopeStats& s) { return readability_from_counts(counts(s)).smog; });
    add("Flesch-Kincaid grade level", FeatureKind::Complexity,
        [counts](const ScopeStats& s) {
            return readability_from_counts(counts(s)).flesch_kincaid;
        });
    add("Type-Token Ratio", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.unique_words), d(s.alpha_tokens)); });
    add("Number of hapax legomena", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.hapax); });
    add("Number of dis legomena", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.dis); });
    add("Ratio of hapax legomena", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.hapax), d(s.alpha_tokens)); });
    add("Ratio of dis legomena", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.dis), d(s.alpha_tokens)); });
    add("Number of unique words", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.unique_words); });
    add("Total number of syllables", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.syllables); });
    add("Avg. number of syllables per word", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.syllables), d(s.words)); });
    add("Number of complex words (more than 3 syllables)", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.complex_words); });
    add("Ratio of complex words", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.complex_words), d(s.words)); });
    add("Number of polysyllable words (3 or more syllables)", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.polysyllables); });
    add("Ratio of polysyllable words", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.polysyllables), d(s.words)); });
    add("Number of long words (more than 6 characters)", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return d(s.long_words); });
    add("Ratio of long words", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.long_words), d(s.words)); });
    add("Avg. number of characters per sentence", FeatureKind::Complexity,
        [d](const ScopeStats& s) { return safe_div(d(s.chars), d(s.sentences)); });

    // psychological (15)
    add("Number of positive opinion words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.pos_opinion); });
    add("Number of negative opinion words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.neg_opinion); });
    add("Ratio of positive opinion words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return safe_div(d(s.pos_opinion), d(s.words)); });
    add("Ratio of negative opinion words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return safe_div(d(s.neg_opinion), d(s.words)); });
    add("Number of moral foundation words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.moral); });
    add("Ratio of moral foundation words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return safe_div(d(s.moral), d(s.words)); });
    add("Avg. AFINN sentiment score", FeatureKind::Psychological,
        [](const ScopeStats& s) { return s.avg_afinn; });
    add("Total AFINN sentiment score", FeatureKind::Psychological,
        [](const ScopeStats& s) { return s.afinn_total; });
    add("Number of positive AFINN words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.afinn_positive); });
    add("Number of negative AFINN words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.afinn_negative); });
    add("Number of AFINN words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.afinn_matched); });
    add("Ratio of AFINN words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return safe_div(d(s.afinn_matched), d(s.words)); });
    add("Opinion polarity (positive minus negative)", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.pos_opinion) - d(s.neg_opinion); });
    add("Number of opinion words", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return d(s.pos_opinion) + d(s.neg_opinion); });
    add("Avg. number of moral foundation words per sentence", FeatureKind::Psychological,
        [d](const ScopeStats& s) { return safe_div(d(s.moral), d(s.sentences)); });

    // per-tag POS features (36 tags x 3)
    struct TagName {
        const char* tag;
        const char* desc;
        const char* label; // label printed in the feature name
    };
    static const TagName tag_names[] = {
        {"CC", "coordinating conjunctions", "CC"},
        {"CD", "cardinal numbers", "CD"},
        {"DT", "determiners", "DT"},
        {"EX", "existential there", "EX"},
        {"FW", "foreign words", "FW"},
        {"IN", "prepositions", "IN"},
        {"JJ", "adjectives", "JJ"},
        {"JJR", "comparative adjectives", "JJR"},
        {"JJS", "superlative adjectives", "JJS"},
        {"LS", "list item markers", "LS"},
        {"MD", "modal verbs", "MD"},
        {"NN", "singular nouns", "NN"},
        {"NNS", "plural nouns", "NNS"},
        {"NNP", "proper nouns", "NP"},
        {"NNPS", "plural proper nouns", "NPS"},
        {"PDT", "predeterminers", "PDT"},
        {"POS", "genitive markers", "POS"},
        {"PRP", "personal pronouns", "PRP"},
        {"PRP$", "possessive pronouns", "PRP$"},
        {"RB", "adverbs", "RB"},
        {"RBR", "comparative adverbs", "RBR"},
        {"RBS", "superlative adverbs", "RBS"},
        {"RP", "particles", "RP"},
        {"SYM", "symbols", "SYM"},
        {"TO", "infinitival to", "TO"},
        {"UH", "interjections", "UH"},
        {"VB", "base form verbs", "VB"},
        {"VBD", "past tense verbs", "VBD"},
        {"VBG", "gerund verbs", "VBG"},
        {"VBN", "past participle verbs", "VBN"},
        {"VBP", "non-3rd person present verbs", "VBP"},
        {"VBZ", "3rd person singular present verbs", "VBZ"},
        {"WDT", "wh-determiners", "WDT"},
        {"WP", "wh-pronouns", "WP"},
        {"WP$", "possessive wh-pronouns", "WP$"},
        {"WRB", "wh-adverbs", "WRB"},
    };
    for (const auto& tn : tag_names) {
        std::string tag = tn.tag;
        std::string base = std::string(tn.desc) + " (" + tn.label + ")";
        auto count_of = [tag](const ScopeStats& s) {
            auto it = s.pos_counts.find(tag);
            return it == s.pos_counts.end() ? 0.0 : static_cast<double>(it->second);
        };
        add("Number of " + base, FeatureKind::Stylistic, count_of);
        add("Ratio of " + base, FeatureKind::Stylistic, [count_of, d](const ScopeStats& s) {
            return safe_div(count_of(s), d(s.words));
        });
        add("Avg. number of " + base + " per sentence", FeatureKind::Stylistic,
            [count_of, d](const ScopeStats& s) { return safe_div(count_of(s), d(s.sentences)); });
    }

    // per-symbol punctuation features (32 symbols x 3)
    for (std::size_t k = 0; k < kSymbolCount; ++k) {
        std::string sym(1, kAsciiSymbols[k]);
        std::string base = "'" + sym + "' characters";
        auto count_of = [k](const ScopeStats& s) { return static_cast<double>(s.symbols[k]); };
        add("Number of " + base, FeatureKind::Stylistic, count_of);
        add("Ratio of " + base, FeatureKind::Stylistic, [count_of, d](const ScopeStats& s) {
            return safe_div(count_of(s), d(s.chars));
        });
        add("Avg. number of " + base + " per sentence", FeatureKind::Stylistic,
            [count_of, d](const ScopeStats& s) { return safe_div(count_of(s), d(s.sentences)); });
    }

    return specs;
}

const std::vector<FeatureSpec>& feature_specs() {
    static const std::vector<FeatureSpec> specs = build_feature_specs();
    return specs;
}

const std::unordered_map<std::string, const FeatureSpec*>& feature_index() {
    static const auto* index = [] {
        auto* m = new std::unordered_map<std::string, const FeatureSpec*>();
        for (const auto& spec : feature_specs()) (*m)[spec.name] = &spec;
        return m;
    }();
    return *index;
}

} // namespace

// ---- catalog ----------------------------------------------------------------------

const char* scope_name(Scope s) { return s == Scope::Headline ? "headline" : "body"; }

const char* feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::Stylistic: return "stylistic";
        case FeatureKind::Complexity: return "complexity";
        case FeatureKind::Psychological: return "psychological";
    }
    return "?";
}

FeatureCatalog::FeatureCatalog(std::vector<FeatureDef> defs) : defs_(std::move(defs)) {
    for (std::size_t i = 0; i < defs_.size(); ++i) defs_[i].id = i;
}

const FeatureDef* FeatureCatalog::find(std::string_view name, Scope scope) const {
    for (const auto& def : defs_)
        if (def.scope == scope && def.name == name) return &def;
    return nullptr;
}

std::shared_ptr<const FeatureCatalog> full_catalog_ptr() {
    static const auto catalog = [] {
        std::vector<FeatureDef> defs;
        for (Scope scope : {Scope::Headline, Scope::Body}) {
            for (const auto& spec : feature_specs()) {
                FeatureDef def;
                def.name = spec.name;
                def.scope = scope;
                def.kind = spec.kind;
                defs.push_back(std::move(def));
            }
        }
        return std::make_shared<const FeatureCatalog>(std::move(defs));
    }();
    return catalog;
}

std::shared_ptr<const FeatureCatalog> top20_catalog_ptr() {
    static const auto catalog = [] {
        // ranked order of the canonical 20-feature catalog
        const std::pair<const char*, Scope> rows[] = {
            {"Total number of lines", Scope::Body},
            {"Avg. number of stop-words per sentence", Scope::Body},
            {"Ratio of uppercase letters", Scope::Headline},
            {"Ratio of uppercase letters", Scope::Body},
            {"Avg. number of uppercase words per sentence", Scope::Headline},
            {"Avg. number of characters per word", Scope::Body},
            {"Ratio of alphabetic letters", Scope::Headline},
            {"Number of proper nouns (NP)", Scope::Body},
            {"Avg. number of sentences beginning with lowercase letter", Scope::Body},
            {"Avg. AFINN sentiment score", Scope::Body},
            {"Total number of characters", Scope::Headline},
            {"Ratio of digits", Scope::Body},
            {"Avg. number of sentences beginning with uppercase letter", Scope::Body},
            {"Ratio of alphabetic letters", Scope::Body},
            {"Number of genitive markers (POS)", Scope::Body},
            {"Number of colon or ellipsis", Scope::Headline},
            {"Total number of words beginning with uppercase letter", Scope::Body},
            {"Number of colon or ellipsis", Scope::Body},
            {"Avg. number of characters per word", Scope::Headline},
            {"Avg. number of stop-words per sentence", Scope::Headline},
        };
        std::vector<FeatureDef> defs;
        const auto& index = feature_index();
        for (const auto& [name, scope] : rows) {
            FeatureDef def;
            def.name = name;
            def.scope = scope;
            def.kind = index.at(name)->kind;
            defs.push_back(std::move(def));
        }
        return std::make_shared<const FeatureCatalog>(std::move(defs));
    }();
    return catalog;
}

const FeatureCatalog& FeatureCatalog::full() { return *full_catalog_ptr(); }
const FeatureCatalog& FeatureCatalog::top20() { return *top20_catalog_ptr(); }

// ---- spec'd operation views ----------------------------------------------------------

std::map<std::string, double> stylistic_features(const TokenizedText& t,
                                                 const LexiconSet& lexicons) {
    ScopeStats s = compute_stats(t, lexicons);
    std::map<std::string, double> out;
    for (const auto& spec : feature_specs())
        if (spec.kind == FeatureKind::Stylistic) out[spec.name] = spec.get(s);
    return out;
}

Readability readability_indexes(const TokenizedText& t) {
    ScopeStats s = compute_stats(t, LexiconSet{});
    ReadabilityCounts c;
    c.words = static_cast<double>(s.words);
    c.sentences = static_cast<double>(s.sentences);
    c.syllables = static_cast<double>(s.syllables);
    c.complex_words = static_cast<double>(s.complex_words);
    c.polysyllables = static_cast<double>(s.polysyllables);
    return readability_from_counts(c);
}

VocabularyRichness vocabulary_richness(const TokenizedText& t) {
    ScopeStats s = compute_stats(t, LexiconSet{});
    VocabularyRichness v;
    v.type_token_ratio =
        safe_div(static_cast<double>(s.unique_words), static_cast<double>(s.alpha_tokens));
    v.hapax_count = s.hapax;
    v.dis_count = s.dis;
    return v;
}

PsychologicalFeatures psychological_features(const TokenizedText& t,
                                             const LexiconSet& lexicons) {
    ScopeStats s = compute_stats(t, lexicons);
    PsychologicalFeatures p;
    p.pos_opinion_count = s.pos_opinion;
    p.neg_opinion_count = s.neg_opinion;
    p.moral_foundation_count = s.moral;
    p.avg_afinn = s.avg_afinn;
    return p;
}

// ---- full extraction --------------------------------------------------------------

FeatureVector extract_features(const ingest::Article& article, const FeatureCatalog& catalog,
                               const LexiconSet& lexicons) {
    TokenizedText headline = tokenize(article.headline);
    TokenizedText body = tokenize(article.body);
    pos_tag(headline);
    pos_tag(body);
    apply_stopwords(headline, lexicons.stopwords);
    apply_stopwords(body, lexicons.stopwords);

    ScopeStats headline_stats = compute_stats(headline, lexicons);
    ScopeStats body_stats = compute_stats(body, lexicons);

    FeatureVector fv;
    fv.catalog = &catalog;
    fv.values.reserve(catalog.size());
    const auto& index = feature_index();
    for (const auto& def : catalog) {
        auto it = index.find(def.name);
        if (it == index.end())
            throw ValidationError("unknown feature: '" + def.name + "'");
        const ScopeStats& s = def.scope == Scope::Headline ? headline_stats : body_stats;
        fv.values.push_back(it->second->get(s));
    }
    return fv;
}

} // namespace checkit::features
