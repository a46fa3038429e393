// Deterministic POS tagger: closed-class lexicon first, then casing, then
// suffix rules. No statistical model on purpose — the classifier is trained
// on this tagger's own output, so reproducibility beats accuracy here.

#include "checkit/features.hpp"
#include "checkit/util.hpp"

#include <unordered_map>

namespace checkit::features {

const std::array<const char*, 36>& penn_tags() {
    static const std::array<const char*, 36> tags = {
        "CC", "CD",  "DT",  "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",  "LS",  "MD",  "NN",
        "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP", "SYM",
        "TO", "UH",  "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB",
    };
    return tags;
}

namespace {

const std::unordered_map<std::string, const char*>& tag_lexicon() {
    static const std::unordered_map<std::string, const char*> lex = {
        // determiners
        {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"that", "DT"},
        {"these", "DT"}, {"those", "DT"}, {"each", "DT"}, {"every", "DT"}, {"either", "DT"},
        {"neither", "DT"}, {"some", "DT"}, {"any", "DT"}, {"no", "DT"}, {"all", "DT"},
        {"both", "DT"}, {"another", "DT"}, {"such", "PDT"},
        // prepositions / subordinating conjunctions
        {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"}, {"for", "IN"},
        {"with", "IN"}, {"about", "IN"}, {"against", "IN"}, {"between", "IN"},
        {"into", "IN"}, {"through", "IN"}, {"during", "IN"}, {"before", "IN"},
        {"after", "IN"}, {"above", "IN"}, {"below", "IN"}, {"from", "IN"}, {"under", "IN"},
        {"over", "IN"}, {"because", "IN"}, {"while", "IN"}, {"since", "IN"}, {"until", "IN"},
        {"if", "IN"}, {"than", "IN"}, {"as", "IN"},
        // particles
        {"up", "RP"}, {"down", "RP"}, {"out", "RP"}, {"off", "RP"},
        // coordinating conjunctions
        {"and", "CC"}, {"but", "CC"}, {"or", "CC"}, {"nor", "CC"}, {"so", "CC"},
        // pronouns
        {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
        {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"}, {"him", "PRP"}, {"us", "PRP"},
        {"them", "PRP"}, {"myself", "PRP"}, {"yourself", "PRP"}, {"himself", "PRP"},
        {"herself", "PRP"}, {"itself", "PRP"}, {"ourselves", "PRP"}, {"themselves", "PRP"},
        {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"her", "PRP$"}, {"its", "PRP$"},
        {"our", "PRP$"}, {"their", "PRP$"}, {"mine", "PRP$"}, {"yours", "PRP$"},
        {"hers", "PRP$"}, {"ours", "PRP$"}, {"theirs", "PRP$"},
        // modals
        {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"}, {"must", "MD"},
        {"shall", "MD"}, {"should", "MD"}, {"will", "MD"}, {"would", "MD"},
        // existential
        {"there", "EX"},
        // wh-words
        {"which", "WDT"}, {"whatever", "WDT"}, {"who", "WP"}, {"whom", "WP"},
        {"what", "WP"}, {"whose", "WP$"}, {"when", "WRB"}, {"where", "WRB"},
        {"why", "WRB"}, {"how", "WRB"},
        // adverbs
        {"not", "RB"}, {"never", "RB"}, {"very", "RB"}, {"too", "RB"}, {"also", "RB"},
        {"just", "RB"}, {"only", "RB"}, {"quite", "RB"}, {"rather", "RB"},
        {"almost", "RB"}, {"always", "RB"}, {"often", "RB"}, {"sometimes", "RB"},
        {"here", "RB"}, {"now", "RB"}, {"then", "RB"}, {"soon", "RB"}, {"already", "RB"},
        {"still", "RB"}, {"yet", "RB"}, {"again", "RB"}, {"once", "RB"}, {"nowhere", "RB"},
        {"more", "RBR"}, {"less", "RBR"}, {"most", "RBS"}, {"least", "RBS"},
        // negated pronoun-like nouns
        {"none", "NN"}, {"nobody", "NN"}, {"nothing", "NN"},
        // to
        {"to", "TO"},
        // interjections
        {"oh", "UH"}, {"yes", "UH"}, {"hey", "UH"}, {"wow", "UH"}, {"hello", "UH"},
        // frequent verbs
        {"be", "VB"}, {"am", "VBP"}, {"is", "VBZ"}, {"are", "VBP"}, {"was", "VBD"},
        {"were", "VBD"}, {"been", "VBN"}, {"being", "VBG"}, {"have", "VBP"},
        {"has", "VBZ"}, {"had", "VBD"}, {"having", "VBG"}, {"do", "VBP"}, {"does", "VBZ"},
        {"did", "VBD"}, {"done", "VBN"}, {"doing", "VBG"}, {"go", "VB"}, {"goes", "VBZ"},
        {"went", "VBD"}, {"gone", "VBN"}, {"going", "VBG"}, {"say", "VB"}, {"says", "VBZ"},
        {"said", "VBD"}, {"get", "VB"}, {"gets", "VBZ"}, {"got", "VBD"}, {"make", "VB"},
        {"makes", "VBZ"}, {"made", "VBD"}, {"take", "VB"}, {"takes", "VBZ"},
        {"took", "VBD"}, {"taken", "VBN"}, {"see", "VB"}, {"sees", "VBZ"}, {"saw", "VBD"},
        {"seen", "VBN"}, {"know", "VB"}, {"knows", "VBZ"}, {"knew", "VBD"},
        {"known", "VBN"}, {"sit", "VB"}, {"sits", "VBZ"}, {"sat", "VBD"}, {"run", "VB"},
        {"runs", "VBZ"}, {"ran", "VBD"}, {"stand", "VB"}, {"stood", "VBD"}, {"come", "VB"},
        {"comes", "VBZ"}, {"came", "VBD"}, {"give", "VB"}, {"gives", "VBZ"},
        {"gave", "VBD"}, {"given", "VBN"}, {"find", "VB"}, {"found", "VBD"},
        {"tell", "VB"}, {"told", "VBD"}, {"think", "VB"}, {"thought", "VBD"},
        // frequent nouns
        {"cat", "NN"}, {"dog", "NN"}, {"book", "NN"}, {"man", "NN"}, {"woman", "NN"},
        {"time", "NN"}, {"year", "NN"}, {"day", "NN"}, {"way", "NN"}, {"thing", "NN"},
        {"world", "NN"}, {"life", "NN"}, {"hand", "NN"}, {"part", "NN"}, {"child", "NN"},
        {"eye", "NN"}, {"place", "NN"}, {"work", "NN"}, {"week", "NN"}, {"case", "NN"},
        {"point", "NN"}, {"government", "NN"}, {"company", "NN"}, {"number", "NN"},
        {"group", "NN"}, {"problem", "NN"}, {"fact", "NN"}, {"mat", "NN"}, {"news", "NN"},
        {"article", "NN"}, {"story", "NN"}, {"people", "NNS"}, {"men", "NNS"},
        {"women", "NNS"}, {"children", "NNS"},
        // frequent adjectives
        {"good", "JJ"}, {"new", "JJ"}, {"first", "JJ"}, {"last", "JJ"}, {"long", "JJ"},
        {"great", "JJ"}, {"little", "JJ"}, {"own", "JJ"}, {"other", "JJ"}, {"old", "JJ"},
        {"right", "JJ"}, {"big", "JJ"}, {"high", "JJ"}, {"different", "JJ"},
        {"small", "JJ"}, {"large", "JJ"}, {"next", "JJ"}, {"early", "JJ"},
        {"young", "JJ"}, {"important", "JJ"}, {"few", "JJ"}, {"public", "JJ"},
        {"bad", "JJ"}, {"same", "JJ"}, {"able", "JJ"}, {"fake", "JJ"}, {"real", "JJ"},
        {"true", "JJ"}, {"false", "JJ"}, {"many", "JJ"}, {"much", "JJ"},
    };
    return lex;
}

// Contraction suffixes produced by the tokenizer ("'s", "'re", ...).
const char* contraction_tag(const std::string& lower) {
    if (lower == "'s") return "POS";
    if (lower == "'t") return "RB"; // the n't particle
    if (lower == "'ll" || lower == "'d") return "MD";
    if (lower == "'re" || lower == "'m" || lower == "'ve") return "VBP";
    return nullptr;
}

bool looks_numeric(const std::string& text) {
    bool has_digit = false;
    for (char c : text) {
        if (c >= '0' && c <= '9') has_digit = true;
        else if (c != '.' && c != ',' && c != '-' && c != '+' && c != '%') return false;
    }
    return has_digit;
}

const char* suffix_tag(const std::string& w) {
    auto ends = [&](std::string_view s) { return util::ends_with(w, s); };
    if (w.size() > 4 && ends("ly")) return "RB";
    if (w.size() > 4 && ends("ing")) return "VBG";
    if (w.size() > 3 && ends("ed")) return "VBD";
    if (w.size() > 5 && (ends("ness") || ends("ment") || ends("tion") || ends("sion") ||
                         ends("ship") || ends("ance") || ends("ence")))
        return "NN";
    if (w.size() > 4 && (ends("ity") || ends("ism"))) return "NN";
    if (w.size() > 4 && (ends("ous") || ends("ful") || ends("ive") || ends("less") ||
                         ends("able") || ends("ible") || ends("ish")))
        return "JJ";
    if (w.size() > 3 && (ends("al") || ends("ic"))) return "JJ";
    if (w.size() > 4 && ends("est")) return "JJS";
    if (w.size() > 3 && ends("er")) return "NN";
    if (w.size() > 2 && ends("s") && !ends("ss") && !ends("us") && !ends("is")) return "NNS";
    return "NN";
}

const char* punct_tag(const std::string& text) {
    char c = text.empty() ? ' ' : text[0];
    switch (c) {
        case '.': case '!': case '?': return ".";
        case ',': return ",";
        case ':': case ';': case '-': return ":";
        case '(': case '[': case '{': return "-LRB-";
        case ')': case ']': case '}': return "-RRB-";
        case '"': case '`': case '\'': return "''";
        case '#': return "#";
        case '$': return "$";
        default: return "SYM_P";
    }
}

} // namespace

void pos_tag(TokenizedText& t) {
    const auto& lex = tag_lexicon();
    for (auto& sentence : t.sentences) {
        for (auto& tok : sentence) {
            if (tok.is_punct) {
                tok.pos = punct_tag(tok.text);
                continue;
            }
            if (const char* ct = contraction_tag(tok.lower)) {
                tok.pos = ct;
                continue;
            }
            if (looks_numeric(tok.text)) {
                tok.pos = "CD";
                continue;
            }
            auto it = lex.find(tok.lower);
            if (it != lex.end()) {
                tok.pos = it->second;
                continue;
            }
            if (tok.casing == CasingClass::AllCaps || tok.casing == CasingClass::InitialCap) {
                tok.pos = "NNP";
                continue;
            }
            tok.pos = suffix_tag(tok.lower);
        }
    }
}

} // namespace checkit::features
