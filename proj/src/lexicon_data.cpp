// Bundled default lexicon resources. The stopword list is the classic short
// English list; opinion and moral-foundation entries are compact subsets of
// the published dictionaries; AFINN entries carry their published valences.
// All of these can be replaced at runtime by parsed lexicon files.

#include "checkit/features.hpp"

namespace checkit::features {

namespace {

const char* kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any",
    "are", "as", "at", "be", "because", "been", "before", "being", "below", "between",
    "both", "but", "by", "could", "did", "do", "does", "doing", "down", "during", "each",
    "few", "for", "from", "further", "had", "has", "have", "having", "he", "her", "here",
    "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it",
    "its", "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not",
    "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves",
    "out", "over", "own", "same", "she", "should", "so", "some", "such", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "through", "to", "too", "under", "until", "up", "very", "was", "we",
    "were", "what", "when", "where", "which", "while", "who", "whom", "why", "will",
    "with", "would", "you", "your", "yours", "yourself", "yourselves",
};

// Fixed bundled negation set.
const char* kNegations[] = {
    "n't", "not", "never", "no", "none", "nobody", "nothing", "neither", "nor", "nowhere",
};

const char* kPositiveOpinion[] = {
    "abundant", "accurate", "admirable", "amazing", "awesome", "beautiful", "best",
    "brilliant", "calm", "celebrated", "charming", "confident", "courageous", "delightful",
    "excellent", "exciting", "fabulous", "fair", "fantastic", "flawless", "generous",
    "genuine", "good", "great", "happy", "honest", "impressive", "incredible", "inspiring",
    "lovely", "loyal", "marvelous", "outstanding", "perfect", "pleasant", "positive",
    "remarkable", "reliable", "splendid", "succeed", "success", "superb", "trustworthy",
    "truthful", "wonderful",
};

const char* kNegativeOpinion[] = {
    "abysmal", "angry", "appalling", "awful", "bad", "bogus", "broken", "catastrophic",
    "corrupt", "crisis", "cruel", "dangerous", "deceptive", "dire", "dirty", "disaster",
    "dishonest", "dreadful", "evil", "fail", "failure", "fake", "false", "fraud",
    "fraudulent", "harmful", "hoax", "horrible", "hostile", "liar", "lie", "lying",
    "miserable", "nasty", "outrageous", "pathetic", "poor", "scandal", "scam", "shocking",
    "terrible", "toxic", "ugly", "unfair", "worst", "wrong",
};

const char* kMoralFoundation[] = {
    "authority", "betray", "betrayal", "care", "cheat", "compassion", "corrupt", "defile",
    "degradation", "disloyal", "duty", "equal", "fair", "fairness", "faithful", "harm",
    "hierarchy", "holy", "honor", "hurt", "impure", "justice", "kindness", "law", "loyal",
    "loyalty", "obedience", "obey", "protect", "pure", "purity", "rebel", "respect",
    "sacred", "safe", "sanctity", "subversion", "tradition", "traitor", "violence",
};

// Published AFINN valences for a compact subset of common terms.
struct AfinnEntry {
    const char* word;
    int valence;
};

const AfinnEntry kAfinn[] = {
    {"abandon", -2},   {"abuse", -3},      {"accident", -2},  {"admire", 3},
    {"adorable", 3},   {"afraid", -2},     {"aggressive", -2}, {"amazing", 4},
    {"anger", -3},     {"angry", -3},      {"anxious", -2},   {"awesome", 4},
    {"awful", -3},     {"bad", -3},        {"bastard", -5},   {"beautiful", 3},
    {"best", 3},       {"betray", -3},     {"blame", -2},     {"bless", 2},
    {"brave", 2},      {"brilliant", 4},   {"calm", 2},       {"catastrophic", -4},
    {"chaos", -2},     {"charming", 3},    {"cheat", -3},     {"clean", 2},
    {"collapse", -2},  {"corrupt", -3},    {"crash", -2},     {"crisis", -3},
    {"cruel", -3},     {"cry", -1},        {"damage", -3},    {"danger", -2},
    {"dead", -3},      {"death", -2},      {"defeat", -2},    {"destroy", -3},
    {"disaster", -2},  {"dishonest", -2},  {"excellent", 3},  {"fail", -2},
    {"fake", -3},      {"fantastic", 4},   {"fear", -2},      {"fine", 2},
    {"fraud", -4},     {"free", 1},        {"fun", 4},        {"glad", 3},
    {"good", 3},       {"great", 3},       {"happy", 3},      {"hate", -3},
    {"hoax", -2},      {"honest", 2},      {"hope", 2},       {"horrible", -3},
    {"hurt", -2},      {"joy", 3},         {"kill", -3},      {"lie", -2},
    {"love", 3},       {"lucky", 3},       {"nice", 3},       {"outstanding", 5},
    {"pain", -2},      {"panic", -3},      {"peace", 2},      {"perfect", 3},
    {"poor", -2},      {"sad", -2},        {"scam", -2},      {"scandal", -3},
    {"smile", 2},      {"strong", 2},      {"success", 2},    {"superb", 5},
    {"terrible", -3},  {"threat", -2},     {"tragedy", -2},   {"triumph", 4},
    {"trust", 1},      {"ugly", -3},       {"unhappy", -2},   {"victory", 3},
    {"violence", -3},  {"war", -2},        {"welcome", 2},    {"win", 4},
    {"wonderful", 4},  {"worst", -3},      {"wrong", -2},
};

ingest::Lexicon membership(ingest::LexiconKind kind, const char* const* words, std::size_t n) {
    ingest::Lexicon lex;
    lex.kind = kind;
    for (std::size_t i = 0; i < n; ++i) lex.entries[words[i]] = 1;
    return lex;
}

} // namespace

LexiconSet LexiconSet::bundled_defaults() {
    LexiconSet set;
    set.stopwords = membership(ingest::LexiconKind::Stopwords, kStopwords,
                               std::size(kStopwords));
    set.negations = membership(ingest::LexiconKind::Stopwords, kNegations,
                               std::size(kNegations));
    set.positive_opinion = membership(ingest::LexiconKind::PositiveOpinion, kPositiveOpinion,
                                      std::size(kPositiveOpinion));
    set.negative_opinion = membership(ingest::LexiconKind::NegativeOpinion, kNegativeOpinion,
                                      std::size(kNegativeOpinion));
    set.moral_foundation = membership(ingest::LexiconKind::MoralFoundation, kMoralFoundation,
                                      std::size(kMoralFoundation));
    set.afinn.kind = ingest::LexiconKind::Afinn;
    for (const auto& e : kAfinn) set.afinn.entries[e.word] = e.valence;
    return set;
}

void LexiconSet::set(const ingest::Lexicon& lex) {
    switch (lex.kind) {
        case ingest::LexiconKind::Stopwords: stopwords = lex; break;
        case ingest::LexiconKind::PositiveOpinion: positive_opinion = lex; break;
        case ingest::LexiconKind::NegativeOpinion: negative_opinion = lex; break;
        case ingest::LexiconKind::MoralFoundation: moral_foundation = lex; break;
        case ingest::LexiconKind::Afinn: afinn = lex; break;
    }
}

} // namespace checkit::features
