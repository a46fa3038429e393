#ifndef CHECKIT_FEATURES_HPP
#define CHECKIT_FEATURES_HPP

#include "checkit/ingest.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace checkit::features {

// ---- tokenization ---------------------------------------------------------

enum class CasingClass { AllCaps, InitialCap, Lower, Other };

struct Token {
    std::string text;
    std::string lower;
    CasingClass casing = CasingClass::Other;
    bool is_stopword = false;
    bool is_punct = false;
    std::string pos;   // Penn tag, filled by pos_tag
    int syllables = 0; // >= 1 for tokens containing letters

    bool is_word() const { return !is_punct; }
};

struct TokenizedText {
    std::string raw;
    std::size_t lines = 0; // newline-delimited raw lines; 0 for empty text
    std::vector<std::vector<Token>> sentences;

    std::size_t word_count() const;
    std::size_t token_count() const;
};

// Bundle of the expert lexicons the extractors consume. The negation set is
// fixed; the rest default to the bundled resources and may be replaced by
// parsed lexicon files.
struct LexiconSet {
    ingest::Lexicon stopwords;
    ingest::Lexicon negations;
    ingest::Lexicon positive_opinion;
    ingest::Lexicon negative_opinion;
    ingest::Lexicon moral_foundation;
    ingest::Lexicon afinn;

    static LexiconSet bundled_defaults();
    void set(const ingest::Lexicon& lex);
};

TokenizedText tokenize(std::string_view text);

// Heuristic vowel-group count, minimum 1.
int count_syllables(std::string_view word);

// Deterministic lexicon + suffix-rule tagger over the Penn tag set. The
// tagger's resources are compiled in.
void pos_tag(TokenizedText& t);

// Fills the is_stopword flags from the given lexicon.
void apply_stopwords(TokenizedText& t, const ingest::Lexicon& stopwords);

// The 36 Penn word-level tags tracked by the per-tag features.
const std::array<const char*, 36>& penn_tags();

// ---- feature catalog --------------------------------------------------------

enum class Scope { Headline, Body };
enum class FeatureKind { Stylistic, Complexity, Psychological };

const char* scope_name(Scope s);
const char* feature_kind_name(FeatureKind k);

struct FeatureDef {
    std::size_t id = 0;
    std::string name;
    Scope scope = Scope::Body;
    FeatureKind kind = FeatureKind::Stylistic;

    std::string column_label() const { return name + "@" + scope_name(scope); }
    bool operator==(const FeatureDef&) const = default;
};

class FeatureCatalog {
public:
    FeatureCatalog() = default;
    explicit FeatureCatalog(std::vector<FeatureDef> defs);

    // The reconstructed 534-feature space: every defined feature for both
    // scopes.
    static const FeatureCatalog& full();
    // The canonical 20-feature catalog shipped with the classifier.
    static const FeatureCatalog& top20();

    std::size_t size() const { return defs_.size(); }
    const FeatureDef& at(std::size_t id) const { return defs_[id]; }
    const std::vector<FeatureDef>& defs() const { return defs_; }
    const FeatureDef* find(std::string_view name, Scope scope) const;

    auto begin() const { return defs_.begin(); }
    auto end() const { return defs_.end(); }

private:
    std::vector<FeatureDef> defs_;
};

struct FeatureVector {
    const FeatureCatalog* catalog = nullptr; // non-owning; catalogs are singletons
    std::vector<double> values;
};

// ---- per-operation feature groups ---------------------------------------------

struct Readability {
    double gunning_fog = 0.0;
    double smog = 0.0;
    double flesch_kincaid = 0.0;
};

struct VocabularyRichness {
    double type_token_ratio = 0.0;
    std::size_t hapax_count = 0;
    std::size_t dis_count = 0;
};

struct PsychologicalFeatures {
    std::size_t pos_opinion_count = 0;
    std::size_t neg_opinion_count = 0;
    std::size_t moral_foundation_count = 0;
    double avg_afinn = 0.0; // mean over sentences of per-sentence valence sums
};

// Named stylistic counts and ratios, including the per-tag POS counts.
// Degenerate denominators always yield 0.
std::map<std::string, double> stylistic_features(const TokenizedText& t,
                                                 const LexiconSet& lexicons);
Readability readability_indexes(const TokenizedText& t);
VocabularyRichness vocabulary_richness(const TokenizedText& t);
PsychologicalFeatures psychological_features(const TokenizedText& t,
                                             const LexiconSet& lexicons);

// Tokenizes and tags headline and body independently, then assembles values
// in catalog order.
FeatureVector extract_features(const ingest::Article& article, const FeatureCatalog& catalog,
                               const LexiconSet& lexicons);

// Shared-pointer singletons of the two bundled catalogs.
std::shared_ptr<const FeatureCatalog> full_catalog_ptr();
std::shared_ptr<const FeatureCatalog> top20_catalog_ptr();

} // namespace checkit::features

#endif
