#ifndef CHECKIT_INGEST_HPP
#define CHECKIT_INGEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace checkit::ingest {

// ---- domain records ----------------------------------------------------------

enum class ArticleLabel { Fake, Credible };

struct Article {
    std::string id;
    std::string url;
    std::string headline;
    std::string body;
    std::optional<std::string> author_handle;
    std::optional<ArticleLabel> label;

    bool operator==(const Article&) const = default;
};

struct Tweet {
    std::string id;
    std::string user_id;
    std::int64_t timestamp = 0; // seconds since epoch
    std::vector<std::string> urls;
    std::optional<std::string> retweet_of_user;

    bool operator==(const Tweet&) const = default;
};

enum class LexiconKind { PositiveOpinion, NegativeOpinion, MoralFoundation, Afinn, Stopwords };

struct Lexicon {
    LexiconKind kind = LexiconKind::Stopwords;
    std::map<std::string, int> entries; // word -> valence (1 for membership lexicons)

    bool contains(const std::string& lowercased_word) const {
        return entries.count(lowercased_word) != 0;
    }
    bool operator==(const Lexicon&) const = default;
};

enum class FactVerdict { Fake, True, Mixed };

struct FactCheckEntry {
    std::vector<std::string> claim_urls; // normalized at parse time
    std::string title;
    FactVerdict verdict = FactVerdict::Fake;
    std::string source;
    std::string date; // ISO yyyy-mm-dd

    bool operator==(const FactCheckEntry&) const = default;
};

// Flag-list credibility categories, per the OpenSources-style taxonomy.
enum class FlagLabel {
    FakeNews,
    Satire,
    ExtremeBias,
    ConspiracyTheory,
    RumorMill,
    StateNews,
    JunkScience,
    HateNews,
    Clickbait,
    Political,
    Credible,
    Unreliable,
};

struct FlagListEntry {
    std::string domain; // normalized: lowercase, no scheme, no leading www.
    std::vector<FlagLabel> labels;
    std::string source;

    bool operator==(const FlagListEntry&) const = default;
};

const char* flag_label_name(FlagLabel l);
std::optional<FlagLabel> flag_label_from_name(std::string_view name);

const char* article_label_name(ArticleLabel l);
const char* fact_verdict_name(FactVerdict v);

// ---- parsing -------------------------------------------------------------------

// All parsers are all-or-nothing: any malformed record rejects the whole
// stream with a SchemaError pointing at the line.
std::vector<Article> parse_articles(std::string_view stream);
std::vector<Tweet> parse_tweets(std::string_view stream);
std::vector<FactCheckEntry> parse_factchecks(std::string_view stream);
// Accepts both the csv form (header `domain,label,source`) and the
// newline-delimited object form.
std::vector<FlagListEntry> parse_flaglist(std::string_view stream, std::string_view source_name);
// AFINN lexicons are word<TAB>valence, membership lexicons one word per line.
Lexicon parse_lexicon(LexiconKind kind, std::string_view stream);

// Round-trip serializers producing the documented formats.
std::string serialize_articles(const std::vector<Article>& articles);
std::string serialize_tweets(const std::vector<Tweet>& tweets);
std::string serialize_factchecks(const std::vector<FactCheckEntry>& entries);
std::string serialize_flaglist_csv(const std::vector<FlagListEntry>& entries);
std::string serialize_lexicon(const Lexicon& lex);

std::string serialize_article(const Article& a);
std::string serialize_tweet(const Tweet& t);

// ---- resource package manifest ---------------------------------------------------

struct ManifestComponent {
    std::string name;
    std::string path; // relative to the manifest's directory
    std::string kind; // articles | tweets | flaglist | factchecks | lexicon | model | blacklist
    std::string sha256;
};

struct PackageManifest {
    std::string version;
    std::string created_at;
    std::vector<ManifestComponent> components;
    double threshold = 0.99;       // linguistic decision threshold bundled with the package
    std::string catalog = "top20"; // feature catalog version the model was trained on

    const ManifestComponent* find(std::string_view name) const;
};

PackageManifest parse_manifest(std::string_view json_text);
std::string serialize_manifest(const PackageManifest& m);

struct ValidationIssue {
    std::string component;
    std::string message;
};

struct ValidationReport {
    bool ok = false;
    std::string version;
    std::size_t component_count = 0;
    std::vector<ValidationIssue> issues;

    std::string to_string() const;
};

// Confirms each listed file exists, its digest matches, and it parses under
// its declared kind.
ValidationReport validate_package(const std::string& package_dir);

} // namespace checkit::ingest

#endif
