#ifndef CHECKIT_CREDIBILITY_HPP
#define CHECKIT_CREDIBILITY_HPP

#include "checkit/ingest.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace checkit::credibility {

enum class MatchKind { ExactHost, SuffixLabel, ExactUrl, TitleSimilarity };

struct MatchResult {
    bool matched = false;
    std::optional<ingest::FlagListEntry> flag_entry;
    std::optional<ingest::FactCheckEntry> fact_entry;
    MatchKind kind = MatchKind::ExactHost;
    double similarity = 0.0;
};

const char* match_kind_name(MatchKind k);

// Hash index over exact hosts; suffix matches walk the host's label
// boundaries, so a lookup costs at most one probe per label.
class FlagIndex {
public:
    FlagIndex() = default;
    // Lists merge with list-order precedence; duplicate domains union labels.
    explicit FlagIndex(const std::vector<std::vector<ingest::FlagListEntry>>& lists);
    explicit FlagIndex(const std::vector<ingest::FlagListEntry>& list);

    // `host` must already be normalized (see url::normalize_domain).
    MatchResult match(std::string_view host) const;
    // Convenience: parse + normalize + match.
    MatchResult match_url(std::string_view url) const;

    std::size_t size() const { return by_domain_.size(); }

private:
    void add(const ingest::FlagListEntry& e);
    std::unordered_map<std::string, ingest::FlagListEntry> by_domain_;
};

// Token-set Jaccard over lowercased, stopword-stripped title tokens.
double title_jaccard(std::string_view a, std::string_view b,
                     const ingest::Lexicon& stopwords);

class FactCheckIndex {
public:
    FactCheckIndex() = default;
    FactCheckIndex(std::vector<ingest::FactCheckEntry> entries, ingest::Lexicon stopwords);

    // Exact normalized-URL match preferred; else title similarity at
    // `sim_threshold`, highest similarity first, earliest entry on ties.
    MatchResult lookup(std::string_view article_url, std::string_view title,
                       double sim_threshold = 0.8) const;

    std::size_t size() const { return entries_.size(); }

private:
    std::vector<ingest::FactCheckEntry> entries_;
    std::unordered_map<std::string, std::size_t> by_url_; // normalized url -> entry index
    ingest::Lexicon stopwords_;
};

} // namespace checkit::credibility

#endif
