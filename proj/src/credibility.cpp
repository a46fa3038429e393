#include "checkit/credibility.hpp"

#include "checkit/url.hpp"
#include "checkit/util.hpp"

#include <algorithm>
#include <set>

namespace checkit::credibility {

const char* match_kind_name(MatchKind k) {
    switch (k) {
        case MatchKind::ExactHost: return "exact-host";
        case MatchKind::SuffixLabel: return "suffix-label";
        case MatchKind::ExactUrl: return "exact-url";
        case MatchKind::TitleSimilarity: return "title-similarity";
    }
    return "?";
}

// ---- flag-list index ---------------------------------------------------------

FlagIndex::FlagIndex(const std::vector<std::vector<ingest::FlagListEntry>>& lists) {
    for (const auto& list : lists)
        for (const auto& e : list) add(e);
}

FlagIndex::FlagIndex(const std::vector<ingest::FlagListEntry>& list) {
    for (const auto& e : list) add(e);
}

void FlagIndex::add(const ingest::FlagListEntry& e) {
    auto [it, inserted] = by_domain_.emplace(e.domain, e);
    if (!inserted) {
        // earlier list wins on source; conflicting labels are unioned
        for (auto l : e.labels)
            if (std::find(it->second.labels.begin(), it->second.labels.end(), l) ==
                it->second.labels.end())
                it->second.labels.push_back(l);
    }
}

MatchResult FlagIndex::match(std::string_view host) const {
    MatchResult r;
    auto exact = by_domain_.find(std::string(host));
    if (exact != by_domain_.end()) {
        r.matched = true;
        r.flag_entry = exact->second;
        r.kind = MatchKind::ExactHost;
        return r;
    }
    // walk suffixes at label boundaries: a.fake.example -> fake.example -> example
    std::size_t pos = 0;
    while ((pos = host.find('.', pos)) != std::string_view::npos) {
        std::string_view suffix = host.substr(pos + 1);
        auto it = by_domain_.find(std::string(suffix));
        if (it != by_domain_.end()) {
            r.matched = true;
            r.flag_entry = it->second;
            r.kind = MatchKind::SuffixLabel;
            return r;
        }
        ++pos;
    }
    return r;
}

MatchResult FlagIndex::match_url(std::string_view raw_url) const {
    return match(url::normalize_domain(raw_url));
}

// ---- fact-check similarity -------------------------------------------------------

namespace {

// Canonical form used for exact claim-URL equality: normalized host plus
// path, query kept, fragment and trailing slash dropped.
std::string canonical_url(std::string_view raw) {
    auto u = url::parse(raw);
    if (!u) return util::ascii_lower(raw);
    std::string path = u->path;
    auto hash = path.find('#');
    if (hash != std::string::npos) path.resize(hash);
    while (!path.empty() && path.back() == '/') path.pop_back();
    return url::normalize_host(u->host) + path;
}

std::set<std::string> title_tokens(std::string_view title, const ingest::Lexicon& stopwords) {
    std::set<std::string> tokens;
    std::string cur;
    std::size_t i = 0;
    auto flush = [&]() {
        if (!cur.empty() && !stopwords.contains(cur)) tokens.insert(cur);
        cur.clear();
    };
    while (i < title.size()) {
        std::size_t start = i;
        char32_t c = util::decode_utf8(title, i);
        if (util::is_letter(c) || util::is_digit(c)) {
            char32_t low = util::to_lower(c);
            if (low < 0x80) {
                cur += static_cast<char>(low);
            } else {
                cur.append(title.substr(start, i - start));
            }
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

} // namespace

double title_jaccard(std::string_view a, std::string_view b, const ingest::Lexicon& stopwords) {
    auto ta = title_tokens(a, stopwords);
    auto tb = title_tokens(b, stopwords);
    if (ta.empty() && tb.empty()) return 0.0;
    std::size_t inter = 0;
    for (const auto& t : ta)
        if (tb.count(t)) ++inter;
    std::size_t uni = ta.size() + tb.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

FactCheckIndex::FactCheckIndex(std::vector<ingest::FactCheckEntry> entries,
                               ingest::Lexicon stopwords)
    : entries_(std::move(entries)), stopwords_(std::move(stopwords)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (const auto& u : entries_[i].claim_urls)
            by_url_.emplace(canonical_url(u), i); // first entry wins
}

MatchResult FactCheckIndex::lookup(std::string_view article_url, std::string_view title,
                                   double sim_threshold) const {
    MatchResult r;
    if (!article_url.empty()) {
        auto it = by_url_.find(canonical_url(article_url));
        if (it != by_url_.end()) {
            r.matched = true;
            r.fact_entry = entries_[it->second];
            r.kind = MatchKind::ExactUrl;
            r.similarity = 1.0;
            return r;
        }
    }
    if (title.empty()) return r;
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].title.empty()) continue;
        double sim = title_jaccard(title, entries_[i].title, stopwords_);
        if (sim > best) {
            best = sim;
            best_idx = i;
        }
    }
    if (best >= sim_threshold) {
        r.matched = true;
        r.fact_entry = entries_[best_idx];
        r.kind = MatchKind::TitleSimilarity;
        r.similarity = best;
    }
    return r;
}

} // namespace checkit::credibility
