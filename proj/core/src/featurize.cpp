#include "hotcold/featurize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "hotcold/error.hpp"
#include "hotcold/rng.hpp"

namespace hotcold {

const char* cat_var_name(CatVar v) {
    switch (v) {
        case CatVar::Payment: return "payment";
        case CatVar::ProgramType: return "program_type";
        case CatVar::Genre: return "genre";
        case CatVar::AgeLimit: return "age_limit";
        case CatVar::Channel: return "channel";
        case CatVar::ReleaseWeekday: return "release_weekday";
        case CatVar::ReleaseMonth: return "release_month";
    }
    return "?";
}

std::string cat_value(const ContentRecord& rec, CatVar var) {
    switch (var) {
        case CatVar::Payment: return rec.payment;
        case CatVar::ProgramType: return rec.program_type;
        case CatVar::Genre: return rec.genre;
        case CatVar::AgeLimit: return rec.age_limit;
        case CatVar::Channel: return rec.channel;
        case CatVar::ReleaseWeekday: return std::to_string(rec.release_date.weekday());
        case CatVar::ReleaseMonth: {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "%02d", rec.release_date.month());
            return buf;
        }
    }
    return {};
}

std::uint32_t Vocabulary::index_of(const std::string& level) const {
    auto it = std::lower_bound(levels.begin(), levels.end(), level);
    if (it == levels.end() || *it != level) return 0;
    return static_cast<std::uint32_t>(it - levels.begin()) + 1;
}

VocabularySet build_vocab(const std::vector<ContentRecord>& contents) {
    if (contents.empty())
        throw ValidationError("build_vocab: empty training set");
    VocabularySet vs;
    for (std::size_t v = 0; v < kNumCatVars; ++v) {
        auto& levels = vs.vars[v].levels;
        levels.reserve(contents.size());
        for (const auto& c : contents) levels.push_back(cat_value(c, static_cast<CatVar>(v)));
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    }
    return vs;
}

Scaler fit_scaler(const std::vector<std::array<double, kNumNumeric>>& raw_rows) {
    if (raw_rows.empty())
        throw ValidationError("fit_scaler: empty training set");
    Scaler s;
    const double n = static_cast<double>(raw_rows.size());
    for (std::size_t i = 0; i < kNumNumeric; ++i) {
        double sum = 0.0;
        for (const auto& r : raw_rows) sum += r[i];
        s.mean[i] = sum / n;
        double ss = 0.0;
        for (const auto& r : raw_rows) {
            const double d = r[i] - s.mean[i];
            ss += d * d;
        }
        s.stddev[i] = std::max(std::sqrt(ss / n), 1e-8);
    }
    return s;
}

bool operator==(const FeatureVector& a, const FeatureVector& b) {
    return a.cat_indices == b.cat_indices && a.numeric == b.numeric && a.text == b.text &&
           a.is_type_a == b.is_type_a;
}

std::uint32_t text_bucket(const std::string& token) {
    return static_cast<std::uint32_t>(fnv1a(token.data(), token.size()) % kTextBuckets);
}

namespace {

void tokenize_into(const std::string& text,
                   std::vector<std::pair<std::uint32_t, std::int32_t>>& counts) {
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        counts.emplace_back(text_bucket(token), 1);
        token.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            token += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
    }
    flush();
}

} // namespace

std::vector<std::pair<std::uint32_t, std::int32_t>> hash_text(const ContentRecord& rec) {
    std::vector<std::pair<std::uint32_t, std::int32_t>> counts;
    for (const auto& a : rec.actors) tokenize_into(a, counts);
    tokenize_into(rec.title, counts);
    for (const auto& k : rec.keywords) tokenize_into(k, counts);
    std::sort(counts.begin(), counts.end());
    // Collapse duplicate buckets into counts.
    std::size_t w = 0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (w > 0 && counts[w - 1].first == counts[r].first) {
            counts[w - 1].second += counts[r].second;
        } else {
            counts[w++] = counts[r];
        }
    }
    counts.resize(w);
    return counts;
}

std::array<double, kNumNumeric> raw_numeric(const ContentRecord& rec, std::int64_t related_view) {
    return {static_cast<double>(rec.playtime), static_cast<double>(rec.episode_count),
            static_cast<double>(related_view)};
}

FeatureVector encode(const ContentRecord& rec, const VocabularySet& vocab, const Scaler& scaler,
                     std::int64_t related_view, bool is_type_a) {
    FeatureVector fv;
    for (std::size_t v = 0; v < kNumCatVars; ++v)
        fv.cat_indices[v] = vocab.vars[v].index_of(cat_value(rec, static_cast<CatVar>(v)));
    const auto raw = raw_numeric(rec, related_view);
    for (std::size_t i = 0; i < kNumNumeric; ++i) fv.numeric[i] = scaler.standardize(i, raw[i]);
    fv.text = hash_text(rec);
    fv.is_type_a = is_type_a;
    return fv;
}

std::int64_t related_view_feature(const ContentRecord& content, const DatasetIndex& index, Date t,
                                  std::int64_t window_days) {
    if (window_days < 1)
        throw ValidationError("related_view_feature: window must be >= 1 day");
    if (index.classify(content, t) != ContentType::TypeA)
        throw ValidationError("related_view_feature: undefined for TypeB content '" +
                              content.content_id + "'");
    return index.related_views(content, t, window_days);
}

std::vector<PeriodSplit> split_periods(const std::vector<ContentRecord>& contents,
                                       const std::vector<ViewLog>& views,
                                       std::int64_t period_length_days) {
    if (period_length_days < 1)
        throw ValidationError("split_periods: period length must be >= 1 day");
    if (contents.empty() || views.empty())
        throw ValidationError("split_periods: need contents and view logs");

    Date t0 = contents.front().release_date;
    for (const auto& c : contents)
        if (c.release_date < t0) t0 = c.release_date;
    Date last_log = views.front().date;
    for (const auto& v : views)
        if (v.date > last_log) last_log = v.date;
    const Date end = last_log.add_days(1);

    const std::int64_t n_periods = t0.days_until(end) / period_length_days;
    if (n_periods < 2)
        throw ValidationError("split_periods: timeline of " +
                              std::to_string(t0.days_until(end)) +
                              " days covers fewer than 2 periods of " +
                              std::to_string(period_length_days) + " days");

    std::vector<PeriodSplit> out;
    out.reserve(static_cast<std::size_t>(n_periods - 1));
    for (std::int64_t k = 1; k < n_periods; ++k) {
        PeriodSplit ps;
        ps.index = static_cast<std::size_t>(k);
        ps.train = {t0, t0.add_days(k * period_length_days)};
        ps.test = {t0.add_days(k * period_length_days), t0.add_days((k + 1) * period_length_days)};
        out.push_back(ps);
    }
    return out;
}

} // namespace hotcold
