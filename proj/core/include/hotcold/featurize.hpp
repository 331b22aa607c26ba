#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hotcold/dataset.hpp"
#include "hotcold/types.hpp"

namespace hotcold {

/// The seven categorical inputs. Weekday and month are derived from the
/// release date; the rest map straight from record fields.
enum class CatVar : std::size_t {
    Payment = 0,
    ProgramType,
    Genre,
    AgeLimit,
    Channel,
    ReleaseWeekday,
    ReleaseMonth,
};

inline constexpr std::size_t kNumCatVars = 7;
inline constexpr std::size_t kNumNumeric = 3;  // playtime, episode_count, related_view
inline constexpr std::size_t kTextBuckets = 16384;

const char* cat_var_name(CatVar v);

/// String value of one categorical variable for a record.
std::string cat_value(const ContentRecord& rec, CatVar var);

/// Level list of one categorical variable. Levels are sorted, index 0 is
/// reserved for out-of-vocabulary values.
struct Vocabulary {
    std::vector<std::string> levels;

    /// Level count including the OOV slot.
    std::size_t size() const { return levels.size() + 1; }
    /// 1-based index of a known level; 0 for anything unseen.
    std::uint32_t index_of(const std::string& level) const;
};

struct VocabularySet {
    std::array<Vocabulary, kNumCatVars> vars;
    const Vocabulary& operator[](CatVar v) const {
        return vars[static_cast<std::size_t>(v)];
    }
};

VocabularySet build_vocab(const std::vector<ContentRecord>& contents);

/// Per-feature standardization statistics, fitted on training rows only.
struct Scaler {
    std::array<double, kNumNumeric> mean{};
    std::array<double, kNumNumeric> stddev{};  // floored at 1e-8

    double standardize(std::size_t i, double x) const {
        return (x - mean[i]) / stddev[i];
    }
};

Scaler fit_scaler(const std::vector<std::array<double, kNumNumeric>>& raw_rows);

/// Model-ready representation of one content.
struct FeatureVector {
    std::array<std::uint32_t, kNumCatVars> cat_indices{};
    std::array<double, kNumNumeric> numeric{};
    std::vector<std::pair<std::uint32_t, std::int32_t>> text;  // (bucket, count), sorted
    bool is_type_a = false;
};

bool operator==(const FeatureVector& a, const FeatureVector& b);

/// Lowercased whitespace tokens of actors + title + keywords, hashed into
/// kTextBuckets counting buckets (FNV-1a, stable across platforms).
std::vector<std::pair<std::uint32_t, std::int32_t>> hash_text(const ContentRecord& rec);

std::uint32_t text_bucket(const std::string& token);

/// Encodes one record. `related_view` is the windowed prior-work view sum
/// for TypeA rows and 0 for TypeB; unknown categorical levels land on the
/// OOV index.
FeatureVector encode(const ContentRecord& rec, const VocabularySet& vocab,
                     const Scaler& scaler, std::int64_t related_view, bool is_type_a);

/// Raw (unstandardized) numeric triple used for scaler fitting.
std::array<double, kNumNumeric> raw_numeric(const ContentRecord& rec,
                                            std::int64_t related_view);

/// Windowed sum of prior same-series view counts in [t - window_days, t).
/// Throws ValidationError when the content is TypeB at t (feature undefined).
std::int64_t related_view_feature(const ContentRecord& content, const DatasetIndex& index,
                                  Date t, std::int64_t window_days);

/// One rolling-origin evaluation slot: everything before `test.begin` is
/// training history, contents released inside `test` are the test cohort.
struct PeriodSplit {
    std::size_t index = 0;  // ordinal of the test period on the grid
    DateRange train;        // [timeline start, test.begin)
    DateRange test;
};

/// Cuts the timeline (first release .. last log, exclusive) into consecutive
/// periods of `period_length_days` and returns one split per period that has
/// at least one full period of history before it.
std::vector<PeriodSplit> split_periods(const std::vector<ContentRecord>& contents,
                                       const std::vector<ViewLog>& views,
                                       std::int64_t period_length_days);

} // namespace hotcold
