#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hotcold/types.hpp"

namespace hotcold {

enum class FileFormat { Jsonl, Csv };

struct Dataset {
    std::vector<ContentRecord> contents;
    std::vector<ViewLog> views;
};

/// Loads contents.{jsonl|csv} and views.jsonl from a dataset directory.
/// Every record is validated; malformed rows report file, line and field.
Dataset ingest(const std::string& dir, FileFormat format = FileFormat::Jsonl);

/// Parses a single contents file. Rejects duplicate content_ids.
std::vector<ContentRecord> parse_contents(const std::string& path, FileFormat format);

/// Parses a view-log JSONL file. Rejects duplicate (content_id, date) pairs.
std::vector<ViewLog> parse_views(const std::string& path);

void write_contents_jsonl(const std::string& path, const std::vector<ContentRecord>& contents);
void write_contents_csv(const std::string& path, const std::vector<ContentRecord>& contents);
void write_views_jsonl(const std::string& path, const std::vector<ViewLog>& views);

/// Throws ValidationError if a record violates the type invariants
/// (playtime > 0, episode_count >= 0, related_view >= 0 when present).
void validate_record(const ContentRecord& rec);

/// Half-open date range [begin, end).
struct DateRange {
    Date begin;
    Date end;
    bool contains(Date d) const { return begin <= d && d < end; }
    std::int64_t length_days() const { return begin.days_until(end); }
};

/// Core ranking rule shared by every labeling path: sorts by total views
/// descending, ties by content_id ascending, and marks the top ceil(q*N) hot.
std::vector<PopularityLabel> assign_hot_labels(
    std::vector<PopularityLabel> totals, double q);

/// Labels `contents` by their total views inside `period`: the top ceil(q*N)
/// by in-period totals are hot. Deterministic tie-break by content_id.
std::vector<PopularityLabel> label_hot_cold(const std::vector<ViewLog>& view_logs,
                                            const std::vector<ContentRecord>& contents,
                                            const DateRange& period, double q);

/// TypeA iff series_id is present and some other catalog item with the same
/// series_id was released before t and has at least one view log dated before t.
ContentType classify_type(const ContentRecord& content,
                          const std::vector<ContentRecord>& catalog,
                          const std::vector<ViewLog>& view_logs, Date t);

/// Read-only index over a dataset: by-id lookup, series membership, and
/// per-content day-indexed views. Built once, shared by featurization,
/// labeling and evaluation.
class DatasetIndex {
public:
    DatasetIndex(const std::vector<ContentRecord>& contents,
                 const std::vector<ViewLog>& views);

    const ContentRecord* find(const std::string& content_id) const;
    const std::vector<const ContentRecord*>& series_members(const std::string& series_id) const;

    /// Sum of a single content's views over [from, to).
    std::int64_t views_in_range(const std::string& content_id, Date from, Date to) const;

    /// Sum over prior same-series works (release < t, has a log before t,
    /// id differs) of views in [t - window_days, t).
    std::int64_t related_views(const ContentRecord& content, Date t,
                               std::int64_t window_days) const;

    ContentType classify(const ContentRecord& content, Date t) const;

    Date min_release() const { return min_release_; }
    Date max_log_date() const { return max_log_; }
    bool has_views() const { return has_views_; }

private:
    struct ViewSeries {
        Date first;                            // date of views_[0]
        std::vector<std::int64_t> daily;       // dense day-indexed counts
        std::vector<std::int64_t> prefix;      // prefix[i] = sum daily[0..i)
        Date earliest_log;
    };

    const ViewSeries* find_views(const std::string& content_id) const;

    std::vector<std::pair<std::string, const ContentRecord*>> by_id_;
    std::vector<std::pair<std::string, std::vector<const ContentRecord*>>> by_series_;
    std::vector<std::pair<std::string, ViewSeries>> views_;
    std::vector<const ContentRecord*> empty_series_;
    Date min_release_;
    Date max_log_;
    bool has_views_ = false;
};

} // namespace hotcold
