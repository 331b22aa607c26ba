#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hotcold/date.hpp"

namespace hotcold {

/// A or B routing: A means the content has at least one released prior work
/// in the same series with view logs; B means standalone (or no usable history).
enum class ContentType { TypeA, TypeB };

inline const char* to_string(ContentType t) {
    return t == ContentType::TypeA ? "A" : "B";
}

/// Pre-release metadata of one content item.
struct ContentRecord {
    std::string content_id;
    std::optional<std::string> series_id;  // links related prior works
    std::string payment;                   // pay / free
    std::string program_type;              // drama, movie, animation, ...
    std::string genre;
    std::int64_t playtime = 0;             // seconds, > 0
    std::int64_t episode_count = 0;        // >= 0
    std::string age_limit;                 // 19 / 17 / 15 / all, ...
    std::string channel;
    std::vector<std::string> actors;
    std::string title;
    std::vector<std::string> keywords;
    Date release_date;
    std::optional<std::int64_t> related_view;  // >= 0 when present
};

/// One dated view-count observation.
struct ViewLog {
    std::string content_id;
    Date date;
    std::int64_t view_count = 0;  // >= 0
};

/// Hot/cold assignment produced by the top-quantile labeling rule.
struct PopularityLabel {
    std::string content_id;
    int label = 0;  // 1 = hot, 0 = cold
    std::int64_t window_total_views = 0;
};

} // namespace hotcold
