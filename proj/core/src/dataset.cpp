#include "hotcold/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hotcold/error.hpp"

namespace hotcold {

using nlohmann::json;

void validate_record(const ContentRecord& rec) {
    if (rec.content_id.empty())
        throw ValidationError("field 'content_id' must be non-empty");
    if (rec.playtime <= 0)
        throw ValidationError("field 'playtime' must be positive");
    if (rec.episode_count < 0)
        throw ValidationError("field 'episode_count' must be non-negative");
    if (rec.related_view && *rec.related_view < 0)
        throw ValidationError("field 'related_view' must be non-negative");
    if (rec.series_id && rec.series_id->empty())
        throw ValidationError("field 'series_id' must be non-empty when present");
}

namespace {

[[noreturn]] void row_error(const std::string& path, std::size_t line, const std::string& what) {
    throw ValidationError(path + " line " + std::to_string(line) + ": " + what);
}

std::string get_string(const json& j, const char* field, const std::string& path, std::size_t line) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string())
        row_error(path, line, std::string("field '") + field + "' missing or not a string");
    return it->get<std::string>();
}

std::int64_t get_int(const json& j, const char* field, const std::string& path, std::size_t line) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_number_integer())
        row_error(path, line, std::string("field '") + field + "' missing or not an integer");
    return it->get<std::int64_t>();
}

std::vector<std::string> get_string_list(const json& j, const char* field,
                                         const std::string& path, std::size_t line) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_array())
        row_error(path, line, std::string("field '") + field + "' missing or not an array");
    std::vector<std::string> out;
    for (const auto& e : *it) {
        if (!e.is_string())
            row_error(path, line, std::string("field '") + field + "' has a non-string element");
        out.push_back(e.get<std::string>());
    }
    return out;
}

ContentRecord content_from_json(const json& j, const std::string& path, std::size_t line) {
    ContentRecord rec;
    rec.content_id = get_string(j, "content_id", path, line);
    if (j.contains("series_id")) {
        if (!j["series_id"].is_string())
            row_error(path, line, "field 'series_id' must be a string");
        rec.series_id = j["series_id"].get<std::string>();
    }
    rec.payment = get_string(j, "payment", path, line);
    rec.program_type = get_string(j, "program_type", path, line);
    rec.genre = get_string(j, "genre", path, line);
    rec.playtime = get_int(j, "playtime", path, line);
    rec.episode_count = get_int(j, "episode_count", path, line);
    rec.age_limit = get_string(j, "age_limit", path, line);
    rec.channel = get_string(j, "channel", path, line);
    rec.actors = get_string_list(j, "actors", path, line);
    rec.title = get_string(j, "title", path, line);
    rec.keywords = get_string_list(j, "keywords", path, line);
    try {
        rec.release_date = Date::parse(get_string(j, "release_date", path, line));
    } catch (const ValidationError& e) {
        row_error(path, line, std::string("field 'release_date': ") + e.what());
    }
    if (j.contains("related_view")) {
        if (!j["related_view"].is_number_integer())
            row_error(path, line, "field 'related_view' must be an integer");
        rec.related_view = j["related_view"].get<std::int64_t>();
    }
    try {
        validate_record(rec);
    } catch (const ValidationError& e) {
        row_error(path, line, e.what());
    }
    return rec;
}

json content_to_json(const ContentRecord& rec) {
    json j;
    j["content_id"] = rec.content_id;
    if (rec.series_id) j["series_id"] = *rec.series_id;
    j["payment"] = rec.payment;
    j["program_type"] = rec.program_type;
    j["genre"] = rec.genre;
    j["playtime"] = rec.playtime;
    j["episode_count"] = rec.episode_count;
    j["age_limit"] = rec.age_limit;
    j["channel"] = rec.channel;
    j["actors"] = rec.actors;
    j["title"] = rec.title;
    j["keywords"] = rec.keywords;
    j["release_date"] = rec.release_date.to_string();
    if (rec.related_view) j["related_view"] = *rec.related_view;
    return j;
}

constexpr const char* kCsvHeader =
    "content_id,series_id,payment,program_type,genre,playtime,episode_count,"
    "age_limit,channel,actors,title,keywords,release_date,related_view";

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string join_pipe(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += '|';
        out += items[i];
    }
    return out;
}

std::vector<std::string> split_pipe(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find('|', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> parse_csv_row(const std::string& row, const std::string& path,
                                       std::size_t line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const char c = row[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    if (quoted) row_error(path, line, "unterminated quoted cell");
    cells.push_back(std::move(cell));
    return cells;
}

std::int64_t parse_int_cell(const std::string& cell, const char* field, const std::string& path,
                            std::size_t line) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("trailing chars");
        return v;
    } catch (const std::exception&) {
        row_error(path, line, std::string("field '") + field + "' is not an integer: '" + cell + "'");
    }
}

void check_duplicate_ids(const std::vector<ContentRecord>& contents, const std::string& path) {
    std::vector<std::string> ids;
    ids.reserve(contents.size());
    for (const auto& c : contents) ids.push_back(c.content_id);
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end())
        throw ValidationError(path + ": duplicate content_id '" + *dup + "'");
}

} // namespace

std::vector<ContentRecord> parse_contents(const std::string& path, FileFormat format) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<ContentRecord> out;
    std::string row;
    std::size_t line = 0;

    if (format == FileFormat::Jsonl) {
        while (std::getline(in, row)) {
            ++line;
            if (row.empty()) continue;
            json j = json::parse(row, nullptr, false);
            if (j.is_discarded()) row_error(path, line, "malformed JSON");
            if (!j.is_object()) row_error(path, line, "row is not a JSON object");
            out.push_back(content_from_json(j, path, line));
        }
    } else {
        if (!std::getline(in, row)) throw ValidationError(path + ": missing CSV header");
        ++line;
        if (row != kCsvHeader)
            throw ValidationError(path + ": unexpected CSV header");
        while (std::getline(in, row)) {
            ++line;
            if (row.empty()) continue;
            auto cells = parse_csv_row(row, path, line);
            if (cells.size() != 14)
                row_error(path, line, "expected 14 cells, got " + std::to_string(cells.size()));
            ContentRecord rec;
            rec.content_id = cells[0];
            if (!cells[1].empty()) rec.series_id = cells[1];
            rec.payment = cells[2];
            rec.program_type = cells[3];
            rec.genre = cells[4];
            rec.playtime = parse_int_cell(cells[5], "playtime", path, line);
            rec.episode_count = parse_int_cell(cells[6], "episode_count", path, line);
            rec.age_limit = cells[7];
            rec.channel = cells[8];
            rec.actors = split_pipe(cells[9]);
            rec.title = cells[10];
            rec.keywords = split_pipe(cells[11]);
            try {
                rec.release_date = Date::parse(cells[12]);
            } catch (const ValidationError& e) {
                row_error(path, line, std::string("field 'release_date': ") + e.what());
            }
            if (!cells[13].empty())
                rec.related_view = parse_int_cell(cells[13], "related_view", path, line);
            try {
                validate_record(rec);
            } catch (const ValidationError& e) {
                row_error(path, line, e.what());
            }
            out.push_back(std::move(rec));
        }
    }
    check_duplicate_ids(out, path);
    return out;
}

std::vector<ViewLog> parse_views(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::vector<ViewLog> out;
    std::string row;
    std::size_t line = 0;
    while (std::getline(in, row)) {
        ++line;
        if (row.empty()) continue;
        json j = json::parse(row, nullptr, false);
        if (j.is_discarded()) row_error(path, line, "malformed JSON");
        ViewLog v;
        v.content_id = get_string(j, "content_id", path, line);
        try {
            v.date = Date::parse(get_string(j, "date", path, line));
        } catch (const ValidationError& e) {
            row_error(path, line, std::string("field 'date': ") + e.what());
        }
        v.view_count = get_int(j, "view_count", path, line);
        if (v.view_count < 0) row_error(path, line, "field 'view_count' must be non-negative");
        out.push_back(std::move(v));
    }
    // Uniqueness of (content_id, date).
    std::vector<std::pair<std::string, std::int64_t>> keys;
    keys.reserve(out.size());
    for (const auto& v : out) keys.emplace_back(v.content_id, v.date.serial());
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end())
        throw ValidationError(path + ": duplicate view log for content_id '" + dup->first +
                              "' on " + Date(dup->second).to_string());
    return out;
}

Dataset ingest(const std::string& dir, FileFormat format) {
    Dataset ds;
    const std::string contents_path =
        dir + (format == FileFormat::Jsonl ? "/contents.jsonl" : "/contents.csv");
    ds.contents = parse_contents(contents_path, format);
    ds.views = parse_views(dir + "/views.jsonl");
    return ds;
}

void write_contents_jsonl(const std::string& path, const std::vector<ContentRecord>& contents) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    for (const auto& rec : contents) out << content_to_json(rec).dump() << '\n';
}

void write_contents_csv(const std::string& path, const std::vector<ContentRecord>& contents) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << kCsvHeader << '\n';
    for (const auto& rec : contents) {
        out << csv_escape(rec.content_id) << ','
            << csv_escape(rec.series_id.value_or("")) << ','
            << csv_escape(rec.payment) << ','
            << csv_escape(rec.program_type) << ','
            << csv_escape(rec.genre) << ','
            << rec.playtime << ','
            << rec.episode_count << ','
            << csv_escape(rec.age_limit) << ','
            << csv_escape(rec.channel) << ','
            << csv_escape(join_pipe(rec.actors)) << ','
            << csv_escape(rec.title) << ','
            << csv_escape(join_pipe(rec.keywords)) << ','
            << rec.release_date.to_string() << ','
            << (rec.related_view ? std::to_string(*rec.related_view) : "") << '\n';
    }
}

void write_views_jsonl(const std::string& path, const std::vector<ViewLog>& views) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    for (const auto& v : views) {
        json j;
        j["content_id"] = v.content_id;
        j["date"] = v.date.to_string();
        j["view_count"] = v.view_count;
        out << j.dump() << '\n';
    }
}

std::vector<PopularityLabel> assign_hot_labels(std::vector<PopularityLabel> totals, double q) {
    if (totals.empty()) throw ValidationError("cannot label an empty content set");
    if (!(q > 0.0 && q < 1.0)) throw ValidationError("labeling quantile q must be in (0,1)");
    std::sort(totals.begin(), totals.end(), [](const PopularityLabel& a, const PopularityLabel& b) {
        if (a.window_total_views != b.window_total_views)
            return a.window_total_views > b.window_total_views;
        return a.content_id < b.content_id;
    });
    const auto n_hot = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(totals.size())));
    for (std::size_t i = 0; i < totals.size(); ++i) totals[i].label = i < n_hot ? 1 : 0;
    return totals;
}

std::vector<PopularityLabel> label_hot_cold(const std::vector<ViewLog>& view_logs,
                                            const std::vector<ContentRecord>& contents,
                                            const DateRange& period, double q) {
    if (contents.empty()) throw ValidationError("cannot label an empty content set");
    if (!(q > 0.0 && q < 1.0)) throw ValidationError("labeling quantile q must be in (0,1)");

    std::vector<PopularityLabel> totals;
    totals.reserve(contents.size());
    for (const auto& c : contents) totals.push_back({c.content_id, 0, 0});
    std::sort(totals.begin(), totals.end(),
              [](const PopularityLabel& a, const PopularityLabel& b) {
                  return a.content_id < b.content_id;
              });
    for (const auto& v : view_logs) {
        if (!period.contains(v.date)) continue;
        auto it = std::lower_bound(totals.begin(), totals.end(), v.content_id,
                                   [](const PopularityLabel& a, const std::string& id) {
                                       return a.content_id < id;
                                   });
        if (it != totals.end() && it->content_id == v.content_id)
            it->window_total_views += v.view_count;
    }
    return assign_hot_labels(std::move(totals), q);
}

ContentType classify_type(const ContentRecord& content,
                          const std::vector<ContentRecord>& catalog,
                          const std::vector<ViewLog>& view_logs, Date t) {
    if (!content.series_id) return ContentType::TypeB;
    for (const auto& other : catalog) {
        if (other.content_id == content.content_id) continue;
        if (!other.series_id || *other.series_id != *content.series_id) continue;
        if (!(other.release_date < t)) continue;
        for (const auto& v : view_logs) {
            if (v.content_id == other.content_id && v.date < t) return ContentType::TypeA;
        }
    }
    return ContentType::TypeB;
}

DatasetIndex::DatasetIndex(const std::vector<ContentRecord>& contents,
                           const std::vector<ViewLog>& views) {
    by_id_.reserve(contents.size());
    for (const auto& c : contents) by_id_.emplace_back(c.content_id, &c);
    std::sort(by_id_.begin(), by_id_.end());

    for (const auto& c : contents) {
        if (!c.series_id) continue;
        auto it = std::lower_bound(by_series_.begin(), by_series_.end(), *c.series_id,
                                   [](const auto& a, const std::string& s) { return a.first < s; });
        if (it == by_series_.end() || it->first != *c.series_id)
            it = by_series_.insert(it, {*c.series_id, {}});
        it->second.push_back(&c);
    }

    min_release_ = contents.empty() ? Date(0) : contents.front().release_date;
    for (const auto& c : contents)
        if (c.release_date < min_release_) min_release_ = c.release_date;

    // Dense per-content day series with prefix sums.
    std::vector<std::pair<std::string, std::pair<Date, Date>>> spans;
    for (const auto& v : views) {
        if (!has_views_ || v.date > max_log_) max_log_ = v.date;
        has_views_ = true;
        auto it = std::lower_bound(spans.begin(), spans.end(), v.content_id,
                                   [](const auto& a, const std::string& s) { return a.first < s; });
        if (it == spans.end() || it->first != v.content_id) {
            spans.insert(it, {v.content_id, {v.date, v.date}});
        } else {
            if (v.date < it->second.first) it->second.first = v.date;
            if (v.date > it->second.second) it->second.second = v.date;
        }
    }
    views_.reserve(spans.size());
    for (auto& s : spans) {
        ViewSeries vs;
        vs.first = s.second.first;
        vs.earliest_log = s.second.first;
        vs.daily.assign(static_cast<std::size_t>(s.second.first.days_until(s.second.second)) + 1, 0);
        views_.emplace_back(s.first, std::move(vs));
    }
    for (const auto& v : views) {
        auto it = std::lower_bound(views_.begin(), views_.end(), v.content_id,
                                   [](const auto& a, const std::string& s) { return a.first < s; });
        it->second.daily[static_cast<std::size_t>(it->second.first.days_until(v.date))] +=
            v.view_count;
    }
    for (auto& kv : views_) {
        auto& vs = kv.second;
        vs.prefix.assign(vs.daily.size() + 1, 0);
        for (std::size_t i = 0; i < vs.daily.size(); ++i)
            vs.prefix[i + 1] = vs.prefix[i] + vs.daily[i];
    }
}

const ContentRecord* DatasetIndex::find(const std::string& content_id) const {
    auto it = std::lower_bound(by_id_.begin(), by_id_.end(), content_id,
                               [](const auto& a, const std::string& s) { return a.first < s; });
    if (it == by_id_.end() || it->first != content_id) return nullptr;
    return it->second;
}

const std::vector<const ContentRecord*>& DatasetIndex::series_members(
    const std::string& series_id) const {
    auto it = std::lower_bound(by_series_.begin(), by_series_.end(), series_id,
                               [](const auto& a, const std::string& s) { return a.first < s; });
    if (it == by_series_.end() || it->first != series_id) return empty_series_;
    return it->second;
}

const DatasetIndex::ViewSeries* DatasetIndex::find_views(const std::string& content_id) const {
    auto it = std::lower_bound(views_.begin(), views_.end(), content_id,
                               [](const auto& a, const std::string& s) { return a.first < s; });
    if (it == views_.end() || it->first != content_id) return nullptr;
    return &it->second;
}

std::int64_t DatasetIndex::views_in_range(const std::string& content_id, Date from, Date to) const {
    const ViewSeries* vs = find_views(content_id);
    if (!vs || !(from < to)) return 0;
    const std::int64_t n = static_cast<std::int64_t>(vs->daily.size());
    std::int64_t lo = vs->first.days_until(from);
    std::int64_t hi = vs->first.days_until(to);
    lo = std::clamp<std::int64_t>(lo, 0, n);
    hi = std::clamp<std::int64_t>(hi, 0, n);
    if (lo >= hi) return 0;
    return vs->prefix[static_cast<std::size_t>(hi)] - vs->prefix[static_cast<std::size_t>(lo)];
}

std::int64_t DatasetIndex::related_views(const ContentRecord& content, Date t,
                                         std::int64_t window_days) const {
    if (!content.series_id) return 0;
    std::int64_t total = 0;
    for (const ContentRecord* other : series_members(*content.series_id)) {
        if (other->content_id == content.content_id) continue;
        if (!(other->release_date < t)) continue;
        total += views_in_range(other->content_id, t.add_days(-window_days), t);
    }
    return total;
}

ContentType DatasetIndex::classify(const ContentRecord& content, Date t) const {
    if (!content.series_id) return ContentType::TypeB;
    for (const ContentRecord* other : series_members(*content.series_id)) {
        if (other->content_id == content.content_id) continue;
        if (!(other->release_date < t)) continue;
        const ViewSeries* vs = find_views(other->content_id);
        if (vs && vs->earliest_log < t) return ContentType::TypeA;
    }
    return ContentType::TypeB;
}

} // namespace hotcold
