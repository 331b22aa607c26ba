#include "hotcold/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "hotcold/error.hpp"
#include "hotcold/rng.hpp"

namespace hotcold {
namespace {

const std::array<const char*, 2> kPayments = {"free", "pay"};

const std::array<const char*, 6> kProgramTypes = {
    "animation", "documentary", "drama", "movie", "sports", "variety"};

const std::array<const char*, 24> kGenres = {
    "action",    "adventure", "comedy",  "crime",    "family",  "fantasy",
    "history",   "horror",    "kids",    "medical",  "melodrama", "music",
    "mystery",   "politics",  "romance", "school",   "scifi",   "sitcom",
    "survival",  "thriller",  "travel",  "war",      "western", "youth"};

const std::array<const char*, 5> kAgeLimits = {"all", "7", "12", "15", "19"};

const std::array<const char*, 32> kChannels = {
    "abs", "acn",  "bcn",  "bmax", "ctv", "cplus", "dbn", "drama1",
    "ebs", "fox9", "gtv",  "hbn",  "itv", "jbc",   "kbn", "kids1",
    "ltv", "mbn",  "ntv",  "obs",  "pbc", "prime1","qtv", "rbn",
    "stv", "tbn",  "utv",  "vbc",  "wtv", "xbn",   "ytv", "zbc"};

const std::array<const char*, 40> kTitleWords = {
    "secret",  "night",   "return",  "golden", "city",    "island",  "doctor",
    "lost",    "royal",   "winter",  "summer", "heart",   "shadow",  "bridge",
    "garden",  "empire",  "station", "record", "diary",   "flower",  "signal",
    "memory",  "voyage",  "harbor",  "legend", "monster", "father",  "sister",
    "teacher", "stranger","window",  "letter", "river",   "palace",  "market",
    "hunter",  "silence", "morning", "mirror", "crown"};

const std::array<const char*, 48> kKeywordPool = {
    "award",     "blockbuster", "cameo",     "classic",   "debut",     "directorcut",
    "ensemble",  "exclusive",   "family",    "fanmade",   "festival",  "finale",
    "franchise", "hidden",      "hit",       "indie",     "live",      "lowbudget",
    "melo",      "nostalgia",   "original",  "premiere",  "prequel",   "primetime",
    "quiet",     "rarity",      "rerun",     "remaster",  "rookie",    "season",
    "sensation", "sleeper",     "slowburn",  "special",   "spinoff",   "star",
    "teen",      "topic",       "trending",  "underdog",  "uncut",     "veteran",
    "viral",     "vintage",     "webtoon",   "wedding",   "youth",     "zeitgeist"};

const std::array<const char*, 30> kGivenNames = {
    "aran", "bada", "chul",  "dain", "eun",  "gaeul", "haneul", "inho", "jisoo", "kyung",
    "mina", "nari", "onyu",  "park", "rae",  "sana",  "taeho",  "umi",  "wook",  "yeon",
    "bom",  "dal",  "hyun",  "jae",  "kwan", "lim",   "nam",    "ryu",  "seo",   "yul"};

const std::array<const char*, 30> kFamilyNames = {
    "ahn",  "bae", "cha",  "choi", "do",   "gang", "han", "im",  "jang", "jeon",
    "jung", "kang","kim",  "ko",   "kwon", "lee",  "min", "moon","nam",  "oh",
    "paik", "park","shin", "son",  "song", "woo",  "yang","yoo", "yoon", "yun"};

const char* ordinal_suffix(std::int64_t k) {
    if (k % 100 >= 11 && k % 100 <= 13) return "th";
    switch (k % 10) {
        case 1: return "st";
        case 2: return "nd";
        case 3: return "rd";
        default: return "th";
    }
}

struct LevelEffects {
    std::vector<double> genre;
    std::vector<double> channel;
    std::vector<double> program_type;
    std::vector<double> payment;
    std::vector<double> age;
    std::array<double, 7> weekday{};
    std::array<double, 12> month{};
    std::vector<double> keyword;
    std::vector<double> actor;  // only leading "star" slots are nonzero
};

LevelEffects draw_effects(Rng& rng) {
    LevelEffects e;
    auto fill = [&rng](std::vector<double>& v, std::size_t n, double sigma) {
        v.resize(n);
        for (auto& x : v) x = sigma * rng.normal();
    };
    fill(e.genre, kGenres.size(), 0.45);
    fill(e.channel, kChannels.size(), 0.35);
    fill(e.program_type, kProgramTypes.size(), 0.25);
    fill(e.payment, kPayments.size(), 0.15);
    fill(e.age, kAgeLimits.size(), 0.15);
    for (auto& x : e.weekday) x = 0.10 * rng.normal();
    for (auto& x : e.month) x = 0.08 * rng.normal();
    fill(e.keyword, kKeywordPool.size(), 0.40);
    e.actor.assign(kGivenNames.size() * kFamilyNames.size(), 0.0);
    for (std::size_t i = 0; i < 40; ++i)
        e.actor[rng.uniform_index(e.actor.size())] = 0.35 * rng.normal();
    return e;
}

struct Draft {
    ContentRecord rec;
    double log_theta = 0.0;
    std::int64_t release_day = 0;  // offset from timeline start
};

} // namespace

Dataset generate_synthetic(std::int64_t n_contents, std::int64_t days,
                           std::uint64_t seed, double type_a_fraction) {
    SyntheticParams p;
    p.n_contents = n_contents;
    p.days = days;
    p.seed = seed;
    p.type_a_fraction = type_a_fraction;
    return generate_synthetic(p);
}

Dataset generate_synthetic(const SyntheticParams& p) {
    if (p.n_contents < 10)
        throw ValidationError("generate_synthetic: n_contents must be >= 10");
    if (p.days < 30)
        throw ValidationError("generate_synthetic: days must be >= 30");
    if (!(p.type_a_fraction >= 0.0 && p.type_a_fraction <= 0.85))
        throw ValidationError("generate_synthetic: type_a_fraction must be in [0, 0.85]");

    Rng rng(derive_seed(p.seed, "synthetic"));
    const LevelEffects effects = draw_effects(rng);
    const Date origin(2017, 3, 1);

    const auto n = static_cast<std::size_t>(p.n_contents);
    int id_width = 1;
    for (std::int64_t v = p.n_contents; v > 0; v /= 10) ++id_width;

    std::vector<Draft> drafts;
    drafts.reserve(n);

    auto next_content_id = [&, counter = std::int64_t(0)]() mutable {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "c%0*lld", id_width,
                      static_cast<long long>(++counter));
        return std::string(buf);
    };

    auto draw_person = [&rng]() {
        std::size_t g = rng.uniform_index(kGivenNames.size());
        std::size_t f = rng.uniform_index(kFamilyNames.size());
        return std::make_pair(g * kFamilyNames.size() + f,
                              std::string(kFamilyNames[f]) + " " + kGivenNames[g]);
    };

    // Shared metadata + planted log-popularity effect for one content.
    auto draw_metadata = [&](ContentRecord& rec) {
        double eff = 0.0;
        const std::size_t pay = rng.uniform_index(kPayments.size());
        const std::size_t pty = rng.uniform_index(kProgramTypes.size());
        const std::size_t gen = rng.uniform_index(kGenres.size());
        const std::size_t age = rng.uniform_index(kAgeLimits.size());
        const std::size_t chn = rng.uniform_index(kChannels.size());
        rec.payment = kPayments[pay];
        rec.program_type = kProgramTypes[pty];
        rec.genre = kGenres[gen];
        rec.age_limit = kAgeLimits[age];
        rec.channel = kChannels[chn];
        eff += effects.payment[pay] + effects.program_type[pty] + effects.genre[gen] +
               effects.age[age] + effects.channel[chn];

        static const double playtime_mu[6] = {1500, 3000, 3900, 6600, 7200, 4800};
        static const double playtime_sd[6] = {300, 500, 600, 900, 1000, 700};
        rec.playtime = std::max<std::int64_t>(
            300, std::llround(playtime_mu[pty] + playtime_sd[pty] * rng.normal()));

        const std::int64_t n_kw = rng.uniform_int(2, 6);
        for (std::int64_t k = 0; k < n_kw; ++k) {
            const std::size_t kw = rng.uniform_index(kKeywordPool.size());
            if (std::find(rec.keywords.begin(), rec.keywords.end(), kKeywordPool[kw]) !=
                rec.keywords.end())
                continue;
            rec.keywords.push_back(kKeywordPool[kw]);
            eff += effects.keyword[kw];
        }
        const std::int64_t n_actors = rng.uniform_int(1, 4);
        for (std::int64_t k = 0; k < n_actors; ++k) {
            auto [idx, name] = draw_person();
            if (std::find(rec.actors.begin(), rec.actors.end(), name) != rec.actors.end())
                continue;
            rec.actors.push_back(name);
            eff += effects.actor[idx];
        }
        return eff;
    };

    auto release_effect = [&](std::int64_t day) {
        const Date d = origin.add_days(day);
        return effects.weekday[static_cast<std::size_t>(d.weekday())] +
               effects.month[static_cast<std::size_t>(d.month() - 1)];
    };

    // Series layout: every series contributes (episodes - 1) TypeA contents;
    // first episodes and standalones are TypeB.
    std::int64_t remaining_a = std::llround(p.type_a_fraction * static_cast<double>(p.n_contents));
    std::int64_t budget = p.n_contents;
    std::int64_t series_counter = 0;

    while (remaining_a > 0 && budget >= 2) {
        std::int64_t episodes = rng.uniform_int(4, 12);
        episodes = std::min(episodes, remaining_a + 1);
        episodes = std::min(episodes, budget);
        if (episodes < 2) break;

        ++series_counter;
        char sid_buf[32];
        std::snprintf(sid_buf, sizeof(sid_buf), "s%04lld",
                      static_cast<long long>(series_counter));
        const std::string series_id = sid_buf;

        std::vector<std::int64_t> gaps;
        std::int64_t span = 0;
        for (std::int64_t k = 1; k < episodes; ++k) {
            gaps.push_back(rng.uniform_int(3, 9));
            span += gaps.back();
        }
        const std::int64_t max_span = p.days - 2;
        if (span > max_span) {
            std::int64_t new_span = 0;
            for (auto& g : gaps) {
                g = std::max<std::int64_t>(1, g * max_span / span);
                new_span += g;
            }
            span = new_span;
        }
        const std::int64_t start = rng.uniform_int(0, std::max<std::int64_t>(0, p.days - 1 - span));

        const double series_factor = p.series_sigma * rng.normal();
        const std::size_t tw1 = rng.uniform_index(kTitleWords.size());
        const std::size_t tw2 = rng.uniform_index(kTitleWords.size());
        const std::string base_title =
            std::string(kTitleWords[tw1]) + " " + kTitleWords[tw2];

        ContentRecord proto;
        const double meta_eff = draw_metadata(proto);

        std::int64_t day = start;
        for (std::int64_t k = 0; k < episodes; ++k) {
            if (k > 0) day += gaps[static_cast<std::size_t>(k - 1)];
            Draft d;
            d.rec = proto;
            d.rec.content_id = next_content_id();
            d.rec.series_id = series_id;
            d.rec.episode_count = k + 1;
            d.rec.title = base_title + " " + std::to_string(k + 1) + ordinal_suffix(k + 1);
            d.rec.release_date = origin.add_days(day);
            d.release_day = day;
            d.log_theta = p.base_log_views + meta_eff + series_factor +
                          p.episode_jitter_sigma * rng.normal() + release_effect(day);
            drafts.push_back(std::move(d));
        }
        remaining_a -= episodes - 1;
        budget -= episodes;
    }

    while (budget > 0) {
        Draft d;
        d.rec.content_id = next_content_id();
        const double meta_eff = draw_metadata(d.rec);
        d.rec.episode_count = 1;
        const std::size_t tw1 = rng.uniform_index(kTitleWords.size());
        const std::size_t tw2 = rng.uniform_index(kTitleWords.size());
        const std::size_t tw3 = rng.uniform_index(kTitleWords.size());
        d.rec.title = std::string(kTitleWords[tw1]) + " " + kTitleWords[tw2] + " " + kTitleWords[tw3];
        d.release_day = rng.uniform_int(0, p.days - 1);
        d.rec.release_date = origin.add_days(d.release_day);
        d.log_theta = p.base_log_views + meta_eff + p.standalone_sigma * rng.normal() +
                      release_effect(d.release_day);
        --budget;
        drafts.push_back(std::move(d));
    }

    // Daily views: decayed demand with weekday swing and lognormal volatility.
    static const double kWeekdayDemand[7] = {1.0, 0.97, 0.98, 1.02, 1.08, 1.22, 1.18};
    const double decay_rate = std::log(2.0) / p.decay_halflife_days;

    Dataset ds;
    ds.views.reserve(static_cast<std::size_t>(p.n_contents) *
                     static_cast<std::size_t>(p.days) / 2);
    for (auto& d : drafts) {
        const double theta = std::exp(d.log_theta);
        for (std::int64_t day = d.release_day; day < p.days; ++day) {
            const Date date = origin.add_days(day);
            const double age = static_cast<double>(day - d.release_day);
            const double shape = std::exp(-decay_rate * age) + p.decay_floor;
            const double demand = theta * shape *
                                  kWeekdayDemand[static_cast<std::size_t>(date.weekday())] *
                                  std::exp(p.daily_noise_sigma * rng.normal());
            ds.views.push_back({d.rec.content_id, date, rng.poisson(demand)});
        }
    }

    // related_view snapshot at release over a 10-day lookback, for schema
    // completeness; pipelines recompute it at their own prediction times.
    std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
        if (a.release_day != b.release_day) return a.release_day < b.release_day;
        return a.rec.content_id < b.rec.content_id;
    });
    ds.contents.reserve(drafts.size());
    for (auto& d : drafts) ds.contents.push_back(std::move(d.rec));

    DatasetIndex index(ds.contents, ds.views);
    for (auto& rec : ds.contents) {
        if (!rec.series_id) continue;
        if (index.classify(rec, rec.release_date) == ContentType::TypeA)
            rec.related_view = index.related_views(rec, rec.release_date, 10);
    }
    return ds;
}

double type_a_share(const Dataset& ds) {
    if (ds.contents.empty()) return 0.0;
    DatasetIndex index(ds.contents, ds.views);
    std::size_t a = 0;
    for (const auto& c : ds.contents)
        if (index.classify(c, c.release_date) == ContentType::TypeA) ++a;
    return static_cast<double>(a) / static_cast<double>(ds.contents.size());
}

} // namespace hotcold
