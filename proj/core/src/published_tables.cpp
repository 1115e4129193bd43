#include "tfbs/published_tables.hpp"

#include <array>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {
namespace {

constexpr std::string_view kGolbabai = "Golba";
constexpr std::string_view kDe = "De";
constexpr std::string_view kRoul = "Roul";

std::vector<PublishedTable> build_tables() {
    std::vector<PublishedTable> tables;

    {
        PublishedTable t;
        t.id = 2;
        t.caption = "L2 error, p = 0.01, J = 200";
        t.tension = 0.01;
        t.metric = ErrorMetric::l2;
        t.has_rates = true;
        t.rate_tolerance = 0.03;
        const std::array<std::size_t, 7> steps{20, 40, 80, 160, 320, 640, 1280};
        struct Series {
            double mu;
            std::array<double, 7> error;
            std::array<double, 7> rate;
        };
        const std::array<Series, 4> series{{
            {0.9,
             {2.1966e-03, 1.0204e-03, 4.7504e-04, 2.2138e-04, 1.0322e-04, 4.8138e-05, 2.2450e-05},
             {0, 1.1061, 1.1030, 1.1015, 1.1008, 1.1005, 1.1005}},
            {0.7,
             {8.8682e-04, 3.5957e-04, 1.4594e-04, 5.9252e-05, 2.4059e-05, 9.7665e-06, 3.9620e-06},
             {0, 1.3024, 1.3009, 1.3004, 1.3003, 1.3007, 1.3016}},
            {0.5,
             {3.1351e-04, 1.1134e-04, 3.9499e-05, 1.3997e-05, 4.9530e-06, 1.7482e-06, 6.1329e-07},
             {0, 1.4935, 1.4951, 1.4967, 1.4987, 1.5024, 1.5112}},
            {0.3,
             {9.2986e-05, 2.9166e-05, 9.1103e-06, 2.8330e-06, 8.7453e-07, 2.6513e-07, 7.6072e-08},
             {0, 1.6727, 1.6787, 1.6852, 1.6958, 1.7218, 1.8013}},
        }};
        for (const auto& s : series) {
            for (std::size_t k = 0; k < steps.size(); ++k) {
                PublishedRow row{s.mu, 200, steps[k], s.error[k], std::nullopt, {}};
                if (k > 0) row.rate = s.rate[k];
                t.rows.push_back(row);
            }
        }
        tables.push_back(std::move(t));
    }

    {
        PublishedTable t;
        t.id = 3;
        t.caption = "L2 error, p = 1, dtau = dy^2";
        t.tension = 1.0;
        t.metric = ErrorMetric::l2;
        t.has_rates = true;
        t.rate_tolerance = 0.05;
        const std::array<std::size_t, 5> intervals{8, 16, 32, 64, 128};
        struct Series {
            double mu;
            std::array<double, 5> error;
            std::array<double, 5> rate;
        };
        const std::array<Series, 3> series{{
            {0.75, {3.6649e-04, 7.3066e-05, 1.5023e-05, 3.1943e-06, 7.0180e-07},
             {0, 2.3265, 2.2820, 2.2336, 2.1864}},
            {0.5, {1.8191e-04, 3.9173e-05, 9.0355e-06, 2.1672e-06, 5.3059e-07},
             {0, 2.2153, 2.1162, 2.0598, 2.0302}},
            {0.25, {1.5034e-04, 3.6042e-05, 8.8757e-06, 2.2074e-06, 5.5085e-07},
             {0, 2.0605, 2.0217, 2.0075, 2.0026}},
        }};
        for (const auto& s : series) {
            for (std::size_t k = 0; k < intervals.size(); ++k) {
                const std::size_t j = intervals[k];
                PublishedRow row{s.mu, j, j * j, s.error[k], std::nullopt, {}};
                if (k > 0) row.rate = s.rate[k];
                t.rows.push_back(row);
            }
        }
        tables.push_back(std::move(t));
    }

    {
        PublishedTable t;
        t.id = 4;
        t.caption = "L-infinity comparison, p = 0.1, mu = 0.7, J = 150";
        t.tension = 0.1;
        t.metric = ErrorMetric::linf;
        t.has_rates = true;
        t.rate_tolerance = 0.03;
        struct Line {
            std::size_t steps;
            double error, rate, golb_error, golb_rate, de_error, de_rate;
        };
        const std::array<Line, 6> lines{{
            {10, 3.1579e-03, 0, 5.8210e-03, 0, 3.5000e-03, 0},
            {20, 1.2766e-03, 1.3067, 2.3040e-03, 1.3372, 1.4400e-03, 1.3300},
            {40, 5.1746e-04, 1.3028, 9.0810e-04, 1.3421, 5.9000e-04, 1.3150},
            {80, 2.0999e-04, 1.3011, 3.5720e-04, 1.3461, 2.4000e-04, 1.3400},
            {160, 8.5257e-05, 1.3004, 1.4110e-04, 1.3400, 9.5000e-05, 1.3600},
            {320, 3.4624e-05, 1.3000, 5.3870e-05, 1.3892, 3.8000e-05, 1.3800},
        }};
        bool first = true;
        for (const auto& l : lines) {
            PublishedRow row{0.7, 150, l.steps, l.error, std::nullopt, {}};
            std::optional<double> golb_rate, de_rate;
            if (!first) {
                row.rate = l.rate;
                golb_rate = l.golb_rate;
                de_rate = l.de_rate;
            }
            row.comparisons = {{kGolbabai, l.golb_error, golb_rate}, {kDe, l.de_error, de_rate}};
            t.rows.push_back(row);
            first = false;
        }
        tables.push_back(std::move(t));
    }

    {
        PublishedTable t;
        t.id = 5;
        t.caption = "L-infinity comparison, p = 0.01, J = 100";
        t.tension = 0.01;
        t.metric = ErrorMetric::linf;
        t.has_rates = true;
        t.rate_tolerance = 0.03;
        const std::array<std::size_t, 5> steps{256, 512, 1024, 2048, 4096};
        struct Series {
            double mu;
            std::array<double, 5> error, rate, roul_error, roul_rate;
        };
        const std::array<Series, 2> series{{
            {0.9,
             {1.9023e-04, 8.8714e-05, 4.1380e-05, 1.9303e-05, 9.0050e-06},
             {0, 1.1005, 1.1002, 1.1001, 1.1000},
             {2.3339e-04, 1.0896e-04, 5.0853e-05, 2.3729e-05, 1.1064e-05},
             {0, 1.0989, 1.0994, 1.0997, 1.1008}},
            {0.5,
             {9.9829e-06, 3.5353e-06, 1.2518e-06, 4.4338e-07, 1.5731e-07},
             {0, 1.4976, 1.4978, 1.4974, 1.4949},
             {1.3091e-05, 4.6540e-06, 1.6518e-06, 5.8557e-07, 2.0715e-07},
             {0, 1.4920, 1.4944, 1.4961, 1.4991}},
        }};
        for (const auto& s : series) {
            for (std::size_t k = 0; k < steps.size(); ++k) {
                PublishedRow row{s.mu, 100, steps[k], s.error[k], std::nullopt, {}};
                std::optional<double> roul_rate;
                if (k > 0) {
                    row.rate = s.rate[k];
                    roul_rate = s.roul_rate[k];
                }
                row.comparisons = {{kRoul, s.roul_error[k], roul_rate}};
                t.rows.push_back(row);
            }
        }
        tables.push_back(std::move(t));
    }

    {
        PublishedTable t;
        t.id = 6;
        t.caption = "L-infinity comparison, p = 0.1";
        t.tension = 0.1;
        t.metric = ErrorMetric::linf;
        t.has_rates = false;
        struct Line {
            std::size_t intervals, steps;
            double error, golb_error;
        };
        const std::array<Line, 6> mu02{{
            {4, 4, 8.0178e-04, 3.1280e-02},
            {8, 64, 1.0281e-05, 6.7910e-04},
            {16, 1024, 6.4780e-07, 2.5030e-05},
            {8, 8, 1.9037e-04, 1.3810e-02},
            {16, 128, 2.9444e-06, 5.2460e-04},
            {32, 2048, 1.6358e-07, 2.3070e-05},
        }};
        const std::array<Line, 6> mu07{{
            {4, 4, 1.0060e-02, 2.0560e-02},
            {8, 64, 2.7454e-04, 4.1590e-04},
            {16, 1024, 7.9848e-06, 1.6720e-05},
            {8, 8, 4.1197e-03, 1.0160e-02},
            {16, 128, 1.1409e-04, 3.2180e-04},
            {32, 2048, 3.1896e-06, 1.2730e-05},
        }};
        for (const auto& [mu, lines] : {std::pair{0.2, mu02}, std::pair{0.7, mu07}}) {
            for (const auto& l : lines) {
                t.rows.push_back({mu, l.intervals, l.steps, l.error, std::nullopt,
                                  {{kGolbabai, l.golb_error, std::nullopt}}});
            }
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

const std::vector<PublishedTable>& all_tables() {
    static const std::vector<PublishedTable> tables = build_tables();
    return tables;
}

constexpr std::array<int, 5> kIds{2, 3, 4, 5, 6};

}  // namespace

std::span<const int> published_table_ids() { return kIds; }

const PublishedTable& published_table(int id) {
    for (const auto& t : all_tables()) {
        if (t.id == id) return t;
    }
    throw ValidationError("unknown table id " + std::to_string(id) + " (expected 2..6)");
}

}  // namespace tfbs
