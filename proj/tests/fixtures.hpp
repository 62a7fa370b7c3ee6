#pragma once

#include <string>
#include <vector>

#include "frecency/link_predictor.hpp"
#include "frecency/recommender.hpp"
#include "frecency/url_classifier.hpp"

#ifndef FRECENCY_DATA_DIR
#define FRECENCY_DATA_DIR "data"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(FRECENCY_DATA_DIR) + "/" + name;
}

// Sample browser history rows with their recorded frecency.
inline const std::string kTable1Csv =
    "url,first_visit,last_visit,visit_count,frecency\n"
    "https://web.facebook.com/,1521241972,1522351859,177,56640\n"
    "http://localhost/phpmyadmin/,1518413861,1522075694,24,39312\n"
    "https://mail.google.com/mail/u/,1516596003,1522352010,36,33264\n"
    "https://github.com/,1517215489,1522352266,37,27528\n"
    "https://www.youtube.com/,1517229227,1521978502,24,14792\n";

// Address-bar predictions for the query "loc", in published order.
inline std::vector<frecency::ScoredLink> localhost_links() {
    return {
        {"http://localhost/phpmyadmin/", 16, 2906.7627},
        {"http://localhost:8888/tree", 15, 2717.497},
        {"http://localhost:8000/home", 13, 2274.1109},
    };
}

// Predicted frecency and category for eight history rows.
inline std::vector<frecency::CategorizedLink> categorized_history() {
    return {
        {"https://web.facebook.com/", 543, 102108.26, "Computers"},
        {"https://drive.google.com/drive/my-drive", 28, 4873.655, "Computers"},
        {"http://codeforces.com/contests", 21, 3650.896, "Arts"},
        {"https://www.floydhub.com/jobs", 4, 665.371, "Business"},
        {"http://www.cricbuzz.com/live-cricket-scores", 4, 579.825, "Games"},
        {"http://localhost/map/googlemap.php", 9, 528.395, "Computers"},
        {"https://www.kaggle.com/competitions", 2, 309.769, "Arts"},
        {"https://freebitco.in/", 1, 111.909, "Business"},
    };
}

inline const std::vector<std::string> kComputersCatalog = {
    "https://twitter.com",         "https://bitbucket.org",   "https://reddit.com",
    "https://instagram.com",       "https://datascience.com", "https://khanacademy.org",
    "https://www.computer.org",    "https://www.apple.com",   "https://www.ieee.org",
};

inline frecency::Catalog computers_catalog() {
    frecency::Catalog c;
    for (const auto& url : kComputersCatalog) c.add("Computers", url);
    return c;
}

// Three-document corpus with a hand-computed Bayes solution.
inline std::vector<frecency::LabeledUrl> toy_corpus() {
    return {
        {"game fun", "Games"},
        {"game play", "Games"},
        {"drive code", "Computers"},
    };
}

struct GridRow {
    double mean;
    double std;
    int ngram_hi;
    bool use_idf;
    double alpha;
};

// Published cross-validation means for the 8-point grid, rows as printed.
inline const std::vector<GridRow> kGridMeans = {
    {0.69245, 0.00036, 1, true, 0.01},  {0.69971, 0.00035, 2, true, 0.01},
    {0.69460, 0.00053, 1, false, 0.01}, {0.69702, 0.00047, 2, false, 0.01},
    {0.69153, 0.00028, 1, true, 0.001}, {0.69804, 0.00034, 2, true, 0.001},
    {0.69348, 0.00062, 1, true, 0.001}, {0.69614, 0.00047, 2, true, 0.001},
};

}  // namespace fixtures
