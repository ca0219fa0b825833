#pragma once

#include "mckay/constel.hpp"
#include "mckay/intersect.hpp"
#include "mckay/taut.hpp"

#include <json.hpp>

#include <string>

namespace mckay {

using Json = nlohmann::ordered_json;

// One rendered artifact. `dot` is empty when the object has no graph form.
struct Report {
    std::string anchor;
    int n = 0;
    Json payload;
    std::string table;
    std::string dot;
};

// {anchor, n, payload}
Json envelope(const Report& r);

Json to_json(const Rat& r);
Json to_json(const Decomposition& d);
Json to_json(const DivisorClass& c);
Json to_json(const QMatrix& q);

Report chartable_report(int n);
Report quiver_report(int n);
Report hilb_atlas_report(int n);
Report fixed_points_report(int n);
Report strict_transforms_report(int n);
Report fold_report(int n);
Report chain_report(int n);
Report socle_table_report(int n, const Rat& alpha);
Report taut_table_report(int n, int k = 0);
Report fm_table_report(int n);
Report refdiv_report(int n, int k);

// Theta verdicts for every stratum witness under a user-supplied parameter.
Report stability_report(int n, const StabilityParam& theta, const Rat& alpha,
                        const std::vector<std::vector<std::string>>& extra_seeds);

} // namespace mckay
