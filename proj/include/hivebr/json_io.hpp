#pragma once

#include <json.hpp>

#include "hivebr/branching.hpp"
#include "hivebr/gt_pattern.hpp"
#include "hivebr/hive.hpp"
#include "hivebr/partition.hpp"
#include "hivebr/tableau.hpp"

namespace hivebr {

using json = nlohmann::json;

// Partitions are arrays: [5,3,1]. Words are digit strings when every letter
// is <= 9, integer arrays otherwise. Tableaux carry inner shape and filled
// rows; the outer shape is derived. Hives list rows bottom up, GT patterns
// top down.

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const json& j);

json to_json(const GTPattern& p);
GTPattern gt_from_json(const json& j);

json to_json(const Hive& h);
Hive hive_from_json(const json& j);

json to_json(const Flag& f);
Flag flag_from_json(const json& j);

json to_json(const BijectionTrace& trace);
json to_json(const InstanceReport& report);

} // namespace hivebr
