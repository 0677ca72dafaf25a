#pragma once

/// JSON representations of tables and partitions.
///
/// Table schema: {"order": n, "entries": [[...], ...], "names": [...]}
/// with "names" present only when the table has names. Partitions are
/// arrays of sorted classes ordered by least element.

#include "json.hpp"
#include "magma/cayley_table.hpp"
#include "magma/partition.hpp"

namespace magma {

nlohmann::json table_to_json(const CayleyTable& t);
CayleyTable table_from_json(const nlohmann::json& j,
                            int order_cap = kDefaultOrderCap);

nlohmann::json partition_to_json(const Partition& p);

}  // namespace magma
