// Machine-readable output: JSON documents (schema shipped under schema/),
// fixed-column CSV, and plain-text tables.  Data payloads are pure
// functions of their inputs; the only volatile field is
// metadata.runtime_ms, which strip_volatile removes for byte comparisons.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mholo/count.hpp"

namespace mholo {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json params_json(const Int& p, unsigned m, unsigned n, unsigned r);
Json count_row_json(const CountReport& report);
Json triplet_json(const RegularSubgroupReport& report);

// {params, regime, counts, formula, agreement, triplets[], metadata}
Json count_document(const CountReport& report,
                    const std::vector<RegularSubgroupReport>& triplets,
                    long long runtime_ms);
// {rows[], metadata}
Json sweep_document(const std::vector<CountReport>& rows,
                    long long runtime_ms);

std::string csv_header();
std::string csv_row(const CountReport& report);
std::string render_csv(const std::vector<CountReport>& rows);

std::string render_count_table(const CountReport& report,
                               const std::vector<RegularSubgroupReport>& ts);
std::string render_sweep_table(const std::vector<CountReport>& rows);

Json strip_volatile(Json document);

std::string dump_json(const Json& document);

}  // namespace mholo
