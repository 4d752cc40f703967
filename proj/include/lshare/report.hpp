#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lshare/loadshare.hpp"
#include "lshare/mcsim.hpp"
#include "lshare/order.hpp"
#include "lshare/verify.hpp"

namespace lshare {

enum class Format { Json, Csv };

using ordered_json = nlohmann::ordered_json;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits, "inf" / "-inf" / "nan" for non-finite values.
std::string format_number(double v);

// ',' separator, '.' decimal point, LF line endings, header always present.
std::string to_csv(const CsvTable& table);

// Keys in insertion order, two-space indent, floats at 17 significant digits,
// non-finite floats as strings. Ends with a newline.
std::string to_json(const ordered_json& value);

ordered_json to_json_value(const Witness& w);
ordered_json to_json_value(const ConditionVerdict& v);
ordered_json to_json_value(const OrderVerdict& v);
ordered_json to_json_value(const AllocationReport& r);
ordered_json to_json_value(const TheoremReport& r);
ordered_json to_json_value(const QuadratureConfig& q);

CsvTable curves_table(std::span<const double> grid, const std::vector<std::vector<double>>& curves,
                      const std::vector<std::string>& names);
CsvTable estimate_table(const SurvivalEstimate& e);

}  // namespace lshare
