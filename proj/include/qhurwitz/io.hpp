#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qhurwitz/family.hpp"
#include "qhurwitz/hurwitz.hpp"

namespace qhurwitz {

enum class Format { json, csv, latex };
Format format_from_name(const std::string& name);

/// {"kind":"macdonald","c":["1","1/2"],"params":{"q":"q","t":"t"}}
nlohmann::ordered_json family_to_json(const WeightFamily& family);

/// Entries ordered by μ then ν, both reverse-lexicographic.
std::string table_to_json(int n, int d, std::optional<int> e, const WeightFamily& family, const HurwitzTable& table);
/// Header "n,d,mu,nu,value" ("n,d,e,..." with e); partitions quoted.
std::string table_to_csv(int n, int d, std::optional<int> e, const HurwitzTable& table);
std::string table_to_latex(int n, int d, std::optional<int> e, const HurwitzTable& table);
std::string format_table(Format f, int n, int d, std::optional<int> e, const WeightFamily& family,
                         const HurwitzTable& table);

/// "\frac{1 - t}{1 - q}"-style rendering of a scalar, without math delimiters.
std::string scalar_to_latex(const Scalar& s);
std::string partition_to_latex(const Partition& p);

} // namespace qhurwitz
