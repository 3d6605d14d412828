#pragma once

#include <string>

#include <json.hpp>

#include "auctionlab/certificate.hpp"
#include "auctionlab/flow.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/myerson.hpp"
#include "auctionlab/reduction.hpp"

namespace auctionlab {

using json = nlohmann::ordered_json;

// integers stay JSON numbers, everything else becomes a lowest-terms "p/q"
// string; the reverse accepts either form
json rational_json(const Rational& r);
Rational rational_from_json(const json& j);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json trace_to_json(const ReductionTrace& tr);

json single_dim_to_json(const SingleDimDistribution& d);
SingleDimDistribution single_dim_from_json(const json& j);

json flow_to_json(const Flow& fl);
Flow flow_from_json(const Instance& inst, const json& j);

json report_to_json(const CertificateReport& report);

std::string virtuals_csv(const Instance& inst, const Flow& fl);
std::string iron_csv(const SingleDimDistribution& d, const IronedTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace auctionlab
