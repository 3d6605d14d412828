#include "auctionlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "auctionlab/errors.hpp"

namespace auctionlab {

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(render_rational(r));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("value must be an integer or a \"p/q\" string");
}

namespace {

json value_to_json(const Rational& r) { return rational_json(r); }

Rational value_from_json(const json& j) { return rational_from_json(j); }

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json rationals_to_json(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const Rational& x : xs) arr.push_back(value_to_json(x));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr, const char* what) {
  if (!arr.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const json& x : arr) {
    if (!x.is_number_integer() && !x.is_string())
      throw UsageError(std::string(what) + " entries must be integers or \"p/q\" strings");
    out.push_back(value_from_json(x));
  }
  return out;
}

json family_z_json(const FamilyTrace& t) { return rationals_to_json(t.z); }

json family_scaled_json(const FamilyTrace& t) {
  json arr = json::array();
  for (const Integer& s : t.scaled) arr.push_back(integer_to_json(s));
  return arr;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json bidders = json::array();
  for (int i = 1; i <= 2; ++i) {
    const BidderSpec& b = inst.bidder(i);
    json values = json::array();
    for (const Rational& v : b.values) values.push_back(value_to_json(v));
    json probs;
    probs["day1"] = rationals_to_json(b.probs[0]);
    probs["day2"] = rationals_to_json(b.probs[1]);
    bidders.push_back(json{{"n", b.n}, {"values", values}, {"probs", probs}});
  }
  return json{{"bidders", bidders}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bidders") || !j["bidders"].is_array() ||
      j["bidders"].size() != 2)
    throw UsageError("instance JSON must have a \"bidders\" array of length 2");
  std::array<BidderSpec, 2> specs;
  for (int i = 0; i < 2; ++i) {
    const json& bj = j["bidders"][i];
    if (!bj.is_object() || !bj.contains("n") || !bj.contains("values") || !bj.contains("probs"))
      throw UsageError("bidder entry needs n, values, probs");
    BidderSpec b;
    b.n = bj["n"].get<int>();
    for (const json& v : bj["values"]) b.values.push_back(value_from_json(v));
    const json& pj = bj["probs"];
    if (!pj.is_object() || !pj.contains("day1") || !pj.contains("day2"))
      throw UsageError("probs needs day1 and day2 arrays");
    b.probs[0] = rationals_from_json(pj["day1"], "probs.day1");
    b.probs[1] = rationals_from_json(pj["day2"], "probs.day2");
    specs[i] = std::move(b);
  }
  return make_instance(std::move(specs[0]), std::move(specs[1]));
}

json trace_to_json(const ReductionTrace& tr) {
  return json{{"n", tr.n},
              {"b", integer_to_json(tr.b)},
              {"a", rational_json(tr.a)},
              {"z", json{{"c", family_z_json(tr.c)},
                         {"d", family_z_json(tr.d)},
                         {"e", family_z_json(tr.e)}}},
              {"scaled", json{{"c", family_scaled_json(tr.c)},
                              {"d", family_scaled_json(tr.d)},
                              {"e", family_scaled_json(tr.e)}}}};
}

json single_dim_to_json(const SingleDimDistribution& d) {
  json values = json::array();
  for (const Rational& v : d.values) values.push_back(value_to_json(v));
  return json{{"values", values}, {"probs", rationals_to_json(d.probs)}};
}

SingleDimDistribution single_dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("probs"))
    throw UsageError("distribution JSON needs values and probs arrays");
  std::vector<Rational> values;
  for (const json& v : j["values"]) values.push_back(value_from_json(v));
  return make_single_dim(std::move(values), rationals_from_json(j["probs"], "probs"));
}

json flow_to_json(const Flow& fl) {
  json bidders = json::array();
  for (const Flow::PerBidder& pb : fl.per) {
    bidders.push_back(json{{"alpha", rationals_to_json(pb.alpha)},
                           {"lambda1", rationals_to_json(pb.lambda[0])},
                           {"lambda2", rationals_to_json(pb.lambda[1])}});
  }
  return json{{"bidders", bidders}};
}

Flow flow_from_json(const Instance& inst, const json& j) {
  if (!j.is_object() || !j.contains("bidders") || !j["bidders"].is_array() ||
      j["bidders"].size() != 2)
    throw UsageError("flow JSON must have a \"bidders\" array of length 2");
  Flow fl;
  for (int i = 0; i < 2; ++i) {
    const json& bj = j["bidders"][i];
    if (!bj.is_object() || !bj.contains("alpha") || !bj.contains("lambda1") ||
        !bj.contains("lambda2"))
      throw UsageError("flow bidder entry needs alpha, lambda1, lambda2");
    fl.per[i].alpha = rationals_from_json(bj["alpha"], "alpha");
    fl.per[i].lambda[0] = rationals_from_json(bj["lambda1"], "lambda1");
    fl.per[i].lambda[1] = rationals_from_json(bj["lambda2"], "lambda2");
    const std::size_t n = static_cast<std::size_t>(inst.bidder(i + 1).n);
    if (fl.per[i].alpha.size() != n || fl.per[i].lambda[0].size() != n ||
        fl.per[i].lambda[1].size() != n)
      throw ShapeError("flow tables do not match the instance's type counts");
  }
  return fl;
}

json report_to_json(const CertificateReport& report) {
  json checks = json::array();
  for (const Check& c : report.checks) {
    json entry{{"condition", c.condition},
               {"location", c.location},
               {"lhs", rational_json(c.lhs)},
               {"rhs", rational_json(c.rhs)},
               {"pass", c.pass}};
    if (!c.where.empty()) entry["where"] = c.where;
    checks.push_back(std::move(entry));
  }
  return json{{"passed", report.passed}, {"checks", checks}};
}

std::string virtuals_csv(const Instance& inst, const Flow& fl) {
  std::ostringstream out;
  out << "bidder,k,interest,phi\n";
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= inst.bidder(i).n; ++k)
      for (int j = 1; j <= 2; ++j) {
        out << i << ',' << k << ',' << j << ',';
        if (auto phi = virtual_value(inst, fl, i, k, j)) out << render_rational(*phi);
        out << '\n';
      }
  return out.str();
}

std::string iron_csv(const SingleDimDistribution& d, const IronedTable& table) {
  std::ostringstream out;
  out << "k,value,phi,phi_bar,block\n";
  for (int k = 1; k <= d.n(); ++k) {
    out << k << ',' << render_rational(d.values[k - 1]) << ','
        << render_rational(table.phi[k - 1]) << ',' << render_rational(table.phi_bar[k - 1])
        << ',' << (table.block_id[k - 1] + 1) << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
  if (!out) throw UsageError("write failed: " + path);
}

}  // namespace auctionlab
