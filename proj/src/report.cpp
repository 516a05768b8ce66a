#include "walkmat/report.hpp"

#include <iomanip>
#include <sstream>

namespace walkmat {

using nlohmann::json;

namespace {

json decimal_list(std::span<const BigInt> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json fordet_json(const FordetCheck& c) {
  return {{"pass", c.pass},
          {"gram_residual", c.gram_residual},
          {"logdet_residual", c.logdet_residual},
          {"log_abs_det", c.log_abs_det},
          {"det_sign", c.det_sign}};
}

json etxi_json(const EtxiCheck& c) {
  json j{{"pass", c.pass},
         {"vanishing", c.vanishing},
         {"closed_form_residual", c.closed_form_residual},
         {"product_sign", c.product_sign},
         {"log_residual", nullptr},
         {"case_exponent_log2", nullptr}};
  if (c.log_residual) j["log_residual"] = *c.log_residual;
  if (c.case_exponent) j["case_exponent_log2"] = *c.case_exponent;
  return j;
}

json relwa_json(const RelwaCheck& c) {
  json j{{"pass", c.pass},
         {"det_relation", c.det_relation},
         {"rank_relation", c.rank_relation},
         {"det_exact", c.det_exact.get_str()},
         {"det_numeric", c.det_numeric},
         {"rank_exact", c.rank_exact},
         {"numeric_nonvanishing", c.numeric_nonvanishing},
         {"log_residual", nullptr}};
  if (c.log_residual) j["log_residual"] = *c.log_residual;
  return j;
}

}  // namespace

json to_json(const VerifyReport& r, bool with_timing) {
  json j;
  j["n"] = r.n;
  j["det_hat"] = r.det_hat.get_str();
  j["det_hat_sign"] = r.det_hat_sign;
  j["predicted_det_magnitude"] =
      r.predicted_det_magnitude ? json(r.predicted_det_magnitude->get_str()) : json(nullptr);
  j["rank_W"] = r.rank_walk;
  j["rank_hat"] = r.rank_hat;
  j["predicted_rank_W"] = r.predicted_rank_walk;
  j["predicted_rank_hat"] = r.predicted_rank_hat;
  j["snf_diag"] = decimal_list(r.snf_diag);
  j["predicted_snf"] = r.predicted_snf ? decimal_list(*r.predicted_snf) : json(nullptr);
  j["rank2"] = r.rank2;
  j["rank2_bound"] = r.rank2_bound;
  j["main_eigenvalues_exact"] = r.main_exact;
  j["main_eigenvalues_numeric"] = r.main_numeric;
  j["eigen_residual"] = r.eigen_residual;
  j["eigvec_det"] = fordet_json(r.fordet);
  j["eigvec_sums"] = etxi_json(r.etxi);
  j["det_formula"] = r.relwa ? relwa_json(*r.relwa) : json(nullptr);
  j["checks"] = r.checks;
  j["pass"] = r.passed();
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json to_json(std::span<const VerifyReport> reports, bool with_timing) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(to_json(r, with_timing));
  return a;
}

json to_json(const IdentityCheck& c) {
  return {{"name", c.name}, {"param", c.param}, {"pass", c.pass}, {"residual", c.residual}, {"sign", c.sign}};
}

json to_json(const Rank2CorpusResult& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"graph6", x.graph6}, {"n", x.n}, {"rank2", x.rank2}, {"bound", x.bound}});
  return {{"random_checked", r.random_checked},
          {"dynkin_checked", r.dynkin_checked},
          {"violations", v},
          {"pass", r.violations.empty()}};
}

std::string compress_diag(std::span<const BigInt> diag) {
  std::ostringstream os;
  for (std::size_t i = 0; i < diag.size();) {
    std::size_t j = i;
    while (j < diag.size() && diag[j] == diag[i]) ++j;
    if (i) os << ' ';
    os << diag[i].get_str() << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string format_table(std::span<const VerifyReport> reports, bool with_timing) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "det_hat", "rank_W", "rank_hat", "rank2", "main", "snf(W)", "pass"});
  if (with_timing) rows.front().push_back("ms");
  for (const auto& r : reports) {
    std::vector<std::string> row{std::to_string(r.n),
                                 r.det_hat.get_str(),
                                 std::to_string(r.rank_walk),
                                 std::to_string(r.rank_hat),
                                 std::to_string(r.rank2),
                                 std::to_string(r.main_exact),
                                 compress_diag(r.snf_diag),
                                 r.passed() ? "yes" : "NO"};
    if (with_timing) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << r.elapsed_ms;
      row.push_back(ms.str());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      // numbers right-aligned, the SNF column left-aligned
      if (c == 6)
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      else
        os << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace walkmat
