#include "overalg/io.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "overalg/kernel.hpp"

namespace overalg {

std::string matrix_to_json(const CoefMatrix& f) {
  nlohmann::json j;
  j["alpha"] = f.alpha().value();
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= f.max_k(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int l = 0; l <= f.max_l(); ++l) {
      const Complex c = f.at(k, l);
      row.push_back({c.real(), c.imag()});
    }
    rows.push_back(std::move(row));
  }
  j["coeffs"] = std::move(rows);
  return j.dump();
}

CoefMatrix matrix_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("alpha") || !j.contains("coeffs") || !j["coeffs"].is_array() ||
      j["coeffs"].empty())
    throw std::invalid_argument("matrix_from_json: missing alpha or coeffs");
  const Alpha alpha(j["alpha"].get<double>());
  const auto& rows = j["coeffs"];
  const int max_k = static_cast<int>(rows.size()) - 1;
  const int max_l = static_cast<int>(rows[0].size()) - 1;
  CoefMatrix f(alpha, max_k, max_l);
  for (int k = 0; k <= max_k; ++k) {
    const auto& row = rows[k];
    if (static_cast<int>(row.size()) != max_l + 1)
      throw std::invalid_argument("matrix_from_json: ragged coefficient rows");
    for (int l = 0; l <= max_l; ++l)
      f.set(k, l, Complex(row[l][0].get<double>(), row[l][1].get<double>()));
  }
  return f;
}

void write_density_csv(std::ostream& os, Alpha alpha, double s_lo, double s_hi, int count) {
  os << "s,weight_left_form,weight_right_form,abs_diff\n";
  os << std::setprecision(17);
  for (int i = 0; i < count; ++i) {
    const double s = count == 1 ? s_lo : s_lo + (s_hi - s_lo) * i / (count - 1.0);
    const double wl = plancherel_weight(s, alpha);
    const double wr = plancherel_weight_gamma_form(s, alpha);
    os << s << ',' << wl << ',' << wr << ',' << std::abs(wl - wr) << '\n';
  }
}

}  // namespace overalg
