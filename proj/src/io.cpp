#include "crown/io.hpp"

#include <sstream>

namespace crown {

using nlohmann::json;

json complex_to_json(Cx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json point_to_json(const CPoint& z) {
  json arr = json::array();
  for (int j = 0; j <= z.n(); ++j) arr.push_back({z[j].real(), z[j].imag()});
  return arr;
}

CPoint point_from_json(const json& j) {
  Eigen::VectorXcd c(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    c[static_cast<Eigen::Index>(i)] = Cx(j[i][0].get<double>(), j[i][1].get<double>());
  return CPoint(c);
}

json element_to_json(const LorentzElement& g) {
  json rows = json::array();
  for (int r = 0; r < g.L.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < g.L.cols(); ++c) row.push_back(g.L(r, c));
    rows.push_back(row);
  }
  return rows;
}

LorentzElement element_from_json(const json& j, int n) {
  Eigen::MatrixXd L(n + 1, n + 1);
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c) L(r, c) = j[r][c].get<double>();
  return from_real_matrix(L);
}

CPoint parse_point(const std::string& text, int n) {
  if (text == "e0") return basis_point(n, 0);
  if (text == "en") return basis_point(n, n);
  if (text == "xi0") return xi0_point(n);
  std::vector<Cx> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        vals.push_back(Cx(std::stod(item), 0.0));
      } else {
        vals.push_back(Cx(std::stod(item.substr(0, colon)),
                          std::stod(item.substr(colon + 1))));
      }
    } catch (const std::invalid_argument&) {
      throw domain_error("parse_point: bad component '" + item + "'");
    }
  }
  if (static_cast<int>(vals.size()) != n + 1)
    throw domain_error("parse_point: expected " + std::to_string(n + 1) +
                       " components");
  Eigen::VectorXcd c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = vals[j];
  return CPoint(c);
}

LorentzElement parse_word(const std::string& text, int n) {
  LorentzElement g = identity_element(n);
  std::stringstream ss(text);
  std::string item;
  std::string kind;
  std::vector<double> args;
  auto flush = [&]() {
    if (kind.empty()) return;
    if (kind == "boost") {
      if (args.size() != 1) throw domain_error("parse_word: boost:t");
      g = g * make_boost(n, args[0]);
    } else if (kind == "rot") {
      if (args.size() != 3) throw domain_error("parse_word: rot:i,j,angle");
      int i = static_cast<int>(args[0]), j = static_cast<int>(args[1]);
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw domain_error("parse_word: rotation plane indices in 1..n");
      Eigen::MatrixXd k = Eigen::MatrixXd::Identity(n, n);
      double ct = std::cos(args[2]), st = std::sin(args[2]);
      k(i - 1, i - 1) = ct;
      k(j - 1, j - 1) = ct;
      k(i - 1, j - 1) = -st;
      k(j - 1, i - 1) = st;
      g = g * make_rotation(k);
    } else if (kind == "horo") {
      if (static_cast<int>(args.size()) != n - 1)
        throw domain_error("parse_word: horo takes n-1 components");
      Eigen::VectorXd v(n - 1);
      for (int j = 0; j < n - 1; ++j) v[j] = args[j];
      g = g * make_horospherical(v);
    } else {
      throw domain_error("parse_word: unknown generator '" + kind + "'");
    }
    kind.clear();
    args.clear();
  };
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon != std::string::npos) {
      flush();
      kind = item.substr(0, colon);
      std::string first = item.substr(colon + 1);
      if (!first.empty()) args.push_back(std::stod(first));
    } else if (!item.empty()) {
      if (kind.empty()) throw domain_error("parse_word: dangling number '" + item + "'");
      args.push_back(std::stod(item));
    }
  }
  flush();
  return g;
}

}  // namespace crown
