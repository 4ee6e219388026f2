#include "whf/signal_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace whf {

namespace {

using json = nlohmann::ordered_json;

std::int64_t require_positive_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw InvalidArgument(std::string("signal file: missing integer field '") + key + "'");
  const std::int64_t v = doc[key].get<std::int64_t>();
  if (v < 1)
    throw InvalidArgument(std::string("signal file: field '") + key + "' must be positive");
  return v;
}

}  // namespace

Signal load_signal(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("signal file: ") + e.what());
  }
  const std::int64_t n = require_positive_int(doc, "n");
  const std::int64_t a = require_positive_int(doc, "a");
  const std::int64_t q = require_positive_int(doc, "q");
  const std::int64_t L = require_positive_int(doc, "L");
  if (n != a * q) throw InvalidArgument("signal file: n != a*q");
  if (q % L != 0) throw InvalidArgument("signal file: L does not divide q");
  if (!doc.contains("data") || !doc["data"].is_array())
    throw InvalidArgument("signal file: missing 'data' array");
  const auto& data = doc["data"];
  if (std::int64_t(data.size()) != n)
    throw InvalidArgument("signal file: data length does not equal n");
  Eigen::VectorXcd values(n);
  for (std::int64_t t = 0; t < n; ++t) {
    const auto& pair = data[t];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw InvalidArgument("signal file: data entries must be [re, im] number pairs");
    values[t] = cplx(pair[0].get<double>(), pair[1].get<double>());
  }
  return Signal(GaborLattice(a, q, L), std::move(values));
}

Signal load_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open signal file: " + path);
  return load_signal(in);
}

void save_signal(std::ostream& out, const Signal& f) {
  json doc;
  doc["n"] = f.lattice.N();
  doc["a"] = f.lattice.a;
  doc["q"] = f.lattice.q;
  doc["L"] = f.lattice.L;
  json data = json::array();
  for (std::int64_t t = 0; t < f.lattice.N(); ++t)
    data.push_back({f.values[t].real(), f.values[t].imag()});
  doc["data"] = std::move(data);
  out << doc.dump(2) << '\n';
}

void save_signal_file(const std::string& path, const Signal& f) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open output file: " + path);
  save_signal(out, f);
}

}  // namespace whf
