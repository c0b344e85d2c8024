#include "coverkit/io.hpp"

#include <fstream>
#include <sstream>

#include "coverkit/error.hpp"

namespace coverkit::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& locus, const std::string& what) {
  throw Error(ErrorCode::parse_error, locus + ": " + what);
}

BigInt big_integer(const json& v, const std::string& locus) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<unsigned long>());
    return BigInt(v.get<long>());
  }
  if (v.is_string()) {
    BigInt out;
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || out.set_str(s, 10) != 0) fail(locus, "not a decimal integer: '" + s + "'");
    return out;
  }
  fail(locus, "expected an integer");
}

std::int64_t small_integer(const json& v, const std::string& locus) {
  BigInt b = big_integer(v, locus);
  if (!b.fits_slong_p()) fail(locus, "integer does not fit in 64 bits");
  return b.get_si();
}

const json& member(const json& obj, const char* key, const std::string& locus) {
  if (!obj.is_object()) fail(locus, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(locus, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_member(const json& obj, const char* key, const std::string& locus) {
  const json& v = member(obj, key, locus);
  if (!v.is_array()) fail(locus + "." + key, "expected an array");
  return v;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::int64_t> int_vector(const json& arr, std::size_t n, const std::string& locus) {
  if (!arr.is_array()) fail(locus, "expected an array");
  if (arr.size() != n)
    fail(locus, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(arr.size()));
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(small_integer(arr[i], locus + "[" + std::to_string(i) + "]"));
  return out;
}

json coords_json(const NFElement& x) {
  json arr = json::array();
  for (const auto& c : x.coords()) arr.push_back(c.num().get_str());
  return arr;
}

}  // namespace

CoverSystem parse_cover(const json& doc) {
  const json& classes = array_member(doc, "classes", "$");
  std::vector<ResidueClass> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string locus = "classes[" + std::to_string(i) + "]";
    const std::int64_t a = small_integer(member(classes[i], "a", locus), locus + ".a");
    const std::int64_t n = small_integer(member(classes[i], "n", locus), locus + ".n");
    if (n <= 0)
      throw Error(ErrorCode::validation_error, locus + ".n: modulus must be positive, got " + std::to_string(n));
    out.emplace_back(a, n);
  }
  std::optional<std::vector<std::int64_t>> weights;
  if (doc.contains("weights")) {
    const json& w = array_member(doc, "weights", "$");
    if (w.size() != out.size())
      throw Error(ErrorCode::validation_error, "weights: expected " + std::to_string(out.size()) +
                                                   " entries, got " + std::to_string(w.size()));
    weights = int_vector(w, out.size(), "weights");
  }
  return CoverSystem(std::move(out), std::move(weights));
}

CoverSystem parse_cover_text(std::string_view text) { return parse_cover(parse_text(text)); }

CoverSystem parse_cover_file(const std::filesystem::path& path) {
  return parse_cover_text(read_file(path));
}

NFInput parse_nf(const json& doc) {
  const json& poly = array_member(doc, "min_poly", "$");
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < poly.size(); ++i)
    coeffs.push_back(big_integer(poly[i], "min_poly[" + std::to_string(i) + "]"));
  if (coeffs.size() < 2) throw Error(ErrorCode::validation_error, "min_poly: degree must be at least 1");
  if (coeffs.back() != 1)
    throw Error(ErrorCode::validation_error, "min_poly: must be monic (last listed coefficient 1)");
  NumberField field(std::move(coeffs));
  const std::size_t n = field.degree();

  const json& classes = array_member(doc, "classes", "$");
  std::vector<NFResidueClass> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string locus = "classes[" + std::to_string(i) + "]";
    auto alpha = int_vector(member(classes[i], "alpha", locus), n, locus + ".alpha");
    auto beta = int_vector(member(classes[i], "beta", locus), n, locus + ".beta");
    if (std::all_of(beta.begin(), beta.end(), [](std::int64_t b) { return b == 0; }))
      throw Error(ErrorCode::validation_error, locus + ".beta: must be nonzero");
    out.emplace_back(NFElement::from_integers(alpha), NFElement::from_integers(beta));
  }

  std::optional<std::vector<NFElement>> omegas;
  if (doc.contains("omegas")) {
    const json& w = array_member(doc, "omegas", "$");
    if (w.size() != out.size())
      throw Error(ErrorCode::validation_error, "omegas: expected " + std::to_string(out.size()) +
                                                   " entries, got " + std::to_string(w.size()));
    omegas.emplace();
    for (std::size_t i = 0; i < w.size(); ++i)
      omegas->push_back(NFElement::from_integers(int_vector(w[i], n, "omegas[" + std::to_string(i) + "]")));
  }

  std::optional<NFElement> mu;
  if (doc.contains("mu_num")) {
    const auto num = int_vector(doc["mu_num"], n, "mu_num");
    BigInt den = 1;
    if (doc.contains("mu_den")) den = big_integer(doc["mu_den"], "mu_den");
    if (den <= 0) throw Error(ErrorCode::validation_error, "mu_den: must be positive");
    std::vector<Rational> coords;
    for (std::int64_t c : num) coords.emplace_back(BigInt(static_cast<long>(c)), den);
    mu = NFElement(std::move(coords));
  } else if (doc.contains("mu_den")) {
    throw Error(ErrorCode::validation_error, "mu_den given without mu_num");
  }
  return {NFCoverSystem(std::move(field), std::move(out), std::move(omegas)), std::move(mu)};
}

NFInput parse_nf_text(std::string_view text) { return parse_nf(parse_text(text)); }

NFInput parse_nf_file(const std::filesystem::path& path) { return parse_nf_text(read_file(path)); }

json cover_to_json(const CoverSystem& sys) {
  json classes = json::array();
  for (const auto& c : sys.classes()) classes.push_back({{"a", c.residue()}, {"n", c.modulus()}});
  json doc = {{"classes", std::move(classes)}};
  if (sys.has_explicit_weights()) doc["weights"] = sys.weights();
  return doc;
}

json nf_to_json(const NFInput& input) {
  const auto& sys = input.system;
  json poly = json::array();
  for (const auto& c : sys.field().min_poly()) poly.push_back(c.get_str());
  json classes = json::array();
  for (const auto& c : sys.classes())
    classes.push_back({{"alpha", coords_json(c.alpha())}, {"beta", coords_json(c.beta())}});
  json doc = {{"min_poly", std::move(poly)}, {"classes", std::move(classes)}};
  if (sys.has_explicit_omegas()) {
    json w = json::array();
    for (std::size_t s = 0; s < sys.size(); ++s) w.push_back(coords_json(sys.omega(s)));
    doc["omegas"] = std::move(w);
  }
  if (input.mu) {
    BigInt den = 1;
    for (const auto& c : input.mu->coords()) den = lcm(den, c.den());
    json num = json::array();
    for (const auto& c : input.mu->coords()) num.push_back(BigInt(c.num() * (den / c.den())).get_str());
    doc["mu_num"] = std::move(num);
    doc["mu_den"] = den.get_str();
  }
  return doc;
}

}  // namespace coverkit::io
