#include "coverkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "coverkit/constructor.hpp"
#include "coverkit/error.hpp"
#include "coverkit/io.hpp"
#include "coverkit/nf_cover.hpp"
#include "coverkit/spectrum.hpp"

namespace coverkit::cli {

using nlohmann::json;

namespace {

struct RunReport {
  std::string command;
  std::string verdict;
  json details = json::object();
};

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.to_string(); }
template <typename T>
  requires std::is_integral_v<T>
std::string str(T v) {
  return std::to_string(v);
}
std::string str(bool v) { return v ? "true" : "false"; }

json str_array(const std::vector<std::int64_t>& xs) {
  json arr = json::array();
  for (auto x : xs) arr.push_back(str(x));
  return arr;
}

// Cover file layout with every number as a decimal string.
json cover_details(const CoverSystem& sys) {
  json doc = io::cover_to_json(sys);
  for (auto& c : doc["classes"]) {
    c["a"] = str(c["a"].get<std::int64_t>());
    c["n"] = str(c["n"].get<std::int64_t>());
  }
  if (doc.contains("weights"))
    for (auto& w : doc["weights"]) w = str(w.get<std::int64_t>());
  return doc;
}

json counts_json(const SpectrumReport& s) {
  json rows = json::array();
  for (const auto& [r, c] : s.counts)
    rows.push_back({{"r", str(r)}, {"theta", str(s.value(r))}, {"count", str(c)}});
  return rows;
}

json nf_class_json(const NFClassKey& key, std::int64_t d) {
  json arr = json::array();
  for (auto c : key) arr.push_back(str(Rational(BigInt(static_cast<long>(c)), BigInt(static_cast<long>(d)))));
  return arr;
}

std::string element_str(const NFElement& x) { return x.to_string(); }

// Human-readable rendering: scalars as aligned "key  value" lines, arrays of
// objects as aligned tables.
void render_scalars(const json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& lines,
                    std::vector<std::pair<std::string, const json*>>& tables) {
  for (const auto& [key, v] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      render_scalars(v, name, lines, tables);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      tables.emplace_back(name, &v);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) {
        if (!joined.empty()) joined += ", ";
        joined += e.is_string() ? e.get<std::string>() : e.dump();
      }
      lines.emplace_back(name, "[" + joined + "]");
    } else {
      lines.emplace_back(name, v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) joined += (joined.empty() ? "" : ",") + cell(e);
    return "[" + joined + "]";
  }
  return v.dump();
}

void render_human(const RunReport& rep, std::ostream& out) {
  out << rep.command << ": " << rep.verdict << '\n';
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::pair<std::string, const json*>> tables;
  render_scalars(rep.details, "", lines, tables);
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  for (const auto& [k, v] : lines) out << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  for (const auto& [name, rows] : tables) {
    std::vector<std::string> cols;
    for (const auto& [key, v] : rows->front().items()) cols.push_back(key);
    std::vector<std::size_t> w(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) w[c] = cols[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : *rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        line.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
        w[c] = std::max(w[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    out << "\n  " << name << ":\n";
    auto emit = [&](const std::vector<std::string>& line) {
      out << "   ";
      for (std::size_t c = 0; c < line.size(); ++c)
        out << ' ' << std::string(w[c] - line[c].size(), ' ') << line[c];
      out << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
}

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0)
    throw Error(ErrorCode::validation_error, std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

struct Options {
  bool json_output = false;
  bool brute_force = false;
  std::string input;
  std::string output;
  std::size_t m = 1;
  std::string primes;
  std::string theta;
  bool check_unsplittable = false;
  std::size_t brute_cap = kDefaultBruteForceCap;
  std::int64_t coset_cap = kDefaultCosetCap;
};

SpectrumMethod method_of(const Options& o) {
  return o.brute_force ? SpectrumMethod::brute_force : SpectrumMethod::dp;
}

RunReport cmd_verify(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const std::size_t mult = covering_multiplicity(sys);
  RunReport rep{"verify", "", json::object()};
  rep.details = {{"k", str(sys.size())},
                 {"period", str(sys.period())},
                 {"multiplicity", str(mult)},
                 {"m_requested", str(o.m)},
                 {"is_m_cover", str(mult >= o.m)}};
  rep.verdict = verdict_name(mult >= o.m ? Verdict::pass : Verdict::fail);
  return rep;
}

RunReport cmd_spectrum(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const auto s = compute_spectrum(sys, method_of(o), o.brute_cap);
  RunReport rep{"spectrum", "", json::object()};
  const bool mass_ok = s.total() == pow2(sys.size());
  rep.details = {{"k", str(s.k)},
                 {"denominator", str(s.denominator)},
                 {"method", o.brute_force ? "brute-force" : "dp"},
                 {"support_size", str(s.support_size())},
                 {"total", str(s.total())},
                 {"counts", counts_json(s)}};
  rep.verdict = verdict_name(mass_ok ? Verdict::pass : Verdict::fail);
  return rep;
}

json theorem11_details(const Theorem11Report& t) {
  return {{"m", str(t.m)},
          {"bound", str(t.bound)},
          {"denominator", str(t.spectrum.denominator)},
          {"min_nonzero_count", t.min_nonzero ? str(*t.min_nonzero) : "none"},
          {"offending", str_array(t.offending)},
          {"counts", counts_json(t.spectrum)}};
}

RunReport cmd_theorem11(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const auto t = verify_theorem11(sys, method_of(o), o.brute_cap);
  return {"theorem11", std::string(verdict_name(t.verdict)), theorem11_details(t)};
}

RunReport cmd_corollary11(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const auto c = verify_corollary11(sys, method_of(o), o.brute_cap);
  return {"corollary11",
          std::string(verdict_name(c.verdict)),
          {{"m", str(c.m)}, {"k", str(c.k)}, {"support_size", str(c.support_size)}, {"bound", str(c.bound)}}};
}

RunReport cmd_corollary12(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const auto c = verify_corollary12(sys);
  json rows = json::array();
  for (const auto& row : c.rows) {
    json floors = json::array();
    for (const auto& f : row.floors) floors.push_back(str(f));
    rows.push_back({{"r", str(row.r)},
                    {"count", str(row.count)},
                    {"floors", std::move(floors)},
                    {"floor_diversity", str(row.floors.size())},
                    {"ok", str(row.ok)}});
  }
  json d = {{"m", str(c.m)}, {"last_modulus", str(c.last_modulus)}, {"rows", std::move(rows)}};
  if (c.verdict != Verdict::not_applicable) d["count_bound"] = str(c.count_bound);
  if (!c.reason.empty()) d["reason"] = c.reason;
  return {"corollary12", std::string(verdict_name(c.verdict)), std::move(d)};
}

RunReport cmd_remark13(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  const auto c = verify_remark13(sys);
  json rows = json::array();
  for (const auto& row : c.rows)
    rows.push_back({{"r", str(row.r)},
                    {"n", str(row.n)},
                    {"count", str(row.count)},
                    {"bound", str(row.bound)},
                    {"ok", str(row.ok)}});
  json d = {{"m", str(c.m)}, {"last_modulus", str(c.last_modulus)}, {"rows", std::move(rows)}};
  if (!c.reason.empty()) d["reason"] = c.reason;
  return {"remark13", std::string(verdict_name(c.verdict)), std::move(d)};
}

RunReport cmd_lemma21(const Options& o) {
  const auto sys = io::parse_cover_file(o.input);
  std::vector<Rational> thetas;
  if (!o.theta.empty()) {
    thetas.push_back(Rational::parse(o.theta));
  } else {
    const auto s = spectrum_dp(sys);
    for (auto r : s.support()) thetas.push_back(s.value(r));
  }
  json rows = json::array();
  for (const auto& theta : thetas) {
    const auto w = lemma21_witness(sys, theta);
    rows.push_back({{"theta", str(w.theta)}, {"t", str(w.t + 1)}, {"shifted", str(w.shifted)}});
  }
  return {"lemma21", "PASS", {{"k", str(sys.size())}, {"witnesses", std::move(rows)}}};
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "--primes: not an integer: '" + item + "'");
    }
  }
  return out;
}

void write_output(const std::string& path, const json& doc) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::validation_error, path + ": cannot open for writing");
  f << doc.dump(2) << '\n';
}

RunReport cmd_example11(const Options& o) {
  const Example11Spec spec(o.m, parse_prime_list(o.primes));
  const auto out = build_example11(spec);
  write_output(o.output, io::cover_to_json(out.system));
  RunReport rep{"construct-example11", "PASS", json::object()};
  rep.details = {{"m", str(spec.m())},
                 {"primes", str_array(spec.primes())},
                 {"N", str(spec.modulus())},
                 {"k", str(out.system.size())},
                 {"multiplicity", str(out.multiplicity)},
                 {"star_covered", str_array(out.star_covered)},
                 {"a_list", str_array(out.a_list)},
                 {"system", cover_details(out.system)}};
  if (o.check_unsplittable) {
    const auto cert = check_unsplittable(out);
    json parts = json::array();
    for (const auto& p : cert.partitions) {
      json s1 = json::array(), s2 = json::array();
      for (auto s : p.side1) s1.push_back(str(s + 1));
      for (auto s : p.side2) s2.push_back(str(s + 1));
      parts.push_back({{"side1", std::move(s1)},
                       {"side2", std::move(s2)},
                       {"witness", str(p.witness)},
                       {"ok", str(p.ok())}});
    }
    rep.details["certificate"] = {{"verdict", verdict_name(cert.verdict)}, {"partitions", std::move(parts)}};
    rep.verdict = verdict_name(cert.verdict);
  }
  return rep;
}

RunReport cmd_sharpness(const Options& o) {
  const auto sys = sharpness_example(o.m);
  write_output(o.output, io::cover_to_json(sys));
  const auto t = verify_theorem11(sys);
  const bool equality = t.min_nonzero && *t.min_nonzero == t.bound;
  json d = theorem11_details(t);
  d["system"] = cover_details(sys);
  d["bound_met_with_equality"] = str(equality);
  const bool ok = t.verdict == Verdict::pass && equality;
  return {"sharpness", std::string(verdict_name(ok ? Verdict::pass : Verdict::fail)), std::move(d)};
}

RunReport cmd_nf_verify(const Options& o) {
  const auto in = io::parse_nf_file(o.input);
  const auto mult = nf_cover_multiplicity(in.system, o.coset_cap);
  RunReport rep{"nf-verify", "", json::object()};
  rep.details = {{"degree", str(in.system.field().degree())},
                 {"k", str(in.system.size())},
                 {"beta_product_norm", str(norm_abs(in.system.field(), in.system.beta_product()))},
                 {"multiplicity", str(mult)},
                 {"m_requested", str(o.m)},
                 {"is_m_cover", str(mult >= o.m)}};
  rep.verdict = verdict_name(mult >= o.m ? Verdict::pass : Verdict::fail);
  return rep;
}

RunReport cmd_nf_theorem12(const Options& o) {
  const auto in = io::parse_nf_file(o.input);
  const auto mu = in.mu.value_or(NFElement::zero(in.system.field().degree()));
  const auto t = verify_theorem12(in.system, mu, method_of(o), o.brute_cap, o.coset_cap);
  const auto d = t.classes.common_denominator;
  json classes = json::array();
  for (const auto& [key, c] : t.classes.counts)
    classes.push_back({{"class", nf_class_json(key, d)}, {"count", str(c)}});
  json offending = json::array();
  for (const auto& key : t.offending) offending.push_back(nf_class_json(key, d));
  return {"nf-theorem12",
          std::string(verdict_name(t.verdict)),
          {{"m", str(t.m)},
           {"bound", str(t.bound)},
           {"mu", element_str(mu)},
           {"method", o.brute_force ? "brute-force" : "dp"},
           {"common_denominator", str(d)},
           {"target_count", str(t.target_count)},
           {"offending", std::move(offending)},
           {"classes", std::move(classes)}}};
}

RunReport cmd_nf_vanishing(const Options& o) {
  const auto in = io::parse_nf_file(o.input);
  const auto v = vanishing_witness_check(in.system, o.coset_cap);
  json reps = json::array();
  for (std::size_t i = 0; i < v.reps.size(); ++i)
    reps.push_back({{"x", element_str(v.reps[i])},
                    {"class", v.certifying_class[i] ? str(*v.certifying_class[i] + 1) : "none"}});
  json d = {{"m", str(v.m)}, {"reps_checked", str(v.reps_checked)}, {"reps", std::move(reps)}};
  if (v.failing_x) d["failing_x"] = element_str(*v.failing_x);
  return {"nf-vanishing", std::string(verdict_name(v.verdict)), std::move(d)};
}

int exit_code_for(const std::string& verdict) {
  if (verdict == "FAIL") return kExitFail;
  if (verdict == "ERROR") return kExitError;
  return kExitPass;
}

void emit(const RunReport& rep, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = {{"command", rep.command}, {"verdict", rep.verdict}, {"details", rep.details}};
    out << doc.dump(2) << '\n';
  } else {
    render_human(rep, out);
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of covering-system subset-sum bounds", "coverkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Emit a machine-readable JSON report");

  std::map<CLI::App*, std::function<RunReport(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json_output, "Emit a machine-readable JSON report");
    handlers[sub] = handler;
    return sub;
  };
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "System file (JSON)")->required();
    return sub;
  };
  auto with_brute = [&](CLI::App* sub) {
    sub->add_flag("--brute-force", o.brute_force, "Use exhaustive subset enumeration");
    return sub;
  };

  with_input(add("verify", "Covering multiplicity and m-cover check", cmd_verify))
      ->add_option("--m", o.m, "Required multiplicity")
      ->check(CLI::PositiveNumber);
  with_brute(with_input(add("spectrum", "Fractional-part subset counts", cmd_spectrum)));
  with_brute(with_input(add("theorem11", "Every nonempty fibre has >= 2^m subsets", cmd_theorem11)));
  with_brute(with_input(add("corollary11", "|S(A)| <= 2^(k-m)", cmd_corollary11)));
  with_input(add("corollary12", "Subset counts over the first k-1 classes", cmd_corollary12));
  with_input(add("remark13", "Binomial bounds for exact m-covers", cmd_remark13));
  with_input(add("lemma21", "Witness index t for each theta in S(A)", cmd_lemma21))
      ->add_option("--theta", o.theta, "Single fraction p/q (default: all of S(A))");
  auto* ex = add("construct-example11", "Build the unsplittable m-cover", cmd_example11);
  ex->add_option("--m", o.m, "Multiplicity")->required()->check(CLI::PositiveNumber);
  ex->add_option("--primes", o.primes, "Comma-separated distinct primes")->required();
  ex->add_flag("--check-unsplittable", o.check_unsplittable, "Certify every prime-index split");
  ex->add_option("--output,-o", o.output, "Write the system as a cover file");
  auto* sh = add("sharpness", "m copies of 0(1)", cmd_sharpness);
  sh->add_option("--m", o.m, "Multiplicity")->required()->check(CLI::PositiveNumber);
  sh->add_option("--output,-o", o.output, "Write the system as a cover file");
  with_input(add("nf-verify", "Multiplicity of a cover of O_K", cmd_nf_verify))
      ->add_option("--m", o.m, "Required multiplicity")
      ->check(CLI::PositiveNumber);
  with_brute(with_input(add("nf-theorem12", "Subset-sum classes modulo O_K", cmd_nf_theorem12)));
  with_input(add("nf-vanishing", "Exact psi witness for every residue of O_K", cmd_nf_vanishing));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "coverkit: " << e.what() << '\n';
    return kExitError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    o.brute_cap = env_cap("COVERKIT_BRUTE_CAP", o.brute_cap);
    o.coset_cap = static_cast<std::int64_t>(env_cap("COVERKIT_COSET_CAP", static_cast<std::size_t>(o.coset_cap)));
    const RunReport rep = handlers.at(chosen)(o);
    emit(rep, o.json_output, out);
    return exit_code_for(rep.verdict);
  } catch (const Error& e) {
    RunReport rep{chosen->get_name(), "ERROR",
                  {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}};
    emit(rep, o.json_output, out);
    err << "coverkit: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace coverkit::cli
