#include "ccodes/cli.hpp"

#include "ccodes/ccodes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccodes::cli {
namespace {

/// Raised for anything the user got wrong; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest number of values a single range may expand to.
constexpr std::uint64_t kMaxRangeLength = 1'000'000;

// ---------------------------------------------------------------------------
// Range syntax: comma-separated items, each "lo..hi" (inclusive) or a single
// value. Values are linear expressions in k such as "7", "k", "k+1", "2k".
// ---------------------------------------------------------------------------

struct LinearExpr {
  std::int64_t k_coeff = 0;
  std::int64_t constant = 0;

  std::int64_t eval(std::optional<std::int64_t> k) const {
    if (k_coeff != 0 && !k) throw UsageError("expression refers to k, but k is not defined here");
    return k_coeff * k.value_or(0) + constant;
  }
};

LinearExpr parse_expr(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("empty value");
  LinearExpr expr;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw UsageError("cannot parse value '" + text + "'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::int64_t number = 1;
    const bool has_number = i > start;
    if (has_number) {
      try {
        number = std::stoll(s.substr(start, i - start));
      } catch (const std::exception&) {
        throw UsageError("number out of range in '" + text + "'");
      }
    }
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'k') {
      ++i;
      expr.k_coeff += sign * number;
    } else if (has_number) {
      expr.constant += sign * number;
    } else {
      throw UsageError("cannot parse value '" + text + "'");
    }
  }
  return expr;
}

struct RangeItem {
  LinearExpr lo;
  LinearExpr hi;
};

struct Range {
  std::vector<RangeItem> items;
  bool all = false;  // "all": every residue of the instance's modulus

  std::vector<std::int64_t> values(std::optional<std::int64_t> k = std::nullopt) const {
    std::vector<std::int64_t> out;
    for (const auto& item : items) {
      const std::int64_t lo = item.lo.eval(k);
      const std::int64_t hi = item.hi.eval(k);
      if (hi >= lo && static_cast<std::uint64_t>(hi - lo) >= kMaxRangeLength)
        throw UsageError("range too long");
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  }
};

Range parse_range(const std::string& text, bool allow_all = false) {
  Range range;
  if (text == "all") {
    if (!allow_all) throw UsageError("'all' is only accepted for --b");
    range.all = true;
    return range;
  }
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      const auto e = parse_expr(token);
      range.items.push_back({e, e});
    } else {
      range.items.push_back({parse_expr(token.substr(0, dots)), parse_expr(token.substr(dots + 2))});
    }
  }
  if (range.items.empty()) throw UsageError("empty range '" + text + "'");
  return range;
}

std::vector<BigInt> parse_coeffs(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(parse_bigint(token));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--coeffs: ") + e.what());
    }
  }
  return out;
}

BigInt parse_big_option(const std::string& name, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::uint64_t positive(std::int64_t v, const char* name) {
  if (v < 1) throw UsageError(std::string(name) + " must be >= 1, got " + std::to_string(v));
  return static_cast<std::uint64_t>(v);
}

// ---------------------------------------------------------------------------
// Options and instances
// ---------------------------------------------------------------------------

struct Options {
  std::string family;
  std::string n, k, s, b, r = "both", q, coeffs, mod;
  std::string format = "plain";
  std::string methods;
  std::string quantity = "size";
  std::optional<std::uint64_t> random;
  std::uint64_t seed = 1;
  bool quiet = false;
};

struct Instance {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<CodeSpec> spec;  // binary code (absent for q-ary VT)
  int parity = -1;               // svt only
  std::uint64_t vt_n = 0;        // vt only
  BigInt vt_b;
  std::uint64_t q = 2;
};

const std::vector<std::string> kFamilies = {"vt", "levenshtein", "helberg", "svt", "blcc"};

std::vector<std::string> param_names(const Options& opt) {
  if (opt.family == "vt") return opt.q.empty() ? std::vector<std::string>{"n", "b"} : std::vector<std::string>{"n", "b", "q"};
  if (opt.family == "levenshtein") return {"k", "n", "b"};
  if (opt.family == "helberg") return {"k", "s", "b"};
  if (opt.family == "svt") return {"k", "n", "b", "r"};
  return {"coeffs", "mod", "b"};
}

std::string join(const std::vector<BigInt>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].str();
  }
  return out;
}

void require(const std::string& value, const char* flag, const std::string& family) {
  if (value.empty()) throw UsageError("family " + family + " requires " + flag);
}

// Residues for --b: "all" expands to 0..modulus-1.
std::vector<BigInt> residues(const Range& range, const BigInt& modulus, std::optional<std::int64_t> k) {
  std::vector<BigInt> out;
  if (range.all) {
    if (modulus > BigInt(kMaxRangeLength)) throw UsageError("--b all would expand to " + modulus.str() + " residues");
    const auto n = modulus.convert_to<std::uint64_t>();
    for (std::uint64_t b = 0; b < n; ++b) out.emplace_back(b);
    return out;
  }
  for (const auto v : range.values(k)) out.emplace_back(v);
  return out;
}

std::vector<Instance> random_blcc(const Options& opt) {
  // Portable bounded draws keep the stream identical across standard libraries.
  std::mt19937_64 rng(opt.seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<std::int64_t> ks{1, 14};
  std::vector<std::int64_t> ns{1, 100};
  if (!opt.k.empty()) {
    const auto v = parse_range(opt.k).values();
    if (v.empty()) throw UsageError("--k range is empty");
    ks = {*std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end())};
  }
  if (!opt.n.empty()) {
    const auto v = parse_range(opt.n).values();
    if (v.empty()) throw UsageError("--n range is empty");
    ns = {*std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end())};
  }
  if (ks[0] < 0 || ns[0] < 1) throw UsageError("--random needs k >= 0 and n >= 1");
  std::vector<Instance> out;
  for (std::uint64_t i = 0; i < *opt.random; ++i) {
    const auto k = draw(ks[0], ks[1]);
    const auto n = draw(ns[0], ns[1]);
    std::vector<BigInt> a;
    for (std::int64_t j = 0; j < k; ++j) a.emplace_back(draw(-100, 100));
    const BigInt b = draw(0, n - 1);
    Instance inst;
    inst.family = "blcc";
    inst.params = {{"coeffs", join(a, ',')}, {"mod", std::to_string(n)}, {"b", b.str()}};
    inst.spec = make_blcc(std::move(a), n, b);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> expand(const Options& opt) {
  const std::string& fam = opt.family;
  if (std::find(kFamilies.begin(), kFamilies.end(), fam) == kFamilies.end())
    throw UsageError("unknown family '" + fam + "' (expected vt, levenshtein, helberg, svt, blcc)");

  const Range b_range = parse_range(opt.b.empty() ? std::string("0") : opt.b, true);
  std::vector<Instance> out;

  if (fam == "vt") {
    require(opt.n, "--n", fam);
    const auto qs = opt.q.empty() ? std::vector<std::int64_t>{2} : parse_range(opt.q).values();
    for (const auto nv : parse_range(opt.n).values()) {
      const auto n = positive(nv, "--n");
      for (const auto qv : qs) {
        const auto q = positive(qv, "--q");
        for (const auto& b : residues(b_range, BigInt(n) + 1, std::nullopt)) {
          Instance inst;
          inst.family = fam;
          inst.params = {{"n", std::to_string(n)}, {"b", b.str()}};
          if (!opt.q.empty()) inst.params.emplace_back("q", std::to_string(q));
          inst.vt_n = n;
          inst.vt_b = b;
          inst.q = q;
          if (b < 0 || b > BigInt(n)) throw UsageError("residue b = " + b.str() + " out of range [0, " + std::to_string(n) + "]");
          if (q == 2) inst.spec = make_vt(n, b);
          out.push_back(std::move(inst));
        }
      }
    }
  } else if (fam == "levenshtein" || fam == "svt") {
    require(opt.k, "--k", fam);
    require(opt.n, "--n", fam);
    std::vector<int> parities{-1};
    if (fam == "svt") {
      if (opt.r == "both") parities = {0, 1};
      else if (opt.r == "0") parities = {0};
      else if (opt.r == "1") parities = {1};
      else throw UsageError("--r must be 0, 1 or both");
    }
    for (const auto kv : parse_range(opt.k).values()) {
      const auto k = positive(kv, "--k");
      for (const auto nv : parse_range(opt.n).values(kv)) {
        const auto n = positive(nv, "--n");
        for (const auto& b : residues(b_range, BigInt(n), kv)) {
          for (const int r : parities) {
            Instance inst;
            inst.family = fam;
            inst.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"b", b.str()}};
            inst.spec = make_levenshtein(k, n, b);
            if (r >= 0) {
              inst.parity = r;
              inst.params.emplace_back("r", std::to_string(r));
            }
            out.push_back(std::move(inst));
          }
        }
      }
    }
  } else if (fam == "helberg") {
    require(opt.k, "--k", fam);
    require(opt.s, "--s", fam);
    for (const auto kv : parse_range(opt.k).values()) {
      const auto k = positive(kv, "--k");
      for (const auto sv : parse_range(opt.s).values(kv)) {
        const auto s = positive(sv, "--s");
        if (s > std::numeric_limits<unsigned>::max()) throw UsageError("--s too large");
        const BigInt modulus = helberg_multipliers(k, static_cast<unsigned>(s)).back();
        for (const auto& b : residues(b_range, modulus, kv)) {
          Instance inst;
          inst.family = fam;
          inst.params = {{"k", std::to_string(k)}, {"s", std::to_string(s)}, {"b", b.str()}};
          inst.spec = make_helberg(k, static_cast<unsigned>(s), b);
          out.push_back(std::move(inst));
        }
      }
    }
  } else {  // blcc
    if (opt.random) return random_blcc(opt);
    require(opt.coeffs, "--coeffs", fam);
    require(opt.mod, "--mod", fam);
    const auto coeffs = parse_coeffs(opt.coeffs);
    const BigInt modulus = parse_big_option("--mod", opt.mod);
    if (modulus < 1) throw UsageError("--mod must be >= 1");
    std::vector<BigInt> bs;
    if (b_range.all) {
      bs = residues(b_range, modulus, std::nullopt);
    } else if (b_range.items.size() == 1 && opt.b.find("..") == std::string::npos) {
      bs.push_back(parse_big_option("--b", opt.b.empty() ? "0" : opt.b));
    } else {
      bs = residues(b_range, modulus, std::nullopt);
    }
    for (const auto& b : bs) {
      Instance inst;
      inst.family = fam;
      inst.params = {{"coeffs", join(coeffs, ',')}, {"mod", modulus.str()}, {"b", b.str()}};
      inst.spec = make_blcc(coeffs, modulus, b);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

const std::vector<std::string> kMethods = {"exact", "closed", "float", "brute"};

std::vector<std::string> parse_methods(const std::string& text, const std::vector<std::string>& fallback) {
  if (text.empty()) return fallback;
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (std::find(kMethods.begin(), kMethods.end(), token) == kMethods.end())
      throw UsageError("unknown method '" + token + "' (expected exact, closed, float, brute)");
    if (std::find(out.begin(), out.end(), token) == out.end()) out.push_back(token);
  }
  if (out.empty()) throw UsageError("--methods is empty");
  return out;
}

struct Result {
  std::optional<WeightEnumerator> enumerator;
  BigInt size;
  std::optional<double> deviation;
};

bool applicable(const Instance& inst, const std::string& method) {
  if (method == "closed") return inst.family == "vt";
  if (inst.q != 2) return method == "brute";
  return true;
}

Result evaluate(const Instance& inst, const std::string& method) {
  Result res;
  if (inst.family == "vt" && inst.q != 2) {
    res.size = method == "brute"
                   ? oracle::brute_count_qary(make_vt(inst.vt_n, 0).coefficients(), BigInt(inst.vt_n) + 1, inst.vt_b,
                                              inst.q)
                   : vt_q_size(inst.vt_n, inst.vt_b, inst.q);
    return res;
  }
  const CodeSpec& spec = *inst.spec;
  WeightEnumerator w;
  if (method == "exact") {
    w = weight_enumerator(spec);
  } else if (method == "closed") {
    w = vt_weight_enumerator_closed(inst.vt_n, inst.vt_b);
  } else if (method == "float") {
    auto f = weight_enumerator_charsum_float(spec);
    w = std::move(f.enumerator);
    res.deviation = f.max_deviation;
  } else {
    w = oracle::brute_weight_enumerator(spec);
  }
  if (inst.parity >= 0) w = parity_filter(w, inst.parity);
  res.size = w.size();
  res.enumerator = std::move(w);
  return res;
}

std::string format_deviation(double d) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << d;
  return os.str();
}

std::string params_text(const Instance& inst, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < inst.params.size(); ++i) {
    if (i) out += sep;
    out += inst.params[i].first + "=" + inst.params[i].second;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> enumerator_strings(const WeightEnumerator& w) {
  std::vector<std::string> out;
  for (const auto& c : w.counts()) out.push_back(c.str());
  return out;
}

std::string enumerator_text(const WeightEnumerator& w) {
  std::string out;
  for (std::size_t i = 0; i < w.counts().size(); ++i) {
    if (i) out += ' ';
    out += w.counts()[i].str();
  }
  return out;
}

void banner(const Options& opt, std::ostream& out) {
  if (!opt.quiet) out << "# ccodes " << kVersion << '\n';
}

std::string single_method(const Options& opt) {
  const bool qary = opt.family == "vt" && !opt.q.empty();
  const auto methods = parse_methods(opt.methods, {qary ? "closed" : "exact"});
  if (methods.size() != 1) throw UsageError("this command takes a single method");
  return methods.front();
}

void check_applicable(const std::vector<Instance>& instances, const std::string& method) {
  for (const auto& inst : instances)
    if (!applicable(inst, method))
      throw UsageError("method '" + method + "' does not apply to " + inst.family + " " + params_text(inst, " "));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_enum(const Options& opt, std::ostream& out) {
  if (opt.format != "plain" && opt.format != "json" && opt.format != "csv")
    throw UsageError("--format must be plain, json or csv");
  const auto instances = expand(opt);
  const std::string method = single_method(opt);
  check_applicable(instances, method);

  std::vector<Result> results;
  results.reserve(instances.size());
  for (const auto& inst : instances) results.push_back(evaluate(inst, method));

  if (opt.format == "plain") banner(opt, out);
  if (opt.format == "csv") out << "family,params,size,enumerator,method,deviation\n";
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto& res = results[i];
    if (opt.format == "json") {
      nlohmann::ordered_json j;
      j["family"] = inst.family;
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [key, value] : inst.params) params[key] = value;
      j["params"] = params;
      if (res.enumerator) j["enumerator"] = enumerator_strings(*res.enumerator);
      j["size"] = res.size.str();
      j["method"] = method;
      if (res.deviation) j["deviation"] = *res.deviation;
      out << j.dump() << '\n';
    } else if (opt.format == "csv") {
      out << inst.family << ',' << csv_field(params_text(inst, ";")) << ',' << res.size << ','
          << (res.enumerator ? enumerator_text(*res.enumerator) : "") << ',' << method << ','
          << (res.deviation ? format_deviation(*res.deviation) : "") << '\n';
    } else {
      out << inst.family << ' ' << params_text(inst, " ") << "  size=" << res.size;
      if (res.enumerator) out << "  W(z) = " << res.enumerator->polynomial();
      out << "  [" << method;
      if (res.deviation) out << ", deviation " << format_deviation(*res.deviation);
      out << "]\n";
    }
  }
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  std::string quantity = opt.quantity;
  if (quantity == "N_t" || quantity == "Nt") quantity = "nt";
  if (quantity != "size" && quantity != "nt" && quantity != "enumerator")
    throw UsageError("--quantity must be size, nt or enumerator");
  if (std::find(kFamilies.begin(), kFamilies.end(), opt.family) == kFamilies.end())
    throw UsageError("unknown family '" + opt.family + "'");
  const auto instances = expand(opt);
  const std::string method = single_method(opt);
  check_applicable(instances, method);
  if (quantity != "size")
    for (const auto& inst : instances)
      if (!inst.spec) throw UsageError("quantity '" + quantity + "' needs a binary code (q = 2)");

  std::vector<Result> results;
  results.reserve(instances.size());
  for (const auto& inst : instances) results.push_back(evaluate(inst, method));

  const auto names = param_names(opt);
  for (const auto& name : names) out << name << ',';
  if (quantity == "size") out << "size\n";
  else if (quantity == "nt") out << "t,count\n";
  else out << "size,enumerator\n";

  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::string prefix;
    for (const auto& [key, value] : instances[i].params) prefix += csv_field(value) + ',';
    const auto& res = results[i];
    if (quantity == "size") {
      out << prefix << res.size << '\n';
    } else if (quantity == "nt") {
      for (std::size_t t = 0; t < res.enumerator->counts().size(); ++t)
        out << prefix << t << ',' << res.enumerator->count(t) << '\n';
    } else {
      out << prefix << res.size << ',' << enumerator_text(*res.enumerator) << '\n';
    }
  }
  return kExitOk;
}

struct Check {
  bool pass = true;
  std::string detail;
  double max_deviation = 0.0;
  std::vector<std::string> ran;
};

Check verify_instance(const Instance& inst, const std::vector<std::string>& methods) {
  Check check;
  std::optional<std::pair<std::string, Result>> reference;
  auto fail = [&](const std::string& why) {
    if (check.pass) check.detail = why;
    check.pass = false;
  };
  for (const auto& method : methods) {
    if (!applicable(inst, method)) continue;
    Result res;
    try {
      res = evaluate(inst, method);
    } catch (const CapExceeded& e) {
      throw UsageError(std::string("instance too large for method '") + method + "': " + e.what());
    } catch (const std::exception& e) {
      fail(method + ": " + e.what());
      continue;
    }
    check.ran.push_back(method);
    if (res.deviation) check.max_deviation = std::max(check.max_deviation, *res.deviation);

    // The VT closed forms also provide N_t and |C| separately.
    if (method == "closed" && inst.q == 2) {
      for (std::size_t t = 0; t <= inst.vt_n; ++t)
        if (vt_weight_count(inst.vt_n, inst.vt_b, t) != res.enumerator->count(t))
          fail("closed: N_" + std::to_string(t) + " disagrees with the closed enumerator");
      if (vt_size(inst.vt_n, inst.vt_b) != res.enumerator->size()) fail("closed: size formula disagrees");
    }
    if (!reference) {
      reference.emplace(method, std::move(res));
      continue;
    }
    const auto& [ref_method, ref] = *reference;
    if (ref.size != res.size) {
      fail(ref_method + " size=" + ref.size.str() + " vs " + method + " size=" + res.size.str());
    } else if (ref.enumerator && res.enumerator && *ref.enumerator != *res.enumerator) {
      fail(ref_method + " [" + enumerator_text(*ref.enumerator) + "] vs " + method + " [" +
           enumerator_text(*res.enumerator) + "]");
    }
  }
  // SVT: the float A/B form gives the even/odd split directly.
  if (inst.parity >= 0 && std::find(methods.begin(), methods.end(), "float") != methods.end()) {
    try {
      const auto split = svt_sizes_charsum_float(ParityCodeSpec(*inst.spec, inst.parity));
      const auto exact = svt_sizes(ParityCodeSpec(*inst.spec, inst.parity));
      check.max_deviation = std::max(check.max_deviation, split.deviation);
      if (split.even != exact.even || split.odd != exact.odd) fail("svt float split disagrees with exact split");
      if (reference && reference->second.size != exact.of_parity(inst.parity)) fail("svt exact split disagrees");
    } catch (const CapExceeded& e) {
      throw UsageError(std::string("instance too large for method 'float': ") + e.what());
    } catch (const std::exception& e) {
      fail(std::string("svt float: ") + e.what());
    }
  }
  if (check.ran.empty()) fail("no applicable method");
  if (check.pass) check.detail = "size=" + reference->second.size.str();
  return check;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto methods = parse_methods(opt.methods, kMethods);
  const auto instances = expand(opt);
  banner(opt, out);
  std::size_t failures = 0;
  double max_dev = 0.0;
  for (const auto& inst : instances) {
    const auto check = verify_instance(inst, methods);
    std::string ran;
    for (std::size_t i = 0; i < check.ran.size(); ++i) ran += (i ? "," : "") + check.ran[i];
    out << (check.pass ? "PASS " : "FAIL ") << inst.family << ' ' << params_text(inst, " ") << "  " << check.detail
        << "  [" << ran << "]  max_dev=" << format_deviation(check.max_deviation) << '\n';
    if (!check.pass) ++failures;
    max_dev = std::max(max_dev, check.max_deviation);
  }
  out << "checked " << instances.size() << " instances: " << instances.size() - failures << " passed, " << failures
      << " failed; max float deviation " << format_deviation(max_dev) << '\n';
  return failures == 0 ? kExitOk : kExitMismatch;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--family", opt.family, "vt | levenshtein | helberg | svt | blcc")->required();
  cmd->add_option("--n", opt.n, "length (vt) or modulus (levenshtein, svt); range, may use k");
  cmd->add_option("--k", opt.k, "length (levenshtein, helberg, svt); range");
  cmd->add_option("--s", opt.s, "Helberg recurrence depth; range");
  cmd->add_option("--b", opt.b, "residue; range or 'all' (default 0)");
  cmd->add_option("--r", opt.r, "SVT weight parity: 0, 1 or both (default both)");
  cmd->add_option("--q", opt.q, "alphabet size for vt (default 2); range");
  cmd->add_option("--coeffs", opt.coeffs, "blcc coefficients, comma separated");
  cmd->add_option("--mod", opt.mod, "blcc modulus");
  cmd->add_option("--random", opt.random, "blcc: draw N random specs");
  cmd->add_option("--seed", opt.seed, "seed for --random (default 1)");
  cmd->add_flag("--quiet", opt.quiet, "suppress the banner line");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight enumerators and sizes of binary linear congruence codes", "ccodes"};
  app.require_subcommand(1);
  Options opt;

  auto* enum_cmd = app.add_subcommand("enum", "print enumerator and size of each instance");
  add_common_options(enum_cmd, opt);
  enum_cmd->add_option("--format", opt.format, "plain | json | csv (default plain)");
  enum_cmd->add_option("--methods", opt.methods, "one of exact, closed, float, brute (default exact)");

  auto* table_cmd = app.add_subcommand("table", "CSV table over a parameter grid");
  add_common_options(table_cmd, opt);
  table_cmd->add_option("--quantity", opt.quantity, "size | nt | enumerator (default size)");
  table_cmd->add_option("--methods", opt.methods, "one of exact, closed, float, brute (default exact)");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check methods over a parameter grid");
  add_common_options(verify_cmd, opt);
  verify_cmd->add_option("--methods", opt.methods, "subset of exact,closed,float,brute (default all)");

  auto* version_cmd = app.add_subcommand("version", "print the version");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (version_cmd->parsed()) {
      out << "ccodes " << kVersion << '\n';
      return kExitOk;
    }
    if (enum_cmd->parsed()) return cmd_enum(opt, out);
    if (table_cmd->parsed()) return cmd_table(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
  } catch (const UsageError& e) {
    err << "ccodes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "ccodes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "ccodes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntegralityFailure& e) {
    err << "ccodes: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace ccodes::cli
