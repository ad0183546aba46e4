#include "acm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "acm/construct.hpp"
#include "acm/parse.hpp"

namespace acm::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Documents

namespace {

template <class T>
const T* find_named(const std::vector<std::pair<std::string, T>>& items, const std::string& name) {
  for (const auto& [n, v] : items) {
    if (n == name) return &v;
  }
  return nullptr;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  InputDocument parse() {
    std::size_t start = 0;
    line_ = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      line_start_ = start;
      statement(start, end);
      start = end + 1;
    }
    if (!doc_.ring) fail("missing ring declaration", text_.size());
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    std::size_t col = offset >= line_start_ ? offset - line_start_ + 1 : 1;
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(col) + ": " + msg,
                     offset);
  }

  std::size_t skip_space(std::size_t i, std::size_t end) const {
    while (i < end && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i;
  }

  std::size_t word_end(std::size_t i, std::size_t end) const {
    while (i < end && !std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i;
  }

  void statement(std::size_t begin, std::size_t end) {
    std::size_t hash = text_.find('#', begin);
    if (hash != std::string_view::npos && hash < end) end = hash;
    while (end > begin && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    std::size_t i = skip_space(begin, end);
    if (i == end) return;
    std::size_t kw_end = i;
    while (kw_end < end && std::isalpha(static_cast<unsigned char>(text_[kw_end]))) ++kw_end;
    std::string_view kw = text_.substr(i, kw_end - i);
    if (kw == "ring") return ring_statement(kw_end, end);
    if (kw != "ideal" && kw != "free" && kw != "form") fail("unknown statement '" + std::string(kw) + "'", i);
    if (!doc_.ring) fail("the ring must be declared first", i);

    std::size_t n = skip_space(kw_end, end);
    if (n == kw_end) fail("expected a space after '" + std::string(kw) + "'", kw_end);
    if (n == end || !is_ident_start(text_[n])) fail("expected a name", n);
    std::size_t n_end = n;
    while (n_end < end && is_ident_char(text_[n_end])) ++n_end;
    std::string name(text_.substr(n, n_end - n));
    if (!names_.insert(name).second) fail("duplicate name '" + name + "'", n);
    std::size_t eq = skip_space(n_end, end);
    if (eq == end || text_[eq] != '=') fail("expected '='", eq);
    std::size_t body = eq + 1;

    if (kw == "ideal") {
      std::vector<Polynomial> gens;
      int index = 0;
      for (auto [off, len] : split_top_level(body, end)) {
        ++index;
        gens.push_back(form_at(off, len, "ideal " + name + " generator " + std::to_string(index)));
      }
      doc_.ideals.emplace_back(name, std::move(gens));
    } else if (kw == "free") {
      std::vector<int> twists;
      for (auto [off, len] : split_top_level(body, end)) twists.push_back(integer_at(off, len));
      doc_.free_modules.emplace_back(name, std::move(twists));
    } else {
      auto parts = split_top_level(body, end);
      if (parts.size() != 1) fail("a form takes exactly one expression", body);
      doc_.forms.emplace_back(name, form_at(parts[0].first, parts[0].second, "form " + name));
    }
  }

  void ring_statement(std::size_t i, std::size_t end) {
    if (doc_.ring) fail("duplicate ring declaration", line_start_);
    std::optional<std::uint32_t> p;
    std::vector<std::string> vars;
    std::size_t vars_at = i;
    i = skip_space(i, end);
    while (i < end) {
      std::size_t w = word_end(i, end);
      std::string_view word = text_.substr(i, w - i);
      if (word.starts_with("p=")) {
        std::uint32_t v = 0;
        auto digits = word.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
          fail("expected p=<prime>", i);
        }
        p = v;
      } else if (word.starts_with("vars=")) {
        vars_at = i;
        std::size_t j = i + 5;
        while (true) {
          std::size_t k = j;
          if (k >= w || !is_ident_start(text_[k])) fail("expected a variable name", k);
          while (k < w && is_ident_char(text_[k])) ++k;
          vars.emplace_back(text_.substr(j, k - j));
          if (k == w) break;
          if (text_[k] != ',') fail("expected ',' between variable names", k);
          j = k + 1;
        }
      } else {
        fail("unexpected '" + std::string(word) + "' in ring declaration", i);
      }
      i = skip_space(w, end);
    }
    if (!p) fail("ring declaration needs p=<prime>", end);
    if (vars.empty()) fail("ring declaration needs vars=<names>", end);
    try {
      doc_.ring = PolyRing::make(*p, vars);
    } catch (const DomainError& e) {
      fail(e.what(), vars_at);
    } catch (const StructuralError& e) {
      fail(e.what(), vars_at);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> split_top_level(std::size_t begin, std::size_t end) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    int depth = 0;
    std::size_t piece = begin;
    for (std::size_t i = begin; i <= end; ++i) {
      if (i == end || (text_[i] == ',' && depth == 0)) {
        std::size_t a = skip_space(piece, i);
        std::size_t b = i;
        while (b > a && std::isspace(static_cast<unsigned char>(text_[b - 1]))) --b;
        if (a == b) fail("empty item", a);
        out.emplace_back(a, b - a);
        piece = i + 1;
      } else if (text_[i] == '(') {
        ++depth;
      } else if (text_[i] == ')') {
        --depth;
      }
    }
    return out;
  }

  Polynomial form_at(std::size_t off, std::size_t len, const std::string& what) {
    Polynomial f;
    try {
      f = parse_polynomial(doc_.ring, text_.substr(off, len));
    } catch (const ParseError& e) {
      fail(e.what(), off + e.offset());
    }
    std::string shown(text_.substr(off, len));
    if (f.is_zero()) fail(what + " '" + shown + "' is zero", off);
    if (!f.degree()) fail(what + " '" + shown + "' is not homogeneous", off);
    return f;
  }

  int integer_at(std::size_t off, std::size_t len) {
    std::string_view s = text_.substr(off, len);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail("expected an integer", off);
    return v;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::size_t line_start_ = 0;
  InputDocument doc_;
  std::set<std::string> names_;
};

}  // namespace

const std::vector<Polynomial>& InputDocument::ideal(const std::string& name) const {
  if (const auto* v = find_named(ideals, name)) return *v;
  throw DomainError("no ideal named '" + name + "'");
}

FreeModule InputDocument::free_module(const std::string& name) const {
  const auto* v = find_named(free_modules, name);
  if (!v) throw DomainError("no free module named '" + name + "'");
  FreeModule out;
  for (int a : *v) out.twists.push_back(-a);
  return out;
}

bool InputDocument::has_free_module(const std::string& name) const {
  return find_named(free_modules, name) != nullptr;
}

const Polynomial& InputDocument::form(const std::string& name) const {
  if (const auto* v = find_named(forms, name)) return *v;
  throw DomainError("no form named '" + name + "'");
}

bool InputDocument::operator==(const InputDocument& other) const {
  if (!ring || !other.ring) return ring == other.ring;
  return *ring == *other.ring && ideals == other.ideals && free_modules == other.free_modules &&
         forms == other.forms;
}

InputDocument parse_document(std::string_view text) { return DocumentParser(text).parse(); }

std::string render_document(const InputDocument& doc) {
  std::ostringstream os;
  os << "ring p=" << doc.ring->characteristic() << " vars=";
  for (std::size_t i = 0; i < doc.ring->names().size(); ++i) os << (i ? "," : "") << doc.ring->names()[i];
  os << '\n';
  for (const auto& [name, gens] : doc.ideals) {
    os << "ideal " << name << " =";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : " ") << gens[i].to_string();
    os << '\n';
  }
  for (const auto& [name, twists] : doc.free_modules) {
    os << "free " << name << " =";
    for (std::size_t i = 0; i < twists.size(); ++i) os << (i ? "," : " ") << twists[i];
    os << '\n';
  }
  for (const auto& [name, f] : doc.forms) os << "form " << name << " = " << f.to_string() << '\n';
  return os.str();
}

FreeModule parse_twist_list(std::string_view text) {
  FreeModule out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t a = 0;
    while (a < item.size() && std::isspace(static_cast<unsigned char>(item[a]))) ++a;
    std::size_t b = item.size();
    while (b > a && std::isspace(static_cast<unsigned char>(item[b - 1]))) --b;
    std::string_view s = item.substr(a, b - a);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("expected an integer twist list such as \"-3,-3\"", start + a);
    }
    out.twists.push_back(-v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json betti_to_json(const BettiTable& b) {
  json out = json::object();
  const auto entries = b.entries();
  for (const auto& [key, n] : entries) out[std::to_string(key.first) + "," + std::to_string(key.second)] = n;
  return out;
}

BettiTable betti_from_json(const json& j) {
  BettiTable b;
  for (const auto& [key, n] : j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw DomainError("bad Betti key '" + key + "'");
    b.add(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), n.get<int>());
  }
  return b;
}

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_to_json(const RunReport& r, bool timings) {
  json j;
  j["command"] = r.command;
  put(j, "seed", r.seed);
  put(j, "k", r.k);
  if (!r.betti.empty()) {
    json b = json::object();
    for (const auto& [name, table] : r.betti) b[name] = betti_to_json(table);
    j["betti"] = b;
  }
  put(j, "codim", r.codim);
  put(j, "acm", r.acm);
  put(j, "contains_X", r.contains_x);
  if (!r.cm_type.empty()) j["cm_type"] = r.cm_type;
  put(j, "gorenstein", r.gorenstein);
  if (!r.checks.empty()) j["checks"] = r.checks;
  if (!r.details.empty()) j["details"] = r.details;
  if (timings && !r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  put(j, "error", r.error);
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  get(j, "seed", r.seed);
  get(j, "k", r.k);
  if (j.contains("betti")) {
    for (const auto& [name, table] : j.at("betti").items()) r.betti[name] = betti_from_json(table);
  }
  get(j, "codim", r.codim);
  get(j, "acm", r.acm);
  get(j, "contains_X", r.contains_x);
  if (j.contains("cm_type")) r.cm_type = j.at("cm_type").get<std::map<std::string, int>>();
  get(j, "gorenstein", r.gorenstein);
  if (j.contains("checks")) r.checks = j.at("checks").get<std::map<std::string, bool>>();
  if (j.contains("details")) r.details = j.at("details").get<std::map<std::string, std::string>>();
  if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  get(j, "error", r.error);
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string report_to_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  if (r.seed) os << "seed: " << *r.seed << '\n';
  if (r.k) os << "k: " << *r.k << '\n';
  if (r.codim) os << "codim: " << *r.codim << '\n';
  if (r.acm) os << "acm: " << yes_no(*r.acm) << '\n';
  if (r.contains_x) os << "contains_X: " << yes_no(*r.contains_x) << '\n';
  for (const auto& [name, t] : r.cm_type) os << "cm_type " << name << ": " << t << '\n';
  if (r.gorenstein) os << "gorenstein: " << yes_no(*r.gorenstein) << '\n';
  for (const auto& [name, ok] : r.checks) os << "check " << name << ": " << yes_no(ok) << '\n';
  for (const auto& [name, v] : r.details) os << name << ": " << v << '\n';
  for (const auto& [name, table] : r.betti) os << "betti " << name << ":\n" << table.render();
  if (r.error) os << "error: " << *r.error << '\n';
  os << "verdict: " << (r.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Common {
  std::string input;
  std::string json_path;
  bool no_timings = false;
};

struct Outcome {
  RunReport report;
  /// Text for standard output; the generic summary when empty.
  std::string text;
};

InputDocument load(const Common& c, std::istream& in) {
  std::string text;
  if (c.input.empty()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(c.input);
    if (!f) throw DomainError("cannot read input file '" + c.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return parse_document(text);
}

FreeModule free_argument(const InputDocument& doc, const std::string& value) {
  if (doc.has_free_module(value)) return doc.free_module(value);
  return parse_twist_list(value);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

void fill_certificate(RunReport& r, const ConstructionCertificate& c) {
  r.k = c.k;
  r.betti["P"] = c.betti_p;
  r.betti["N"] = c.betti_n;
  r.betti["ID"] = c.betti_id;
  r.codim = c.codim;
  r.acm = c.acm;
  r.cm_type["D"] = c.cm_type_d;
  r.gorenstein = c.gorenstein_d;
  r.checks["h1"] = c.hypotheses.h1;
  r.checks["h2"] = c.hypotheses.h2;
  r.checks["h3"] = c.hypotheses.h3;
  r.checks["cone_equals_direct"] = c.cone_equals_direct;
  r.checks["generator_bound"] = c.generator_bound;
  r.checks["summand_bound"] = c.summand_bound;
  r.details["ideal_D"] = c.id.to_string();
  r.details["attempts"] = std::to_string(c.attempts);
  r.details["s"] = std::to_string(c.hypotheses.s);
  if (c.x) {
    r.contains_x = c.contains_x;
    r.cm_type["X"] = c.cm_type_x;
    r.checks["cm_type_bound"] = c.cm_type_bound;
    if (c.dual_sequence) r.checks["dual_sequence"] = *c.dual_sequence;
  }
  r.pass = c.pass();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"acmkit: ACM schemes from torsion-free modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--input", common.input, "input document (default: standard input)");
  app.add_option("--json", common.json_path, "write the JSON report to this path");
  app.add_flag("--no-timings", common.no_timings, "omit timings from the JSON report");

  std::string ideal;
  std::string other;
  std::string p_free;
  std::string forms;
  int max_len = -1;
  int syzygy = 0;
  int c = 0;
  int retries = 8;
  std::uint64_t seed = 0;
  std::function<Outcome(const InputDocument&)> handler;

  auto* resolve = app.add_subcommand("resolve", "minimal resolution and Betti table of an ideal");
  resolve->add_option("--ideal", ideal)->required();
  resolve->add_option("--max-len", max_len);
  resolve->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      Resolution res = resolve_quotient(doc.ring, doc.ideal(ideal), max_len);
      Resolution mini = minimalize(res);
      o.report.betti["ID"] = ideal_betti(mini);
      o.report.details["pd_quotient"] = std::to_string(mini.length());
      o.report.checks["complete"] = res.complete;
      o.report.checks["is_complex"] = mini.is_complex();
      o.report.pass = mini.is_complex();
      o.text = o.report.betti["ID"].render();
      if (!res.complete) o.text += "(truncated at length " + std::to_string(max_len) + ")\n";
      return o;
    };
  });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and numerical invariants of R/I");
  hilbert->add_option("--ideal", ideal)->required();
  hilbert->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      Ideal i(doc.ring, doc.ideal(ideal));
      HilbertSeries hs = i.hilbert_series();
      NumericalInvariants inv = invariants(hs);
      o.report.codim = inv.codim;
      o.report.details["dim"] = std::to_string(inv.proj_dim);
      o.report.details["degree"] = std::to_string(inv.degree);
      o.report.details["hilbert_polynomial"] = inv.hilbert_polynomial.to_string();
      o.report.details["hilbert_series"] =
          "(" + hs.numerator_string() + ")/(1-t)^" + std::to_string(hs.nvars);
      o.report.pass = true;
      std::ostringstream os;
      os << "dim " << inv.proj_dim << "\ncodim " << inv.codim << "\ndegree " << inv.degree
         << "\nhilbert polynomial " << o.report.details["hilbert_polynomial"] << "\nhilbert series "
         << o.report.details["hilbert_series"] << '\n';
      o.text = os.str();
      return o;
    };
  });

  auto* construct = app.add_subcommand("construct", "D containing X from the j-th syzygy module of X");
  construct->add_option("--ideal", ideal)->required();
  construct->add_option("--syzygy", syzygy)->required();
  construct->add_option("--p-free", p_free)->required();
  construct->add_option("--seed", seed)->required();
  construct->add_option("--retries", retries);
  construct->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      o.report.seed = seed;
      Ideal ix(doc.ring, doc.ideal(ideal));
      auto p = ModulePresentation::free(doc.ring, free_argument(doc, p_free));
      fill_certificate(o.report, construct_from_x(ix, p, {Seed(seed), retries}, syzygy));
      return o;
    };
  });

  auto* construct_n = app.add_subcommand("construct-n", "D from N = I_Y + I_Y and a free P");
  construct_n->add_option("--n-ideal-sum", ideal)->required();
  construct_n->add_option("--p-free", p_free)->required();
  construct_n->add_option("--seed", seed)->required();
  construct_n->add_option("--retries", retries);
  construct_n->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      o.report.seed = seed;
      Ideal iy(doc.ring, doc.ideal(ideal));
      auto rep = infinitesimal_double(iy, free_argument(doc, p_free), {Seed(seed), retries});
      fill_certificate(o.report, rep.certificate);
      o.report.checks["in_square"] = rep.in_square;
      o.report.pass = o.report.pass && rep.in_square;
      return o;
    };
  });

  auto* serre = app.add_subcommand("serre", "rank-two extension of I_D by R(c - r - 1)");
  serre->add_option("--ideal", ideal)->required();
  serre->add_option("--c", c)->required();
  serre->add_option("--seed", seed)->required();
  serre->add_option("--retries", retries);
  serre->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      o.report.seed = seed;
      auto rep = serre_codim2(Ideal(doc.ring, doc.ideal(ideal)), c, Seed(seed), retries);
      o.report.betti["N"] = rep.betti_n;
      o.report.details["pd_N"] = std::to_string(rep.pd_n);
      o.report.details["attempts"] = std::to_string(rep.attempts);
      o.report.checks["pd_at_most_1"] = rep.pd_n <= 1;
      o.report.checks["free_iff_complete_intersection"] = (rep.pd_n == 0) == rep.h2_is_line_bundle;
      o.report.pass = rep.pd_n <= 1 && (rep.pd_n == 0) == rep.h2_is_line_bundle;
      return o;
    };
  });

  std::string form_name;
  auto* twist = app.add_subcommand("twist", "compare the extensions of xi and f xi");
  twist->add_option("--ideal", ideal)->required();
  twist->add_option("--c", c)->required();
  twist->add_option("--form", form_name)->required();
  twist->add_option("--seed", seed)->required();
  twist->add_option("--retries", retries);
  twist->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      o.report.seed = seed;
      auto rep = twist_extension(Ideal(doc.ring, doc.ideal(ideal)), c, doc.form(form_name), Seed(seed), retries);
      o.report.checks["epsilon_injective"] = rep.epsilon_injective;
      o.report.checks["coker_is_O_S"] = rep.coker_series == rep.expected_series;
      o.report.details["d"] = std::to_string(rep.d);
      o.report.details["coker_series"] = rep.coker_series.numerator_string();
      o.report.pass = rep.pass;
      return o;
    };
  });

  auto* koszul = app.add_subcommand("koszul", "rebuild D from its section by a complete intersection");
  koszul->add_option("--ideal", ideal)->required();
  koszul->add_option("--forms", forms)->required();
  koszul->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      std::vector<Polynomial> fs;
      for (const auto& n : split_names(forms)) fs.push_back(doc.form(n));
      Ideal id(doc.ring, doc.ideal(ideal));
      auto rep = koszul_reconstruct(id, fs);
      o.report.k = rep.k;
      o.report.betti["X"] = ideal_betti(rep.x.minimal_resolution());
      o.report.betti["ID"] = ideal_betti(rep.reconstructed.minimal_resolution()).shifted(rep.k);
      o.report.details["ideal_X"] = rep.x.to_string();
      o.report.details["reconstructed"] = rep.reconstructed.to_string();
      o.report.checks["matches"] = rep.matches;
      o.report.pass = rep.matches;
      return o;
    };
  });

  auto* certify = app.add_subcommand("certify", "containment and CM-type comparison of D against X");
  certify->add_option("--ideal", ideal)->required();
  certify->add_option("--x", other)->required();
  certify->callback([&] {
    handler = [&](const InputDocument& doc) {
      Outcome o;
      Ideal id(doc.ring, doc.ideal(ideal));
      Ideal ix(doc.ring, doc.ideal(other));
      CmComparison cmp = compare_with(id, ix);
      o.report.contains_x = cmp.contains_x;
      o.report.cm_type["X"] = cmp.cm_type_x;
      o.report.cm_type["D"] = cmp.cm_type_d;
      o.report.gorenstein = cmp.gorenstein_d;
      o.report.checks["cm_type_bound"] = cmp.cm_type_bound;
      o.report.betti["ID"] = ideal_betti(id.minimal_resolution());
      o.report.betti["X"] = ideal_betti(ix.minimal_resolution());
      o.report.pass = cmp.contains_x && cmp.cm_type_bound;
      return o;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) err << "error: ";
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  Outcome o;
  CLI::App* sub = app.get_subcommands().front();
  std::string command = sub->get_name();
  auto start = std::chrono::steady_clock::now();
  try {
    InputDocument doc = load(common, in);
    o = handler(doc);
  } catch (const ConstructionError& e) {
    o.report.error = e.what();
    o.report.pass = false;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  o.report.command = command;
  if (const CLI::Option* opt = sub->get_option_no_throw("--seed"); opt && opt->count() > 0) {
    o.report.seed = seed;
  }
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  o.report.timings_ms["total"] = elapsed.count();

  out << (o.text.empty() ? report_to_text(o.report) : o.text);
  if (!common.json_path.empty()) {
    std::ofstream f(common.json_path);
    if (!f) {
      err << "error: cannot write '" << common.json_path << "'\n";
      return kExitError;
    }
    f << report_to_json(o.report, !common.no_timings);
  }
  if (o.report.error) err << "construction failed: " << *o.report.error << '\n';
  return o.report.pass ? kExitPass : kExitFailedCertificate;
}

}  // namespace acm::cli
