#include "cslkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cslkit/bravais.hpp"
#include "cslkit/csl.hpp"
#include "cslkit/equivalence.hpp"
#include "cslkit/symmetry.hpp"
#include "cslkit/verify.hpp"
#include "json.hpp"

namespace cslkit {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kDefaultCap = 199;

struct InputError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

std::int64_t sigma_cap() {
  if (const char* env = std::getenv("CSLKIT_MAX_SIGMA")) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(env, &pos);
      if (pos == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("CSLKIT_MAX_SIGMA must be a positive integer, got '") + env + "'");
  }
  return kDefaultCap;
}

void check_sigma_bound(std::int64_t s, bool force, const char* what) {
  if (s < 1) throw InputError(std::string(what) + " must be positive");
  if (s % 2 == 0)
    throw InputError(std::string(what) + " = " + std::to_string(s) +
                     " is even; f(Σ) = 0 if Σ is even, so only odd bounds are meaningful");
  const std::int64_t cap = sigma_cap();
  if (s > cap && !force)
    throw InputError(std::string(what) + " = " + std::to_string(s) + " exceeds the cap " + std::to_string(cap) +
                     " (raise CSLKIT_MAX_SIGMA or pass --force)");
}

std::vector<LatticeKind> parse_kinds(const std::string& text) {
  std::vector<LatticeKind> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_lattice_kind(tok));
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  if (out.empty()) throw InputError("no lattice kinds given");
  return out;
}

// Integer, p/q or a finite decimal.
Rational parse_number(std::string t) {
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (const auto dotpos = t.find('.'); dotpos != std::string::npos && t.find('/') == std::string::npos) {
    std::string digits = t.substr(0, dotpos) + t.substr(dotpos + 1);
    const std::size_t places = t.size() - dotpos - 1;
    if (places > 15) throw InputError("too many decimal places in '" + t + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    try {
      return Rational::parse(digits + "/" + std::to_string(den));
    } catch (const Error&) {
      throw InputError("not an exact rational number: '" + t + "'");
    }
  }
  try {
    return Rational::parse(t);
  } catch (const Error&) {
    throw InputError("not an exact rational number: '" + t + "'");
  }
}

ExactMat3 parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Rational> r;
    std::stringstream rs(row);
    std::string tok;
    while (rs >> tok) {
      for (auto& ch : tok)
        if (ch == ',') ch = ' ';
      std::stringstream ts(tok);
      std::string sub;
      while (ts >> sub) r.push_back(parse_number(sub));
    }
    rows.push_back(r);
  }
  if (rows.size() != 3) throw InputError("matrix needs 3 rows separated by ';'");
  ExactMat3 m;
  for (int i = 0; i < 3; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != 3) throw InputError("matrix row " + std::to_string(i + 1) + " needs 3 entries");
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

// Rotation through arccos(c) about the integer axis a.
Quat quaternion_from_axis(const IVec3& a, const Rational& c) {
  if (a == IVec3{0, 0, 0}) throw InputError("axis must be nonzero");
  if (c > Rational(1) || c < Rational(-1)) throw InputError("cos must lie in [-1, 1]");
  if (c == Rational(1)) return Quat(1, 0, 0, 0);
  if (c == Rational(-1)) return primitive_integral(Quat(0, a[0], a[1], a[2]));
  // cot²(φ/2) = (1+c)/(1-c) = p/q; r = (s, q·a) with s² = p q |a|².
  const Rational ratio = (Rational(1) + c) / (Rational(1) - c);
  const std::int64_t p = ratio.num(), q = ratio.den();
  const std::int64_t s2 = checked::mul(checked::mul(p, q), norm_sq(a));
  if (!checked::is_square(s2))
    throw InputError("not a coincidence rotation: the rotation through arccos(" + c.str() + ") about " + to_string(a) +
                     " is not rational");
  const std::int64_t s = checked::isqrt(s2);
  return primitive_integral(Quat(s, checked::mul(q, a[0]), checked::mul(q, a[1]), checked::mul(q, a[2])));
}

IVec3 parse_axis(const std::string& text) {
  std::string t = text;
  for (auto& ch : t)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::stringstream ss(t);
  IVec3 a{};
  for (int i = 0; i < 3; ++i) {
    std::string tok;
    if (!(ss >> tok)) throw InputError("axis needs 3 integers");
    Rational v = parse_number(tok);
    if (!v.is_integer()) throw InputError("axis components must be integers");
    a[static_cast<std::size_t>(i)] = v.to_integer();
  }
  std::string extra;
  if (ss >> extra) throw InputError("axis needs exactly 3 integers");
  return a;
}

std::string opt(const std::optional<Rational>& x) { return x ? x->str() : "-"; }

json opt_json(const std::optional<Rational>& x) { return x ? json(x->str()) : json(nullptr); }

std::string quat_list(const std::vector<Quat>& qs) {
  std::string s;
  for (const auto& q : qs) s += (s.empty() ? "" : " ") + q.str();
  return s;
}

json quat_json(const std::vector<Quat>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(q.str());
  return a;
}

json group_json(const SymmetryGroup& g) {
  return json{{"system", to_string(g.system)},
              {"order", g.order},
              {"generators", quat_json(g.generators)},
              {"standard_generators", quat_json(g.standard_generators)},
              {"frame", g.form.str()}};
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* a : allowed)
    if (fmt == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InputError(std::string(cmd) + " supports formats " + list + "; got '" + fmt + "'");
}

// ---- classify ----

struct ClassifyOpts {
  std::string quaternion, matrix, axis, cos, format = "text", kinds = "cP,cI,cF";
};

std::string cmd_classify(const ClassifyOpts& o) {
  require_format(o.format, {"text", "json"}, "classify");
  const int given = int(!o.quaternion.empty()) + int(!o.matrix.empty()) + int(!o.axis.empty());
  if (given != 1) throw InputError("classify needs exactly one of QUATERNION, --matrix or --axis/--cos");
  if (!o.axis.empty() && o.cos.empty()) throw InputError("--axis needs --cos");
  if (o.axis.empty() && !o.cos.empty()) throw InputError("--cos needs --axis");
  const auto kinds = parse_kinds(o.kinds);

  Quat input;
  bool improper = false;
  if (!o.quaternion.empty()) {
    try {
      input = Quat::parse(o.quaternion);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    if (input.is_zero()) throw InputError("the zero quaternion is not a rotation");
  } else if (!o.matrix.empty()) {
    const ExactMat3 m = parse_matrix(o.matrix);
    try {
      input = quaternion_from_matrix(m, &improper);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  } else {
    input = quaternion_from_axis(parse_axis(o.axis), parse_number(o.cos));
  }
  const Quat r = primitive_integral(input);
  const SigmaInfo si = sigma(r);
  const FormClass fc = classify_form(r);
  const IntersectionGroup h = intersection_group(r);
  const SymmetryGroup mg = minimal_symmetry_group(r);
  std::optional<SymmetryGroup> full;
  std::string full_note;
  try {
    full = symmetry_group(r);
  } catch (const Error& e) {
    full_note = "not determined in closed form: not equivalent to a twofold rotation";
  }
  std::vector<std::pair<LatticeKind, BravaisReport>> reports;
  for (LatticeKind k : kinds) {
    if (fc.tag == FormTag::General) reports.emplace_back(k, oracle_bravais(csl(k, r)));
    else reports.emplace_back(k, bravais(k, r));
  }

  std::ostringstream os;
  if (o.format == "json") {
    json j;
    j["quaternion"] = r.str();
    j["improper_input"] = improper;
    j["name"] = crystallographic_name(r);
    j["sigma"] = si.sigma;
    j["ell"] = si.ell;
    j["form"] = {{"tag", to_string(fc.tag)}, {"representative", fc.form.str()}};
    j["canonical"] = canonical_rep(r).str();
    j["h_order"] = h.order;
    j["h_label"] = h.label;
    j["minimal_symmetry"] = group_json(mg);
    j["symmetry"] = full ? group_json(*full) : json(nullptr);
    json b = json::object();
    for (const auto& [k, rep] : reports)
      b[to_string(k)] = {{"symbol", rep.symbol}, {"a2", opt_json(rep.a2)}, {"b2", opt_json(rep.b2)},
                         {"c2", opt_json(rep.c2)}, {"note", rep.setting_note}, {"source", rep.source}};
    j["bravais"] = b;
    os << j.dump(2) << '\n';
    return os.str();
  }
  os << "quaternion: " << r.str() << '\n';
  if (improper) os << "input: improper matrix, classified after composing with the inversion\n";
  os << "rotation: " << crystallographic_name(r) << '\n';
  os << "sigma: " << si.sigma << " (|r|^2 = " << norm_sq(r).str() << ", l = " << si.ell << ")\n";
  if (si.sigma == 1) os << "CSL: the lattice itself (r is a symmetry rotation of the cube)\n";
  os << "class: " << to_string(fc.tag) << ", form " << fc.form.str() << ", canonical " << canonical_rep(r).str()
     << '\n';
  os << "H(R): order " << h.order << " (" << h.label << ")\n";
  os << "minimal symmetry: " << to_string(mg.system) << ", order " << mg.order;
  if (!mg.generators.empty()) os << ", generators " << quat_list(mg.generators);
  os << '\n';
  if (full) {
    os << "symmetry: " << to_string(full->system) << ", order " << full->order << ", generators "
       << quat_list(full->generators) << '\n';
  } else {
    os << "symmetry: " << full_note << '\n';
  }
  for (const auto& [k, rep] : reports) {
    os << to_string(k) << ": " << rep.symbol << "  a^2=" << opt(rep.a2) << " b^2=" << opt(rep.b2)
       << " c^2=" << opt(rep.c2);
    if (!rep.setting_note.empty()) os << "  (" << rep.setting_note << ")";
    if (rep.source == "oracle") os << "  [lattice oracle]";
    os << '\n';
  }
  return os.str();
}

// ---- enumerate ----

std::string cmd_enumerate(std::int64_t s, bool grimmer, bool rotations, const std::string& fmt) {
  require_format(fmt, {"text", "csv", "json"}, "enumerate");
  std::ostringstream os;
  if (rotations) {
    const auto rs = enumerate_rotations(s);
    if (fmt == "json") {
      os << json{{"sigma", s}, {"rotations", quat_json(rs)}}.dump(2) << '\n';
    } else {
      if (fmt == "csv") os << "quaternion\n";
      for (const auto& r : rs) os << (fmt == "csv" ? "\"" + r.str() + "\"" : r.str()) << '\n';
    }
    return os.str();
  }
  const auto classes = enumerate_classes(s, grimmer);
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& c : classes) {
      json e{{"canonical", c.canonical.str()}, {"form", c.form.form.str()}, {"tag", to_string(c.form.tag)},
             {"h_order", c.h_order}, {"size", c.size}, {"paired", c.paired}};
      e["partner"] = c.paired ? json(c.partner.str()) : json(nullptr);
      arr.push_back(e);
    }
    os << json{{"sigma", s}, {"grimmer", grimmer}, {"classes", arr}}.dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "sigma,canonical,form,tag,h_order,size,partner\n";
    for (const auto& c : classes)
      os << s << ",\"" << c.canonical.str() << "\",\"" << c.form.form.str() << "\"," << to_string(c.form.tag) << ','
         << c.h_order << ',' << c.size << ",\"" << (c.paired ? c.partner.str() : "") << "\"\n";
  } else {
    os << "Σ=" << s << ": " << classes.size() << " class" << (classes.size() == 1 ? "" : "es")
       << (grimmer ? " (R ~ R^-1 merged)" : "") << '\n';
    for (const auto& c : classes) {
      os << "  " << std::left << std::setw(14) << c.form.form.str() << std::setw(11) << to_string(c.form.tag)
         << "|H|=" << std::setw(3) << c.h_order << "size=" << std::setw(4) << c.size << "canonical " << c.canonical.str();
      if (c.paired) os << "  inverse class " << c.partner.str();
      os << '\n';
    }
  }
  return os.str();
}

// ---- table ----

std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << "Σ    " << std::setw(24) << "r";
  if (!rows.empty())
    for (LatticeKind k : rows.front().kinds) os << std::setw(5) << to_string(k);
  os << '\n';
  for (const auto& row : rows) {
    std::string reps;
    for (const auto& q : row.representatives) reps += (reps.empty() ? "" : " ") + q.str();
    os << std::setw(4) << row.sigma << ' ' << std::setw(24) << reps;
    for (const auto& r : row.reports) os << std::setw(5) << r.symbol;
    os << '\n';
  }
  return os.str();
}

// ---- count ----

std::string cmd_count(std::int64_t from, std::int64_t to, const std::string& fmt) {
  require_format(fmt, {"text", "csv", "json"}, "count");
  std::ostringstream os;
  json arr = json::array();
  if (fmt == "csv") os << "sigma,n0,n1,n2,n3,n4,n5,f,f_ineq\n";
  if (fmt == "text")
    os << std::right << std::setw(6) << "sigma" << std::setw(4) << "n1" << std::setw(4) << "n2" << std::setw(4) << "n3"
       << std::setw(4) << "n4" << std::setw(4) << "n5" << std::setw(7) << "f" << std::setw(8) << "f_ineq" << '\n';
  for (std::int64_t s = from; s <= to; s += 2) {
    const auto c = counts(s);
    if (fmt == "json")
      arr.push_back(json{{"sigma", s}, {"n0", c.n0}, {"n1", c.n1}, {"n2", c.n2}, {"n3", c.n3}, {"n4", c.n4},
                         {"n5", c.n5}, {"f", c.f}, {"f_ineq", c.f_ineq}});
    else if (fmt == "csv")
      os << s << ',' << c.n0 << ',' << c.n1 << ',' << c.n2 << ',' << c.n3 << ',' << c.n4 << ',' << c.n5 << ',' << c.f
         << ',' << c.f_ineq << '\n';
    else
      os << std::setw(6) << s << std::setw(4) << c.n1 << std::setw(4) << c.n2 << std::setw(4) << c.n3 << std::setw(4)
         << c.n4 << std::setw(4) << c.n5 << std::setw(7) << c.f << std::setw(8) << c.f_ineq << '\n';
  }
  if (fmt == "json") os << arr.dump(2) << '\n';
  return os.str();
}

// ---- verify ----

int cmd_verify(std::int64_t max_sigma, const std::vector<std::string>& suites, const std::string& fmt, std::string& text) {
  require_format(fmt, {"text", "json"}, "verify");
  std::vector<std::string> names = suites.empty() ? suite_names() : suites;
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw InputError("unknown suite '" + n + "'");
  std::ostringstream os;
  json arr = json::array();
  bool all = true;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, max_sigma);
    all = all && r.ok();
    if (fmt == "json") {
      arr.push_back(json{{"suite", r.name}, {"claim", r.claim}, {"checks", r.checks}, {"ok", r.ok()},
                         {"failures", r.failures}});
    } else {
      os << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(11) << r.name << std::right << std::setw(7)
         << r.checks << " checks  " << r.claim << '\n';
      for (const auto& f : r.failures) os << "  counterexample: " << f << '\n';
    }
  }
  if (fmt == "json") os << json{{"max_sigma", max_sigma}, {"ok", all}, {"suites", arr}}.dump(2) << '\n';
  text = os.str();
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence site lattices of the cubic lattices cP, cI and cF, in exact arithmetic.", "cslkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cslkit 1.0.0");

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Σ, class, symmetry and Bravais classes of one rotation");
  classify->add_option("quaternion", co.quaternion, "e.g. '(0,6,3,1)' or '1/2(1,1,1,1)'");
  classify->add_option("--matrix", co.matrix, "rational orthogonal matrix, rows separated by ';'");
  classify->add_option("--axis", co.axis, "integer rotation axis, e.g. '1,1,1'");
  classify->add_option("--cos", co.cos, "cosine of the rotation angle, e.g. '1/2'");
  classify->add_option("--lattice", co.kinds, "comma-separated kinds")->capture_default_str();
  classify->add_option("--format", co.format, "text or json")->capture_default_str();

  std::int64_t en_sigma = 0;
  bool en_grimmer = false, en_rot = false, en_force = false;
  std::string en_fmt = "text";
  auto* enumerate = app.add_subcommand("enumerate", "equivalence classes (or all rotations) for one Σ");
  enumerate->add_option("--sigma", en_sigma, "odd coincidence index")->required();
  enumerate->add_flag("--grimmer", en_grimmer, "merge R with R^-1");
  enumerate->add_flag("--rotations", en_rot, "list every rotation instead of the classes");
  enumerate->add_flag("--force", en_force, "ignore the Σ cap");
  enumerate->add_option("--format", en_fmt, "text, csv or json")->capture_default_str();

  std::int64_t tb_max = 59;
  std::string tb_fmt = "text", tb_kinds = "cP,cI,cF", tb_out;
  bool tb_force = false;
  auto* tablec = app.add_subcommand("table", "Bravais classes of all CSLs up to a bound");
  tablec->add_option("--max-sigma", tb_max, "odd bound")->capture_default_str();
  tablec->add_option("--lattice", tb_kinds, "comma-separated kinds")->capture_default_str();
  tablec->add_option("--format", tb_fmt, "text, csv, json or md")->capture_default_str();
  tablec->add_option("-o,--output", tb_out, "output file");
  tablec->add_flag("--force", tb_force, "ignore the Σ cap");

  std::int64_t ct_sigma = 0, ct_from = 0, ct_to = 0;
  std::string ct_fmt = "text", ct_out;
  bool ct_force = false;
  auto* count = app.add_subcommand("count", "class counts n1..n5, f and f_ineq");
  auto* ct_s = count->add_option("--sigma", ct_sigma, "one odd Σ");
  auto* ct_f = count->add_option("--from", ct_from, "first Σ of a range");
  auto* ct_t = count->add_option("--to", ct_to, "last Σ of a range");
  ct_s->excludes(ct_f)->excludes(ct_t);
  ct_f->needs(ct_t);
  ct_t->needs(ct_f);
  count->add_option("--format", ct_fmt, "text, csv or json")->capture_default_str();
  count->add_option("-o,--output", ct_out, "output file");
  count->add_flag("--force", ct_force, "ignore the Σ cap");

  std::int64_t vf_max = 45;
  std::vector<std::string> vf_suites;
  std::string vf_fmt = "text";
  bool vf_force = false;
  auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
  verify->add_option("--max-sigma", vf_max, "odd bound")->capture_default_str();
  verify->add_option("--suite", vf_suites, "csl, counts, symmetry, hex, primepower, bravais (repeatable)");
  verify->add_option("--format", vf_fmt, "text or json")->capture_default_str();
  verify->add_flag("--force", vf_force, "ignore the Σ cap");

  std::vector<std::string> argv_store{"cslkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify->parsed()) {
      out << cmd_classify(co);
    } else if (enumerate->parsed()) {
      check_sigma_bound(en_sigma, en_force, "--sigma");
      out << cmd_enumerate(en_sigma, en_grimmer, en_rot, en_fmt);
    } else if (tablec->parsed()) {
      require_format(tb_fmt, {"text", "csv", "json", "md"}, "table");
      check_sigma_bound(tb_max, tb_force, "--max-sigma");
      if (tb_max < 3) throw InputError("--max-sigma must be at least 3");
      const auto rows = table(tb_max, parse_kinds(tb_kinds));
      std::string text = tb_fmt == "csv"   ? table_csv(rows)
                         : tb_fmt == "md"  ? table_markdown(rows)
                         : tb_fmt == "json" ? table_json(rows)
                                            : table_text(rows);
      write_output(text, tb_out, out);
    } else if (count->parsed()) {
      std::int64_t from = ct_sigma, to = ct_sigma;
      if (ct_f->count() > 0) {
        from = ct_from;
        to = ct_to;
      } else if (ct_s->count() == 0) {
        throw InputError("count needs --sigma or --from/--to");
      }
      check_sigma_bound(from, ct_force, "--from");
      check_sigma_bound(to, ct_force, "--to");
      if (from > to) throw InputError("--from must not exceed --to");
      write_output(cmd_count(from, to, ct_fmt), ct_out, out);
    } else if (verify->parsed()) {
      check_sigma_bound(vf_max, vf_force, "--max-sigma");
      std::string text;
      const int code = cmd_verify(vf_max, vf_suites, vf_fmt, text);
      out << text;
      return code;
    }
  } catch (const IoError& e) {
    err << "cslkit: " << e.what() << '\n';
    return kExitIoError;
  } catch (const InputError& e) {
    err << "cslkit: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OverflowError& e) {
    err << "cslkit: arithmetic overflow: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "cslkit: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace cslkit
