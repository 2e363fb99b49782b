#include "picketlab/cli.hpp"

#include "picketlab/decomp_f1.hpp"
#include "picketlab/decomp_s1.hpp"
#include "picketlab/json_io.hpp"
#include "picketlab/oracle_check.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace picketlab::cli {

namespace {

struct Options {
  std::string subcommand;
  std::string input = "-";
  std::string mode = "auto";
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  bool verify = false;
  int n = 6;
  int count = 1;
  std::string spec;

  bool text() const { return format == "text"; }
  BasisChoice choice() const { return {seed}; }
};

struct Outcome {
  std::string report;  // without trailing newline
  int status = kExitOk;
  std::string diagnostic;  // for err
};

// ---------------------------------------------------------------------------
// text rendering

template <class T>
std::string show(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void text_group(std::ostream& os, const GroupType& g) {
  os << "group p=" << g.p() << " lambda=" << show(g.input_lambda()) << "\n";
}

void text_pickets(std::ostream& os, const Multiplicities& m) {
  for (const auto& [pk, count] : m) os << "picket n=" << pk.n << " l=" << pk.l << " mult=" << count << "\n";
}

std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// ---------------------------------------------------------------------------
// subcommands, one document at a time

Outcome ineligible(const SubgroupPresentation& u, const std::string& condition, bool f1, bool s1,
                   const Options& opt) {
  const auto f1w = f1_witness(u);
  const auto s1w = s1_witness(u);
  Outcome o{"", kExitIneligible, "ineligible: " + condition};
  if (opt.text()) {
    std::ostringstream os;
    text_group(os, u.group());
    os << "eligible f1=" << yes_no(f1) << " s1=" << yes_no(s1) << "\n";
    os << "ineligible: " << condition << "\n";
    if (f1w) os << "witness pG_not_in_U " << show(f1w->input_coeffs()) << "\n";
    if (s1w) os << "witness pU_nonzero " << show(s1w->input_coeffs()) << "\n";
    o.report = chomp(os.str());
  } else {
    Json j = instance_to_json(u);
    j["eligible"] = {{"f1", f1}, {"s1", s1}};
    j["error"] = "ineligible";
    j["condition"] = condition;
    Json w = Json::object();
    if (f1w) w["pG_not_in_U"] = to_json(*f1w);
    if (s1w) w["pU_nonzero"] = to_json(*s1w);
    j["witnesses"] = w;
    o.report = j.dump();
  }
  return o;
}

Outcome decompose_one(const Json& doc, const Options& opt) {
  const SubgroupPresentation u = instance_from_json(doc);
  const bool f1 = check_f1(u);
  const bool s1 = check_s1(u);
  Mode mode;
  if (opt.mode == "f1") {
    if (!f1) return ineligible(u, "pG⊆U fails", f1, s1, opt);
    mode = Mode::f1;
  } else if (opt.mode == "s1") {
    if (!s1) return ineligible(u, "pU=0 fails", f1, s1, opt);
    mode = Mode::s1;
  } else {
    if (!f1 && !s1) return ineligible(u, "neither pU=0 nor pG⊆U", f1, s1, opt);
    mode = f1 ? Mode::f1 : Mode::s1;
  }
  const PicketDecomposition d = mode == Mode::f1 ? decompose_f1(u, opt.choice()) : decompose_s1(u, opt.choice());

  Outcome o;
  std::optional<Verdict> verdict;
  if (opt.verify) {
    verdict = verify_certificate(u, d);
    if (!verdict->accepted) {
      o.status = kExitRejected;
      o.diagnostic = "certificate rejected: " + verdict->description;
    }
  }
  if (opt.text()) {
    std::ostringstream os;
    text_group(os, u.group());
    os << "eligible f1=" << yes_no(f1) << " s1=" << yes_no(s1) << "\n";
    os << "mode " << to_string(mode) << "\n";
    text_pickets(os, d.multiplicities);
    for (const auto& c : d.full) os << "C n=" << c.level << " gen=" << show(c.generator.input_coeffs()) << "\n";
    for (const auto& c : d.partial)
      os << "Cprime n=" << c.level << " gen=" << show(c.generator.input_coeffs()) << "\n";
    if (verdict) os << "verified " << yes_no(verdict->accepted) << "\n";
    o.report = chomp(os.str());
  } else {
    Json j = to_json(u, d);
    j["eligible"] = {{"f1", f1}, {"s1", s1}};
    if (verdict) j["verified"] = to_json(*verdict);
    o.report = j.dump();
  }
  return o;
}

Outcome verify_one(const Json& doc, const Options& opt) {
  const SubgroupPresentation u = instance_from_json(doc);
  const PicketDecomposition d = decomposition_from_json(u.group_ptr(), doc);
  const Verdict v = verify_certificate(u, d);
  Outcome o;
  if (!v.accepted) {
    o.status = kExitRejected;
    o.diagnostic = "certificate rejected: " + v.description;
  }
  if (opt.text()) {
    std::ostringstream os;
    if (v.accepted) {
      os << "accepted\n";
    } else {
      os << "rejected " << to_string(v.kind) << ": " << v.description << "\n";
      for (const auto& w : v.witness) os << "witness " << show(w.input_coeffs()) << "\n";
    }
    o.report = chomp(os.str());
  } else {
    o.report = to_json(v).dump();
  }
  return o;
}

Outcome invariants_one(const Json& doc, const Options& opt) {
  const SubgroupPresentation u = instance_from_json(doc);
  const GroupType& g = u.group();
  const bool f1 = check_f1(u);
  const bool s1 = check_s1(u);
  std::vector<int> kappa;
  for (int n = 1; n <= g.max_exponent(); ++n) kappa.push_back(g.kappa(n));
  std::optional<Multiplicities> m1, m2;
  if (f1) m1 = multiplicities_f1(u);
  if (s1) m2 = multiplicities_s1(u);
  Outcome o;
  if (opt.text()) {
    std::ostringstream os;
    text_group(os, g);
    os << "order_exp " << g.order_exp() << "\n";
    os << "subgroup_order_exp " << u.order_exp() << "\n";
    os << "kappa " << show(kappa) << "\n";
    os << "eligible f1=" << yes_no(f1) << " s1=" << yes_no(s1) << "\n";
    if (m1) {
      os << "mode f1\n";
      text_pickets(os, *m1);
    }
    if (m2) {
      os << "mode s1\n";
      text_pickets(os, *m2);
    }
    o.report = chomp(os.str());
  } else {
    Json j = to_json(g);
    j["order_exp"] = g.order_exp();
    j["subgroup"] = to_json(u);
    j["kappa"] = kappa;
    j["eligible"] = {{"f1", f1}, {"s1", s1}};
    if (m1) j["f1_pickets"] = to_json(*m1);
    if (m2) j["s1_pickets"] = to_json(*m2);
    o.report = j.dump();
  }
  return o;
}

bool enumerable(const GroupType& g) {
  // |G| <= 2^kEnumerationGuardBits
  std::uint64_t size = 1;
  for (int i = 0; i < g.order_exp(); ++i) {
    size *= g.p();
    if (size > (std::uint64_t{1} << kEnumerationGuardBits)) return false;
  }
  return true;
}

Outcome oracle_one(const Json& doc, const Options& opt) {
  const SubgroupPresentation u = instance_from_json(doc);
  Outcome o;
  if (!enumerable(u.group())) {
    o.report = opt.text() ? "skipped: group too large to enumerate"
                          : Json{{"skipped", "group too large to enumerate"}}.dump();
    return o;
  }
  const OracleReport r = oracle_check(u);
  if (!r.agree) {
    o.status = kExitRejected;
    o.diagnostic = "oracle disagreement: " + r.mismatches.front();
  }
  if (opt.text()) {
    std::ostringstream os;
    os << (r.agree ? "agree" : "disagree") << " compared=" << r.compared << "\n";
    for (const auto& m : r.mismatches) os << "mismatch " << m << "\n";
    o.report = chomp(os.str());
  } else {
    o.report = Json{{"agree", r.agree}, {"compared", r.compared}, {"mismatches", r.mismatches}}.dump();
  }
  return o;
}

Outcome operator_one(const Json& doc, const Options& opt) {
  const OperatorPair op = operator_from_json(doc);
  const OperatorModes modes = check_modes(op);
  Mode mode;
  std::string failed;
  if (opt.mode == "f1") {
    if (!modes.f1) failed = "T(V)⊆U fails";
    mode = Mode::f1;
  } else if (opt.mode == "s1") {
    if (!modes.s1) failed = "TU=0 fails";
    mode = Mode::s1;
  } else {
    if (!modes.f1 && !modes.s1) failed = "neither TU=0 nor T(V)⊆U";
    mode = modes.s1 ? Mode::s1 : Mode::f1;
  }

  if (!failed.empty()) {
    const ChainRing field(op.p, 1);
    Outcome o{"", kExitIneligible, "ineligible: " + failed};
    std::optional<ResidueVector> tu_nonzero, image_outside;
    for (const auto& v : op.u_basis)
      if (!tu_nonzero && pivot_column(apply(field, op.t, v)) >= 0) tu_nonzero = v;
    std::vector<ResidueVector> rows = op.u_basis;
    const int du = rows.empty() ? 0 : rank(field, rows_to_matrix(rows, op.dim()));
    for (int c = 0; c < op.dim() && !image_outside; ++c) {
      auto with = rows;
      with.push_back(op.t.col(c).transpose());
      if (rank(field, rows_to_matrix(with, op.dim())) > du) image_outside = op.t.col(c).transpose();
    }
    auto vec = [](const ResidueVector& v) {
      std::vector<std::int64_t> out;
      for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(static_cast<std::int64_t>(v(i)));
      return out;
    };
    if (opt.text()) {
      std::ostringstream os;
      os << "eligible f1=" << yes_no(modes.f1) << " s1=" << yes_no(modes.s1) << "\n";
      os << "ineligible: " << failed << "\n";
      if (tu_nonzero) os << "witness TU_nonzero " << show(vec(*tu_nonzero)) << "\n";
      if (image_outside) os << "witness TV_not_in_U " << show(vec(*image_outside)) << "\n";
      o.report = chomp(os.str());
    } else {
      Json w = Json::object();
      if (tu_nonzero) w["TU_nonzero"] = vec(*tu_nonzero);
      if (image_outside) w["TV_not_in_U"] = vec(*image_outside);
      o.report = Json{{"eligible", {{"f1", modes.f1}, {"s1", modes.s1}}},
                      {"error", "ineligible"},
                      {"condition", failed},
                      {"witnesses", w}}
                     .dump();
    }
    return o;
  }

  const ModulePair mp = to_module_pair(op);
  const PicketDecomposition d = mode == Mode::f1 ? decompose_f1(mp.subgroup) : decompose_s1(mp.subgroup);
  const JordanCertificate cert = jordan_certificate(op, mode);
  Outcome o;
  std::optional<bool> verified;
  if (opt.verify) {
    verified = verify_certificate(mp.subgroup, d).accepted && check_jordan_certificate(op, mode, cert).empty();
    if (!*verified) {
      o.status = kExitRejected;
      o.diagnostic = "operator certificate rejected";
    }
  }
  if (opt.text()) {
    std::ostringstream os;
    os << "eligible f1=" << yes_no(modes.f1) << " s1=" << yes_no(modes.s1) << "\n";
    os << "mode " << to_string(mode) << "\n";
    os << "blocks " << show(cert.block_sizes) << "\n";
    text_pickets(os, d.multiplicities);
    for (Eigen::Index r = 0; r < cert.q.rows(); ++r) {
      os << "Q";
      for (Eigen::Index c = 0; c < cert.q.cols(); ++c) os << " " << cert.q(r, c);
      os << "\n";
    }
    os << "U_columns " << show(cert.u_columns) << "\n";
    if (verified) os << "verified " << yes_no(*verified) << "\n";
    o.report = chomp(os.str());
  } else {
    Json j = {{"p", op.p}, {"eligible", {{"f1", modes.f1}, {"s1", modes.s1}}}, {"mode", to_string(mode)}};
    j["module"] = {{"lambda", mp.subgroup.group().input_lambda()}, {"subgroup", to_json(mp.subgroup)}};
    j["pickets"] = to_json(d.multiplicities);
    j["jordan"] = to_json(cert);
    if (verified) j["verified"] = *verified;
    o.report = j.dump();
  }
  return o;
}

// ---------------------------------------------------------------------------
// driver

using Handler = std::function<Outcome(const Json&, const Options&)>;

Outcome guarded(const Handler& h, const Json& doc, const Options& opt, std::size_t index) {
  auto fail = [&](int status, const std::string& what) {
    const std::string where = "instance " + std::to_string(index + 1) + ": ";
    Outcome o{opt.text() ? "error: " + what : Json{{"error", status == kExitIneligible ? "ineligible" : "malformed"},
                                                   {"message", what}}
                                                  .dump(),
              status, where + what};
    return o;
  };
  try {
    return h(doc, opt);
  } catch (const IneligibleError& e) {
    return fail(kExitIneligible, e.what());
  } catch (const Json::exception& e) {
    return fail(kExitMalformed, std::string("bad field type: ") + e.what());
  } catch (const Error& e) {
    return fail(kExitMalformed, e.what());
  }
}

/// Runs `h` over all documents with a worker pool; results keep input order.
std::vector<Outcome> run_all(const Handler& h, const std::vector<Json>& docs, const Options& opt) {
  std::vector<Outcome> out(docs.size());
  if (docs.size() == 1) {
    out[0] = guarded(h, docs[0], opt, 0);
    return out;
  }
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < std::min(workers, docs.size()); ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < docs.size(); i = next++) out[i] = guarded(h, docs[i], opt, i);
    }));
  for (auto& f : pool) f.get();
  return out;
}

int emit(const std::vector<Outcome>& outcomes, const Options& opt, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (opt.text() && i > 0) out << "\n";
    out << o.report << "\n";
    if (!o.diagnostic.empty()) err << o.diagnostic << "\n";
    status = std::max(status, o.status);
  }
  return status;
}

std::string read_input(const Options& opt, std::istream& in) {
  std::ostringstream buf;
  if (opt.input.empty() || opt.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(opt.input);
    if (!f) throw InputError("cannot open input file " + opt.input);
    buf << f.rdbuf();
  }
  return buf.str();
}

int run_random(const Options& opt, std::ostream& out) {
  if (opt.spec.empty()) throw InputError("random needs --spec");
  if (opt.count < 0) throw InputError("--count must be nonnegative");
  std::string text = opt.spec;
  if (text.find('{') == std::string::npos) {
    std::ifstream f(text);
    if (!f) throw InputError("cannot open spec file " + text);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  const InstanceSpec base = instance_spec_from_json(parse_json(text), opt.seed.value_or(0));
  for (int i = 0; i < opt.count; ++i) {
    InstanceSpec spec = base;
    spec.seed = base.seed + static_cast<std::uint64_t>(i);
    const SubgroupPresentation u = random_instance(spec);
    if (opt.text()) {
      if (i > 0) out << "\n";
      text_group(out, u.group());
      out << "seed " << spec.seed << "\n";
      for (const auto& x : u.generators()) out << "generator " << show(x.input_coeffs()) << "\n";
    } else {
      Json j = instance_to_json(u);
      j["mode"] = to_string(spec.mode);
      j["seed"] = spec.seed;
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int run_remark(const Options& opt, std::ostream& out) {
  if (opt.n < 2) throw InputError("--N must be at least 2");
  for (int n = 2; n <= opt.n; ++n) {
    const RemarkReport r = remark_family(n);
    if (opt.text()) {
      if (n > 2) out << "\n";
      out << "N=" << r.n << " coset_height=" << r.coset_height << "\n";
      text_pickets(out, r.decomposition.multiplicities);
    } else {
      out << to_json(r).dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Picket decompositions of finite abelian p-group pairs", "picketlab"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--input", opt.input, "input file, - for stdin");
  app.add_option("--mode", opt.mode, "decomposition mode")->check(CLI::IsMember({"auto", "f1", "s1"}));
  app.add_option("--seed", opt.seed, "seed for basis choices or random instances");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", opt.verify, "re-check every certificate before printing");
  app.add_option("--N", opt.n, "largest exponent for remark-family");
  app.add_option("--count", opt.count, "number of random instances");
  app.add_option("--spec", opt.spec, "random instance spec: JSON text or a file");
  for (const char* name :
       {"decompose", "verify", "invariants", "random", "oracle-check", "remark-family", "operator"})
    app.add_subcommand(name)->callback([&opt, name] { opt.subcommand = name; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (opt.subcommand == "random") return run_random(opt, out);
    if (opt.subcommand == "remark-family") return run_remark(opt, out);
    Handler h;
    if (opt.subcommand == "decompose") h = decompose_one;
    if (opt.subcommand == "verify") h = verify_one;
    if (opt.subcommand == "invariants") h = invariants_one;
    if (opt.subcommand == "oracle-check") h = oracle_one;
    if (opt.subcommand == "operator") h = operator_one;
    const std::vector<Json> docs = parse_documents(read_input(opt, in));
    return emit(run_all(h, docs, opt), opt, out, err);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace picketlab::cli
