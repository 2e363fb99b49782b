#include "picketlab/json_io.hpp"

#include <sstream>

namespace picketlab {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::int64_t> int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Json vector_json(const ResidueVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json matrix_json(const ResidueMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

Json generators_json(const std::vector<LeveledGenerator>& gens) {
  Json a = Json::array();
  for (const auto& c : gens) a.push_back({{"n", c.level}, {"gen", to_json(c.generator)}});
  return a;
}

std::vector<LeveledGenerator> generators_from_json(const GroupTypePtr& g, const Json& j) {
  std::vector<LeveledGenerator> out;
  if (!j.is_array()) throw InputError("certificate generator lists must be arrays");
  for (const auto& c : j) out.push_back({field(c, "n").get<int>(), element_from_json(g, field(c, "gen"))});
  return out;
}

}  // namespace

Json parse_json(const std::string& text, int line_offset) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // locate the byte offset as line/column
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    // drop the library's own prefix, which repeats the position
    std::string detail = e.what();
    if (auto at = detail.find("]"); at != std::string::npos) detail = detail.substr(at + 1);
    if (auto at = detail.find(": "); at != std::string::npos) detail = detail.substr(at + 2);
    msg << "parse error at line " << line + static_cast<std::size_t>(line_offset) << ", column " << column << ": "
        << detail;
    throw InputError(msg.str());
  }
}

std::vector<Json> parse_documents(const std::string& text) {
  if (Json::accept(text)) return {Json::parse(text)};
  // JSON lines only if the first nonblank line stands on its own
  std::istringstream probe(text);
  std::string first;
  while (std::getline(probe, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (first.find_first_not_of(" \t\r") == std::string::npos) throw InputError("empty input");
  if (!Json::accept(first)) parse_json(text);
  std::vector<Json> docs;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    docs.push_back(parse_json(line, number - 1));
  }
  if (docs.empty()) throw InputError("empty input");
  return docs;
}

Json to_json(const GroupType& g) { return {{"p", g.p()}, {"lambda", g.input_lambda()}}; }

GroupTypePtr group_from_json(const Json& j) {
  const Json& p = field(j, "p");
  if (!p.is_number_unsigned()) throw InputError("\"p\" must be a positive integer");
  std::vector<int> lambda;
  for (auto e : int_vector(field(j, "lambda"), "\"lambda\"")) lambda.push_back(static_cast<int>(e));
  try {
    return make_group(p.get<std::uint64_t>(), lambda);
  } catch (const Error& e) {
    throw InputError(std::string("invalid group: ") + e.what());
  }
}

Json to_json(const Element& x) { return x.input_coeffs(); }

Element element_from_json(const GroupTypePtr& g, const Json& j) {
  auto coeffs = int_vector(j, "element");
  if (static_cast<int>(coeffs.size()) != g->rank())
    throw InputError("element has " + std::to_string(coeffs.size()) + " coordinates, expected " +
                     std::to_string(g->rank()));
  return Element(g, coeffs);
}

Json to_json(const SubgroupPresentation& s) {
  const auto& g = s.group();
  ResidueMatrix cols(s.howell().rows(), g.rank());
  for (int i = 0; i < g.rank(); ++i) cols.col(g.input_index(i)) = s.howell().col(i);
  return {{"howell", matrix_json(cols)}, {"order_exp", s.order_exp()}};
}

SubgroupPresentation subgroup_from_json(const GroupTypePtr& g, const Json& j) {
  const char* key = j.is_object() && j.contains("generators") ? "generators" : "howell";
  const Json& rows = field(j, key);
  if (!rows.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of elements");
  std::vector<Element> gens;
  for (const auto& r : rows) gens.push_back(element_from_json(g, r));
  return howellize(g, gens);
}

Json instance_to_json(const SubgroupPresentation& u) {
  Json j = to_json(u.group());
  Json gens = Json::array();
  for (const auto& x : u.generators()) gens.push_back(to_json(x));
  j["subgroup"] = {{"generators", gens}};
  return j;
}

SubgroupPresentation instance_from_json(const Json& j) {
  GroupTypePtr g = group_from_json(j);
  return subgroup_from_json(g, field(j, "subgroup"));
}

Json to_json(const Multiplicities& m) {
  Json a = Json::array();
  for (const auto& [pk, count] : m) a.push_back({{"n", pk.n}, {"l", pk.l}, {"mult", count}});
  return a;
}

Multiplicities multiplicities_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("\"pickets\" must be an array");
  Multiplicities m;
  for (const auto& e : j) {
    int count = field(e, "mult").get<int>();
    if (count != 0) m[{field(e, "n").get<int>(), field(e, "l").get<int>()}] += count;
  }
  return m;
}

Json to_json(const SubgroupPresentation& u, const PicketDecomposition& d) {
  Json j = instance_to_json(u);
  j["mode"] = to_string(d.mode);
  j["pickets"] = to_json(d.multiplicities);
  j["certificate"] = {{"C", generators_json(d.full)}, {"Cprime", generators_json(d.partial)}};
  return j;
}

PicketDecomposition decomposition_from_json(const GroupTypePtr& g, const Json& j) {
  std::string mode = field(j, "mode").get<std::string>();
  if (mode != "f1" && mode != "s1") throw InputError("\"mode\" must be \"f1\" or \"s1\"");
  const Json& cert = field(j, "certificate");
  return {mode == "f1" ? Mode::f1 : Mode::s1, multiplicities_from_json(field(j, "pickets")),
          generators_from_json(g, field(cert, "C")), generators_from_json(g, field(cert, "Cprime"))};
}

Json to_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witness) w.push_back(to_json(x));
  Json j = {{"accepted", v.accepted}};
  if (!v.accepted) {
    j["kind"] = to_string(v.kind);
    j["description"] = v.description;
    j["witness"] = w;
  }
  return j;
}

Json to_json(const BruteInvariants& b) {
  Json levels = Json::array();
  for (const auto& lv : b.levels)
    levels.push_back({{"n", lv.n},
                      {"G_n", lv.level_exp},
                      {"U_n", lv.subgroup_exp},
                      {"G_n-1+U_n", lv.lower_plus_sub_exp},
                      {"G_n-1+pG_n", lv.lower_plus_p_exp}});
  Json heights = Json::object();
  for (const auto& [h, c] : b.socle_heights) heights[std::to_string(h)] = c;
  Json j = {{"order_exp", b.order_exp},
            {"subgroup_order_exp", b.subgroup_exp},
            {"levels", levels},
            {"meet_p_power_exp", b.meet_p_power_exp},
            {"socle_heights", heights},
            {"f1", b.f1_eligible},
            {"s1", b.s1_eligible}};
  if (b.f1_eligible) j["f1_pickets"] = to_json(b.f1_multiplicities());
  if (b.s1_eligible) j["s1_pickets"] = to_json(b.s1_multiplicities());
  return j;
}

Json to_json(const RemarkReport& r) {
  return {{"N", r.n}, {"coset_height", r.coset_height}, {"pickets", to_json(r.decomposition.multiplicities)}};
}

InstanceSpec instance_spec_from_json(const Json& j, std::uint64_t default_seed) {
  GroupTypePtr g = group_from_json(j);
  std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "f1";
  InstanceMode m;
  if (mode == "f1")
    m = InstanceMode::f1;
  else if (mode == "s1")
    m = InstanceMode::s1;
  else if (mode == "ineligible")
    m = InstanceMode::ineligible;
  else
    throw InputError("\"mode\" must be f1, s1 or ineligible");
  std::uint64_t seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : default_seed;
  return {g->p(), g->input_lambda(), m, seed};
}

OperatorPair operator_from_json(const Json& j) {
  const Json& p = field(j, "p");
  if (!p.is_number_unsigned() || !is_prime(p.get<std::uint64_t>())) throw InputError("\"p\" must be a prime");
  OperatorPair op{p.get<std::uint64_t>(), {}, {}};
  const Json& t = field(j, "T");
  if (!t.is_array() || t.empty()) throw InputError("\"T\" must be a nonempty square matrix");
  const auto n = static_cast<Eigen::Index>(t.size());
  const ChainRing field_p(op.p, 1);
  op.t.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto row = int_vector(t[static_cast<std::size_t>(i)], "\"T\" row");
    if (static_cast<Eigen::Index>(row.size()) != n) throw InputError("\"T\" must be square");
    for (Eigen::Index c = 0; c < n; ++c) op.t(i, c) = field_p.reduce(row[static_cast<std::size_t>(c)]);
  }
  const Json& u = j.contains("U") ? j.at("U") : Json::array();
  if (!u.is_array()) throw InputError("\"U\" must be an array of vectors");
  for (const auto& v : u) {
    auto row = int_vector(v, "\"U\" vector");
    if (static_cast<Eigen::Index>(row.size()) != n) throw InputError("\"U\" vectors must have length dim");
    ResidueVector r(n);
    for (Eigen::Index c = 0; c < n; ++c) r(c) = field_p.reduce(row[static_cast<std::size_t>(c)]);
    op.u_basis.push_back(std::move(r));
  }
  return op;
}

Json to_json(const OperatorPair& op) {
  Json u = Json::array();
  for (const auto& v : op.u_basis) u.push_back(vector_json(v));
  return {{"p", op.p}, {"T", matrix_json(op.t)}, {"U", u}};
}

Json to_json(const JordanCertificate& c) {
  return {{"Q", matrix_json(c.q)}, {"block_sizes", c.block_sizes}, {"U_columns", c.u_columns}};
}

}  // namespace picketlab
