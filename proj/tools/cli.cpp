#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopfforge/decompose.hpp"
#include "hopfforge/errors.hpp"
#include "hopfforge/findimalg.hpp"
#include "hopfforge/groups.hpp"
#include "hopfforge/lattice.hpp"
#include "hopfforge/yd.hpp"

namespace hopfforge::cli {

namespace {

constexpr const char* kFormatTag = "hopfforge-instance";
constexpr int kFormatVersion = 1;
constexpr unsigned kAntipodeBound = 64;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string example;
  std::string custom;
  std::string instance;
  std::string out;
  std::string group;
  std::string format = "json";
  std::string oracle = "on";
  unsigned n = 0;
  unsigned m = 0;
  unsigned conductor = 0;
  bool normal_only = false;
  bool unique_normal = false;
  bool build = false;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoFailure("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw IoFailure("cannot write '" + path + "'");
  o << content;
  if (!o) throw IoFailure("write to '" + path + "' failed");
}

BiproductInstance load_instance_file(const std::string& path) {
  const nlohmann::json j = read_json_file(path);
  if (!j.is_object() || j.value("format", std::string{}) != kFormatTag)
    throw IoFailure("'" + path + "' is not an instance file");
  if (j.value("version", 0) != kFormatVersion) throw IoFailure("'" + path + "' has an unsupported version");
  try {
    const HopfData stored = hopf_from_json(j.at("hopf"));
    BiproductInstance inst = build_from_spec(j.at("spec"), j.at("name").get<std::string>());
    if (!structurally_equal(stored, inst.A))
      throw IoFailure("'" + path + "' does not match its construction spec");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw IoFailure("corrupt instance file '" + path + "': " + e.what());
  } catch (const MalformedInput& e) {
    throw IoFailure("corrupt instance file '" + path + "': " + e.what());
  } catch (const PreconditionError& e) {
    throw IoFailure("corrupt instance file '" + path + "': " + e.what());
  }
}

BiproductInstance instance_from(const Options& o) {
  const int sources = !o.example.empty() + !o.custom.empty() + !o.instance.empty();
  if (sources != 1)
    throw PreconditionError("source", "give exactly one of --example, --custom or an instance file");
  if (!o.instance.empty()) {
    if (o.n || o.m || o.conductor)
      throw PreconditionError("source", "--n, --m and --conductor apply to --example and --custom only");
    return load_instance_file(o.instance);
  }
  if (!o.example.empty()) return build_example(o.example, {o.n, o.m, o.conductor});
  nlohmann::json spec = read_json_file(o.custom);
  if (o.conductor) spec["conductor"] = o.conductor;
  return build_from_spec(spec, std::filesystem::path(o.custom).stem().string());
}

/// No report is emitted for an instance failing the Hopf axioms.
nlohmann::json verification(const HopfData& h) {
  const AxiomReport r = verify_hopf(h);
  if (!r.passed()) throw InternalConsistencyError("verify_hopf failed: " + r.first_failure());
  return r.to_json();
}

nlohmann::json instance_header(const BiproductInstance& inst, const nlohmann::json& verify) {
  return {{"name", inst.name},
          {"dim", inst.A.dim()},
          {"conductor", inst.ctx().conductor()},
          {"verification", verify}};
}

std::string axiom_line(const nlohmann::json& verify) {
  std::size_t checked = 0, failed = 0;
  for (const auto& c : verify.at("checks")) {
    checked += c.at("checked").get<std::size_t>();
    failed += c.at("failed").get<std::size_t>();
  }
  std::ostringstream s;
  s << (verify.at("passed").get<bool>() ? "passed" : "FAILED") << " (" << verify.at("checks").size()
    << " axioms, " << checked << " identities, " << failed << " failures)";
  return s.str();
}

std::string pairs_text(const nlohmann::json& list, const char* key, const char* val) {
  std::ostringstream s;
  bool first = true;
  for (const auto& e : list) {
    s << (first ? "" : ", ") << e.at(key).get<std::size_t>() << ":" << e.at(val).get<std::size_t>();
    first = false;
  }
  return "{" + s.str() + "}";
}

// ------------------------------------------------------------------ build

nlohmann::json cmd_build(const Options& o) {
  const BiproductInstance inst = instance_from(o);
  const nlohmann::json verify = verification(inst.A);
  const auto order = antipode_order(inst.A, kAntipodeBound);
  nlohmann::json rep = instance_header(inst, verify);
  rep["command"] = "build";
  rep["instance"] = inst.report();
  rep["antipode_order"] = order ? nlohmann::json(*order) : nlohmann::json(nullptr);
  rep["commutative"] = is_commutative(inst.A.algebra);
  rep["cocommutative"] = is_cocommutative(inst.A.coalgebra);
  rep["grouplike_invariants"] = group_invariants(grouplikes(inst).group);
  rep["out"] = o.out.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.out);
  if (!o.out.empty()) write_file(o.out, instance_file_json(inst).dump() + "\n");
  return rep;
}

std::string build_text(const nlohmann::json& r) {
  std::ostringstream s;
  const auto& i = r.at("instance");
  s << "instance        " << r.at("name").get<std::string>() << "\n"
    << "dim             " << r.at("dim") << "\n"
    << "conductor       " << r.at("conductor") << "\n"
    << "|calG| |G| |U|  " << i.at("calG_order") << " " << i.at("G_order") << " " << i.at("U_order") << "\n"
    << "orbit lengths   " << i.at("orbit_lengths").dump() << "\n"
    << "grouplikes      " << r.at("grouplike_invariants").dump() << "\n"
    << "antipode order  " << r.at("antipode_order").dump() << "\n"
    << "commutative     " << r.at("commutative") << "\n"
    << "cocommutative   " << r.at("cocommutative") << "\n"
    << "verify_hopf     " << axiom_line(r.at("verification")) << "\n";
  if (!r.at("out").is_null()) s << "written         " << r.at("out").get<std::string>() << "\n";
  return s.str();
}

// -------------------------------------------------------------- decompose

nlohmann::json cmd_decompose(const Options& o) {
  const BiproductInstance inst = instance_from(o);
  const nlohmann::json verify = verification(inst.A);
  nlohmann::json rep = instance_header(inst, verify);
  const nlohmann::json d = decomposition_report(inst, o.oracle == "on");
  for (const auto& [k, v] : d.items())
    if (!rep.contains(k)) rep[k] = v;
  rep["command"] = "decompose";
  return rep;
}

std::string decompose_text(const nlohmann::json& r) {
  std::ostringstream s;
  s << "instance        " << r.at("name").get<std::string>() << "\n"
    << "dim             " << r.at("dim") << "\n"
    << "conductor       " << r.at("conductor") << "\n"
    << "coalgebra r:mult " << pairs_text(r.at("coalgebra"), "r", "mult") << "\n"
    << "algebra n:mult  " << pairs_text(r.at("algebra"), "n", "mult") << "\n"
    << "algebra route   " << r.at("algebra_route").get<std::string>() << "\n"
    << "oracle check    " << r.at("oracle_check").dump() << "\n"
    << "grouplikes      order " << r.at("grouplikes").at("order") << ", "
    << r.at("grouplikes").at("invariants").dump() << "\n"
    << "verify_hopf     " << axiom_line(r.at("verification")) << "\n";
  return s.str();
}

// ------------------------------------------------------------ subalgebras

bool unique_normal_applies(const BiproductInstance& inst) {
  if (!trivial_action_hypothesis(inst) || inst.calG.is_abelian() || !is_simple(inst.calG)) return false;
  const std::size_t p = inst.theta.order();
  if (p < 2 || inst.G.order() != p) return false;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

nlohmann::json cmd_subalgebras(const Options& o) {
  const BiproductInstance inst = instance_from(o);
  const nlohmann::json verify = verification(inst.A);
  nlohmann::json rep = instance_header(inst, verify);
  rep["command"] = "subalgebras";
  rep["trivial_action_hypothesis"] = trivial_action_hypothesis(inst);

  const auto subs = enumerate_hopf_subalgebras(inst);
  nlohmann::json list = nlohmann::json::array();
  std::size_t normal_count = 0;
  for (const auto& d : subs) {
    const NormalityReport n = is_normal(inst, d);
    normal_count += n.normal;
    if (o.normal_only && !n.normal) continue;
    nlohmann::json e = d.to_json(inst);
    e["normal"] = n.normal;
    e["normality_method"] = n.method;
    list.push_back(std::move(e));
  }
  rep["enumerated"] = subs.size();
  rep["normal_count"] = normal_count;
  rep["normal_only"] = o.normal_only;
  rep["subalgebras"] = std::move(list);

  if (o.unique_normal || unique_normal_applies(inst))
    rep["unique_normal"] = verify_unique_normal(inst).to_json(inst);
  else
    rep["unique_normal"] = nullptr;
  return rep;
}

std::string subalgebras_text(const nlohmann::json& r) {
  std::ostringstream s;
  s << "instance        " << r.at("name").get<std::string>() << "\n"
    << "dim             " << r.at("dim") << "\n"
    << "conductor       " << r.at("conductor") << "\n"
    << "enumerated      " << r.at("enumerated") << "\n"
    << "normal          " << r.at("normal_count") << "\n\n"
    << "  dim  |calG_A|  |G_A|  |N_A|  |calN_A|  normal  lower_bound\n";
  for (const auto& e : r.at("subalgebras")) {
    char line[128];
    std::snprintf(line, sizeof line, "%5zu  %8zu  %5zu  %5zu  %8zu  %-6s  %s\n", e.at("dim").get<std::size_t>(),
                  e.at("calG_A_order").get<std::size_t>(), e.at("G_A_order").get<std::size_t>(),
                  e.at("N_A_order").get<std::size_t>(), e.at("calN_A_order").get<std::size_t>(),
                  e.at("normal").get<bool>() ? "yes" : "no",
                  e.at("is_lower_bound_equal").get<bool>() ? "yes" : "no");
    s << line;
  }
  if (!r.at("unique_normal").is_null()) {
    const auto& u = r.at("unique_normal");
    s << "\nunique normal   " << u.at("normal").size() << " normal of " << u.at("enumerated")
      << ", quotient certified " << u.at("quotient").at("certified") << "\n";
  }
  return s.str();
}

// ------------------------------------------------------------------ rank2

/// sum c_i z^i with z = zeta_N, from the scalar JSON form.
std::string scalar_text(const nlohmann::json& v) {
  std::string s;
  const auto& c = v.at("coeffs");
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string q = c[i].get<std::string>();
    if (q.size() > 2 && q.compare(q.size() - 2, 2, "/1") == 0) q.resize(q.size() - 2);
    if (q == "0") continue;
    const bool neg = q.front() == '-';
    if (neg) q.erase(0, 1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (i == 0 || q != "1") s += q;
    if (i > 0) s += i == 1 ? "z" : "z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

nlohmann::json biproduct_summary(const YDStructure& yd) {
  const AxiomReport braided = verify_braided_bialgebra(yd);
  if (!braided.passed()) throw InternalConsistencyError("braided bialgebra check failed: " + braided.first_failure());
  const HopfData bp = biproduct_hopf(yd);
  const nlohmann::json verify = verification(bp);
  const auto order = antipode_order(bp, kAntipodeBound);
  return {{"dim", bp.dim()},
          {"verification", verify},
          {"antipode_order", order ? nlohmann::json(*order) : nlohmann::json(nullptr)},
          {"B_normalized_integral", normalized_left_integral(yd.B_alg, yd.B_coalg).has_value()}};
}

nlohmann::json cmd_rank2(const Options& o) {
  if (o.group.empty()) throw PreconditionError("group", "rank2 needs --group");
  const FiniteGroup G = parse_group_spec(parse_group_argument(o.group));
  if (G.order() > order_cap())
    throw CapExceeded("group order " + std::to_string(G.order()) + " exceeds the cap " +
                      std::to_string(order_cap()));
  const unsigned conductor = o.conductor ? o.conductor : static_cast<unsigned>(G.exponent());
  const FieldContext& ctx = FieldContext::get(conductor);
  const HopfData H = group_algebra_hopf(G, ctx);

  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : rank2_classify(G, ctx)) {
    nlohmann::json e = w.to_json();
    if (o.build) e["biproduct"] = biproduct_summary(build_B_alpha_y(H, w));
    witnesses.push_back(std::move(e));
  }
  nlohmann::json trivial = {{"kind", "k[Z2]"}};
  if (o.build) trivial["biproduct"] = biproduct_summary(rank2_group_solution(H));

  return {{"command", "rank2"},
          {"group_order", G.order()},
          {"group_invariants", group_invariants(G)},
          {"conductor", conductor},
          {"verification", verification(H)},
          {"witness_count", witnesses.size()},
          {"witnesses", witnesses},
          {"trivial_solution", trivial}};
}

std::string rank2_text(const nlohmann::json& r) {
  std::ostringstream s;
  s << "group           order " << r.at("group_order") << ", " << r.at("group_invariants").dump() << "\n"
    << "conductor       " << r.at("conductor") << "\n"
    << "witnesses       " << r.at("witness_count") << " nontrivial, plus k[Z2]\n"
    << "                (z = primitive root of unity of order " << r.at("conductor") << ")\n";
  auto biproduct = [&](const nlohmann::json& e) {
    if (!e.contains("biproduct")) return std::string{};
    const auto& b = e.at("biproduct");
    return "  dim " + b.at("dim").dump() + "  antipode order " + b.at("antipode_order").dump() + "  " +
           axiom_line(b.at("verification"));
  };
  for (const auto& w : r.at("witnesses")) {
    std::ostringstream a;
    bool first = true;
    for (const auto& v : w.at("alpha")) {
      a << (first ? "" : ", ") << scalar_text(v);
      first = false;
    }
    s << "  y=" << w.at("y") << "  alpha=(" << a.str() << ")" << biproduct(w) << "\n";
  }
  s << "  k[Z2]" << biproduct(r.at("trivial_solution")) << "\n";
  return s.str();
}

// ------------------------------------------------------------------ errors

nlohmann::json error_json(const char* kind, const std::string& name, const std::string& message, int code) {
  return {{"error", {{"kind", kind}, {"name", name}, {"message", message}}}, {"exit_code", code}};
}

}  // namespace

nlohmann::json instance_file_json(const BiproductInstance& inst) {
  return {{"format", kFormatTag},
          {"version", kFormatVersion},
          {"name", inst.name},
          {"spec", inst.spec},
          {"report", inst.report()},
          {"verification", verification(inst.A)},
          {"hopf", hopf_to_json(inst.A)}};
}

nlohmann::json parse_group_argument(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedInput(std::string("group spec: ") + e.what());
    }
  }
  if (std::filesystem::exists(text)) return read_json_file(text);

  // Shorthand Z<n>[xZ<n>...].
  nlohmann::json factors = nlohmann::json::array();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('x', pos), text.size());
    const std::string tok = text.substr(pos, end - pos);
    if (tok.size() < 2 || tok[0] != 'Z' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
      throw MalformedInput("group '" + text + "' is neither JSON, a file, nor of the form Z2xZ4");
    factors.push_back({{"kind", "cyclic"}, {"n", std::stoul(tok.substr(1))}});
    pos = end + 1;
  }
  if (factors.size() == 1) return factors[0];
  return {{"kind", "product"}, {"factors", factors}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and decompositions of biproduct Hopf algebras", "hopfforge"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* c) {
    c->add_option("--example", o.example, "registry example: " + [] {
      std::string s;
      for (const auto& n : example_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
    c->add_option("--n", o.n, "example parameter n");
    c->add_option("--m", o.m, "example parameter m");
    c->add_option("--custom", o.custom, "construction spec JSON file");
    c->add_option("--conductor", o.conductor, "cyclotomic conductor override");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* build = app.add_subcommand("build", "construct and verify an instance");
  add_source(build);
  add_format(build);
  build->add_option("--out", o.out, "write the instance file here");

  CLI::App* decompose = app.add_subcommand("decompose", "coalgebra and algebra decompositions");
  decompose->add_option("instance", o.instance, "instance file from build");
  add_source(decompose);
  add_format(decompose);
  decompose->add_option("--oracle-check", o.oracle, "compare with the Wedderburn oracle")
      ->check(CLI::IsMember({"on", "off"}));

  CLI::App* subalgebras = app.add_subcommand("subalgebras", "Hopf subalgebras spanned by pairs");
  subalgebras->add_option("instance", o.instance, "instance file from build");
  add_source(subalgebras);
  add_format(subalgebras);
  subalgebras->add_flag("--normal-only", o.normal_only, "list only normal subalgebras");
  subalgebras->add_flag("--unique-normal", o.unique_normal,
                        "require the unique-normal check for simple nonabelian calG");

  CLI::App* rank2 = app.add_subcommand("rank2", "two-dimensional Hopf algebras in YD over k[G]");
  rank2->add_option("--group", o.group, "group spec: JSON, JSON file, or Z2xZ2 shorthand");
  rank2->add_option("--conductor", o.conductor, "cyclotomic conductor override");
  rank2->add_flag("--build", o.build, "build and verify every biproduct");
  add_format(rank2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.get_name(), e.what(), kPrecondition).dump() << "\n";
    return kPrecondition;
  }

  try {
    nlohmann::json rep;
    std::string text;
    if (build->parsed()) {
      rep = cmd_build(o);
      text = build_text(rep);
    } else if (decompose->parsed()) {
      rep = cmd_decompose(o);
      text = decompose_text(rep);
    } else if (subalgebras->parsed()) {
      rep = cmd_subalgebras(o);
      text = subalgebras_text(rep);
    } else {
      rep = cmd_rank2(o);
      text = rank2_text(rep);
    }
    out << (o.format == "text" ? text : rep.dump(2) + "\n");
    return kPass;
  } catch (const IoFailure& e) {
    err << error_json("io", "io", e.what(), kIo).dump() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    err << error_json("precondition", e.name(), e.what(), kPrecondition).dump() << "\n";
    return kPrecondition;
  } catch (const MalformedInput& e) {
    err << error_json("precondition", "malformed_input", e.what(), kPrecondition).dump() << "\n";
    return kPrecondition;
  } catch (const CapExceeded& e) {
    err << error_json("precondition", "order_cap", e.what(), kPrecondition).dump() << "\n";
    return kPrecondition;
  } catch (const FieldNotSplitting& e) {
    err << error_json("precondition", "field_not_splitting", e.what(), kPrecondition).dump() << "\n";
    return kPrecondition;
  } catch (const InternalConsistencyError& e) {
    err << error_json("internal", "internal_consistency", e.what(), kInternal).dump() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << error_json("internal", "unexpected", e.what(), kInternal).dump() << "\n";
    return kInternal;
  }
}

}  // namespace hopfforge::cli
