// hcircle: decide whether a rational curve is defined over K and compute the
// standard parametrization of its hypercircle.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hcircle/bench.hpp"
#include "hcircle/error.hpp"
#include "hcircle/hypercircle.hpp"
#include "hcircle/instance.hpp"
#include "hcircle/minfield.hpp"
#include "hcircle/witness.hpp"

using namespace hcircle;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNotDefined = 1, kInputError = 2, kInvariant = 3 };

std::string certificate_text(const HypercircleResult& r) {
  const ClassReport* c = r.certificate();
  if (!c) return "";
  std::ostringstream os;
  os << "class " << to_string(c->cls.factor, "x") << ": ";
  if (c->status == ClassStatus::NotAttainedTwice) {
    os << "not attained at t = " << to_string(c->not_attained[0]) << ", " << to_string(c->not_attained[1]);
  } else {
    os << "identity check failed for u = " << (c->u ? to_string(*c->u) : "?");
  }
  return os.str();
}

json class_json(const ClassReport& c) {
  json j = {{"factor", to_string(c.cls.factor, "x")},
            {"status", to_string(c.status)},
            {"params_tried", c.verdicts.size()}};
  if (c.u) j["u"] = to_string(*c.u);
  return j;
}

int cmd_compute(const std::string& path, bool verify) {
  const Instance inst = load_instance(path);
  const HypercircleResult r = standard_parametrization(inst.psi, inst.minpoly);
  json out;
  if (r.defined) {
    Instance phi = inst;
    phi.psi = r.phi;
    out = json::parse(serialize_instance(phi));
  } else {
    out["field"] = json::parse(serialize_instance(inst))["field"];
    out["verdict"] = "NotDefinedOverK";
    out["certificate"] = certificate_text(r);
  }
  out["classes"] = json::array();
  for (const auto& c : r.classes) out["classes"].push_back(class_json(c));

  int code = r.defined ? kOk : kNotDefined;
  if (verify && r.defined) {
    // The witness variety is only built for small n and d.
    if (inst.extension_degree() > 3 || inst.psi.degree() > 6) {
      out["witness"] = "skipped";
    } else {
      const WeilSystem w = weil_substitution(inst.psi, inst.minpoly);
      const bool ok = check_on_witness(w, r.phi);
      out["witness"] = ok;
      if (!ok) code = kInvariant;
    }
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

int cmd_definable(const std::string& path) {
  const Instance inst = load_instance(path);
  const HypercircleResult r = standard_parametrization(inst.psi, inst.minpoly);
  if (r.defined) {
    std::cout << "DefinedOverK\n";
    return kOk;
  }
  std::cout << "NotDefinedOverK\n" << certificate_text(r) << "\n";
  return kNotDefined;
}

int cmd_minfield(const std::string& path) {
  const Instance inst = load_instance(path);
  const HypercircleResult r = standard_parametrization(inst.psi, inst.minpoly);
  const FixedField l = minimum_field(r);
  std::cout << "verdict: " << (r.defined ? "DefinedOverK" : "NotDefinedOverK") << "\n";
  std::cout << "degree: " << l.degree() << "\n";
  std::cout << "basis:";
  for (const auto& b : l.basis) std::cout << " [" << to_string(b) << "]";
  std::cout << "\nprimitive: " << to_string(l.primitive) << "\n";
  std::cout << "minpoly: " << to_string(lift_poly(l.primitive_minpoly, nullptr), "x") << "\n";
  return kOk;
}

struct GenArgs {
  std::string kind = "defined";
  int degree = 2;
  std::string minpoly_file;
  int ext_degree = 0;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  GenOptions opts;
  opts.kind = parse_instance_kind(a.kind);
  opts.degree = a.degree;
  opts.seed = a.seed;
  if (!a.minpoly_file.empty()) {
    opts.field = load_field_spec(a.minpoly_file);
  } else if (a.ext_degree > 0) {
    opts.ext_degree = a.ext_degree;
  } else {
    throw InputError("gen needs --minpoly-file or --ext-degree");
  }
  const GeneratedInstance g = gen_instance(opts);
  if (a.output.empty() || a.output == "-") {
    std::cout << serialize_instance(g.instance);
  } else {
    save_instance(g.instance, a.output);
  }
  for (const auto& rel : g.relations) std::cerr << to_string(rel) << "\n";
  return kOk;
}

struct BenchArgs {
  std::vector<int> degrees;
  std::vector<std::string> minpoly_files;
  int ext_degree = 0;
  int seeds = 1;
  std::string kind = "defined";
  unsigned threads = 0;
  std::string output;
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig cfg;
  cfg.degrees = a.degrees;
  cfg.seeds = a.seeds;
  cfg.kind = parse_instance_kind(a.kind);
  cfg.threads = a.threads;
  for (const auto& f : a.minpoly_files) cfg.fields.push_back(load_field_spec(f));
  if (a.ext_degree > 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(a.ext_degree));
    cfg.fields.push_back({"a", random_minpoly(a.ext_degree, rng)});
  }
  if (cfg.fields.empty()) throw InputError("bench needs --minpoly-file or --ext-degree");
  const auto records = run_bench(cfg);
  for (const auto& r : records)
    if (r.verdict == "error") std::cerr << "degree " << r.degree << " seed " << r.seed << ": " << r.error << "\n";
  if (a.output.empty() || a.output == "-") {
    write_csv(std::cout, records);
  } else {
    std::ofstream out(a.output);
    if (!out) throw InputError("cannot write " + a.output);
    write_csv(out, records);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Field of definition of rational curves via hypercircles"};
  app.require_subcommand(1);

  std::string file;
  bool verify = false;
  auto* compute = app.add_subcommand("compute", "Standard parametrization of the hypercircle");
  compute->add_option("file", file, "Instance file")->required();
  compute->add_flag("--verify-witness", verify, "Check the result against the witness variety (n <= 3, d <= 6)");

  auto* definable = app.add_subcommand("definable", "Decide whether the curve is defined over K");
  definable->add_option("file", file, "Instance file")->required();

  auto* minfield = app.add_subcommand("minfield", "Minimum field of definition");
  minfield->add_option("file", file, "Instance file")->required();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", ga.kind, "defined, twisted or adversarial");
  gen->add_option("--degree", ga.degree, "Curve degree")->required();
  auto* gmf = gen->add_option("--minpoly-file", ga.minpoly_file, "JSON field description");
  gen->add_option("--ext-degree", ga.ext_degree, "Degree of a random minimal polynomial")->excludes(gmf);
  gen->add_option("--seed", ga.seed, "64-bit seed");
  gen->add_option("-o,--output", ga.output, "Output file (stdout when omitted)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run the pipeline on generated instances and write CSV");
  bench->add_option("--degrees", ba.degrees, "Comma-separated curve degrees")->delimiter(',')->required();
  bench->add_option("--minpoly-file", ba.minpoly_files, "JSON field description (repeatable)");
  bench->add_option("--ext-degree", ba.ext_degree, "Add a random minimal polynomial of this degree");
  bench->add_option("--seeds", ba.seeds, "Seeds 1..k per degree and field");
  bench->add_option("--kind", ba.kind, "defined or twisted");
  bench->add_option("--threads", ba.threads, "Worker threads (0: all cores)");
  bench->add_option("-o,--output", ba.output, "CSV output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*compute) return cmd_compute(file, verify);
    if (*definable) return cmd_definable(file);
    if (*minfield) return cmd_minfield(file);
    if (*gen) return cmd_gen(ga);
    if (*bench) return cmd_bench(ba);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kInputError;
}
