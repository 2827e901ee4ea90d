// deltachroma: exact chromatic symmetric functions for delta-matroids,
// framed graphs, and ribbon graphs, plus exhaustive structural verification
// sweeps. See README.md for the schemas and subcommands.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "deltachroma/binary.hpp"
#include "deltachroma/fourterm.hpp"
#include "deltachroma/graphs.hpp"
#include "deltachroma/hopf.hpp"
#include "deltachroma/json_io.hpp"
#include "deltachroma/ribbon.hpp"
#include "deltachroma/setsystem.hpp"
#include "deltachroma/symfunc.hpp"

namespace dc = deltachroma;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // usage or schema error
constexpr int kExitMathReject = 2;  // SEA violation or non-binary input
constexpr int kExitVerifyFailed = 3;

constexpr const char* kVersion = "1.0.0";

// DELTA_CHROMA_CAP and --cap lower caps; they never raise the hard ones.
int effective_cap(int hard_cap, int flag_cap) {
  int cap = hard_cap;
  if (flag_cap > 0) cap = std::min(cap, flag_cap);
  if (const char* env = std::getenv("DELTA_CHROMA_CAP")) {
    try {
      int v = std::stoi(env);
      if (v > 0) cap = std::min(cap, v);
    } catch (...) {
      throw dc::Error("DELTA_CHROMA_CAP must be a positive integer");
    }
  }
  return cap;
}

json make_header(const std::string& command) {
  return json{{"tool", "deltachroma"}, {"version", kVersion}, {"command", command}};
}

json read_input_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw dc::SchemaError("cannot open input file: " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw dc::SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw dc::Error("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw dc::Error("cannot open output file: " + out_path);
    f << text;
  }
}

std::string label_of(const std::vector<std::string>& labels, int i) {
  return (i >= 0 && i < static_cast<int>(labels.size())) ? labels[static_cast<size_t>(i)]
                                                         : std::to_string(i + 1);
}

json sea_witness_to_json(const dc::SeaWitness& w, const std::vector<std::string>& labels) {
  auto set_names = [&](dc::Mask m) {
    json out = json::array();
    for (int i = 0; m >> i; ++i)
      if (m & (dc::Mask{1} << i)) out.push_back(label_of(labels, i));
    return out;
  };
  return json{{"x", set_names(w.x)}, {"y", set_names(w.y)}, {"a", label_of(labels, w.a)}};
}

json sweep_witness_to_json(const dc::SweepWitness& w) {
  json out{{"what", w.what}, {"d", dc::set_system_to_json(w.d)}};
  if (w.a >= 0) {
    const auto labels = w.d.labels();
    out["pair"] = json::array({label_of(labels, w.a), label_of(labels, w.b)});
  }
  if (w.tuple) {
    out["d_first"] = dc::set_system_to_json(w.tuple->d_first.system());
    out["d_second"] = dc::set_system_to_json(w.tuple->d_second.system());
    out["d_both"] = dc::set_system_to_json(w.tuple->d_both.system());
  }
  if (!w.lhs.empty()) out["lhs"] = w.lhs;
  if (!w.rhs.empty()) out["rhs"] = w.rhs;
  return out;
}

json sweep_report_to_json(const dc::SweepReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(sweep_witness_to_json(w));
  return json{{"counts",
               {{"instances", r.instances}, {"passes", r.passes}, {"failures", r.failures}}},
              {"witnesses", std::move(witnesses)}};
}

struct ChromaticOptions {
  std::string input_path = "-";
  std::string format = "text";
  std::string out_path;
  bool specialize = false;
  int truncate = 0;
  std::string x_value;
};

int run_chromatic(const ChromaticOptions& opt, int cap_flag) {
  const int cap = effective_cap(dc::kGroundSetCap, cap_flag);
  dc::InputObject in = dc::parse_input(read_input_json(opt.input_path));
  dc::DeltaMatroid d = [&] {
    try {
      return dc::to_delta_matroid(in);
    } catch (const dc::SeaViolationError& e) {
      json j{{"error", "not a delta-matroid"},
             {"witness", sea_witness_to_json(e.witness, in.element_labels)}};
      std::cerr << j.dump(2) << "\n";
      std::exit(kExitMathReject);
    }
  }();
  if (d.size() > cap) throw dc::CapError("input ground set exceeds cap " + std::to_string(cap));
  if (!dc::binary_witness(d)) {
    std::cerr << "input delta-matroid is not binary: " << d.system().to_string() << "\n";
    return kExitMathReject;
  }
  dc::SymFunc s = dc::chromatic(dc::HopfElement::basis(d));
  if (!opt.x_value.empty()) {
    dc::XPoly parsed = dc::XPoly::parse(opt.x_value);
    if (parsed.degree() > 0) throw dc::Error("--x expects a rational constant");
    dc::Rational r = parsed.coeff(0);
    dc::SymFunc substituted;
    for (const auto& [part, coeff] : s.terms())
      substituted.add_term(part, dc::XPoly(coeff.evaluate(r)));
    s = std::move(substituted);
  }
  if (opt.specialize) {
    dc::TPoly t = dc::specialize_all(s);
    if (opt.format == "json") {
      json coeffs = json::array();
      for (const auto& c : t.coeffs()) coeffs.push_back(c.to_string());
      emit(json{{"schema", "tpoly/v1"},
                {"header", make_header("chromatic")},
                {"coeffs_ascending", std::move(coeffs)},
                {"rendered", t.to_string()}},
           opt.out_path);
    } else {
      emit_text(t.to_string() + "\n", opt.out_path);
    }
    return kExitOk;
  }
  if (opt.truncate > 0) {
    dc::CPoly c = dc::evaluate_truncated(s, opt.truncate);
    if (opt.format == "json") {
      json terms = json::array();
      for (const auto& [exps, coeff] : c.terms())
        terms.push_back(json{{"exponents", exps}, {"coeff", coeff.to_string()}});
      emit(json{{"schema", "cpoly/v1"},
                {"header", make_header("chromatic")},
                {"variables", opt.truncate},
                {"terms", std::move(terms)}},
           opt.out_path);
    } else {
      emit_text(c.to_string() + "\n", opt.out_path);
    }
    return kExitOk;
  }
  if (opt.format == "json") {
    json j = dc::symfunc_to_json(s);
    j["header"] = make_header("chromatic");
    emit(j, opt.out_path);
  } else {
    emit_text(s.to_string() + "\n", opt.out_path);
  }
  return kExitOk;
}

struct ConvertOptions {
  std::string input_path = "-";
  std::string format = "json";
  std::string out_path;
};

int run_convert(const ConvertOptions& opt, int cap_flag) {
  const int cap = effective_cap(dc::kGroundSetCap, cap_flag);
  dc::InputObject in = dc::parse_input(read_input_json(opt.input_path));
  json out{{"schema", "convert-report/v1"}, {"header", make_header("convert")}};
  dc::SetSystem raw = [&] {
    switch (in.kind) {
      case dc::InputKind::set_system: return *in.set_system;
      case dc::InputKind::f2_matrix: return dc::delta_matroid_of_matrix(*in.matrix).system();
      case dc::InputKind::framed_graph:
        return dc::delta_matroid_of_framed_graph(*in.framed_graph).system();
      case dc::InputKind::ribbon: return dc::delta_matroid_of_ribbon_graph(*in.ribbon).system();
    }
    throw dc::Error("unreachable");
  }();
  if (raw.size() > cap) throw dc::CapError("ground set exceeds cap " + std::to_string(cap));
  dc::SetSystem labeled(raw.size(), raw.feasible(), in.element_labels);
  out["set_system"] = dc::set_system_to_json(labeled);
  auto emit_report = [&] {
    if (opt.format == "json") {
      emit(out, opt.out_path);
      return;
    }
    std::string text = labeled.to_string() + "\n";
    for (const char* flag : {"is_delta_matroid", "is_binary", "is_even", "is_graphical"})
      if (out.contains(flag))
        text += std::string(flag) + ": " + (out[flag].get<bool>() ? "yes" : "no") + "\n";
    if (out.contains("sea_witness")) text += "sea_witness: " + out["sea_witness"].dump() + "\n";
    if (out.contains("connected_blocks"))
      text += "connected_blocks: " + out["connected_blocks"].dump() + "\n";
    emit_text(text, opt.out_path);
  };
  auto violation = dc::sea_violation(labeled);
  out["is_delta_matroid"] = !violation.has_value();
  if (violation) {
    out["sea_witness"] = sea_witness_to_json(*violation, in.element_labels);
    emit_report();
    return kExitMathReject;
  }
  dc::DeltaMatroid d = dc::trusted_delta_matroid(labeled);
  auto witness = dc::binary_witness(d);
  out["is_binary"] = witness.has_value();
  if (witness) {
    json tw = json::array();
    for (int i = 0; *witness >> i; ++i)
      if (*witness & (dc::Mask{1} << i)) tw.push_back(label_of(in.element_labels, i));
    out["binary_twist_witness"] = std::move(tw);
  }
  out["is_even"] = dc::is_even(d);
  out["is_graphical"] = dc::is_graphical(d);
  json blocks = json::array();
  for (dc::Mask block : dc::factorize_connected(d).blocks) {
    json b = json::array();
    for (int i = 0; block >> i; ++i)
      if (block & (dc::Mask{1} << i)) b.push_back(label_of(in.element_labels, i));
    blocks.push_back(std::move(b));
  }
  out["connected_blocks"] = std::move(blocks);
  emit_report();
  return kExitOk;
}

struct VerifyOptions {
  std::string kind;
  int grading = 0;
  bool even_only = false;
  int jobs = 1;
  std::string invariant = "both";
  std::string format = "json";
  std::string out_path;
};

int run_verify(const VerifyOptions& opt, int cap_flag) {
  json report{{"header", make_header("verify " + opt.kind)},
              {"kind", opt.kind},
              {"grading", opt.grading},
              {"even_only", opt.even_only}};
  long long failures = 0;
  if (opt.kind == "span") {
    const int cap = effective_cap(dc::kEnumerateCap, cap_flag);
    if (opt.grading > cap) throw dc::CapError("grading exceeds cap " + std::to_string(cap));
    dc::SpanReport r = dc::primitive_value_span(opt.grading, opt.even_only);
    report["schema"] = "span-report/v1";
    report["classes"] = r.class_count;
    report["dimension"] = r.dimension;
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(b.to_string());
    report["basis"] = std::move(basis);
    json monos = json::object();
    for (size_t p = 0; p < r.monomial_in_span.size(); ++p)
      monos["x^" + std::to_string(p)] = static_cast<bool>(r.monomial_in_span[p]);
    report["monomial_in_span"] = std::move(monos);
    report["zero_linear_subspace_contained"] = r.zero_linear_subspace_contained;
    report["linear_term_in_span"] = r.linear_term_in_span;
    const bool pass = r.zero_linear_subspace_contained && r.dimension >= opt.grading;
    report["pass"] = pass;
    failures = pass ? 0 : 1;
  } else {
    dc::SweepReport r;
    if (opt.kind == "4t") {
      const int cap = effective_cap(dc::kEnumerateCap, cap_flag);
      if (opt.grading > cap) throw dc::CapError("grading exceeds cap " + std::to_string(cap));
      const bool character = opt.invariant == "character" || opt.invariant == "both";
      const bool chrom = opt.invariant == "chromatic" || opt.invariant == "both";
      r = dc::four_term_sweep(opt.grading, opt.even_only, character, chrom, opt.jobs);
      report["schema"] = "4t-report/v1";
      report["invariant"] = opt.invariant;
    } else if (opt.kind == "moves") {
      const int cap = effective_cap(dc::kEnumerateCap, cap_flag);
      if (opt.grading > cap) throw dc::CapError("grading exceeds cap " + std::to_string(cap));
      r = dc::move_algebra_sweep(opt.grading, opt.even_only, opt.jobs);
      report["schema"] = "moves-report/v1";
    } else if (opt.kind == "lemma-graphical") {
      const int cap = effective_cap(dc::kEnumerateCap, cap_flag);
      if (opt.grading > cap) throw dc::CapError("grading exceeds cap " + std::to_string(cap));
      r = dc::graphical_lemma_sweep(opt.grading, opt.even_only);
      report["schema"] = "lemma-graphical-report/v1";
    } else if (opt.kind == "interlacement") {
      const int cap = effective_cap(5, cap_flag);
      if (opt.grading > cap) throw dc::CapError("chord count exceeds cap " + std::to_string(cap));
      r = dc::interlacement_sweep(opt.grading);
      report["schema"] = "interlacement-report/v1";
    } else {
      throw dc::Error("unknown verify kind: " + opt.kind);
    }
    json body = sweep_report_to_json(r);
    report["counts"] = body["counts"];
    report["witnesses"] = body["witnesses"];
    failures = r.failures;
  }
  if (opt.format == "json") {
    emit(report, opt.out_path);
  } else {
    std::string text = report["kind"].get<std::string>() + " grading " +
                       std::to_string(opt.grading) + (opt.even_only ? " (even)" : "") + ": ";
    if (opt.kind == "span") {
      text += "dimension " + std::to_string(report["dimension"].get<int>()) +
              (report["pass"].get<bool>() ? " PASS" : " FAIL");
    } else {
      text += std::to_string(report["counts"]["passes"].get<long long>()) + "/" +
              std::to_string(report["counts"]["instances"].get<long long>()) + " passed";
    }
    emit_text(text + "\n", opt.out_path);
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

struct EnumerateOptions {
  int grading = 0;
  bool even_only = false;
  bool allow_large = false;
  std::string format = "json";
  std::string out_path;
};

int run_enumerate(const EnumerateOptions& opt, int cap_flag) {
  const int hard = opt.allow_large ? dc::kEnumerateHardCap : dc::kEnumerateCap;
  const int cap = effective_cap(hard, cap_flag);
  if (opt.grading > cap) throw dc::CapError("grading exceeds cap " + std::to_string(cap));
  auto classes = dc::enumerate_binary_delta_matroids(opt.grading, opt.even_only, opt.allow_large);
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& d : classes) list.push_back(dc::set_system_to_json(d.system()));
    emit(json{{"schema", "enumeration/v1"},
              {"header", make_header("enumerate")},
              {"grading", opt.grading},
              {"even_only", opt.even_only},
              {"count", classes.size()},
              {"classes", std::move(list)}},
         opt.out_path);
  } else {
    std::string text;
    for (const auto& d : classes) text += d.system().to_string() + "\n";
    text += "count: " + std::to_string(classes.size()) + "\n";
    emit_text(text, opt.out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Stanley chromatic symmetric functions for binary delta-matroids"};
  app.require_subcommand(1);
  int cap_flag = 0;
  app.add_option("--cap", cap_flag, "Lower the hard size caps (never raises them)");

  ChromaticOptions chrom_opt;
  auto* chrom = app.add_subcommand("chromatic", "Compute the chromatic symmetric function S_x");
  chrom->add_option("input", chrom_opt.input_path, "Input JSON file, or - for stdin");
  chrom->add_option("--format", chrom_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  chrom->add_option("--out", chrom_opt.out_path, "Output file (default stdout)");
  chrom->add_flag("--specialize", chrom_opt.specialize,
                  "Substitute p_k := t (ordinary chromatic polynomial)");
  chrom->add_option("--truncate", chrom_opt.truncate,
                    "Substitute p_k := c_1^k+...+c_N^k and expand")
      ->check(CLI::Range(1, 6));
  chrom->add_option("--x", chrom_opt.x_value, "Substitute a rational for x (e.g. 3/2)");

  ConvertOptions conv_opt;
  auto* conv = app.add_subcommand("convert", "Convert any input to its delta-matroid + diagnostics");
  conv->add_option("input", conv_opt.input_path, "Input JSON file, or - for stdin");
  conv->add_option("--format", conv_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  conv->add_option("--out", conv_opt.out_path, "Output file (default stdout)");

  VerifyOptions ver_opt;
  auto* ver = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  ver->add_option("kind", ver_opt.kind, "4t | moves | span | lemma-graphical | interlacement")
      ->required()
      ->check(CLI::IsMember({"4t", "moves", "span", "lemma-graphical", "interlacement"}));
  ver->add_option("--grading", ver_opt.grading, "Grading (chord count for interlacement)")
      ->required();
  ver->add_flag("--even", ver_opt.even_only, "Restrict to even binary delta-matroids");
  ver->add_option("--jobs", ver_opt.jobs, "Worker threads")->check(CLI::Range(1, 64));
  ver->add_option("--invariant", ver_opt.invariant, "For 4t: character | chromatic | both")
      ->check(CLI::IsMember({"character", "chromatic", "both"}));
  ver->add_option("--format", ver_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--out", ver_opt.out_path, "Report file (default stdout)");

  EnumerateOptions enum_opt;
  auto* enu = app.add_subcommand("enumerate", "List canonical binary delta-matroid classes");
  enu->add_option("--grading", enum_opt.grading, "Ground set size")->required();
  enu->add_flag("--even", enum_opt.even_only, "Even classes only");
  enu->add_flag("--allow-large", enum_opt.allow_large, "Permit grading 5 (slow)");
  enu->add_option("--format", enum_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  enu->add_option("--out", enum_opt.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (chrom->parsed()) return run_chromatic(chrom_opt, cap_flag);
    if (conv->parsed()) return run_convert(conv_opt, cap_flag);
    if (ver->parsed()) return run_verify(ver_opt, cap_flag);
    if (enu->parsed()) return run_enumerate(enum_opt, cap_flag);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const dc::SeaViolationError&) {
    std::cerr << "not a delta-matroid (symmetric exchange axiom fails)\n";
    return kExitMathReject;
  } catch (const dc::SchemaError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const dc::CapError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
