// Copyright 2026 The igcr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "igcr/cli.h"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "igcr/errors.h"
#include "igcr/exact_linalg.h"
#include "igcr/gcr.h"
#include "igcr/group_graph.h"
#include "igcr/instance_io.h"
#include "igcr/inverse.h"
#include "igcr/lp.h"
#include "igcr/size_report.h"
#include "json.hpp"

namespace igcr {
namespace {

using Report = nlohmann::ordered_json;

// Options shared by the subcommands. Vectors arrive as comma-separated
// strings so rationals like "-3/4" survive shell quoting unchanged.
struct Options {
  std::string instance_path;
  std::string basis;
  std::string d;
  std::string x0;
  std::string target;
  std::string norm;
  std::string omega;
  std::string box;
  std::string size_b;
  std::string size_det;
  std::size_t size_n = 0;
  std::size_t size_m = 0;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> cap;
  bool lp_membership = false;
  bool json = false;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

RationalVector ParseRationalList(const std::string& text, const char* flag) {
  RationalVector out;
  try {
    for (const auto& tok : SplitList(text)) out.push_back(ParseRational(tok));
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
  return out;
}

IntVector ParseIntegerList(const std::string& text, const char* flag) {
  IntVector out;
  try {
    for (const auto& tok : SplitList(text)) out.push_back(ParseInteger(tok));
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
  return out;
}

Report Json(const Rational& q) { return ToString(q); }
Report Json(const Integer& z) { return ToString(z); }

template <typename T>
Report Json(const std::vector<T>& v) {
  Report out = Report::array();
  for (const auto& e : v) out.push_back(Json(e));
  return out;
}

Report Json(const IntMatrix& m) {
  Report out = Report::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    out.push_back(Json(IntVector(row.begin(), row.end())));
  }
  return out;
}

Report JsonBasis(const Basis& basis) {
  Report out = Report::array();
  for (std::size_t k : basis.indices()) out.push_back(k + 1);
  return out;
}

// Text rendering: "key: value" per line, flat arrays as "(a, b)", nested
// structures indented.
void RenderText(const Report& r, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Report& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [&](const Report& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
      if (e.is_array() || e.is_object()) return false;
    }
    return true;
  };
  for (const auto& [key, value] : r.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      RenderText(value, out, indent + 2);
    } else if (flat(value)) {
      std::string line = "(";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) line += ", ";
        line += scalar(value[i]);
      }
      out << pad << key << ": " << line << ")\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& e : value) {
        if (e.is_object()) {
          out << pad << "  -\n";
          RenderText(e, out, indent + 4);
        } else {
          Report wrap;
          wrap["-"] = e;
          RenderText(wrap, out, indent + 2);
        }
      }
    } else {
      out << pad << key << ": " << scalar(value) << "\n";
    }
  }
}

class Session {
 public:
  explicit Session(const Options& opts) : opts_(opts) {}

  const InstanceDocument& doc() {
    if (!doc_) {
      if (opts_.instance_path.empty()) {
        throw ParseError("an instance file is required");
      }
      doc_ = LoadInstance(opts_.instance_path);
    }
    return *doc_;
  }
  const IpInstance& instance() { return doc().instance; }

  RationalVector Objective() {
    if (!opts_.d.empty()) return Sized(ParseRationalList(opts_.d, "--d"), "--d");
    return instance().c();
  }

  RationalVector Target() {
    if (!opts_.target.empty()) {
      return Sized(ParseRationalList(opts_.target, "--target"), "--target");
    }
    if (doc().target) return *doc().target;
    return instance().c();
  }

  RationalVector X0() {
    if (!opts_.x0.empty()) return Sized(ParseRationalList(opts_.x0, "--x0"), "--x0");
    if (doc().x0) return *doc().x0;
    throw PreconditionError("x0 is required (--x0 or \"x0\" in the instance)");
  }

  NormSpec Norm() {
    NormSpec norm = doc().norm.value_or(NormSpec{});
    if (!opts_.norm.empty()) norm.kind = ParseNormKind(opts_.norm);
    if (!opts_.omega.empty()) {
      norm.omega = Sized(ParseRationalList(opts_.omega, "--omega"), "--omega");
    }
    norm.Weights(instance().n());
    return norm;
  }

  std::optional<IntVector> Box() {
    if (!opts_.box.empty()) {
      IntVector box = ParseIntegerList(opts_.box, "--box");
      if (box.size() != instance().n()) {
        throw ParseError("--box must have n entries");
      }
      return box;
    }
    return doc().box;
  }

  // --basis, then the document's basis, then the LP-optimal basis.
  Basis SelectedBasis() {
    if (!opts_.basis.empty()) {
      std::vector<std::size_t> cols;
      for (const Integer& k : ParseIntegerList(opts_.basis, "--basis")) {
        if (k < 1 || k > static_cast<unsigned long>(instance().n())) {
          throw ParseError("--basis: column " + ToString(k) + " out of range");
        }
        cols.push_back(k.get_ui() - 1);
      }
      return Basis(instance(), cols);
    }
    if (doc().basis) return Basis(instance(), *doc().basis);
    const LpSolution lp = SolveLpSimplex(instance(), Objective());
    if (lp.status != SolveStatus::kOptimal) {
      throw PreconditionError(
          std::string("no --basis given and the LP relaxation is ") +
          ToString(lp.status));
    }
    return *lp.basis;
  }

  std::size_t Cap() const {
    if (opts_.cap) return *opts_.cap;
    if (const char* env = std::getenv(kBasisCapEnv)) {
      try {
        const Integer v = ParseInteger(env);
        if (v >= 1 && v.fits_ulong_p()) return v.get_ui();
      } catch (const ParseError&) {
      }
      throw ParseError(std::string(kBasisCapEnv) + " must be a positive integer");
    }
    return kDefaultBasisCap;
  }

 private:
  RationalVector Sized(RationalVector v, const char* flag) {
    if (v.size() != instance().n()) {
      throw ParseError(std::string(flag) + " must have n = " +
                       std::to_string(instance().n()) + " entries");
    }
    return v;
  }

  const Options& opts_;
  std::optional<InstanceDocument> doc_;
};

void AddGcr(Report* r, const GcrSolution& sol) {
  (*r)["status"] = ToString(sol.status);
  if (sol.status == SolveStatus::kOptimal) {
    (*r)["value"] = Json(sol.value);
    (*r)["x"] = Json(sol.x);
  }
}

void AddInverse(Report* r, const InverseResult& res, const NormSpec& norm) {
  (*r)["norm"] = ToString(norm.kind);
  (*r)["status"] = ToString(res.status);
  (*r)["value"] = Json(res.value);
  (*r)["d_star"] = Json(res.d_star);
  if (!res.certificate_y.empty()) (*r)["certificate_y"] = Json(res.certificate_y);
}

using Handler = std::function<Report(Session&, const Options&)>;

std::map<std::string, Handler> Handlers() {
  std::map<std::string, Handler> h;
  h["solve-lp"] = [](Session& s, const Options&) {
    const LpSolution lp = SolveLpSimplex(s.instance(), s.Objective());
    Report r;
    r["status"] = ToString(lp.status);
    if (lp.status == SolveStatus::kOptimal) {
      r["value"] = Json(lp.value);
      r["x"] = Json(lp.x);
      r["basis"] = JsonBasis(*lp.basis);
    }
    return r;
  };
  h["snf"] = [](Session& s, const Options&) {
    const Basis basis = s.SelectedBasis();
    const SmithNormalForm snf = ComputeSmithNormalForm(basis.basis_matrix());
    Report r;
    r["basis"] = JsonBasis(basis);
    r["det"] = Json(basis.determinant());
    r["w"] = Json(snf.w);
    r["S"] = Json(snf.s);
    r["T"] = Json(snf.t);
    return r;
  };
  h["gcr"] = [](Session& s, const Options&) {
    const Basis basis = s.SelectedBasis();
    const RationalVector d = s.Objective();
    const GroupGraph graph = BuildGroupGraph(s.instance(), basis, d);
    const PathCounts path = ShortestPath(graph);
    const GcrSolution sol = SolveGcr(s.instance(), basis, d);
    Report r;
    r["basis"] = JsonBasis(basis);
    AddGcr(&r, sol);
    r["lp_constant"] = Json(sol.lp_constant);
    r["w"] = Json(graph.w());
    r["vertex_count"] = graph.vertex_count();
    r["destination"] = Json(graph.destination_label());
    r["reduced_costs"] = Json(graph.weights());
    r["path_status"] = ToString(path.status);
    if (path.status == PathCounts::Status::kOptimal) {
      r["path_counts"] = Json(path.counts);
      r["path_cost"] = Json(path.cost);
    }
    return r;
  };
  h["gcr-brute"] = [](Session& s, const Options& o) {
    const Basis basis = s.SelectedBasis();
    const std::size_t bound =
        o.bound.value_or(Integer(abs(basis.determinant())).get_ui());
    const GcrSolution sol =
        BruteForceGcr(s.instance(), basis, s.Objective(), bound);
    Report r;
    r["basis"] = JsonBasis(basis);
    r["bound"] = bound;
    AddGcr(&r, sol);
    return r;
  };
  h["ip-brute"] = [](Session& s, const Options&) {
    const GcrSolution sol = BruteForceIp(s.instance(), s.Objective(), s.Box());
    Report r;
    AddGcr(&r, sol);
    return r;
  };
  h["inverse-gcr"] = [](Session& s, const Options&) {
    const Basis basis = s.SelectedBasis();
    const NormSpec norm = s.Norm();
    const InverseResult res = InverseGcr(
        s.instance(), basis, RequireIntegral(s.X0(), "x0"), s.Target(), norm);
    Report r;
    r["basis"] = JsonBasis(basis);
    AddInverse(&r, res, norm);
    return r;
  };
  h["inverse-lp"] = [](Session& s, const Options&) {
    const NormSpec norm = s.Norm();
    const InverseResult res =
        InverseLpRelaxation(s.instance(), s.X0(), s.Target(), norm);
    Report r;
    AddInverse(&r, res, norm);
    return r;
  };
  h["inverse-ip"] = [](Session& s, const Options&) {
    const NormSpec norm = s.Norm();
    const InverseResult res =
        InverseIpOracle(s.instance(), RequireIntegral(s.X0(), "x0"),
                        s.Target(), norm, s.Box());
    Report r;
    AddInverse(&r, res, norm);
    return r;
  };
  h["multi-basis"] = [](Session& s, const Options&) {
    const NormSpec norm = s.Norm();
    const MultiBasisResult res =
        MultiBasisInverse(s.instance(), RequireIntegral(s.X0(), "x0"),
                          s.Target(), norm, s.Cap());
    Report r;
    r["norm"] = ToString(norm.kind);
    Report per = Report::array();
    for (const BasisOutcome& o : res.per_basis) {
      Report e;
      e["basis"] = JsonBasis(o.basis);
      if (o.result) {
        e["status"] = ToString(o.result->status);
        e["value"] = Json(o.result->value);
      } else {
        e["status"] = "skipped";
      }
      per.push_back(std::move(e));
    }
    r["per_basis"] = std::move(per);
    r["status"] = ToString(res.best.status);
    if (res.best.status == SolveStatus::kOptimal) {
      r["best_basis"] = JsonBasis(*res.best.basis);
      r["value"] = Json(res.best.value);
      r["d_star"] = Json(res.best.d_star);
    }
    return r;
  };
  h["bases"] = [](Session& s, const Options&) {
    const std::vector<Basis> bases = EnumerateFeasibleBases(s.instance(), s.Cap());
    Report list = Report::array();
    for (const Basis& b : bases) list.push_back(JsonBasis(b));
    Report r;
    r["count"] = bases.size();
    r["bases"] = std::move(list);
    return r;
  };
  h["check-exactness"] = [](Session& s, const Options&) {
    const Basis basis = s.SelectedBasis();
    const ExactnessCheck check = CheckCornerExactnessCondition(s.instance(), basis);
    Report r;
    r["basis"] = JsonBasis(basis);
    r["holds"] = check.holds;
    r["lhs_squared"] = Json(check.lhs_squared);
    r["rhs_squared"] = Json(check.rhs_squared);
    return r;
  };
  h["check-member"] = [](Session& s, const Options& o) {
    Report r;
    const RationalVector d = s.Objective();
    if (o.lp_membership) {
      r["problem"] = "lp";
      r["member"] = CheckLpInverseFeasible(s.instance(), s.X0(), d);
      return r;
    }
    const Basis basis = s.SelectedBasis();
    r["problem"] = "gcr";
    r["basis"] = JsonBasis(basis);
    r["member"] = CheckInverseFeasible(s.instance(), basis,
                                       RequireIntegral(s.X0(), "x0"), d);
    return r;
  };
  h["size-report"] = [](Session& s, const Options& o) {
    std::size_t n = o.size_n;
    std::size_t m = o.size_m;
    Integer det;
    IntVector b;
    if (!o.instance_path.empty()) {
      const Basis basis = s.SelectedBasis();
      n = s.instance().n();
      m = s.instance().m();
      det = abs(basis.determinant());
      b = s.instance().b();
    }
    if (!o.size_det.empty()) det = ParseInteger(o.size_det);
    if (!o.size_b.empty()) b = ParseIntegerList(o.size_b, "--b");
    const SizeReport rep = FormulationSizeReport(n, m, det, b);
    Report r;
    r["n"] = n;
    r["m"] = m;
    r["det"] = Json(det);
    r["b"] = Json(b);
    r["ours_vars"] = Json(rep.ours_vars);
    r["ours_cons"] = Json(rep.ours_cons);
    r["superadditive_vars"] = Json(rep.superadditive_vars);
    r["superadditive_cons"] = Json(rep.superadditive_cons);
    r["log10_ours_vars"] = Log10OneDecimal(rep.ours_vars);
    r["log10_ours_cons"] = Log10OneDecimal(rep.ours_cons);
    r["log10_superadditive_vars"] = Log10OneDecimal(rep.superadditive_vars);
    r["log10_superadditive_cons"] = Log10OneDecimal(rep.superadditive_cons);
    return r;
  };
  h["export-dot"] = [](Session& s, const Options&) {
    const Basis basis = s.SelectedBasis();
    const GroupGraph graph = BuildGroupGraph(s.instance(), basis, s.Objective());
    Report r;
    r["dot"] = ToDot(graph);
    return r;
  };
  return h;
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact corner-relaxation and inverse optimization toolkit",
               "igcr"};
  app.require_subcommand(1);
  Options opts;
  const auto handlers = Handlers();

  struct Subcommand {
    const char* name;
    const char* help;
  };
  static const Subcommand kSubcommands[] = {
      {"solve-lp", "Solve the LP relaxation exactly"},
      {"snf", "Smith normal form of A_B"},
      {"gcr", "Solve the corner relaxation through its group graph"},
      {"gcr-brute", "Brute-force the corner relaxation over a box"},
      {"ip-brute", "Brute-force the integer program over a box"},
      {"inverse-gcr", "Inverse corner relaxation at one basis"},
      {"inverse-lp", "Inverse LP relaxation"},
      {"inverse-ip", "Inverse IP by exhaustive enumeration"},
      {"multi-basis", "Inverse corner relaxation over every feasible basis"},
      {"bases", "List feasible bases"},
      {"check-exactness", "Check the corner-exactness distance condition"},
      {"check-member", "Test whether x0 is optimal under --d"},
      {"size-report", "Formulation sizes of two inverse LPs"},
      {"export-dot", "Group graph in Graphviz DOT form"},
  };
  for (const Subcommand& spec : kSubcommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    const std::string name = spec.name;
    if (name == "size-report") {
      sub->add_option("instance", opts.instance_path, "Instance JSON file");
      sub->add_option("--n", opts.size_n, "Number of variables");
      sub->add_option("--m", opts.size_m, "Number of constraints");
      sub->add_option("--det", opts.size_det, "|det A_B|");
      sub->add_option("--b", opts.size_b, "Right-hand side, comma separated");
      sub->add_option("--basis", opts.basis, "1-based basis columns");
    } else {
      sub->add_option("instance", opts.instance_path, "Instance JSON file")
          ->required();
      sub->add_option("--basis", opts.basis, "1-based basis columns, e.g. 3,4");
      sub->add_option("--d", opts.d, "Objective override, comma separated");
      sub->add_option("--x0", opts.x0, "Feasible point, comma separated");
      sub->add_option("--target", opts.target, "Target objective (default c)");
      sub->add_option("--norm", opts.norm, "l1 or linf");
      sub->add_option("--omega", opts.omega, "Norm weights, comma separated");
      sub->add_option("--box", opts.box, "Per-variable upper bounds");
      sub->add_option("--bound", opts.bound, "Per-coordinate bound for gcr-brute");
      sub->add_option("--cap", opts.cap, "Feasible-basis enumeration cap");
      sub->add_flag("--lp", opts.lp_membership,
                    "check-member: test the LP relaxation instead");
    }
    sub->add_flag("--json", opts.json, "Emit JSON instead of text");
  }

  std::vector<const char*> argv{"igcr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Session session(opts);
    Report report;
    report["command"] = name;
    const Report body = handlers.at(name)(session, opts);
    for (const auto& [k, v] : body.items()) report[k] = v;
    if (opts.json) {
      out << report.dump(2) << "\n";
    } else if (name == "export-dot") {
      out << report["dot"].get<std::string>();
    } else {
      RenderText(report, out, 0);
    }
    return 0;
  } catch (const Error& e) {
    err << "igcr " << name << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace igcr
