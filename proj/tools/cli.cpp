#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kproj/classify.hpp"
#include "kproj/document.hpp"
#include "kproj/invariants.hpp"
#include "kproj/limits.hpp"

namespace kproj {

namespace {

using nlohmann::json;

struct Options {
  std::optional<std::string> backend;
  std::optional<double> epsilon;
  std::string format = "text";
  std::optional<std::size_t> cap;

  std::string file;
  std::string recipe;
  std::optional<std::string> multiplicities;
  std::size_t big_n = 1;
  std::string mode = "network";
  bool check = false;
  std::size_t census_n = 0;
  bool exhaustive = false;
  std::size_t workers = 1;
  std::size_t limit = 5;
};

bool records(const Options& o) { return o.format == "records"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> one_based(std::vector<std::size_t> w) {
  for (auto& x : w) ++x;
  return w;
}

Backend choose_backend(const Options& o, const std::optional<std::string>& text) {
  if (o.backend) return parse_backend(*o.backend);
  return text ? document_backend(*text) : Backend::exact;
}

// Backend-specific work runs under the requested tolerance.
template <class F>
int dispatch(const Options& o, const std::optional<std::string>& text, F&& f) {
  const Backend b = choose_backend(o, text);
  if (b == Backend::exact) return f(Rational{});
  double eps = default_epsilon;
  if (o.epsilon) {
    eps = *o.epsilon;
  } else if (text) {
    if (auto e = parse_document<Complex>(*text).epsilon) eps = *e;
  }
  ScopedEpsilon scope(eps);
  return f(Complex{});
}

template <Field T>
bool same_value(const T& a, const T& b) {
  if constexpr (std::same_as<T, Rational>) {
    return a == b;
  } else {
    return std::abs(a - b) <= epsilon() * std::max(1.0, std::abs(a));
  }
}

// verify

template <Field T>
int cmd_verify(const Options& o, const std::string& text, std::ostream& out) {
  const auto doc = parse_document<T>(text);
  const auto report = verify_axioms(doc.product, doc.coproduct);
  const bool ok = report.all_passed();
  if (records(o)) {
    for (const auto& c : report.checks) {
      json r{{"record", "relation"}, {"name", std::string(relation_name(c.relation))}, {"passed", c.passed}};
      if (!c.passed) {
        r["witness"] = one_based(c.witness);
        r["lhs"] = to_string(c.lhs);
        r["rhs"] = to_string(c.rhs);
      }
      out << r.dump() << '\n';
    }
    out << json{{"record", "verdict"}, {"passed", ok}}.dump() << '\n';
  } else {
    out << "algebra: " << (doc.label.empty() ? std::string("(unlabeled)") : doc.label) << ", n = " << doc.n()
        << ", backend " << backend_name(backend_of<T>) << '\n';
    out << report.describe();
    out << "verdict: " << (ok ? "P-algebra" : "not a P-algebra") << '\n';
  }
  return ok ? 0 : static_cast<int>(ExitCode::math_failure);
}

// construct

template <Field T>
int cmd_construct(const Options& o, std::ostream& out) {
  const std::string params = read_file(o.file);
  const auto p = construct_from_params<T>(o.recipe, params);
  auto doc = document_from_algebra(p);
  if constexpr (std::same_as<T, Complex>) doc.epsilon = epsilon();
  out << serialize_document(doc);
  return 0;
}

// perfect and trace share the representation setup.

Multiplicities multiplicities_for(const Options& o, const std::optional<Multiplicities>& from_doc) {
  if (o.multiplicities) return parse_multiplicities(*o.multiplicities);
  if (from_doc) return *from_doc;
  throw MissingMetadata("no multiplicities: pass --m or add \"multiplicities\" to the document");
}

template <Field T>
EnRepresentation<T> representation_for(const PAlgebra<T>& p, const Multiplicities& m) {
  switch (p.recipe().index()) {
    case 1: return rep_from_multiplicities_commutative(p, m);
    case 2: return rep_from_multiplicities_semisimple(p, m);
    default:
      throw MissingMetadata("a multiplicity representation needs zero-one or semisimple recipe metadata");
  }
}

template <Field T>
int cmd_perfect(const Options& o, const std::string& text, std::ostream& out) {
  const auto doc = parse_document<T>(text);
  const auto p = algebra_from_document(doc);
  const auto m = multiplicities_for(o, doc.multiplicities);
  const auto rho = representation_for(p, m);
  const auto k = build_k_projector(rho);
  const auto rep = is_perfect(k);
  const std::size_t n = p.dimension();
  if (records(o)) {
    json r{{"record", "perfectness"},
           {"perfect", rep.perfect},
           {"reason", rep.reason},
           {"zero_action", rep.zero_action},
           {"irreducible", rep.irreducible},
           {"closure_dimension", rep.closure_dimension},
           {"end_dimension", n * n},
           {"dim_w", rho.dimension()},
           {"multiplicities", m}};
    r["invariant_subspace_dimension"] =
        rep.invariant_subspace_dimension ? json(*rep.invariant_subspace_dimension) : json(nullptr);
    out << r.dump() << '\n';
  } else {
    out << (rep.perfect ? std::string("perfect") : "not perfect: " + rep.reason) << '\n';
    out << "dim W: " << rho.dimension() << '\n';
    out << "zero action on V0: " << (rep.zero_action ? "yes" : "no") << '\n';
    out << "closure dimension: " << rep.closure_dimension << " of " << n * n << '\n';
    if (rep.invariant_subspace_dimension) {
      out << "invariant subspace dimension: " << *rep.invariant_subspace_dimension << '\n';
    }
  }
  return 0;
}

enum class TraceKind { direct, network, transfer };

TraceKind parse_trace_kind(const std::string& s) {
  if (s == "direct") return TraceKind::direct;
  if (s == "network") return TraceKind::network;
  if (s == "transfer") return TraceKind::transfer;
  throw ParseError("unknown trace mode '" + s + "'");
}

std::string_view trace_kind_name(TraceKind k) {
  switch (k) {
    case TraceKind::direct: return "direct";
    case TraceKind::network: return "network";
    case TraceKind::transfer: return "transfer";
  }
  return "?";
}

template <Field T>
std::optional<Matrix<T>> transfer_for(const PAlgebra<T>& p, const Multiplicities& m) {
  if (const auto* r = std::get_if<ZeroOneMatrix>(&p.recipe())) return transfer_matrix_commutative<T>(*r, m);
  if (const auto* d = std::get_if<SemisimpleData<T>>(&p.recipe())) return transfer_matrix_semisimple(*d, m);
  return std::nullopt;
}

template <Field T>
std::vector<T> traces(TraceKind kind, const PAlgebra<T>& p, const Multiplicities& m, std::size_t big_n) {
  std::vector<T> out;
  if (kind == TraceKind::transfer) {
    const auto t = transfer_for(p, m);
    if (!t) throw ModeUnavailable("transfer mode needs zero-one or semisimple recipe metadata");
    for (std::size_t k = 1; k <= big_n; ++k) out.push_back(trace_via_transfer(*t, k));
    return out;
  }
  const auto rho = representation_for(p, m);
  const TraceMode mode = kind == TraceKind::direct ? TraceMode::materialize : TraceMode::network;
  for (std::size_t k = 1; k <= big_n; ++k) out.push_back(trace_P_N_direct(rho, k, mode));
  return out;
}

template <Field T>
int cmd_trace(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.big_n == 0) throw ShapeMismatch("N must be positive");
  const auto doc = parse_document<T>(text);
  const auto p = algebra_from_document(doc);
  const auto m = multiplicities_for(o, doc.multiplicities);
  const TraceKind kind = parse_trace_kind(o.mode);
  const auto values = traces(kind, p, m, o.big_n);

  std::optional<TraceKind> other;
  std::vector<T> second;
  if (o.check) {
    if (kind == TraceKind::transfer) {
      other = TraceKind::network;
    } else {
      other = transfer_for(p, m) ? TraceKind::transfer
                                 : (kind == TraceKind::direct ? TraceKind::network : TraceKind::direct);
    }
    second = traces(*other, p, m, o.big_n);
  }

  bool agree = true;
  for (std::size_t k = 0; k < second.size(); ++k) agree = agree && same_value(values[k], second[k]);

  if (records(o)) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      json r{{"record", "trace"}, {"N", k + 1}, {"mode", std::string(trace_kind_name(kind))}, {"value", to_string(values[k])}};
      if (other) {
        r["check_mode"] = std::string(trace_kind_name(*other));
        r["check_value"] = to_string(second[k]);
      }
      out << r.dump() << '\n';
    }
    if (other) out << json{{"record", "check"}, {"agree", agree}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << to_string(values[k]);
    out << '\n';
    if (other) {
      out << "check: " << trace_kind_name(kind) << (agree ? " agrees with " : " DISAGREES with ")
          << trace_kind_name(*other) << '\n';
    }
  }
  if (!agree) {
    err << "trace modes disagree\n";
    return static_cast<int>(ExitCode::math_failure);
  }
  return 0;
}

// census

int cmd_census(const Options& o, std::ostream& out) {
  const auto classes = enumerate_classes(o.census_n, {o.limit, o.workers, o.exhaustive});
  if (!records(o)) out << "id representative orbit_size row_sums column_sums abs_det permanent\n";
  for (const auto& c : classes) {
    const auto inv = class_invariants(c.representative);
    if (records(o)) {
      out << json{{"record", "class"},
                  {"id", c.id},
                  {"representative", c.representative.bitstring()},
                  {"orbit_size", c.orbit_size},
                  {"row_sums", inv.row_sums},
                  {"column_sums", inv.column_sums},
                  {"abs_determinant", inv.abs_determinant},
                  {"permanent", inv.permanent}}
                 .dump()
          << '\n';
    } else {
      auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s;
      };
      out << c.id << ' ' << c.representative.bitstring() << ' ' << c.orbit_size << ' ' << join(inv.row_sums) << ' '
          << join(inv.column_sums) << ' ' << inv.abs_determinant << ' ' << inv.permanent << '\n';
    }
  }
  if (records(o)) {
    out << json{{"record", "count"}, {"n", o.census_n}, {"classes", classes.size()}}.dump() << '\n';
  } else {
    out << "classes: " << classes.size() << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"P-algebras, K-projectors and their invariants", "kproj"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--backend", o.backend, "exact or float (default: the document's backend)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--epsilon", o.epsilon, "comparison tolerance for the float backend")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--cap", o.cap, "largest number of dense entries any step may allocate")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the P-algebra axioms of a document");
  verify->add_option("file", o.file, "algebra document")->required();

  auto* construct = app.add_subcommand("construct", "build a P-algebra from construction parameters");
  construct->add_option("recipe", o.recipe, "zero-one, semisimple or idempotent-basis")
      ->required()
      ->check(CLI::IsMember({"zero-one", "semisimple", "idempotent-basis"}));
  construct->add_option("params", o.file, "JSON parameter file")->required();

  auto* perfect = app.add_subcommand("perfect", "decide whether the K-projector of a multiplicity representation is perfect");
  perfect->add_option("file", o.file, "algebra document with recipe metadata")->required();
  perfect->add_option("--m", o.multiplicities, "multiplicities, rows separated by ';', e.g. 1,0;0,1");

  auto* trace = app.add_subcommand("trace", "print tr(P_1) .. tr(P_N)");
  trace->add_option("file", o.file, "algebra document with recipe metadata")->required();
  trace->add_option("--m", o.multiplicities, "multiplicities, rows separated by ';'");
  trace->add_option("-N,--N", o.big_n, "largest N")->required();
  trace->add_option("--mode", o.mode, "direct, network or transfer")
      ->check(CLI::IsMember({"direct", "network", "transfer"}));
  trace->add_flag("--check", o.check, "recompute with a second mode and compare");

  auto* census = app.add_subcommand("census", "classes of nonsingular (0,1)-matrices");
  census->add_option("n", o.census_n, "matrix size")->required()->check(CLI::PositiveNumber);
  census->add_flag("--exhaustive", o.exhaustive, "scan every (0,1)-matrix");
  census->add_option("--workers", o.workers, "worker threads, 0 for all cores");
  census->add_option("--limit", o.limit, "largest n accepted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::parse_error);
  }

  try {
    std::optional<ScopedCap> cap;
    if (o.cap) cap.emplace(*o.cap);
    if (*census) return cmd_census(o, out);
    if (*construct) {
      return dispatch(o, std::nullopt, [&](auto tag) { return cmd_construct<decltype(tag)>(o, out); });
    }
    const std::string text = read_file(o.file);
    if (*verify) return dispatch(o, text, [&](auto tag) { return cmd_verify<decltype(tag)>(o, text, out); });
    if (*perfect) return dispatch(o, text, [&](auto tag) { return cmd_perfect<decltype(tag)>(o, text, out); });
    return dispatch(o, text, [&](auto tag) { return cmd_trace<decltype(tag)>(o, text, out, err); });
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kproj
