//
// geninv - exact generalized inverses over Q(i) and GF(p)
//
// Copyright 2026 the geninv developers
//
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
//
// Command line frontend.  Exit codes: 0 = success / exists / holds /
// no counterexamples, 1 = not-exists / fails / counterexamples found
// (with an explanation), 2 = usage, input, or configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "geninv/geninv.hpp"

namespace {

using namespace geninv;

struct Output {
  std::string format = "human";  // or "machine"
  std::string out;               // value file for compute, report file else

  bool machine() const {
    return format == "machine";
  }
};

template <typename D>
std::string pretty(const SquareMatrix<D>& m, const std::string& indent) {
  const int                n = m.dim();
  std::vector<std::string> cells;
  std::vector<std::size_t> width(static_cast<std::size_t>(n), 0);
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells.push_back(m.domain().str(m.at(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    os << indent << "[";
    for (int j = 0; j < n; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i) * n + j];
      os << " " << c << std::string(width[j] - c.size(), ' ');
    }
    os << " ]\n";
  }
  return os.str();
}

template <typename D>
Json unit_json(const UnitWitness<MatrixCarrier<D>>& u) {
  Json j;
  j["construction"] = u.construction;
  j["element"]      = io::matrix_to_json(u.u);
  j["invertible"]   = u.invertible();
  if (u.u_inv) {
    j["inverse"] = io::matrix_to_json(*u.u_inv);
  }
  if (u.inner_used) {
    j["inner_inverse_used"] = io::matrix_to_json(*u.inner_used);
  }
  return j;
}

template <typename D>
void unit_human(std::ostringstream& os,
                const UnitWitness<MatrixCarrier<D>>& u) {
  os << "criterion: " << u.construction << " is "
     << (u.invertible() ? "invertible" : "singular") << ":\n"
     << pretty(u.u, "  ");
}

//! Emits a compute/check report and returns the exit code.
struct Emitter {
  Output      output;
  Json        j;
  std::string human_text;
  int         code = 0;
  std::optional<Json> value_file_body;

  int finish() const {
    if (output.machine()) {
      std::cout << io::machine_dump(j);
    } else {
      std::cout << human_text;
    }
    if (!output.out.empty()) {
      if (value_file_body) {
        io::write_text_file(output.out, value_file_body->dump(2) + "\n");
      } else {
        std::cerr << "note: no value computed, '" << output.out
                  << "' not written\n";
      }
    }
    return code;
  }
};

int status_code(Status s) {
  switch (s) {
    case Status::exists: return 0;
    case Status::not_exists: return 1;
    default: return 2;
  }
}

// ---- compute ----

template <typename D>
Emitter compute_on(const std::string& op,
                   const std::vector<SquareMatrix<D>>& m,
                   const Output& output) {
  using C = MatrixCarrier<D>;
  C carrier(m[0].domain(), m[0].dim());

  Emitter e;
  e.output = output;
  e.j["command"]   = "compute";
  e.j["operation"] = op;
  std::ostringstream os;
  os << "operation: " << op << "\n";

  auto set_status = [&](Status s, const std::string& reason) {
    e.j["status"] = status_name(s);
    e.code        = status_code(s);
    os << "status: " << status_name(s) << "\n";
    if (!reason.empty()) {
      e.j["reason"] = reason;
      os << "reason: " << reason << "\n";
    }
  };
  auto set_value = [&](const SquareMatrix<D>& v, const char* label) {
    e.j["value"]      = io::matrix_to_json(v);
    e.value_file_body = io::matrix_to_json(v);
    os << label << ":\n" << pretty(v, "  ");
  };

  if (op == "mp" || op == "one3" || op == "one4") {
    auto r = mp_inverse(carrier, m[0]);
    set_status(r.status, r.reason);
    e.j["criterion"] = Json::array({unit_json<D>(*r.unit)});
    if (r.exists()) {
      const auto& v = op == "mp" ? *r.mp
                      : op == "one3" ? *r.one_three : *r.one_four;
      set_value(v, "value");
      e.j["witnesses"] = Json{{"one_three", io::matrix_to_json(*r.one_three)},
                              {"one_four", io::matrix_to_json(*r.one_four)},
                              {"mp", io::matrix_to_json(*r.mp)}};
    }
    unit_human(os, *r.unit);
  } else if (op == "group") {
    auto r = group_inverse(carrier, m[0]);
    set_status(r.status, r.reason);
    e.j["criterion"] = Json::array({unit_json<D>(*r.unit)});
    if (r.exists()) {
      set_value(*r.a_sharp, "value");
    }
    unit_human(os, *r.unit);
  } else if (op == "inner") {
    auto g = inner_inverse(m[0]);
    set_status(Status::exists, "");
    set_value(g, "value");
  } else if (op == "along") {
    auto r = inverse_along(carrier, m[0], m[1]);
    set_status(r.status, r.reason);
    e.j["criterion"] = Json::array({unit_json<D>(*r.u), unit_json<D>(*r.v)});
    if (r.exists()) {
      set_value(*r.b, "value");
      e.j["witnesses"] = Json{{"green_x", io::matrix_to_json(*r.green_x)},
                              {"green_y", io::matrix_to_json(*r.green_y)}};
    }
    unit_human(os, *r.u);
    unit_human(os, *r.v);
  } else if (op == "left-along" || op == "right-along") {
    const Side side = op == "left-along" ? Side::left : Side::right;
    auto       r    = one_sided_along(carrier, m[0], m[1], side);
    set_status(r.status, r.reason);
    e.j["criterion"] = Json::array(
        {Json{{"construction", side == Side::left ? "d <=_L d*a*d"
                                                  : "d <=_R d*a*d"},
              {"holds", r.exists()}}});
    if (r.exists()) {
      set_value(*r.b, "value");
      e.j["witnesses"] =
          Json{{side == Side::left ? "x" : "y",
                io::matrix_to_json(*r.factor)}};
      os << "factor " << (side == Side::left ? "x (d = x*d*a*d)"
                                             : "y (d = d*a*d*y)")
         << ":\n"
         << pretty(*r.factor, "  ");
    }
  } else if (op == "jacobson") {
    auto r = jacobson(carrier, m[0], m[1]);
    set_status(r.status, r.reason);
    e.j["criterion"] = Json::array({unit_json<D>(r.one_plus_ab)});
    if (r.exists()) {
      set_value(*r.inverse, "value ((1 + b*a)^{-1})");
    }
    unit_human(os, r.one_plus_ab);
  } else if (op == "triple") {
    auto r = along_triple(carrier, m[0], m[1], m[2]);
    set_status(r.status, r.reason);
    if (r.status != Status::precondition_failed) {
      e.j["witnesses"] =
          Json{{"b_invertible_along_d", r.b_invertible_along},
               {"adb_invertible_along_d", r.adb_invertible_along},
               {"bda_invertible_along_d", r.bda_invertible_along}};
      e.j["criterion"] = Json::array({unit_json<D>(*r.b_unit)});
    }
    if (r.exists()) {
      set_value(*r.adb_direct, "value ((a*d*b)^{||d})");
      e.j["witnesses"]["a_along"]     = io::matrix_to_json(*r.a_along);
      e.j["witnesses"]["b_along"]     = io::matrix_to_json(*r.b_along);
      e.j["witnesses"]["adb_product"] = io::matrix_to_json(*r.adb_product);
      e.j["witnesses"]["adb_unit"]    = io::matrix_to_json(*r.adb_unit);
      e.j["witnesses"]["bda_along"]   = io::matrix_to_json(*r.bda_direct);
      e.j["witnesses"]["bda_product"] = io::matrix_to_json(*r.bda_product);
      e.j["witnesses"]["bda_unit"]    = io::matrix_to_json(*r.bda_unit);
      e.j["witnesses"]["b_from_unit"] = io::matrix_to_json(*r.b_from_unit);
      os << "(b*d*a)^{||d}:\n" << pretty(*r.bda_direct, "  ");
      os << "all routes agree (product, dual unit, single unit)\n";
    }
  } else if (op == "triple-left" || op == "triple-right") {
    const Side side = op == "triple-left" ? Side::left : Side::right;
    auto r = one_sided_along_triple(carrier, m[0], m[1], m[2], side);
    set_status(r.status, r.reason);
    if (r.status != Status::precondition_failed) {
      e.j["witnesses"] = Json{{"b_one_sided", r.b_one_sided},
                              {"product_one_sided", r.product_one_sided}};
    }
    if (r.exists()) {
      set_value(*r.witness, side == Side::left
                                ? "value ((a*d*b)_l^{||d})"
                                : "value ((b*d*a)_r^{||d})");
      e.j["witnesses"][side == Side::left ? "y" : "t"] =
          io::matrix_to_json(*r.factor);
    }
  } else {
    throw Error("unknown compute operation '" + op + "'");
  }
  e.human_text = os.str();
  return e;
}

// ---- check ----

template <typename D>
Emitter check_on(const std::string& pred,
                 const std::vector<SquareMatrix<D>>& m,
                 const Output& output) {
  using C = MatrixCarrier<D>;
  C carrier(m[0].domain(), m[0].dim());

  Emitter e;
  e.output = output;
  e.j["command"]   = "check";
  e.j["predicate"] = pred;
  std::ostringstream os;
  os << "predicate: " << pred << "\n";
  auto set_holds = [&](bool h, const std::string& why = "") {
    e.j["holds"] = h;
    e.code       = h ? 0 : 1;
    os << "holds: " << (h ? "yes" : "no") << "\n";
    if (!why.empty()) {
      e.j["reason"] = why;
      os << "reason: " << why << "\n";
    }
  };

  if (pred == "regular") {
    // every square matrix over a field is regular
    auto g = inner_inverse(m[0]);
    set_holds(true);
    e.j["evidence"] = Json{{"inner_inverse", io::matrix_to_json(g)}};
    os << "inner inverse:\n" << pretty(g, "  ");
  } else if (pred == "ep") {
    auto r = is_ep(carrier, m[0]);
    set_holds(r.is_ep, r.is_ep ? "" : (!r.mp_exists
                  ? "a is not Moore-Penrose invertible"
                  : "a a^dagger differs from a^dagger a"));
    e.j["evidence"] = Json{{"mp_exists", r.mp_exists},
                           {"commutes", r.commutes},
                           {"left_gmp", r.left_gmp},
                           {"right_gmp", r.right_gmp},
                           {"aS_equals_astarS", r.star_column_spaces_equal}};
    if (r.mp.exists()) {
      e.j["evidence"]["mp"] = io::matrix_to_json(*r.mp.mp);
    }
  } else if (pred == "gmp-left" || pred == "gmp-right") {
    const Side side = pred == "gmp-left" ? Side::left : Side::right;
    auto       r    = gmp_check(carrier, m[0], side);
    set_holds(r.exists(), r.reason);
    if (r.exists()) {
      const char* k1 = side == Side::left ? "x" : "s";
      const char* k2 = side == Side::left ? "y" : "t";
      const char* k3 = side == Side::left ? "b" : "c";
      e.j["evidence"] = Json{{k1, io::matrix_to_json(*r.first)},
                             {k2, io::matrix_to_json(*r.second)},
                             {k3, io::matrix_to_json(*r.witness)}};
      os << k1 << ":\n" << pretty(*r.first, "  ") << k2 << ":\n"
         << pretty(*r.second, "  ") << k3 << ":\n"
         << pretty(*r.witness, "  ");
    }
  } else if (pred == "along-exists") {
    auto r = inverse_along(carrier, m[0], m[1]);
    set_holds(r.exists(), r.reason);
    e.j["criterion"] = Json::array({unit_json<D>(*r.u), unit_json<D>(*r.v)});
    if (r.exists()) {
      e.j["evidence"] = Json{{"along", io::matrix_to_json(*r.b)}};
      os << "a^{||d}:\n" << pretty(*r.b, "  ");
    }
    unit_human(os, *r.u);
  } else if (pred == "corner") {
    auto r = corner_unit_check(carrier, m[0], m[1]);
    if (r.status == Status::precondition_failed) {
      e.j["status"] = status_name(r.status);
      e.j["reason"] = r.reason;
      e.code        = 2;
      os << "error: " << r.reason << "\n";
      e.human_text = os.str();
      return e;
    }
    set_holds(r.holds, r.reason);
    e.j["evidence"] = Json{{"corner", io::matrix_to_json(*r.corner)}};
    if (r.holds) {
      e.j["evidence"]["corner_inverse"] =
          io::matrix_to_json(*r.corner_inverse);
      os << "corner inverse:\n" << pretty(*r.corner_inverse, "  ");
    }
  } else if (pred == "shift") {
    auto r = shift_conjugation_check(carrier, m[0], m[1]);
    set_holds(r.along_d);
    e.j["evidence"] = Json{{"a_along_d", r.along_d},
                           {"da_along_dd1", r.da_along_e},
                           {"ad_along_d1d", r.ad_along_f}};
    os << "a invertible along d: " << r.along_d
       << "; da along dd1: " << r.da_along_e
       << "; ad along d1d: " << r.ad_along_f << "\n";
  } else {
    throw Error("unknown check predicate '" + pred + "'");
  }
  e.human_text = os.str();
  return e;
}

// ---- shared input loading ----

std::vector<AnyMatrix> load_inputs(const std::vector<std::string>& paths) {
  std::vector<AnyMatrix> ms;
  ms.reserve(paths.size());
  for (const auto& p : paths) {
    ms.push_back(io::read_matrix_file(p));
  }
  return ms;
}

template <typename F>
int dispatch_domain(const std::vector<AnyMatrix>& ms, F&& f) {
  if (std::holds_alternative<QiMatrix>(ms[0])) {
    std::vector<QiMatrix> v;
    for (const auto& m : ms) {
      require(std::holds_alternative<QiMatrix>(m),
              "all inputs must share one ring; mixing Qi with GF");
      v.push_back(std::get<QiMatrix>(m));
      v[0].check_compatible(v.back());
    }
    return f(v);
  }
  std::vector<GfMatrix> v;
  for (const auto& m : ms) {
    require(std::holds_alternative<GfMatrix>(m),
            "all inputs must share one ring; mixing GF with Qi");
    v.push_back(std::get<GfMatrix>(m));
    v[0].check_compatible(v.back());
  }
  return f(v);
}

// ---- verify / search ----

struct UniverseHandles {
  std::optional<EnumMatrixCtx> enum_ctx;
  std::optional<FiniteMonoid>  table;
  std::optional<TableCtx>      table_ctx;
  std::optional<RandQiCtx>     rand_ctx;
  Json                         desc;
};

UniverseHandles open_universe(const UniverseSpec& spec, const Caps& caps) {
  UniverseHandles h;
  if (const auto* g = std::get_if<GfUniverse>(&spec)) {
    h.enum_ctx.emplace(PrimeField(g->p), g->n, caps.enum_universe);
    h.desc = universe_json(*g, h.enum_ctx->size());
  } else if (const auto* t = std::get_if<TableUniverse>(&spec)) {
    h.table = io::read_monoid_file(t->file);
    require(h.table->size() <= caps.table_queries,
            "table universe has " + std::to_string(h.table->size())
                + " elements, above the cap of "
                + std::to_string(caps.table_queries)
                + " (set GENINV_CAP to override)");
    h.table_ctx.emplace(*h.table);
    h.desc = universe_json(*t, h.table->size());
  } else {
    const auto& q = std::get<QiUniverse>(spec);
    h.rand_ctx.emplace(QiField{}, q.n);
    h.desc = universe_json(q);
  }
  return h;
}

int emit_report(const Json& machine, const std::string& human,
                const Output& output, int code) {
  const std::string body =
      output.machine() ? io::machine_dump(machine) : human;
  if (!output.out.empty()) {
    io::write_text_file(output.out, body);
  } else {
    std::cout << body;
  }
  return code;
}

int run_verify(const std::string& theorem, const std::string& universe,
               const VerifyOptions& opt, bool samples_given,
               bool seed_given, const Output& output) {
  const Caps   caps = Caps::from_env();
  UniverseSpec spec = parse_universe(universe);
  const bool   random = std::holds_alternative<QiUniverse>(spec);
  require(!random || (samples_given && seed_given),
          "universe qi:n:random requires --samples and --seed");
  require(random || !samples_given,
          "--samples only applies to random universes");
  UniverseHandles h = open_universe(spec, caps);

  auto run_one = [&](const TheoremEntry& e) -> TheoremReport {
    if (h.enum_ctx) {
      return verify_on_enumerable(e, *h.enum_ctx, opt, h.desc);
    }
    if (h.table_ctx) {
      return verify_on_enumerable(e, *h.table_ctx, opt, h.desc);
    }
    return verify_on_random(e, *h.rand_ctx, opt);
  };

  if (theorem != "all") {
    const TheoremEntry* e = find_theorem(theorem);
    require(e != nullptr, "unknown theorem id '" + theorem + "'");
    TheoremReport rep = run_one(*e);
    Json          j   = rep.to_json();
    j["command"]      = "verify";
    return emit_report(j, rep.human(), output, rep.clean() ? 0 : 1);
  }

  Json reports = Json::array();
  Json skipped = Json::array();
  std::ostringstream os;
  bool clean = true;
  for (const auto& e : theorem_registry()) {
    const bool star_ok = !e.needs_star
                         || (h.table_ctx ? h.table_ctx->has_star() : true);
    const bool ring_ok = !e.needs_ring || !h.table_ctx;
    if (!star_ok || !ring_ok) {
      skipped.push_back(Json{
          {"theorem", e.id},
          {"reason", !ring_ok ? "needs the ring tier"
                              : "needs an involution"}});
      os << "skipped " << e.id << " ("
         << (!ring_ok ? "needs the ring tier" : "needs an involution")
         << ")\n";
      continue;
    }
    TheoremReport rep = run_one(e);
    clean             = clean && rep.clean();
    reports.push_back(rep.to_json());
    os << rep.human();
  }
  Json j;
  j["command"]  = "verify";
  j["universe"] = h.desc;
  j["reports"]  = std::move(reports);
  j["skipped"]  = std::move(skipped);
  j["status"]   = clean ? "ok" : "counterexamples";
  os << (clean ? "all clear\n" : "counterexamples found\n");
  return emit_report(j, os.str(), output, clean ? 0 : 1);
}

int run_search(const std::string& question, const std::string& universe,
               const std::vector<std::string>& abd_paths,
               const VerifyOptions& opt, bool samples_given,
               bool seed_given, const Output& output) {
  const Caps caps = Caps::from_env();
  if (question == "cline") {
    if (!abd_paths.empty()) {
      require(abd_paths.size() == 3,
              "singleton cline classification needs --a, --b and --d");
      auto ms = load_inputs(abd_paths);
      Json j;
      int  code = dispatch_domain(ms, [&](const auto& v) {
        j            = cline_singleton(v[0], v[1], v[2]);
        j["command"] = "search";
        return 0;
      });
      (void) code;
      std::ostringstream os;
      os << "cline singleton: "
         << j["classification"].get<std::string>() << "\n";
      if (j.contains("ab_along")) {
        os << "(ab)^{||d} vs a((ba)^{||d})^2 b recorded in machine format\n";
      }
      return emit_report(j, os.str(), output, 0);
    }
    require(!universe.empty(), "search cline needs --universe or --a/--b/--d");
    UniverseSpec spec   = parse_universe(universe);
    const bool   random = std::holds_alternative<QiUniverse>(spec);
    require(!random || (samples_given && seed_given),
            "universe qi:n:random requires --samples and --seed");
    UniverseHandles h = open_universe(spec, caps);
    ClineReport     rep;
    if (h.enum_ctx) {
      const auto&         ctx   = *h.enum_ctx;
      const std::uint64_t total = detail::pow_u64(ctx.size(), 3);
      rep                       = search_cline(
          ctx, total,
          [&](std::uint64_t i) { return detail::decode_tuple(ctx, i, 3); },
          opt, h.desc);
    } else if (h.table_ctx) {
      const auto&         ctx   = *h.table_ctx;
      const std::uint64_t total = detail::pow_u64(ctx.size(), 3);
      rep                       = search_cline(
          ctx, total,
          [&](std::uint64_t i) { return detail::decode_tuple(ctx, i, 3); },
          opt, h.desc);
    } else {
      const auto& ctx = *h.rand_ctx;
      TheoremEntry fake{"cline", "", 3, 3, false, false,
                        RandGen::triple_abd};
      const auto tuples =
          detail::random_tuples(ctx, fake, opt.samples, opt.seed);
      rep = search_cline(
          ctx, opt.samples,
          [&](std::uint64_t i) { return tuples[static_cast<std::size_t>(i)]; },
          opt, h.desc);
    }
    Json j       = rep.to_json();
    j["command"] = "search";
    return emit_report(j, rep.human(), output, 0);
  }
  if (question == "remark-420") {
    require(!universe.empty(), "search remark-420 needs --universe");
    UniverseSpec spec = parse_universe(universe);
    require(std::holds_alternative<TableUniverse>(spec),
            "remark-420 scans table universes (table:FILE)");
    UniverseHandles h   = open_universe(spec, caps);
    auto            rep = remark_420_scan(*h.table_ctx, h.desc);
    Json            j   = rep.to_json();
    j["command"]        = "search";
    return emit_report(j, rep.human(), output,
                       rep.instances.empty() ? 0 : 1);
  }
  throw Error("unknown question '" + question
              + "' (expected cline or remark-420)");
}

int run_oracle(const std::string& universe, const std::string& tag_name,
               ElementId a, std::optional<ElementId> d, bool literal,
               const Output& output) {
  const Caps   caps = Caps::from_env();
  UniverseSpec spec = parse_universe(universe);
  require(std::holds_alternative<TableUniverse>(spec),
          "oracle runs on table universes (table:FILE)");
  FiniteMonoid m =
      io::read_monoid_file(std::get<TableUniverse>(spec).file);
  require(m.size() <= caps.table_queries,
          "table universe above the query cap (set GENINV_CAP to override)");
  auto tag = solve_tag_from_name(tag_name);
  require(tag.has_value(), "unknown oracle tag '" + tag_name + "'");
  require(a < m.size(), "subject id out of range");
  require(!d || *d < m.size(), "subject id out of range");

  SolutionSet s = m.solutions(*tag, a, d, literal);
  Json        j;
  j["command"]  = "oracle";
  j["tag"]      = solve_tag_name(*tag);
  j["subjects"] = s.subjects;
  j["solutions"] = s.solutions;
  if (m.has_labels()) {
    Json labels = Json::array();
    for (ElementId id : s.solutions) {
      labels.push_back(m.label(id));
    }
    j["solution_labels"] = std::move(labels);
  }
  std::ostringstream os;
  os << "oracle " << solve_tag_name(*tag) << " on";
  for (ElementId id : s.subjects) {
    os << " " << m.describe(id);
  }
  os << "\nsolutions (" << s.solutions.size() << "):\n";
  for (ElementId id : s.solutions) {
    os << "  " << m.describe(id) << "\n";
  }
  return emit_report(j, os.str(), output, s.solutions.empty() ? 1 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "geninv - exact generalized inverses over Q(i) and GF(p): compute "
      "them, check element properties, verify the identity registry over "
      "finite and randomized universes, and search for formula "
      "counterexamples"};
  app.require_subcommand(1);

  std::string a_path, b_path, d_path, e_path;
  Output      output;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
    cmd->add_option("--out", output.out,
                    "for compute: write the computed value as a matrix "
                    "file; for verify/search: write the report here "
                    "instead of stdout");
  };

  // compute
  auto* compute = app.add_subcommand(
      "compute",
      "compute a generalized inverse (mp, group, along, left-along, "
      "right-along, inner, one3, one4, jacobson, triple, triple-left, "
      "triple-right)");
  std::string op;
  compute->add_option("operation", op, "operation name")->required();
  compute->add_option("--a", a_path, "matrix file for a")->required();
  compute->add_option("--b", b_path, "matrix file for b");
  compute->add_option("--d", d_path, "matrix file for d");
  add_io(compute);

  // check
  auto* check = app.add_subcommand(
      "check",
      "decide a predicate (regular, ep, gmp-left, gmp-right, along-exists, "
      "corner, shift)");
  std::string pred;
  check->add_option("predicate", pred, "predicate name")->required();
  check->add_option("--a", a_path, "matrix file for a")->required();
  check->add_option("--d", d_path, "matrix file for d");
  check->add_option("--e", e_path, "matrix file for the idempotent e");
  add_io(check);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "sweep a theorem (or all) over a universe");
  std::string   theorem, universe;
  VerifyOptions vopt;
  verify->add_option("--theorem", theorem, "registry id, e.g. T2.19, or all")
      ->required();
  verify->add_option("--universe", universe,
                     "gf:p:n | qi:n:random | table:FILE")
      ->required();
  auto* samples_opt =
      verify->add_option("--samples", vopt.samples, "samples (random only)");
  auto* seed_opt = verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--jobs", vopt.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  add_io(verify);

  // search
  auto* search = app.add_subcommand(
      "search", "search for formula counterexamples (cline, remark-420)");
  std::string question;
  search->add_option("--question", question, "cline | remark-420")
      ->required();
  search->add_option("--universe", universe,
                     "gf:p:n | qi:n:random | table:FILE");
  search->add_option("--a", a_path, "matrix file (singleton cline)");
  search->add_option("--b", b_path, "matrix file (singleton cline)");
  search->add_option("--d", d_path, "matrix file (singleton cline)");
  auto* s_samples =
      search->add_option("--samples", vopt.samples, "samples (random only)");
  auto* s_seed = search->add_option("--seed", vopt.seed, "random seed");
  search->add_option("--jobs", vopt.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  add_io(search);

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive solution sets on a table universe");
  std::string tag;
  ElementId   subj_a = 0;
  ElementId   subj_d = 0;
  bool        literal = false;
  oracle->add_option("--universe", universe, "table:FILE")->required();
  oracle
      ->add_option("--tag", tag,
                   "inner | one3 | one4 | mp | group | along | left-along | "
                   "right-along")
      ->required();
  oracle->add_option("--a", subj_a, "subject element id")->required();
  auto* d_opt = oracle->add_option("--d", subj_d, "second subject id");
  oracle->add_flag("--literal-right-along", literal,
                   "use the reading d*a*b = b for right-along solutions");
  add_io(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      std::vector<std::string> paths{a_path};
      const bool needs_b = op == "jacobson" || op == "triple"
                           || op == "triple-left" || op == "triple-right";
      const bool needs_d = op == "along" || op == "left-along"
                           || op == "right-along" || op == "triple"
                           || op == "triple-left" || op == "triple-right";
      require(!needs_b || !b_path.empty(), "operation needs --b");
      require(!needs_d || !d_path.empty(), "operation needs --d");
      if (needs_b) {
        paths.push_back(b_path);
      }
      if (needs_d) {
        paths.push_back(d_path);
      }
      auto ms = load_inputs(paths);
      return dispatch_domain(ms, [&](const auto& v) {
        return compute_on(op, v, output).finish();
      });
    }
    if (check->parsed()) {
      std::vector<std::string> paths{a_path};
      if (pred == "along-exists" || pred == "shift") {
        require(!d_path.empty(), "predicate needs --d");
        paths.push_back(d_path);
      } else if (pred == "corner") {
        require(!e_path.empty(), "predicate needs --e");
        paths.push_back(e_path);
      }
      auto ms = load_inputs(paths);
      return dispatch_domain(ms, [&](const auto& v) {
        return check_on(pred, v, output).finish();
      });
    }
    if (verify->parsed()) {
      return run_verify(theorem, universe, vopt, samples_opt->count() > 0,
                        seed_opt->count() > 0, output);
    }
    if (search->parsed()) {
      std::vector<std::string> abd;
      if (!a_path.empty() || !b_path.empty() || !d_path.empty()) {
        require(!a_path.empty() && !b_path.empty() && !d_path.empty(),
                "singleton cline classification needs all of --a, --b, --d");
        abd = {a_path, b_path, d_path};
      }
      return run_search(question, universe, abd, vopt,
                        s_samples->count() > 0, s_seed->count() > 0, output);
    }
    if (oracle->parsed()) {
      std::optional<ElementId> d;
      if (d_opt->count() > 0) {
        d = subj_d;
      }
      return run_oracle(universe, tag, subj_a, d, literal, output);
    }
  } catch (const Error& ex) {
    std::cerr << (ex.kind() == ErrorKind::internal ? "internal error: "
                                                   : "error: ")
              << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
