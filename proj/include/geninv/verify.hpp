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
// Sweep driver and reports.  A sweep enumerates (or samples) tuples,
// filters by the theorem's hypotheses, and records violations.  Workers
// split the tuple index space into contiguous chunks and merge in index
// order, so the report is byte-identical for every --jobs value.  Machine
// reports carry no timing, which keeps identical runs identical.

#ifndef GENINV_VERIFY_HPP_
#define GENINV_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "io.hpp"
#include "registry.hpp"
#include "universe.hpp"
#include "verify_ctx.hpp"

namespace geninv {

struct VerifyOptions {
  std::uint64_t samples = 0;
  std::uint64_t seed    = 0;
  int           jobs    = 1;
};

struct Counterexample {
  std::uint64_t            index;
  std::vector<std::string> tuple;
  std::string              detail;
  std::string              kind;  // "violation" or "artifact-error"

  Json to_json() const {
    return Json{{"index", index},
                {"tuple", tuple},
                {"detail", detail},
                {"kind", kind}};
  }
};

constexpr std::size_t kMaxReportedExamples = 10;

struct TheoremReport {
  std::string                 id;
  std::string                 title;
  Json                        universe;
  std::uint64_t               instances_checked  = 0;
  std::uint64_t               hypothesis_skipped = 0;
  std::uint64_t               violations         = 0;
  std::uint64_t               artifact_errors    = 0;
  std::vector<Counterexample> examples;
  std::uint64_t               samples = 0;
  std::uint64_t               seed    = 0;
  double                      elapsed_seconds = 0;

  bool clean() const {
    return violations == 0 && artifact_errors == 0;
  }

  Json to_json() const {
    Json ex = Json::array();
    for (const auto& e : examples) {
      ex.push_back(e.to_json());
    }
    return Json{{"theorem", id},
                {"title", title},
                {"universe", universe},
                {"instances_checked", instances_checked},
                {"hypothesis_skipped", hypothesis_skipped},
                {"violations", violations},
                {"artifact_errors", artifact_errors},
                {"counterexamples", std::move(ex)},
                {"samples", samples},
                {"seed", seed},
                {"status", clean() ? "ok" : "counterexamples"}};
  }

  std::string human() const {
    std::ostringstream os;
    os << "theorem " << id << ": " << title << "\n"
       << "  universe: " << universe.dump() << "\n"
       << "  instances checked: " << instances_checked
       << " (hypothesis skipped: " << hypothesis_skipped << ")\n"
       << "  counterexamples: " << violations
       << (artifact_errors ? "  artifact errors: "
                             + std::to_string(artifact_errors)
                           : std::string())
       << "\n"
       << "  elapsed: " << elapsed_seconds << " s\n";
    for (const auto& e : examples) {
      os << "  " << e.kind << " at tuple " << e.index << ": " << e.detail
         << "\n";
      for (const auto& s : e.tuple) {
        os << "    " << s << "\n";
      }
    }
    return os.str();
  }
};

namespace detail {

//! Runs one entry over tuples provided by `tuple_at`, splitting the index
//! space across `jobs` workers.  The provider must be pure.
template <typename Ctx, typename TupleAt>
TheoremReport sweep(const TheoremEntry& entry, const Ctx& ctx,
                    std::uint64_t total, TupleAt tuple_at,
                    const VerifyOptions& opt, Json universe_desc) {
  const auto t0 = std::chrono::steady_clock::now();

  struct Partial {
    std::uint64_t               checked = 0, skipped = 0, violations = 0,
                  artifact = 0;
    std::vector<Counterexample> examples;
  };

  const int jobs = std::max(1, opt.jobs);
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto tuple = tuple_at(i);
      ++out.checked;
      CheckOutcome r = CheckOutcome::pass();
      std::string  artifact_msg;
      try {
        r = run_check(entry.id, ctx, tuple, tuple_seed(opt.seed, i));
      } catch (const Error& e) {
        artifact_msg = e.what();
      }
      if (!artifact_msg.empty()) {
        ++out.artifact;
        if (out.examples.size() < kMaxReportedExamples) {
          std::vector<std::string> shown;
          for (const auto& el : tuple) {
            shown.push_back(ctx.show(el));
          }
          out.examples.push_back(
              {i, std::move(shown), artifact_msg, "artifact-error"});
        }
        continue;
      }
      switch (r.kind) {
        case CheckOutcome::Kind::pass: break;
        case CheckOutcome::Kind::skipped: ++out.skipped; break;
        case CheckOutcome::Kind::fail: {
          ++out.violations;
          if (out.examples.size() < kMaxReportedExamples) {
            std::vector<std::string> shown;
            for (const auto& el : tuple) {
              shown.push_back(ctx.show(el));
            }
            out.examples.push_back({i, std::move(shown), r.detail,
                                    "violation"});
          }
          break;
        }
      }
    }
  };

  if (jobs == 1 || total < 2) {
    run_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int c = 0; c < jobs; ++c) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(c)
                               / static_cast<std::uint64_t>(jobs);
      const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1)
                               / static_cast<std::uint64_t>(jobs);
      threads.emplace_back(run_range, lo, hi, std::ref(parts[c]));
    }
    for (auto& th : threads) {
      th.join();
    }
  }

  TheoremReport rep;
  rep.id       = entry.id;
  rep.title    = entry.title;
  rep.universe = std::move(universe_desc);
  rep.samples  = opt.samples;
  rep.seed     = opt.seed;
  for (const auto& p : parts) {
    rep.instances_checked += p.checked;
    rep.hypothesis_skipped += p.skipped;
    rep.violations += p.violations;
    rep.artifact_errors += p.artifact;
    for (const auto& e : p.examples) {
      if (rep.examples.size() < kMaxReportedExamples) {
        rep.examples.push_back(e);
      }
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

//! Decodes tuple index i into `arity` element ids, most significant first.
template <typename Ctx>
std::vector<typename Ctx::Elem> decode_tuple(const Ctx& ctx, std::uint64_t i,
                                             int arity) {
  const std::uint64_t             k = ctx.size();
  std::vector<typename Ctx::Elem> t(static_cast<std::size_t>(arity),
                                    ctx.element(0));
  for (int pos = arity - 1; pos >= 0; --pos) {
    t[static_cast<std::size_t>(pos)] = ctx.element(i % k);
    i /= k;
  }
  return t;
}

inline std::vector<std::vector<QiMatrix>> random_tuples(
    const RandQiCtx& ctx, const TheoremEntry& entry, std::uint64_t samples,
    std::uint64_t seed) {
  const QiField& dom = ctx.domain();
  const int      n   = ctx.dim();
  Rng            rng(seed);
  auto dense = [&] { return random_qi_matrix(rng, dom, n); };
  auto mixed = [&] { return random_qi_matrix_mixed_rank(rng, dom, n); };
  auto poly_in = [&](const QiMatrix& d) {
    // a = c0 + c1 d + c2 d^2 commutes with d by construction
    GaussianRational c0{random_rational(rng), Rational(0)};
    GaussianRational c1{random_rational(rng), Rational(0)};
    GaussianRational c2{random_rational(rng), Rational(0)};
    return QiMatrix::identity(dom, n).scaled(c0) + d.scaled(c1)
           + (d * d).scaled(c2);
  };
  std::vector<std::vector<QiMatrix>> out;
  out.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    switch (entry.rand_gen) {
      case RandGen::single: out.push_back({mixed()}); break;
      case RandGen::pair_ab: out.push_back({dense(), dense()}); break;
      case RandGen::pair_ad: out.push_back({dense(), mixed()}); break;
      case RandGen::pair_bd: out.push_back({dense(), mixed()}); break;
      case RandGen::pair_ae_idem:
        out.push_back({dense(), random_qi_idempotent(rng, dom, n)});
        break;
      case RandGen::commuting_ad: {
        QiMatrix d = mixed();
        QiMatrix a = poly_in(d);
        out.push_back({std::move(a), std::move(d)});
        break;
      }
      case RandGen::triple_abd:
        out.push_back({dense(), dense(), mixed()});
        break;
      case RandGen::commuting_abd: {
        QiMatrix d = mixed();
        QiMatrix a = poly_in(d);
        out.push_back({std::move(a), dense(), std::move(d)});
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline Json universe_json(const GfUniverse& u, std::uint64_t elements) {
  return Json{{"kind", "gf"}, {"p", u.p}, {"n", u.n}, {"elements", elements}};
}
inline Json universe_json(const QiUniverse& u) {
  return Json{{"kind", "qi"}, {"n", u.n}};
}
inline Json universe_json(const TableUniverse& u, std::uint64_t elements) {
  return Json{{"kind", "table"}, {"file", u.file}, {"elements", elements}};
}

//! Tier gate, shared by every sweep entry point.
template <typename Ctx>
void check_entry_fits(const TheoremEntry& entry, const Ctx& ctx) {
  require(!entry.needs_ring || Ctx::has_ring_v,
          "theorem " + entry.id
              + " needs the ring tier, which this universe does not have");
  require(!entry.needs_star || ctx.has_star(),
          "theorem " + entry.id
              + " needs an involution, which this universe does not have");
}

template <typename Ctx>
TheoremReport verify_on_enumerable(const TheoremEntry& entry, const Ctx& ctx,
                                   const VerifyOptions& opt,
                                   Json universe_desc) {
  check_entry_fits(entry, ctx);
  const std::uint64_t total =
      detail::pow_u64(ctx.size(), entry.arity_enum);
  return detail::sweep(
      entry, ctx, total,
      [&](std::uint64_t i) {
        return detail::decode_tuple(ctx, i, entry.arity_enum);
      },
      opt, std::move(universe_desc));
}

inline TheoremReport verify_on_random(const TheoremEntry& entry,
                                      const RandQiCtx&     ctx,
                                      const VerifyOptions& opt) {
  check_entry_fits(entry, ctx);
  require(opt.samples > 0, "random universes need --samples");
  const auto tuples =
      detail::random_tuples(ctx, entry, opt.samples, opt.seed);
  return detail::sweep(
      entry, ctx, opt.samples,
      [&](std::uint64_t i) { return tuples[static_cast<std::size_t>(i)]; },
      opt, universe_json(QiUniverse{ctx.dim()}));
}

// ---- Cline formula search ----

struct ClineReport {
  Json          universe;
  std::uint64_t examined = 0;
  std::uint64_t eligible = 0;
  std::uint64_t holds    = 0;
  std::uint64_t fails    = 0;
  std::vector<Json> hold_examples;
  std::vector<Json> fail_examples;
  std::uint64_t samples = 0;
  std::uint64_t seed    = 0;
  double        elapsed_seconds = 0;

  Json to_json() const {
    return Json{{"question", "cline"},
                {"universe", universe},
                {"examined", examined},
                {"eligible", eligible},
                {"formula_holds", holds},
                {"formula_fails", fails},
                {"hold_examples", hold_examples},
                {"fail_examples", fail_examples},
                {"samples", samples},
                {"seed", seed}};
  }

  std::string human() const {
    std::ostringstream os;
    os << "cline search\n"
       << "  universe: " << universe.dump() << "\n"
       << "  triples examined: " << examined << ", eligible: " << eligible
       << "\n"
       << "  formula holds: " << holds << ", formula fails: " << fails
       << "\n"
       << "  elapsed: " << elapsed_seconds << " s\n";
    auto dump_list = [&os](const char* name, const std::vector<Json>& v) {
      for (const auto& j : v) {
        os << "  " << name << ": a=" << j["a"].get<std::string>()
           << " b=" << j["b"].get<std::string>()
           << " d=" << j["d"].get<std::string>() << "\n";
      }
    };
    dump_list("fails", fail_examples);
    dump_list("holds", hold_examples);
    return os.str();
  }
};

//! Classifies triples (a, b, d) where both (ab)^{||d} and (ba)^{||d} exist
//! by whether (ab)^{||d} = a ((ba)^{||d})^2 b.  Both lists are reported;
//! no characterization is claimed.
template <typename Ctx, typename TupleAt>
ClineReport search_cline(const Ctx& ctx, std::uint64_t total,
                         TupleAt tuple_at, const VerifyOptions& opt,
                         Json universe_desc) {
  const auto  t0 = std::chrono::steady_clock::now();
  ClineReport rep;
  rep.universe = std::move(universe_desc);
  rep.samples  = opt.samples;
  rep.seed     = opt.seed;

  struct Partial {
    std::uint64_t     examined = 0, eligible = 0, holds = 0, fails = 0;
    std::vector<Json> hold_ex, fail_ex;
  };
  const int            jobs = std::max(1, opt.jobs);
  std::vector<Partial> parts(static_cast<std::size_t>(jobs));
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto  t = tuple_at(i);
      const auto& a = t[0];
      const auto& b = t[1];
      const auto& d = t[2];
      ++out.examined;
      const auto ab = ctx.mul(a, b);
      const auto ba = ctx.mul(b, a);
      if (!ctx.o_along_exists(ab, d) || !ctx.o_along_exists(ba, d)) {
        continue;
      }
      ++out.eligible;
      const auto w   = *ctx.o_along(ba, d);
      const auto rhs = ctx.mul(ctx.mul(a, ctx.mul(w, w)), b);
      const auto lhs = *ctx.o_along(ab, d);
      const bool ok  = ctx.eq(lhs, rhs);
      auto       rec = [&] {
        return Json{{"a", ctx.show(a)},
                    {"b", ctx.show(b)},
                    {"d", ctx.show(d)},
                    {"ab_along", ctx.show(lhs)},
                    {"a_ba_along_sq_b", ctx.show(rhs)}};
      };
      if (ok) {
        ++out.holds;
        if (out.hold_ex.size() < kMaxReportedExamples) {
          out.hold_ex.push_back(rec());
        }
      } else {
        ++out.fails;
        if (out.fail_ex.size() < kMaxReportedExamples) {
          out.fail_ex.push_back(rec());
        }
      }
    }
  };
  if (jobs == 1 || total < 2) {
    run_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int c = 0; c < jobs; ++c) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(c)
                               / static_cast<std::uint64_t>(jobs);
      const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1)
                               / static_cast<std::uint64_t>(jobs);
      threads.emplace_back(run_range, lo, hi, std::ref(parts[c]));
    }
    for (auto& th : threads) {
      th.join();
    }
  }
  for (const auto& p : parts) {
    rep.examined += p.examined;
    rep.eligible += p.eligible;
    rep.holds += p.holds;
    rep.fails += p.fails;
    for (const auto& j : p.hold_ex) {
      if (rep.hold_examples.size() < kMaxReportedExamples) {
        rep.hold_examples.push_back(j);
      }
    }
    for (const auto& j : p.fail_ex) {
      if (rep.fail_examples.size() < kMaxReportedExamples) {
        rep.fail_examples.push_back(j);
      }
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

//! One explicit triple, classified with full values.
template <typename D>
Json cline_singleton(const SquareMatrix<D>& a, const SquareMatrix<D>& b,
                     const SquareMatrix<D>& d) {
  MatrixCarrier<D> c(a.domain(), a.dim());
  const auto       ab  = a * b;
  const auto       ba  = b * a;
  auto             rab = inverse_along(c, ab, d);
  auto             rba = inverse_along(c, ba, d);
  Json             j;
  j["question"] = "cline";
  j["mode"]     = "singleton";
  j["ab_invertible_along_d"] = rab.exists();
  j["ba_invertible_along_d"] = rba.exists();
  if (!rab.exists() || !rba.exists()) {
    j["classification"] = "not-eligible";
    return j;
  }
  const auto rhs = a * (*rba.b * *rba.b) * b;
  j["ab_along"]           = io::matrix_to_json(*rab.b);
  j["ba_along"]           = io::matrix_to_json(*rba.b);
  j["a_ba_along_sq_b"]    = io::matrix_to_json(rhs);
  j["classification"] = (*rab.b == rhs) ? "formula-holds" : "formula-fails";
  return j;
}

// ---- scan for one-sided units that are not two-sided ----

struct Remark420Report {
  Json          universe;
  std::uint64_t pairs_scanned = 0;
  std::vector<Json> instances;
  std::string   note;
  double        elapsed_seconds = 0;

  Json to_json() const {
    return Json{{"question", "remark-420"},
                {"universe", universe},
                {"pairs_scanned", pairs_scanned},
                {"instances", instances},
                {"note", note}};
  }

  std::string human() const {
    std::ostringstream os;
    os << "remark-420 scan\n"
       << "  universe: " << universe.dump() << "\n"
       << "  pairs scanned: " << pairs_scanned << ", instances: "
       << instances.size() << "\n"
       << "  " << note << "\n"
       << "  elapsed: " << elapsed_seconds << " s\n";
    return os.str();
  }
};

//! Scans all pairs for "ab invertible along 1 but ba not".  In a finite
//! monoid a one-sided unit is two-sided, so the expected count is zero on
//! every universe this tool can load; the phenomenon needs an infinite
//! carrier.
template <typename Ctx>
Remark420Report remark_420_scan(const Ctx& ctx, Json universe_desc) {
  static_assert(Ctx::enumerable_v, "the scan needs a finite universe");
  const auto      t0 = std::chrono::steady_clock::now();
  Remark420Report rep;
  rep.universe = std::move(universe_desc);
  rep.note =
      "in a finite monoid every one-sided unit is two-sided, so ab "
      "invertible along 1 forces ba invertible along 1; a witnessing pair "
      "would need an infinite carrier";
  const auto one = ctx.one();
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    for (std::uint64_t j = 0; j < ctx.size(); ++j) {
      const auto a = ctx.element(i);
      const auto b = ctx.element(j);
      ++rep.pairs_scanned;
      const bool abi = ctx.o_along_exists(ctx.mul(a, b), one);
      const bool bai = ctx.o_along_exists(ctx.mul(b, a), one);
      if (abi && !bai) {
        rep.instances.push_back(
            Json{{"a", ctx.show(a)}, {"b", ctx.show(b)}});
      }
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace geninv

#endif  // GENINV_VERIFY_HPP_
