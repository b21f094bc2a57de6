// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "outcast/io.hpp"

using namespace outcast;
using namespace outcast::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Exhaustive equivalence for n = 0..3.
void census_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  for (int n = 0; n <= 3; ++n) {
    const auto r = theorem_census(n);
    std::ostringstream s;
    s << "n=" << n << " outcast " << r.outcast_count << "/" << r.total_choice_functions << " induced_distinct "
      << r.induced_distinct << " over " << r.total_orders << " orders";
    if (n == 1) o.expect(r.outcast_count == 2 && r.total_choice_functions == 2, s.str() + " (expected 2/2)");
    if (n == 2) o.expect(r.outcast_count == 9 && r.total_choice_functions == 16, s.str() + " (expected 9/16)");
    if (n == 3) o.expect(r.total_choice_functions == 4096 && r.total_orders == 40320, s.str());
    if (r.outcast_count != r.induced_distinct || !r.directions_hold) {
      o.fail(s.str() + ", directions_hold=" + (r.directions_hold ? "true" : "false") + "; " +
             std::to_string(r.outcast_not_induced.size()) + " Outcast function(s) induced by no order");
    }
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 60.0, "took " + std::to_string(secs) + "s");
}

// 2. If-direction on 1000 seeded random orders per n.
void if_direction_at_scale(Outcome& o) {
  const auto t0 = Clock::now();
  for (const int n : {4, 6, 8, 10, 12}) {
    int bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000003u + i;
      if (check_outcast(induced_choice(random_order(n, seed)))) ++bad;
    }
    o.expect(bad == 0, "n=" + std::to_string(n) + ": " + std::to_string(bad) + " induced functions fail Outcast");
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 60.0, "took " + std::to_string(secs) + "s");
}

template <typename Fn>
void for_each_outcast(int n, Fn&& fn) {
  ChoiceFunctionStream s(n);
  while (auto f = s.next()) {
    if (is_outcast(*f)) fn(*f);
  }
}

std::string table_text(const ChoiceFunction& f) {
  std::string out;
  for (const auto a : f.universe().all_subsets()) {
    out += (out.empty() ? "" : " ") + f.universe().format(a) + "->" + f.universe().format(f(a));
  }
  return out;
}

// 3. Only-if round trip for every Outcast function, n <= 3.
void only_if_round_trip(Outcome& o) {
  const auto t0 = Clock::now();
  for (int n = 0; n <= 3; ++n) {
    int total = 0, ok = 0;
    std::vector<std::string> failures;
    for_each_outcast(n, [&](const ChoiceFunction& f) {
      ++total;
      try {
        if (!verify_representation(f, synthesize_order(f).order)) {
          ++ok;
          return;
        }
        failures.push_back("mismatch for " + table_text(f));
      } catch (const NotRepresentable& e) {
        failures.push_back(std::string(e.what()) + " [" + table_text(f) + "]");
      }
    });
    if (ok != total) {
      std::string msg = "n=" + std::to_string(n) + ": " + std::to_string(ok) + "/" + std::to_string(total) + " pass";
      for (const auto& m : failures) msg += "\n      " + m;
      o.fail(msg);
    }
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 30.0, "took " + std::to_string(secs) + "s");
}

// 4. Proof-lemma invariants on synthesized orders.
void lemma_invariants(Outcome& o) {
  for (int n = 0; n <= 3; ++n) {
    int total = 0, ok = 0;
    for_each_outcast(n, [&](const ChoiceFunction& f) {
      ++total;
      std::optional<SynthesisTrace> trace;
      try {
        trace = synthesize_order(f);
      } catch (const NotRepresentable&) {
        return;
      }
      const auto& ord = trace->order;
      bool good = true;
      for (const auto a : f.universe().all_subsets()) {
        if (ord.rank(a) > ord.rank(f(a))) good = false;
        for_each_subset(a, [&](SubsetId b) {
          if (ord.rank(b) > ord.rank(f(a))) good = false;
        });
      }
      const auto& seq = trace->fixpoint_sequence;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (is_subset(seq[i], seq[j])) good = false;  // strict subset listed later
        }
      }
      for (const auto fp : seq) {
        for (const auto m : trace->domain_sequences.at(fp)) {
          if (ord.rank(m) > ord.rank(fp)) good = false;
        }
      }
      if (good) ++ok;
    });
    o.expect(ok == total, "n=" + std::to_string(n) + ": invariants hold on " + std::to_string(ok) + "/" +
                              std::to_string(total) + " Outcast functions (no order exists for the rest)");
  }
}

// 5. Differential check of check_outcast against the full pair scan.
void witness_differential(Outcome& o) {
  for (const int n : {2, 3}) {
    int disagreements = 0, unsound = 0, total = 0;
    ChoiceFunctionStream s(n);
    while (auto f = s.next()) {
      ++total;
      const auto w = check_outcast(*f);
      const bool bf_pass = bf_outcast_violations(raw(*f), n).empty();
      if (w.has_value() == bf_pass) ++disagreements;
      if (w && !(is_subset((*f)(w->a), w->b) && is_subset(w->b, w->a) && (*f)(w->a) != (*f)(w->b))) ++unsound;
    }
    o.expect(total == (n == 2 ? 16 : 4096), "n=" + std::to_string(n) + ": enumerated " + std::to_string(total));
    o.expect(disagreements == 0, "n=" + std::to_string(n) + ": " + std::to_string(disagreements) + " disagreements");
    o.expect(unsound == 0, "n=" + std::to_string(n) + ": " + std::to_string(unsound) + " unsound witnesses");
  }
}

// 6. Worked example.
void worked_example(Outcome& o) {
  const auto f = make_fn(2, kWorked);
  const auto trace = synthesize_order(f);
  o.expect(trace.order.ranks() == std::vector<std::uint32_t>{1, 3, 0, 2},
           "synthesized ranks " + io::serialize(trace.order));
  const auto dir = scratch_dir();
  spit(dir / "acc_worked.json", io::serialize(f));
  spit(dir / "acc_worked_order.json", io::serialize(trace.order));
  const auto r = run_cli("verify \"" + (dir / "acc_worked.json").string() + "\" \"" +
                         (dir / "acc_worked_order.json").string() + "\"");
  o.expect(r.exit_code == 0, "cmd verify exited " + std::to_string(r.exit_code));
}

// 7. CLI pipeline and exit-code contract.
void cli_contract(Outcome& o) {
  const auto dir = scratch_dir();
  auto q = [](const std::filesystem::path& p) { return "\"" + p.string() + "\""; };
  int pipeline_bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto order = dir / "p_order.json";
    const auto f1 = dir / "p_f1.json";
    const auto synth = dir / "p_synth.json";
    const auto f2 = dir / "p_f2.json";
    spit(order, io::serialize(random_order(6, 5000 + seed)));
    const bool ran = run_cli("induce " + q(order) + " --out " + q(f1)).exit_code == 0 &&
                     run_cli("synthesize " + q(f1) + " --out " + q(synth)).exit_code == 0 &&
                     run_cli("induce " + q(synth) + " --out " + q(f2)).exit_code == 0;
    if (!ran || slurp(f1) != slurp(f2) || slurp(f1).empty()) ++pipeline_bad;
  }
  o.expect(pipeline_bad == 0, std::to_string(pipeline_bad) + "/100 pipelines not byte-identical");

  struct Case {
    std::string name, args;
    int expected;
  };
  spit(dir / "c_good.json", R"({"universe":["a","b"],"choice":[0,1,0,1]})");
  spit(dir / "c_viol.json", R"({"universe":["a","b"],"choice":[0,0,0,1]})");
  spit(dir / "c_choice.json", R"({"universe":["a","b"],"choice":[0,2,2,3]})");
  spit(dir / "c_short.json", R"({"universe":["a","b"],"choice":[0,1,2]})");
  spit(dir / "c_json.json", R"({"universe":["a","b"],"choice":[0,1,)");
  spit(dir / "c_perm.json", R"({"universe":["a","b"],"ranks":[1,1,0,2]})");
  spit(dir / "c_ord1.json", R"({"universe":["a"],"ranks":[0,1]})");
  spit(dir / "c_idord.json", R"({"universe":["a","b"],"ranks":[3,0,1,2]})");
  spit(dir / "c_id.json", R"({"universe":["a","b"],"choice":[0,1,2,3]})");
  const std::vector<Case> cases{
      {"check pass", "check " + q(dir / "c_good.json"), 0},
      {"check violation", "check " + q(dir / "c_viol.json"), 1},
      {"check choice condition", "check " + q(dir / "c_choice.json"), 2},
      {"check short table", "check " + q(dir / "c_short.json"), 2},
      {"check bad json", "check " + q(dir / "c_json.json"), 2},
      {"check missing file", "check " + q(dir / "nope.json"), 2},
      {"synthesize non-Outcast", "synthesize " + q(dir / "c_viol.json"), 1},
      {"induce non-permutation", "induce " + q(dir / "c_perm.json"), 2},
      {"verify mismatch", "verify " + q(dir / "c_id.json") + " " + q(dir / "c_idord.json"), 1},
      {"verify universe mismatch", "verify " + q(dir / "c_id.json") + " " + q(dir / "c_ord1.json"), 2},
      {"census n=4", "census --n 4", 2},
  };
  for (const auto& c : cases) {
    const int got = run_cli(c.args).exit_code;
    o.expect(got == c.expected,
             c.name + ": exit " + std::to_string(got) + ", expected " + std::to_string(c.expected));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 exhaustive equivalence n<=3 (census)", census_equivalence},
      {"2 if-direction, 1000 random orders at n=4,6,8,10,12", if_direction_at_scale},
      {"3 only-if round trip for every Outcast f, n<=3", only_if_round_trip},
      {"4 proof-lemma invariants on synthesized orders, n<=3", lemma_invariants},
      {"5 witness soundness/completeness vs full scan, n=2,3", witness_differential},
      {"6 worked example synthesizes to [1,3,0,2] and verifies", worked_example},
      {"7 CLI pipeline byte identity and exit codes", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << "[" << name << "] (" << seconds_since(t0) << "s)";
    if (!o.pass) {
      std::cout << "\n    " << o.detail.str();
      ++failed;
    }
    std::cout << std::endl;
  }
  std::filesystem::remove_all(scratch_dir());
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
