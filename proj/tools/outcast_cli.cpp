// outcast: command-line front end for the choice-function library.
//
// Exit codes: 0 pass, 1 semantic failure, 2 input error, 3 internal
// verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "outcast/io.hpp"
#include "outcast/outcast.hpp"

namespace {

enum Exit : int { kPass = 0, kFail = 1, kInputError = 2, kInternalError = 3 };

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::cout << contents;
  } else {
    outcast::io::write_file(out_path, contents);
  }
}

void print_witness(const outcast::ChoiceFunction& f, const outcast::OutcastWitness& w) {
  const auto& u = f.universe();
  std::cout << "NOT OUTCAST\n"
            << "witness: A=" << u.format(w.a) << " B=" << u.format(w.b) << "\n"
            << "  f(A)=" << u.format(f(w.a)) << " is a subset of B and B of A, but f(B)=" << u.format(f(w.b))
            << "\n";
}

int cmd_check(const std::string& path) {
  const auto f = outcast::io::parse_choice_function(outcast::io::read_file(path));
  if (const auto w = outcast::check_outcast(f)) {
    print_witness(f, *w);
    return kFail;
  }
  std::cout << "OUTCAST\n";
  return kPass;
}

int cmd_synthesize(const std::string& path, const std::string& out_path, bool subset_only) {
  const auto f = outcast::io::parse_choice_function(outcast::io::read_file(path));
  if (const auto w = outcast::check_outcast(f)) {
    print_witness(f, *w);
    return kFail;
  }
  const auto ordering = subset_only ? outcast::FixpointOrdering::subset_only : outcast::FixpointOrdering::revealed;
  std::optional<outcast::SynthesisTrace> trace;
  try {
    trace = outcast::synthesize_order(f, ordering);
  } catch (const outcast::NotRepresentable& e) {
    std::cout << "NOT REPRESENTABLE\n" << e.what() << "\n";
    return kFail;
  }
  if (const auto bad = outcast::verify_representation(f, trace->order)) {
    std::cerr << "self-verification failed: synthesized order induces " << f.universe().format(
                     outcast::choose_max(trace->order, *bad))
              << " on " << f.universe().format(*bad) << ", expected " << f.universe().format(f(*bad)) << "\n";
    return kInternalError;
  }
  emit(out_path, outcast::io::serialize(trace->order));
  return kPass;
}

int cmd_induce(const std::string& path, const std::string& out_path) {
  const auto order = outcast::io::parse_order(outcast::io::read_file(path));
  emit(out_path, outcast::io::serialize(outcast::induced_choice(order)));
  return kPass;
}

int cmd_verify(const std::string& fn_path, const std::string& order_path) {
  const auto f = outcast::io::parse_choice_function(outcast::io::read_file(fn_path));
  const auto order = outcast::io::parse_order(outcast::io::read_file(order_path));
  if (const auto bad = outcast::verify_representation(f, order)) {
    const auto& u = f.universe();
    std::cout << "MISMATCH at " << u.format(*bad) << ": order chooses " << u.format(outcast::choose_max(order, *bad))
              << ", function chooses " << u.format(f(*bad)) << "\n";
    return kFail;
  }
  std::cout << "REPRESENTS\n";
  return kPass;
}

int cmd_census(int n, unsigned threads) {
  const auto r = outcast::theorem_census(n, threads);
  std::cout << "n=" << r.n << "\n"
            << "total_choice_functions=" << r.total_choice_functions << "\n"
            << "outcast_count=" << r.outcast_count << "\n"
            << "total_orders=" << r.total_orders << "\n"
            << "induced_distinct=" << r.induced_distinct << "\n"
            << "directions_hold=" << (r.directions_hold ? "true" : "false") << "\n";
  const auto u = outcast::Universe::with_size(n);
  for (const auto& table : r.outcast_not_induced) {
    std::cout << "outcast_not_induced:";
    for (const auto a : u.all_subsets()) std::cout << ' ' << u.format(a) << "->" << u.format(table[a.index()]);
    std::cout << "\n";
  }
  return r.directions_hold ? kPass : kFail;
}

int cmd_random_order(int n, std::uint64_t seed, const std::string& out_path) {
  emit(out_path, outcast::io::serialize(outcast::random_order(n, seed)));
  return kPass;
}

// Seeded if-direction check plus synthesis round trip on each induced function.
int cmd_sample(int n, std::uint64_t seed, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const auto order = outcast::random_order(n, seed + static_cast<std::uint64_t>(i));
    const auto f = outcast::induced_choice(order);
    if (outcast::check_outcast(f)) {
      std::cout << "seed " << seed + static_cast<std::uint64_t>(i) << ": induced choice violates Outcast\n";
      ++failures;
      continue;
    }
    const auto trace = outcast::synthesize_order(f);
    if (outcast::verify_representation(f, trace.order)) {
      std::cout << "seed " << seed + static_cast<std::uint64_t>(i) << ": synthesized order does not represent\n";
      ++failures;
    }
  }
  std::cout << "samples=" << count << " failures=" << failures << "\n";
  return failures == 0 ? kPass : kInternalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outcast choice functions and their hyper-order representations"};
  app.require_subcommand(1);

  std::string in_path, order_path, out_path;
  int n = 0;
  int count = 1000;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool subset_only = false;

  auto* check = app.add_subcommand("check", "decide Outcast for a choice-function file");
  check->add_option("function", in_path, "choice-function JSON file")->required();

  auto* synth = app.add_subcommand("synthesize", "build a representing hyper-order");
  synth->add_option("function", in_path, "choice-function JSON file")->required();
  synth->add_option("--out", out_path, "order file to write (default stdout)");
  synth->add_flag("--subset-only", subset_only, "order fixpoints by inclusion only (may fail self-verification)");

  auto* induce = app.add_subcommand("induce", "write the choice function induced by an order");
  induce->add_option("order", in_path, "order JSON file")->required();
  induce->add_option("--out", out_path, "choice-function file to write (default stdout)");

  auto* verify = app.add_subcommand("verify", "check that an order induces a choice function");
  verify->add_option("function", in_path, "choice-function JSON file")->required();
  verify->add_option("order", order_path, "order JSON file")->required();

  auto* census = app.add_subcommand("census", "exhaustive comparison of Outcast and order-induced functions");
  census->add_option("--n", n, "universe size")->required();
  census->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* rnd = app.add_subcommand("random-order", "write a seeded uniform random order");
  rnd->add_option("--n", n, "universe size")->required();
  rnd->add_option("--seed", seed, "generator seed");
  rnd->add_option("--out", out_path, "order file to write (default stdout)");

  auto* sample = app.add_subcommand("sample", "seeded random checks of both directions");
  sample->add_option("--n", n, "universe size")->required();
  sample->add_option("--seed", seed, "first seed");
  sample->add_option("--count", count, "number of orders")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(in_path);
    if (*synth) return cmd_synthesize(in_path, out_path, subset_only);
    if (*induce) return cmd_induce(in_path, out_path);
    if (*verify) return cmd_verify(in_path, order_path);
    if (*census) return cmd_census(n, threads);
    if (*rnd) return cmd_random_order(n, seed, out_path);
    if (*sample) return cmd_sample(n, seed, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
