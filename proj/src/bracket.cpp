#include "kbracket/bracket.hpp"

#include <bit>
#include <exception>
#include <thread>

#include "kbracket/error.hpp"

namespace kbracket {

namespace {

int pick_threads(int requested, std::uint64_t total_states) {
  if (requested > 0) return requested;
  if (total_states < 64) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<unsigned>(hw == 0 ? 4 : hw, 8));
}

/// Runs fn(mask) over all masks in [0, total) on `threads` workers, summing
/// the per-thread elements. The sum is value-deterministic regardless of
/// scheduling because addition merges canonical monomial keys.
template <typename Fn>
ModuleElement accumulate_states(std::uint64_t total, int threads, Fn&& fn) {
  if (threads <= 1) {
    ModuleElement acc;
    for (std::uint64_t mask = 0; mask < total; ++mask) acc += fn(mask);
    return acc;
  }
  std::vector<ModuleElement> partial(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) /
                              static_cast<std::uint64_t>(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t hi = std::min(total, lo + chunk);
        ModuleElement acc;
        for (std::uint64_t mask = lo; mask < hi; ++mask) acc += fn(mask);
        partial[static_cast<std::size_t>(t)] = std::move(acc);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  ModuleElement out;
  for (auto& p : partial) out += p;
  return out;
}

} // namespace

ModuleElement bracket(const GaussCode& code, const EvalOptions& opts) {
  if (code.free_mode)
    throw Error("mode.signed-required", "bracket needs a signed code; use the free bracket");
  const std::uint64_t total = state_count(code);
  ReduceCache cache;
  ReduceCache* cache_ptr = opts.use_cache ? &cache : nullptr;
  const int threads = pick_threads(opts.threads, total);
  return accumulate_states(total, threads, [&](std::uint64_t mask) {
    const State s{mask};
    return reduce_full(state_web(code, s), cache_ptr) * state_weight(code, s);
  });
}

ModuleElement normalized_bracket(const GaussCode& code, const EvalOptions& opts) {
  const int wr = writhe(code);
  return bracket(code, opts) * LaurentPoly::term(1, -8 * wr);
}

ModuleElement free_bracket(const GaussCode& code, int a, const EvalOptions& opts) {
  if (a != 1 && a != -1)
    throw Error("algebra.bad-specialization", "free bracket evaluates at A = +1 or -1 only");
  const std::uint64_t total = state_count(code);
  ReduceCache cache;
  ReduceCache* cache_ptr = opts.use_cache ? &cache : nullptr;
  const int threads = pick_threads(opts.threads, total);
  return accumulate_states(total, threads, [&](std::uint64_t mask) {
    const int unoriented = std::popcount(mask);
    const std::int64_t weight = (a == 1 && (unoriented & 1)) ? -1 : 1;
    return reduce_full(state_web(code, State{mask}), cache_ptr).specialized(a) *
           LaurentPoly::constant(weight);
  });
}

bool classicality_obstruction(const GaussCode& code, const EvalOptions& opts) {
  return !bracket(code, opts).is_scalar();
}

std::string MinimalityCertificate::str() const {
  if (verdict == Verdict::Inconclusive) return "inconclusive";
  return reason == Reason::GirthAtLeast5 ? "certified-minimal (girth-at-least-5)"
                                         : "certified-minimal (kus-irreducible)";
}

MinimalityCertificate minimality_certificate(const GaussCode& code) {
  if (code.crossing_count() == 0)
    throw Error("diagram.no-crossings", "minimality needs at least one crossing");
  MinimalityCertificate cert;
  const Web kus = unoriented_state_web(code);
  auto [parts, circles] = components(kus);
  if (parts.size() == 1 && circles == 0) cert.kus = canonical_form(parts[0]);

  if (diagram_girth(code) >= 5) {
    cert.verdict = MinimalityCertificate::Verdict::CertifiedMinimal;
    cert.reason = MinimalityCertificate::Reason::GirthAtLeast5;
  } else if (find_bigons(kus).empty() && find_squares(kus).empty()) {
    cert.verdict = MinimalityCertificate::Verdict::CertifiedMinimal;
    cert.reason = MinimalityCertificate::Reason::KusIrreducible;
  }
  return cert;
}

BracketReport report(const GaussCode& code, const EvalOptions& opts) {
  BracketReport r;
  r.raw = bracket(code, opts);
  r.writhe = writhe(code);
  r.normalized = r.raw * LaurentPoly::term(1, -8 * r.writhe);
  r.free_at_plus1 = free_bracket(code, 1, opts);
  r.free_at_minus1 = free_bracket(code, -1, opts);
  r.scalar = r.normalized.is_scalar();
  for (const auto& [m, coeff] : r.normalized.terms()) {
    std::vector<int> counts;
    for (const auto& f : m.factors) counts.push_back(f.vertex_count());
    r.summands.emplace_back(m, std::move(counts));
  }
  return r;
}

} // namespace kbracket
