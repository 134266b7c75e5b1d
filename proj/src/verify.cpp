#include "powfree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "powfree/closed_form.hpp"
#include "powfree/greedy.hpp"
#include "powfree/morphism.hpp"

namespace powfree::verify {

namespace {

struct SourceName {
  Source source;
  std::string_view id;
};

constexpr SourceName kSources[] = {
    {Source::W32Closed, "w32"},       {Source::W32Greedy, "w32-greedy"},
    {Source::W32Morphism, "w32-morphism"}, {Source::X32Closed, "x32"},
    {Source::X32Greedy, "x32-greedy"}, {Source::X32Morphism, "x32-morphism"},
    {Source::Ruler, "ruler"},         {Source::RulerGreedy, "ruler-greedy"},
    {Source::Zero, "zero"},
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckReport start_report(std::string name, std::map<std::string, std::uint64_t> params) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  return r;
}

void fail(CheckReport& r, Violation v) {
  r.passed = false;
  r.violation = std::move(v);
}

Word closed_prefix(std::size_t n, Letter (*term)(std::uint64_t)) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = term(i);
  return w;
}

}  // namespace

Source parse_source(std::string_view id) {
  for (const auto& s : kSources) {
    if (s.id == id) return s.source;
  }
  throw std::invalid_argument("unknown generator '" + std::string(id) + "'");
}

std::string_view to_string(Source s) {
  for (const auto& entry : kSources) {
    if (entry.source == s) return entry.id;
  }
  return "?";
}

Word make_prefix(Source s, std::size_t n) {
  const Exponent three_halves(3, 2);
  switch (s) {
    case Source::W32Closed:
      return closed_prefix(n, closed::w32_term);
    case Source::W32Greedy:
      return generate(three_halves, Mode::Threshold, n, Exec::Parallel);
    case Source::W32Morphism:
      return morph::w32_via_morphism(n);
    case Source::X32Closed:
      return closed_prefix(n, closed::f_term);
    case Source::X32Greedy:
      return generate(three_halves, Mode::Exact, n, Exec::Parallel);
    case Source::X32Morphism:
      return morph::x32_via_morphism(n);
    case Source::Ruler:
      return closed_prefix(n, closed::ruler_term);
    case Source::RulerGreedy:
      return generate(Exponent(2, 1), Mode::Threshold, n, Exec::Parallel);
    case Source::Zero:
      return Word(n, 0);
  }
  throw std::logic_error("unhandled source");
}

Target default_target(Source s) {
  switch (s) {
    case Source::X32Closed:
    case Source::X32Greedy:
    case Source::X32Morphism:
      return {Exponent(3, 2), Mode::Exact};
    case Source::Ruler:
    case Source::RulerGreedy:
      return {Exponent(2, 1), Mode::Threshold};
    default:
      return {Exponent(3, 2), Mode::Threshold};
  }
}

std::string to_text(const CheckReport& r, bool with_timing) {
  std::ostringstream out;
  out << r.name << ": " << (r.passed ? "PASS" : "FAIL");
  for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
  out << '\n';
  for (const auto& [k, v] : r.counters) out << "  " << k << ": " << v << '\n';
  if (r.violation) {
    const Violation& v = *r.violation;
    out << "  violation: " << v.kind << " at " << v.position;
    if (v.occurrence) {
      out << " (start=" << v.occurrence->start << " period=" << v.occurrence->period
          << " length=" << v.occurrence->length << ')';
    }
    if (!v.values.empty()) {
      out << " values=";
      for (std::size_t i = 0; i < v.values.size(); ++i) out << (i ? "," : "") << v.values[i];
    }
    out << '\n';
  }
  if (with_timing) out << "  elapsed_ms: " << r.elapsed_ms << '\n';
  return out.str();
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["format"] = kReportFormat;
  j["check"] = r.name;
  j["status"] = r.passed ? "pass" : "fail";
  j["params"] = r.params;
  j["counters"] = r.counters;
  if (r.violation) {
    const Violation& v = *r.violation;
    nlohmann::json vj;
    vj["kind"] = v.kind;
    vj["position"] = v.position;
    if (v.occurrence) {
      vj["occurrence"] = {{"start", v.occurrence->start},
                          {"period", v.occurrence->period},
                          {"length", v.occurrence->length}};
    }
    vj["values"] = v.values;
    j["violation"] = vj;
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

CheckReport check_powerfree(std::string name, WordView w, const Exponent& e, Mode mode,
                            Exec exec) {
  Stopwatch clock;
  auto r = start_report(std::move(name), {{"length", w.size()}});
  if (auto occ = contains_forbidden(w, e, mode, exec)) {
    fail(r, {"forbidden-factor", occ->end() - 1, occ, {}});
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_powerfree(Source s, const Exponent& e, Mode mode, std::size_t n, Exec exec) {
  const Word w = make_prefix(s, n);
  return check_powerfree("powerfree:" + std::string(to_string(s)), w, e, mode, exec);
}

CheckReport check_minimality(std::string name, WordView w, const Exponent& e, Mode mode,
                             Exec exec) {
  Stopwatch clock;
  auto r = start_report(std::move(name), {{"length", w.size()}});

  std::vector<std::optional<Violation>> found(w.size());
  const auto first = first_index_where(0, w.size(), exec, [&](std::size_t i) {
    Word scratch(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    if (auto occ = forbidden_suffix(scratch, e, mode)) {
      found[i] = Violation{"letter-not-allowed", i, occ, {w[i]}};
      return true;
    }
    for (Letter m = 0; m < w[i]; ++m) {
      scratch.back() = m;
      if (!forbidden_suffix(scratch, e, mode)) {
        found[i] = Violation{"decrement-allowed", i, std::nullopt, {m, w[i]}};
        return true;
      }
    }
    return false;
  });
  if (first) fail(r, *found[*first]);
  std::uint64_t decrements = 0;
  for (Letter c : w) decrements += c;
  r.counters["decrements"] = decrements;
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_minimality(Source s, const Exponent& e, Mode mode, std::size_t n, Exec exec) {
  const Word w = make_prefix(s, n);
  return check_minimality("minimality:" + std::string(to_string(s)), w, e, mode, exec);
}

CheckReport check_cross(std::size_t n) {
  Stopwatch clock;
  auto r = start_report("cross", {{"length", n}});
  struct Triple {
    const char* kind;
    Source greedy, closed, morphism;
  };
  const Triple triples[] = {
      {"threshold-disagree", Source::W32Greedy, Source::W32Closed, Source::W32Morphism},
      {"exact-disagree", Source::X32Greedy, Source::X32Closed, Source::X32Morphism},
  };
  for (const auto& t : triples) {
    const Word g = make_prefix(t.greedy, n);
    const Word c = make_prefix(t.closed, n);
    const Word m = make_prefix(t.morphism, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != c[i] || c[i] != m[i]) {
        fail(r, {t.kind, i, std::nullopt, {g[i], c[i], m[i]}});
        r.elapsed_ms = clock.ms();
        return r;
      }
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_b_closed(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("b-closed", {{"n-max", n_max}});
  const auto first = first_index_where(0, n_max, exec, [](std::size_t n) {
    const auto families = closed::b_families(n);
    return families.size() != 1 || closed::b_closed(n) != closed::b_rec(n);
  });
  if (first) {
    const auto families = closed::b_families(*first);
    std::vector<std::uint64_t> values{closed::b_rec(*first)};
    values.insert(values.end(), families.begin(), families.end());
    fail(r, {families.size() != 1 ? "families-not-partition" : "b-mismatch", *first,
             std::nullopt, values});
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_cd_closed(std::uint64_t s_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("cd-closed", {{"s-max", s_max}});
  const auto first = first_index_where(1, std::max<std::uint64_t>(s_max, 1), exec,
                                       [](std::size_t s) {
    const auto c = closed::c_term(s);
    const auto d = closed::d_term(s);
    return c != closed::c_closed(s) || d != closed::d_closed(s) || c > d || d > 3 * s;
  });
  if (first) {
    const std::uint64_t s = *first;
    fail(r, {"cd-mismatch", s, std::nullopt,
             {closed::c_term(s), closed::c_closed(s), closed::d_term(s), closed::d_closed(s)}});
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_f_b_link(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("f-b-link", {{"n-max", n_max}});
  const auto first = first_index_where(0, n_max, exec, [](std::size_t n) {
    return closed::f_term(12 * n + 11) + 1 != closed::b_rec(n);
  });
  if (first) {
    fail(r, {"f-b-mismatch", *first, std::nullopt,
             {closed::f_term(12 * *first + 11), closed::b_rec(*first)}});
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_w32_template(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("w32-template", {{"n-max", n_max}});
  constexpr Letter kTemplate[10] = {0, 1, 2, 0, 99, 1, 0, 2, 1, 99};
  auto expected = [&](std::uint64_t i) -> Letter {
    const std::uint64_t block = i / 10;
    switch (i % 10) {
      case 4:
        return block % 2 == 0 ? 3 : 4;
      case 9:
        return closed::b_rec(block);
      default:
        return kTemplate[i % 10];
    }
  };
  const auto first = first_index_where(0, n_max, exec, [&](std::size_t i) {
    return closed::w32_term(i) != expected(i);
  });
  if (first) {
    fail(r, {"template-mismatch", *first, std::nullopt, {closed::w32_term(*first), expected(*first)}});
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_ruler(std::size_t n, Exec exec) {
  Stopwatch clock;
  auto r = start_report("ruler", {{"length", n}});
  const Word ruler = make_prefix(Source::Ruler, n);
  if (auto occ = contains_forbidden(ruler, Exponent(2, 1), Mode::Threshold, exec)) {
    fail(r, {"square", occ->start, occ, {}});
  } else {
    const Word greedy = make_prefix(Source::RulerGreedy, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ruler[i] != greedy[i]) {
        fail(r, {"greedy-disagree", i, std::nullopt, {greedy[i], ruler[i]}});
        break;
      }
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_b_inequality(std::uint64_t s_max, std::uint64_t j_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("b-inequality", {{"s-max", s_max}, {"j-max", j_max}});
  std::vector<std::optional<Violation>> found(s_max + 1);
  const auto first = first_index_where(1, s_max + 1, exec, [&](std::size_t s) {
    const std::uint64_t c = closed::c_term(s);
    const std::uint64_t d = closed::d_term(s);
    if (c > d || d > 3 * s) {
      found[s] = Violation{"c-d-bound", s, std::nullopt, {s, c, d}};
      return true;
    }
    for (std::uint64_t j = 0; j <= j_max; ++j) {
      const std::uint64_t x = d * j + c;
      if (closed::b_rec(x) == closed::b_rec(x + 6 * s)) {
        found[s] = Violation{"b-equal", s, std::nullopt, {s, j, x, closed::b_rec(x)}};
        return true;
      }
    }
    return false;
  });
  if (first) fail(r, *found[*first]);
  r.counters["pairs"] = s_max * (j_max + 1);
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_b_window(std::uint64_t n_max, std::uint64_t r_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("b-window", {{"n-max", n_max}, {"r-max", r_max}});
  std::vector<Letter> b(n_max + 3 * r_max + 1);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = closed::b_rec(i);

  std::vector<std::uint64_t> bad_r(n_max + 1, 0);
  const auto first = first_index_where(0, n_max + 1, exec, [&](std::size_t n) {
    for (std::uint64_t rr = 1; rr <= r_max; ++rr) {
      bool separated = false;
      for (std::uint64_t j = 0; j < rr && !separated; ++j) {
        separated = b[n + j] != b[n + 2 * rr + j];
      }
      if (!separated) {
        bad_r[n] = rr;
        return true;
      }
    }
    return false;
  });
  if (first) fail(r, {"no-separating-j", *first, std::nullopt, {*first, bad_r[*first]}});
  r.elapsed_ms = clock.ms();
  return r;
}

namespace {

struct DecrementOutcome {
  std::map<std::string, std::uint64_t> counters;
  std::optional<Violation> violation;
};

void merge(CheckReport& r, const std::vector<DecrementOutcome>& per_n) {
  for (const auto& o : per_n) {
    for (const auto& [k, v] : o.counters) r.counters[k] += v;
  }
  for (const auto& o : per_n) {
    if (o.violation) {
      fail(r, *o.violation);
      break;
    }
  }
}

}  // namespace

CheckReport check_ell_claim(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("ell-claim", {{"n-max", n_max}});
  const Word w = make_prefix(Source::W32Closed, 10 * n_max + 10);

  std::vector<DecrementOutcome> per_n(n_max + 1);
  for_each_index(0, n_max + 1, exec, [&](std::size_t n) {
    if (n % 3 != 2) return;
    auto& out = per_n[n];
    const Letter b = closed::b_rec(n);
    const std::size_t pos = 10 * n + 9;
    for (Letter m = 5; m < b; ++m) {
      const closed::EllCase ec{b, m};
      const std::uint64_t ell = closed::ell_m(ec);
      if (3 * ell > pos + 1) {
        ++out.counters["skipped"];
        continue;
      }
      Word window(w.begin() + static_cast<std::ptrdiff_t>(pos + 1 - 3 * ell),
                  w.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      window.back() = m;
      if (!has_period(window, 2 * ell)) {
        out.violation = Violation{"no-xyx-witness", n, Occurrence{pos + 1 - 3 * ell, 2 * ell, 3 * ell},
                                  {n, m, ell}};
        return;
      }
      ++out.counters["checked"];
      ++out.counters["case-" + std::to_string(closed::ell_case_index(ec))];
      ++out.counters["ell-" + std::to_string(ell)];
    }
  });
  merge(r, per_n);
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_eq6_intervals(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("eq6-intervals", {{"n-max", n_max}});
  std::vector<Letter> b(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) b[i] = closed::b_rec(i);

  std::vector<DecrementOutcome> per_n(n_max + 1);
  for_each_index(0, n_max + 1, exec, [&](std::size_t n) {
    if (n % 3 != 2) return;
    auto& out = per_n[n];
    for (Letter m = 5; m < b[n]; ++m) {
      const std::uint64_t step = closed::ell_m({b[n], m}) / 10;
      if (3 * step > n + 1) {
        ++out.counters["skipped"];
        continue;
      }
      // b(n+1-3s .. n-2s-1) == b(n+1-s .. n-1) and b(n-2s) == m, s = ell/10.
      const std::size_t left = n + 1 - 3 * step;
      const std::size_t right = n + 1 - step;
      const bool same = std::equal(b.begin() + static_cast<std::ptrdiff_t>(left),
                                   b.begin() + static_cast<std::ptrdiff_t>(left + step - 1),
                                   b.begin() + static_cast<std::ptrdiff_t>(right));
      if (!same || b[n - 2 * step] != m) {
        out.violation = Violation{same ? "centre-letter" : "intervals-differ", n, std::nullopt,
                                  {n, m, step * 10, b[n - 2 * step]}};
        return;
      }
      ++out.counters["checked"];
    }
  });
  merge(r, per_n);
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_x_decrement_lengths(std::uint64_t n_max, Exec exec) {
  Stopwatch clock;
  auto r = start_report("x-decrement-lengths", {{"n-max", n_max}});
  const Word x = make_prefix(Source::X32Closed, 12 * n_max + 12);
  const Exponent three_halves(3, 2);

  std::vector<DecrementOutcome> per_n(n_max + 1);
  for_each_index(0, n_max + 1, exec, [&](std::size_t n) {
    if (n % 3 != 2) return;
    auto& out = per_n[n];
    const std::size_t pos = 12 * n + 11;
    const Letter b = closed::b_rec(n);
    for (Letter m = 4; m < x[pos]; ++m) {
      const std::uint64_t length = closed::ell_m({b, m + 1}) * 18 / 5;
      if (length > pos + 1) {
        ++out.counters["skipped"];
        continue;
      }
      Word window(x.begin() + static_cast<std::ptrdiff_t>(pos + 1 - length),
                  x.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      window.back() = m;
      if (!is_exact_power(window, three_halves)) {
        out.violation = Violation{"no-exact-power", n, std::nullopt, {n, m, length}};
        return;
      }
      ++out.counters["checked"];
    }
  });
  merge(r, per_n);
  r.elapsed_ms = clock.ms();
  return r;
}

namespace {

// First factor of period P (scanning P = 1 .. max_period) whose length
// reaches min_len(P), ordered by start then period. `allowed` may excuse
// particular finds, which are then only counted.
template <class MinLen, class Allowed>
std::optional<Occurrence> first_periodic_factor(WordView w, std::size_t max_period, Exec exec,
                                                MinLen min_len, Allowed allowed,
                                                std::map<std::string, std::uint64_t>& counters) {
  std::vector<std::optional<Occurrence>> per_period(max_period + 1);
  std::vector<std::map<std::string, std::uint64_t>> per_counts(max_period + 1);
  for_each_index(1, max_period + 1, exec, [&](std::size_t period) {
    const std::size_t need = min_len(period);
    std::size_t run = 0;
    for (std::size_t i = 0; i + period < w.size(); ++i) {
      run = w[i] == w[i + period] ? run + 1 : 0;
      if (run + period >= need) {
        const Occurrence occ{i + period + 1 - need, period, need};
        if (const char* tag = allowed(occ)) {
          ++per_counts[period][tag];
          continue;
        }
        per_period[period] = occ;
        return;
      }
    }
  });
  std::optional<Occurrence> best;
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (const auto& [k, v] : per_counts[p]) counters[k] += v;
    const auto& occ = per_period[p];
    if (occ && (!best || occ->start < best->start)) best = occ;
  }
  return best;
}

}  // namespace

CheckReport check_x_squares(std::string name, WordView w, Exec exec) {
  Stopwatch clock;
  auto r = start_report(std::move(name), {{"length", w.size()}});
  r.counters["squares-00"] = 0;
  r.counters["squares-11"] = 0;
  const auto occ = first_periodic_factor(
      w, w.size() / 2, exec, [](std::size_t p) { return 2 * p; },
      [&](const Occurrence& o) -> const char* {
        if (o.period != 1) return nullptr;
        if (w[o.start] == 0) return "squares-00";
        if (w[o.start] == 1) return "squares-11";
        return nullptr;
      },
      r.counters);
  if (occ) fail(r, {"square", occ->start, occ, {w[occ->start]}});
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_x_squares(std::size_t n, Exec exec) {
  const Word w = make_prefix(Source::X32Closed, n);
  return check_x_squares("x-squares", w, exec);
}

CheckReport check_x_overlapfree(std::string name, WordView w, Exec exec) {
  Stopwatch clock;
  auto r = start_report(std::move(name), {{"length", w.size()}});
  const std::size_t max_period = w.empty() ? 0 : (w.size() - 1) / 2;
  const auto occ = first_periodic_factor(
      w, max_period, exec, [](std::size_t p) { return 2 * p + 1; },
      [](const Occurrence&) -> const char* { return nullptr; }, r.counters);
  if (occ) fail(r, {"overlap", occ->start, occ, {}});
  r.elapsed_ms = clock.ms();
  return r;
}

CheckReport check_x_overlapfree(std::size_t n, Exec exec) {
  const Word w = make_prefix(Source::X32Closed, n);
  return check_x_overlapfree("x-overlapfree", w, exec);
}

}  // namespace powfree::verify
