#include "powfree/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "powfree/closed_form.hpp"
#include "powfree/greedy.hpp"
#include "powfree/morphism.hpp"
#include "powfree/power_check.hpp"
#include "powfree/verify.hpp"

namespace powfree::cli {

namespace {

// Raised for argument combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "lines") return OutputFormat::Lines;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

LetterWriter::LetterWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {
  if (format_ == OutputFormat::Json) out_ << '[';
}

LetterWriter::~LetterWriter() {
  if (!finished_) finish();
}

void LetterWriter::write(Letter c) {
  switch (format_) {
    case OutputFormat::Lines:
      out_ << c << '\n';
      break;
    case OutputFormat::Csv:
    case OutputFormat::Json:
      if (!first_) out_ << ',';
      out_ << c;
      break;
  }
  first_ = false;
}

void LetterWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == OutputFormat::Json) out_ << "]\n";
  if (format_ == OutputFormat::Csv) out_ << '\n';
  out_.flush();
}

Word parse_letters(std::string_view text) {
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated '['");
    text = text.substr(1, text.size() - 2);
  }

  Word out;
  bool pending_comma = false;  // a comma was seen and no number followed yet
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (is_space(ch)) {
      ++i;
    } else if (ch == ',') {
      if (out.empty() || pending_comma) throw std::invalid_argument("empty field in letter list");
      pending_comma = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) throw std::invalid_argument("letter out of range");
      const std::size_t consumed = static_cast<std::size_t>(ptr - (text.data() + i));
      i += consumed;
      if (i < text.size() && !is_space(text[i]) && text[i] != ',') {
        throw std::invalid_argument("malformed letter near '" + std::string(text.substr(i, 8)) + "'");
      }
      out.push_back(value);
      pending_comma = false;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "'");
    }
  }
  if (pending_comma) throw std::invalid_argument("trailing comma in letter list");
  return out;
}

namespace {

using verify::CheckReport;
using verify::Source;

struct GenerateArgs {
  std::string exponent = "3/2";
  std::string mode = "threshold";
  std::size_t length = 0;
  std::string method = "greedy";
  std::string format = "lines";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const Exponent e = Exponent::parse(a.exponent);
  const Mode mode = parse_mode(a.mode);
  LetterWriter writer(out, parse_format(a.format));
  const bool three_halves = e == Exponent(3, 2);
  const bool square = e == Exponent(2, 1) && mode == Mode::Threshold;

  if (a.method == "greedy") {
    GreedyState state(e, mode, Exec::Parallel);
    state.reserve(a.length);
    for (std::size_t i = 0; i < a.length; ++i) writer.write(state.extend());
  } else if (a.method == "closed") {
    Letter (*term)(std::uint64_t) = nullptr;
    if (three_halves) term = mode == Mode::Threshold ? closed::w32_term : closed::x32_term;
    if (square) term = closed::ruler_term;
    if (term == nullptr) {
      throw UsageError("closed form is only available for 3/2 (threshold, exact) and 2/1 threshold");
    }
    for (std::size_t i = 0; i < a.length; ++i) writer.write(term(i));
  } else {
    if (!three_halves) throw UsageError("morphism method is only available for exponent 3/2");
    auto sink = [&](Letter c) { writer.write(c); };
    if (mode == Mode::Threshold) {
      morph::stream_w32(a.length, sink);
    } else {
      morph::stream_x32(a.length, sink);
    }
  }
  writer.finish();
  return 0;
}

struct TermArgs {
  std::string which;
  std::uint64_t index = 0;
  bool closed_form = false;
};

int cmd_term(const TermArgs& a, std::ostream& out) {
  const std::uint64_t n = a.index;
  std::uint64_t value = 0;
  if (a.which == "w32") {
    value = closed::w32_term(n);
  } else if (a.which == "b") {
    value = a.closed_form ? closed::b_closed(n) : closed::b_rec(n);
  } else if (a.which == "c" || a.which == "d") {
    if (a.closed_form && n == 0) throw UsageError("closed forms of c and d need index >= 1");
    if (a.which == "c") {
      value = a.closed_form ? closed::c_closed(n) : closed::c_term(n);
    } else {
      value = a.closed_form ? closed::d_closed(n) : closed::d_term(n);
    }
  } else if (a.which == "f" || a.which == "x32") {
    value = closed::f_term(n);
  } else {
    value = closed::ruler_term(n);
  }
  out << value << '\n';
  return 0;
}

struct ScanArgs {
  std::string input = "-";
  std::optional<std::string> letters;
  std::string exponent = "3/2";
  std::string mode = "threshold";
  std::string format = "text";
};

int cmd_scan(const ScanArgs& a, std::istream& in, std::ostream& out) {
  const Exponent e = Exponent::parse(a.exponent);
  const Mode mode = parse_mode(a.mode);
  std::string text;
  if (a.letters) {
    text = *a.letters;
  } else if (a.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(a.input);
    if (!file) throw UsageError("cannot open '" + a.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const Word w = parse_letters(text);
  const auto occ = contains_forbidden(w, e, mode);

  if (a.format == "json") {
    nlohmann::json j;
    j["format"] = verify::kReportFormat;
    j["status"] = occ ? "forbidden" : "clean";
    j["length"] = w.size();
    if (occ) {
      j["occurrence"] = {{"start", occ->start}, {"period", occ->period}, {"length", occ->length}};
    }
    out << j.dump() << '\n';
  } else if (occ) {
    out << "forbidden start=" << occ->start << " period=" << occ->period
        << " length=" << occ->length << '\n';
  } else {
    out << "clean\n";
  }
  return occ ? 1 : 0;
}

struct VerifyArgs {
  std::string check;
  std::optional<std::size_t> length;
  std::optional<std::string> target;
  std::optional<std::string> exponent;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> s_max;
  std::optional<std::uint64_t> j_max;
  std::optional<std::uint64_t> r_max;
  std::string format = "text";
  bool serial = false;
  bool timing = false;
};

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "powerfree",    "minimality",    "cross",      "b-closed",
      "cd-closed",    "f-b-link",      "w32-template", "ruler",
      "b-inequality", "b-window",      "ell-claim",  "eq6-intervals",
      "x-decrement-lengths", "x-squares", "x-overlapfree", "all"};
  return names;
}

std::vector<CheckReport> run_checks(const VerifyArgs& a) {
  const Exec exec = a.serial ? Exec::Serial : Exec::Parallel;
  auto target_source = [&](Source fallback) {
    return a.target ? verify::parse_source(*a.target) : fallback;
  };
  auto exponent_mode = [&](Source s) {
    verify::Target t = verify::default_target(s);
    if (a.exponent) t.exponent = Exponent::parse(*a.exponent);
    if (a.mode) t.mode = parse_mode(*a.mode);
    return t;
  };

  const std::map<std::string, std::function<std::vector<CheckReport>()>> table{
      {"powerfree",
       [&] {
         const Source s = target_source(Source::W32Closed);
         const auto t = exponent_mode(s);
         return std::vector{verify::check_powerfree(s, t.exponent, t.mode, a.length.value_or(10000), exec)};
       }},
      {"minimality",
       [&] {
         const Source s = target_source(Source::W32Closed);
         const auto t = exponent_mode(s);
         return std::vector{verify::check_minimality(s, t.exponent, t.mode, a.length.value_or(2000), exec)};
       }},
      {"cross", [&] { return std::vector{verify::check_cross(a.length.value_or(10000))}; }},
      {"b-closed", [&] { return std::vector{verify::check_b_closed(a.n_max.value_or(1000000), exec)}; }},
      {"cd-closed", [&] { return std::vector{verify::check_cd_closed(a.s_max.value_or(100000), exec)}; }},
      {"f-b-link", [&] { return std::vector{verify::check_f_b_link(a.n_max.value_or(100000), exec)}; }},
      {"w32-template",
       [&] { return std::vector{verify::check_w32_template(a.n_max.value_or(1000000), exec)}; }},
      {"ruler", [&] { return std::vector{verify::check_ruler(a.length.value_or(10000), exec)}; }},
      {"b-inequality",
       [&] {
         return std::vector{verify::check_b_inequality(a.s_max.value_or(300), a.j_max.value_or(300), exec)};
       }},
      {"b-window",
       [&] {
         return std::vector{verify::check_b_window(a.n_max.value_or(2000), a.r_max.value_or(200), exec)};
       }},
      {"ell-claim", [&] { return std::vector{verify::check_ell_claim(a.n_max.value_or(2000), exec)}; }},
      {"eq6-intervals",
       [&] { return std::vector{verify::check_eq6_intervals(a.n_max.value_or(2000), exec)}; }},
      {"x-decrement-lengths",
       [&] { return std::vector{verify::check_x_decrement_lengths(a.n_max.value_or(2000), exec)}; }},
      {"x-squares",
       [&] {
         const Source s = target_source(Source::X32Closed);
         const Word w = verify::make_prefix(s, a.length.value_or(10000));
         return std::vector{verify::check_x_squares("x-squares:" + std::string(verify::to_string(s)), w, exec)};
       }},
      {"x-overlapfree",
       [&] {
         const Source s = target_source(Source::X32Closed);
         const Word w = verify::make_prefix(s, a.length.value_or(10000));
         return std::vector{
             verify::check_x_overlapfree("x-overlapfree:" + std::string(verify::to_string(s)), w, exec)};
       }},
  };

  if (a.check != "all") return table.at(a.check)();

  std::vector<CheckReport> all;
  for (const auto& name : check_names()) {
    if (name == "all") continue;
    for (auto& r : table.at(name)()) all.push_back(std::move(r));
  }
  // The default w32 minimality run above; add the exact-mode twin.
  all.push_back(verify::check_minimality(Source::X32Closed, Exponent(3, 2), Mode::Exact,
                                         a.length.value_or(2000), exec));
  return all;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto reports = run_checks(a);
  bool passed = true;
  if (a.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(verify::to_json(r));
    out << (reports.size() == 1 ? j.front() : j).dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << verify::to_text(r, a.timing);
  }
  for (const auto& r : reports) passed = passed && r.passed;
  return passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lexicographically least power-free words over the natural numbers"};
  app.name(args.empty() ? "powfree" : args.front());
  app.require_subcommand(1);

  const std::vector<std::string> modes{"threshold", "exact"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print a prefix of the least avoiding word");
  generate->add_option("--exponent,-e", gen.exponent, "Exponent as P/Q")->capture_default_str();
  generate->add_option("--mode,-m", gen.mode, "threshold or exact")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  generate->add_option("--length,-n", gen.length, "Number of letters")->required();
  generate->add_option("--method", gen.method, "greedy, closed or morphism")
      ->check(CLI::IsMember({"greedy", "closed", "morphism"}))
      ->capture_default_str();
  generate->add_option("--format,-f", gen.format, "lines, csv or json")
      ->check(CLI::IsMember({"lines", "csv", "json"}))
      ->capture_default_str();

  TermArgs term;
  auto* term_cmd = app.add_subcommand("term", "Evaluate one term of a closed-form sequence");
  term_cmd->add_option("--which,-w", term.which, "w32, b, c, d, f, x32 or ruler")
      ->required()
      ->check(CLI::IsMember({"w32", "b", "c", "d", "f", "x32", "ruler"}));
  term_cmd->add_option("--index,-i", term.index, "Index n >= 0")->required();
  term_cmd->add_flag("--closed", term.closed_form, "Use the digit closed form (b, c, d)");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Find the first forbidden factor in a letter list");
  scan_cmd->add_option("input", scan.input, "File of letters, or - for stdin")->capture_default_str();
  scan_cmd->add_option("--letters", scan.letters, "Letters given inline");
  scan_cmd->add_option("--exponent,-e", scan.exponent, "Exponent as P/Q")->capture_default_str();
  scan_cmd->add_option("--mode,-m", scan.mode, "threshold or exact")
      ->check(CLI::IsMember(modes))
      ->capture_default_str();
  scan_cmd->add_option("--format,-f", scan.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a structural check and print its report");
  verify_cmd->add_option("check", ver.check, "Check name")
      ->required()
      ->check(CLI::IsMember(check_names()));
  verify_cmd->add_option("--length,-n", ver.length, "Prefix length");
  verify_cmd->add_option("--target,-t", ver.target, "Generator: w32, x32, ruler, *-greedy, *-morphism, zero");
  verify_cmd->add_option("--exponent,-e", ver.exponent, "Override the target's exponent");
  verify_cmd->add_option("--mode,-m", ver.mode, "Override the target's mode")->check(CLI::IsMember(modes));
  verify_cmd->add_option("--n-max", ver.n_max, "Upper bound on n");
  verify_cmd->add_option("--s-max", ver.s_max, "Upper bound on s");
  verify_cmd->add_option("--j-max", ver.j_max, "Upper bound on j");
  verify_cmd->add_option("--r-max", ver.r_max, "Upper bound on r");
  verify_cmd->add_option("--format,-f", ver.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_flag("--serial", ver.serial, "Use the serial reference kernels");
  verify_cmd->add_flag("--timing", ver.timing, "Append elapsed time to text reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*term_cmd) return cmd_term(term, out);
    if (*scan_cmd) return cmd_scan(scan, in, out);
    if (*verify_cmd) return cmd_verify(ver, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace powfree::cli
