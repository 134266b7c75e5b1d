#pragma once

// Command-line front end. Exit codes: 0 pass/clean, 1 violation found,
// 2 usage or parse error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "powfree/word.hpp"

namespace powfree::cli {

enum class OutputFormat { Lines, Csv, Json };

OutputFormat parse_format(std::string_view text);

/// Streams letters in one of the output formats without buffering them.
class LetterWriter {
 public:
  LetterWriter(std::ostream& out, OutputFormat format);
  ~LetterWriter();
  LetterWriter(const LetterWriter&) = delete;
  LetterWriter& operator=(const LetterWriter&) = delete;

  void write(Letter c);
  void finish();

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool first_ = true;
  bool finished_ = false;
};

/// Parses decimal naturals separated by whitespace and/or commas; a single
/// enclosing [ ] pair is accepted so that every output format reads back.
/// Throws std::invalid_argument on anything else.
Word parse_letters(std::string_view text);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace powfree::cli
