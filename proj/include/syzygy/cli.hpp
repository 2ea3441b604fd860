#pragma once

#include "syzygy/koszul.hpp"
#include "syzygy/theorems.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace syzygy::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string curve_spec;  // file path or inline JSON
  std::optional<int> d;
  std::optional<koszul::IndexRange> p;  // default [0, r]
  koszul::IndexRange q{0, 3};
  std::size_t prime_count = 3;
  std::uint64_t seed = 1;
  koszul::RankMode rank = koszul::RankMode::Consensus;
  std::size_t exact_cap = linalg::kDefaultCertificationCap;
  Format format = Format::Text;
  std::optional<std::string> out;
  std::size_t jobs = 1;
  bool corpus = false;
  bool extended = false;
};

/// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

/// "a..b" or "a"; throws std::invalid_argument otherwise.
koszul::IndexRange parse_range(const std::string& text);

std::string render_text(const koszul::BettiTable& table,
                        const koszul::KoszulContext& ctx);
std::string render_csv(const koszul::BettiTable& table);
std::string render_json(const koszul::BettiTable& table,
                        const koszul::KoszulContext& ctx);
std::string render_text(const theorems::VerificationReport& report);

/// Runs one command line (args[0] is the subcommand) and returns the exit
/// code. Standard output and error go to `out` / `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace syzygy::cli
