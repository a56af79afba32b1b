#include "chandas/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chandas/binomial.hpp"
#include "chandas/core.hpp"
#include "chandas/counting.hpp"
#include "chandas/errors.hpp"
#include "chandas/indexing.hpp"
#include "chandas/oracle.hpp"
#include "chandas/pataka.hpp"
#include "chandas/prastara.hpp"
#include "chandas/render.hpp"

namespace chandas::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

// Raised when --verify finds the historical result differing from the
// oracle; mapped to kExitVerifyMismatch.
struct VerifyMismatch {
  std::string message;
};

struct Usage {
  std::string message;
};

Format to_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Text;
}

Notation to_notation(const std::string& name) {
  return name == "binary" ? Notation::Binary01 : Notation::GL;
}

Natural parse_row(const std::string& text) {
  if (text.empty()) throw EmptyInput();
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw InvalidCharacter(i + 1, text[i]);
  }
  return Natural(text);
}

unsigned to_unsigned_n(std::uint64_t n) {
  if (n > std::numeric_limits<unsigned>::max())
    throw InvalidArgs("--n too large for this method");
  return static_cast<unsigned>(n);
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::string csv_sequence(const GlSequence& seq, Notation notation) {
  std::vector<std::string> cells;
  cells.reserve(seq.size());
  for (const Syllable s : seq) cells.emplace_back(1, to_char(s, notation));
  return csv_join(cells);
}

std::vector<std::string> to_strings(const std::vector<Natural>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (const Natural& v : values) cells.push_back(v.str());
  return cells;
}

std::vector<std::string> to_strings(const std::vector<RowIndex>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (const RowIndex& v : values) cells.push_back(v.str());
  return cells;
}

std::string render_rows(const std::vector<std::vector<Natural>>& rows,
                        Format format, const std::string& text_form) {
  if (format == Format::Text) return text_form;
  if (format == Format::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) j.push_back(to_strings(row));
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& row : rows) out += csv_join(to_strings(row));
  return out;
}

// Horner evaluation of a numeral, for cross-checking the rank scans.
Natural numeral_value(const BaseBNumeral& num) {
  Natural v = 0;
  for (const unsigned d : num.digits) v = v * num.base + d;
  return v;
}

void verify_sequence_bits(const GlSequence& seq, const Natural& row_value,
                          const std::string& what) {
  const Natural v = row_value - 1;
  if (oracle::mirror_bridge(seq) !=
      oracle::modern_to_binary(v, static_cast<unsigned>(seq.size()))) {
    throw VerifyMismatch{what + " " + seq.str() +
                         " disagrees with the binary-counting oracle at row " +
                         row_value.str()};
  }
}

void verify_positions(unsigned n, unsigned r,
                      const std::vector<RowIndex>& column) {
  std::vector<RowIndex> sorted = column;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != oracle::brute_positions(n, r)) {
    throw VerifyMismatch{"pataka column " + std::to_string(r) +
                         " disagrees with the brute-force position scan"};
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Historical binary-sequence combinatorics calculator"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string notation_name = "gl";
  unsigned guard = kDefaultEnumerationGuard;
  bool verify = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--notation", notation_name,
                 "Syllable notation for input and output")
      ->check(CLI::IsMember({"gl", "binary"}));
  app.add_option("--guard", guard,
                 "Largest syllable count enumeration commands accept");
  app.add_flag("--verify", verify,
               "Cross-check the result against the modern oracle");

  unsigned prastara_n = 0;
  std::string prastara_method = "pingala";
  bool stream = false;
  bool numbered = false;
  CLI::App* sub_prastara =
      app.add_subcommand("prastara", "Enumerate all n-syllable rows");
  sub_prastara->fallthrough();
  sub_prastara->add_option("--n", prastara_n, "Syllable count")->required();
  sub_prastara->add_option("--method", prastara_method, "Construction")
      ->check(CLI::IsMember({"pingala", "kedara"}));
  sub_prastara->add_flag("--stream", stream,
                         "Write rows as generated, ignoring the guard");
  sub_prastara->add_flag("--numbered", numbered,
                         "Prefix each text row with its 1-based index");

  unsigned nashtam_n = 0;
  std::string nashtam_row;
  CLI::App* sub_nashtam =
      app.add_subcommand("nashtam", "Recover the row at a given index");
  sub_nashtam->fallthrough();
  sub_nashtam->add_option("--n", nashtam_n, "Syllable count")->required();
  sub_nashtam->add_option("--row", nashtam_row, "1-based row index")
      ->required();

  std::string uddishtam_seq;
  std::string uddishtam_method = "pingala";
  CLI::App* sub_uddishtam =
      app.add_subcommand("uddishtam", "Find the index of a given row");
  sub_uddishtam->fallthrough();
  sub_uddishtam->add_option("--seq", uddishtam_seq, "Syllable sequence")
      ->required();
  sub_uddishtam->add_option("--method", uddishtam_method, "Ranking rule")
      ->check(CLI::IsMember({"pingala", "kedara"}));

  std::string rank_digits;
  unsigned rank_base = 10;
  CLI::App* sub_rank = app.add_subcommand(
      "rank", "1-based position of a base-B numeral in the enumeration");
  sub_rank->fallthrough();
  sub_rank->add_option("--digits", rank_digits, "Numeral, most significant first")
      ->required();
  sub_rank->add_option("--base", rank_base, "Numeral base (2..36)");

  unsigned lagakriya_n = 0;
  std::string lagakriya_method = "meru";
  CLI::App* sub_lagakriya = app.add_subcommand(
      "lagakriya", "Counts of rows by number of laghus (binomials)");
  sub_lagakriya->fallthrough();
  sub_lagakriya->add_option("--n", lagakriya_n, "Syllable count")->required();
  sub_lagakriya->add_option("--method", lagakriya_method, "Construction")
      ->check(CLI::IsMember({"kedara", "meru", "bhaskara"}));

  unsigned ncr_n = 0;
  unsigned ncr_r = 0;
  CLI::App* sub_ncr =
      app.add_subcommand("ncr", "Single binomial coefficient C(n, r)");
  sub_ncr->fallthrough();
  sub_ncr->add_option("--n", ncr_n, "Total syllables")->required();
  sub_ncr->add_option("--r", ncr_r, "Laghu count")->required();

  std::uint64_t sankhya_n = 0;
  std::string sankhya_method = "pingala";
  bool trace = false;
  CLI::App* sub_sankhya =
      app.add_subcommand("sankhya", "Total row count 2^n");
  sub_sankhya->fallthrough();
  sub_sankhya->add_option("--n", sankhya_n, "Syllable count")->required();
  sub_sankhya->add_option("--method", sankhya_method, "Computation route")
      ->check(CLI::IsMember({"pingala", "lagakriya", "uddishta"}));
  sub_sankhya->add_flag("--trace", trace,
                        "Show the reduction table and replay column");

  std::uint64_t adhvayoga_n = 0;
  CLI::App* sub_adhvayoga = app.add_subcommand(
      "adhvayoga", "Total rows over all meters of 1..n syllables");
  sub_adhvayoga->fallthrough();
  sub_adhvayoga->add_option("--n", adhvayoga_n, "Largest syllable count")
      ->required();

  unsigned pataka_n = 0;
  unsigned pataka_r = 0;
  CLI::App* sub_pataka = app.add_subcommand(
      "pataka", "Row positions grouped by laghu count (flag matrix)");
  sub_pataka->fallthrough();
  sub_pataka->add_option("--n", pataka_n, "Syllable count")->required();
  CLI::Option* pataka_column_opt =
      sub_pataka->add_option("--column", pataka_r, "Single laghu count");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("chandas");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Format format = to_format(format_name);
  const Notation notation = to_notation(notation_name);

  try {
    std::string payload;

    if (sub_prastara->parsed()) {
      if (stream) {
        if (format == Format::Json)
          throw Usage{"--stream supports only text and csv formats"};
        if (verify) throw Usage{"--stream cannot be combined with --verify"};
        if (prastara_n == 0)
          throw InvalidArgs("sequence length must be at least 1");
        PrastaraStream rows(prastara_n);
        const std::size_t width = pow2(prastara_n).str().size();
        Natural k = 0;
        while (auto row = rows.next()) {
          k += 1;
          if (format == Format::Csv) {
            out << csv_sequence(*row, notation);
          } else {
            if (numbered) {
              const std::string idx = k.str();
              out << std::string(width - idx.size(), ' ') << idx << ' ';
            }
            out << row->str(notation) << '\n';
          }
        }
        return kExitSuccess;
      }
      const Prastara p = prastara_method == "kedara"
                             ? kedara_prastara(prastara_n, guard)
                             : pingala_prastara(prastara_n, guard);
      if (verify) {
        Natural k = 0;
        for (const GlSequence& row : p.rows) {
          k += 1;
          verify_sequence_bits(row, k, "row");
        }
      }
      if (format == Format::Text) {
        payload = prastara_text(p, notation, numbered);
      } else if (format == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const GlSequence& row : p.rows) j.push_back(row.str(notation));
        payload = j.dump() + "\n";
      } else {
        for (const GlSequence& row : p.rows)
          payload += csv_sequence(row, notation);
      }
    } else if (sub_nashtam->parsed()) {
      const RowIndex k(parse_row(nashtam_row));
      const GlSequence seq = nashtam(k, nashtam_n);
      if (verify) verify_sequence_bits(seq, k.value(), "row");
      if (format == Format::Text) {
        payload = seq.str(notation) + "\n";
      } else if (format == Format::Json) {
        ordered_json j;
        j["n"] = nashtam_n;
        j["row"] = k.str();
        j["sequence"] = seq.str(notation);
        payload = j.dump() + "\n";
      } else {
        payload = csv_sequence(seq, notation);
      }
    } else if (sub_uddishtam->parsed()) {
      const GlSequence seq = parse_sequence(uddishtam_seq, notation);
      const RowIndex row = uddishtam_method == "kedara"
                               ? uddishtam_kedara(seq)
                               : uddishtam_pingala(seq);
      if (verify && row != to_row_index(seq)) {
        throw VerifyMismatch{"rank of " + seq.str() +
                             " disagrees with the place-value oracle"};
      }
      if (format == Format::Json) {
        ordered_json j;
        j["sequence"] = seq.str(notation);
        j["method"] = uddishtam_method;
        j["row"] = row.str();
        payload = j.dump() + "\n";
      } else {
        payload = row.str() + "\n";
      }
    } else if (sub_rank->parsed()) {
      const BaseBNumeral num = parse_numeral(rank_digits, rank_base);
      const Natural rank = rank_base_b(num);
      if (verify && rank != numeral_value(num) + 1) {
        throw VerifyMismatch{"rank of " + rank_digits +
                             " disagrees with the place-value oracle"};
      }
      if (format == Format::Json) {
        ordered_json j;
        j["digits"] = rank_digits;
        j["base"] = rank_base;
        j["rank"] = rank.str();
        payload = j.dump() + "\n";
      } else {
        payload = rank.str() + "\n";
      }
    } else if (sub_lagakriya->parsed()) {
      std::vector<std::vector<Natural>> rows;
      std::vector<Natural> counts;
      std::string text_form;
      if (lagakriya_method == "kedara") {
        const LagakriyaTable table = lagakriya_table(lagakriya_n);
        counts = table.terminals();
        text_form = lagakriya_text(table);
        rows = table.rows;
      } else if (lagakriya_method == "bhaskara") {
        counts.reserve(lagakriya_n + 1);
        for (unsigned r = 0; r <= lagakriya_n; ++r)
          counts.push_back(bhaskara_ncr(lagakriya_n, r));
        text_form = values_line(counts);
        rows = {counts};
      } else {
        const MeruPyramid pyramid = meru(lagakriya_n + 1);
        counts = pyramid.rows.back();
        text_form = meru_text(pyramid);
        rows = pyramid.rows;
      }
      if (verify) {
        for (unsigned r = 0; r <= lagakriya_n; ++r) {
          if (counts[r] != oracle::ncr_factorial(lagakriya_n, r)) {
            throw VerifyMismatch{
                "count for " + std::to_string(r) +
                " laghus disagrees with the factorial oracle"};
          }
        }
      }
      payload = render_rows(rows, format, text_form);
    } else if (sub_ncr->parsed()) {
      const Natural value = bhaskara_ncr(ncr_n, ncr_r);
      if (verify && value != oracle::ncr_factorial(ncr_n, ncr_r)) {
        throw VerifyMismatch{"C(" + std::to_string(ncr_n) + ", " +
                             std::to_string(ncr_r) +
                             ") disagrees with the factorial oracle"};
      }
      if (format == Format::Json) {
        ordered_json j;
        j["n"] = ncr_n;
        j["r"] = ncr_r;
        j["value"] = value.str();
        payload = j.dump() + "\n";
      } else {
        payload = value.str() + "\n";
      }
    } else if (sub_sankhya->parsed()) {
      if (trace && sankhya_method != "pingala")
        throw Usage{"--trace is only available with --method pingala"};
      Natural result;
      SankhyaTrace full;
      if (sankhya_method == "lagakriya") {
        result = sankhya_kedara_lagakriya(to_unsigned_n(sankhya_n));
      } else if (sankhya_method == "uddishta") {
        result = sankhya_kedara_uddishta(to_unsigned_n(sankhya_n));
      } else {
        full = sankhya_pingala(sankhya_n);
        result = full.result;
      }
      if (verify && result != oracle::pow2_doubling(sankhya_n)) {
        throw VerifyMismatch{"2^" + std::to_string(sankhya_n) +
                             " disagrees with the repeated-doubling oracle"};
      }
      if (format == Format::Json) {
        ordered_json j;
        j["n"] = sankhya_n;
        j["method"] = sankhya_method;
        j["result"] = result.str();
        if (trace) {
          std::vector<std::string> tokens;
          for (const SankhyaToken t : full.tokens)
            tokens.emplace_back(1, token_digit(t));
          j["tokens"] = tokens;
          j["replay"] = to_strings(full.replay);
        }
        payload = j.dump() + "\n";
      } else if (format == Format::Csv) {
        if (trace) {
          std::vector<std::string> tokens;
          for (const SankhyaToken t : full.tokens)
            tokens.emplace_back(1, token_digit(t));
          payload = csv_join(tokens) + csv_join(to_strings(full.replay)) +
                    result.str() + "\n";
        } else {
          payload = result.str() + "\n";
        }
      } else {
        payload =
            trace ? sankhya_trace_text(full) : result.str() + "\n";
      }
    } else if (sub_adhvayoga->parsed()) {
      const Natural value = adhvayoga(adhvayoga_n);
      if (verify) {
        Natural sum = 0;
        Natural term = 1;
        for (std::uint64_t i = 0; i < adhvayoga_n; ++i) {
          term *= 2;
          sum += term;
        }
        if (value != sum) {
          throw VerifyMismatch{
              "path total disagrees with the direct-summation oracle"};
        }
      }
      if (format == Format::Json) {
        ordered_json j;
        j["n"] = adhvayoga_n;
        j["value"] = value.str();
        payload = j.dump() + "\n";
      } else {
        payload = value.str() + "\n";
      }
    } else if (sub_pataka->parsed()) {
      if (pataka_column_opt->count() > 0) {
        const std::vector<RowIndex> column =
            pataka_column(pataka_n, pataka_r, guard);
        if (verify) verify_positions(pataka_n, pataka_r, column);
        if (format == Format::Json) {
          payload = ordered_json(to_strings(column)).dump() + "\n";
        } else if (format == Format::Csv) {
          payload = csv_join(to_strings(column));
        } else {
          for (const RowIndex& k : column) payload += k.str() + "\n";
        }
      } else {
        const PatakaMatrix matrix = pataka(pataka_n, guard);
        if (verify) {
          for (unsigned r = 0; r <= pataka_n; ++r)
            verify_positions(pataka_n, r, matrix.columns[r]);
        }
        if (format == Format::Text) {
          payload = pataka_text(matrix);
        } else if (format == Format::Json) {
          ordered_json j = ordered_json::array();
          for (const auto& column : matrix.columns)
            j.push_back(to_strings(column));
          payload = j.dump() + "\n";
        } else {
          std::size_t depth = 0;
          for (const auto& column : matrix.columns)
            depth = std::max(depth, column.size());
          for (std::size_t i = 0; i < depth; ++i) {
            std::vector<std::string> cells;
            for (const auto& column : matrix.columns)
              cells.push_back(i < column.size() ? column[i].str() : "");
            payload += csv_join(cells);
          }
        }
      }
    }

    if (verify) err << "verify: ok\n";
    out << payload;
    return kExitSuccess;
  } catch (const Usage& u) {
    err << "error: " << u.message << '\n';
    return kExitUsage;
  } catch (const VerifyMismatch& m) {
    err << "verify: mismatch: " << m.message << '\n';
    return kExitVerifyMismatch;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace chandas::cli
