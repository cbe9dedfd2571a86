#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "contlog/codec.hpp"
#include "contlog/dimension.hpp"
#include "contlog/error.hpp"
#include "contlog/experiments.hpp"
#include "contlog/frequency.hpp"
#include "contlog/precision.hpp"
#include "contlog/rational.hpp"

namespace contlog::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

struct Output {
  std::string text;
  int code = kOk;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Decimal with 12 significant digits, rounded in the given direction, as a
// JSON number.
double decimal12(const BigFloat& x, mpfr_rnd_t rnd) { return std::strtod(x.to_decimal(12, rnd).c_str(), nullptr); }

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) items.push_back(item);
  if (!text.empty() && text.back() == ',') items.emplace_back();
  return items;
}

Json word_json(const Word& w) { return Json{{"base", w.base().value()}, {"digits", w.digits()}}; }

Json encode_json(const EncodeResult& r) {
  return Json{{"word", word_json(r.word)},
              {"digits", r.word.to_string()},
              {"certified", r.certified},
              {"bits_used", r.bits_used}};
}

Json bracket_json(const DimensionBracket& b) {
  return Json{{"n", b.n}, {"lower", b.lower}, {"upper", b.upper}, {"gap", b.gap()}};
}

Json census_json(const CensusReport& r) {
  return Json{{"base", r.base},
              {"samples", r.samples},
              {"digits_per_sample", r.digits_per_sample},
              {"seed", r.seed},
              {"skipped", r.skipped},
              {"per_digit_occurrence", r.per_digit_occurrence},
              {"mean_frequency", r.mean_frequency},
              {"generator", r.generator}};
}

Json structure_json(const StructureReport& r) {
  return Json{{"base", r.base},
              {"level", r.level},
              {"cells", r.cells},
              {"tolerance", r.tolerance},
              {"worst_gap", r.worst_gap},
              {"worst_overlap", r.worst_overlap},
              {"worst_nesting_excess", r.worst_nesting_excess},
              {"covers_unit", r.covers_unit},
              {"order_ok", r.order_ok},
              {"nesting_ok", r.nesting_ok},
              {"pass", r.pass}};
}

// "key: value" lines; nested objects use dotted keys and arrays are
// comma-separated.
void render_plain(const Json& j, const std::string& prefix, std::string& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_plain(value, name, out);
      continue;
    }
    out += name + ": ";
    auto scalar = [](const Json& v) {
      if (v.is_number_float()) return format_number(v.get<double>());
      if (v.is_string()) return v.get<std::string>();
      return v.dump();
    };
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ",";
        out += value[i].is_object() ? value[i].dump() : scalar(value[i]);
      }
    } else {
      out += scalar(value);
    }
    out += "\n";
  }
}

std::string render(const Json& j, Format format) {
  if (format == Format::plain) {
    std::string out;
    render_plain(j, "", out);
    return out;
  }
  return j.dump(2) + "\n";
}

std::string census_csv(const CensusReport& r) {
  std::string out = "digit,per_digit_occurrence,mean_frequency\n";
  for (std::size_t i = 0; i < r.per_digit_occurrence.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_number(r.per_digit_occurrence[i]) + "," +
           format_number(r.mean_frequency[i]) + "\n";
  }
  return out;
}

std::string curve_text(const std::vector<CurvePoint>& curve, Format format) {
  if (format == Format::csv) return curve_csv(curve);
  Json points = Json::array();
  for (const CurvePoint& c : curve) points.push_back(Json{{"p", c.p}, {"upper_bound", c.upper_bound}});
  if (format == Format::json) return Json{{"base", 3}, {"points", points}}.dump(2) + "\n";
  std::string out;
  for (const CurvePoint& c : curve) out += format_number(c.p) + " " + format_number(c.upper_bound) + "\n";
  return out;
}

struct Common {
  std::string format;
  std::string out_path;
  unsigned bits = PrecisionContext::kDefaultBits;
  unsigned max_bits = PrecisionContext::kDefaultMaxBits;
};

void add_common(CLI::App* cmd, Common& common, bool tabular, bool precision) {
  std::vector<std::string> formats{"json", "plain"};
  if (tabular) formats.push_back("csv");
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", common.out_path, "Write the result to this file instead of standard output");
  if (precision) {
    cmd->add_option("--bits", common.bits, "Starting precision in bits")->capture_default_str();
    cmd->add_option("--max-bits", common.max_bits, "Precision cap for escalation")->capture_default_str();
  }
}

Format format_of(const Common& common, Format fallback) {
  if (common.format.empty()) return fallback;
  if (common.format == "csv") return Format::csv;
  if (common.format == "plain") return Format::plain;
  return Format::json;
}

PrecisionContext context_of(const Common& common) { return PrecisionContext(common.bits, common.max_bits); }

int emit(const Output& result, const Common& common, std::ostream& out, std::ostream& err) {
  if (common.out_path.empty()) {
    out << result.text;
    out.flush();
    return result.code;
  }
  std::ofstream file(common.out_path, std::ios::binary | std::ios::trunc);
  file << result.text;
  file.close();
  if (!file) {
    err << "error: cannot write " << common.out_path << "\n";
    return kUsage;
  }
  return result.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued-logarithm expansions: certified encoding, dimension brackets and frequency bounds",
               "contlog"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Common common;
  int base = 0;
  std::function<Output()> action;
  CLI::App* active = nullptr;

  auto add = [&](const std::string& name, const std::string& description, bool tabular, bool precision) {
    CLI::App* cmd = app.add_subcommand(name, description);
    add_common(cmd, common, tabular, precision);
    return cmd;
  };
  auto base_option = [&](CLI::App* cmd) { cmd->add_option("--base", base, "Base m >= 3")->required(); };

  std::string x_text;
  std::size_t digits = 0;
  CLI::App* encode = add("encode", "First digits of x, each certified by interval enclosure", false, true);
  base_option(encode);
  encode->add_option("--x", x_text, "Rational p/q or decimal literal in [0,1]")->required();
  encode->add_option("--digits", digits, "Number of digits")->required()->check(CLI::PositiveNumber);
  encode->callback([&] {
    action = [&] {
      const mpq_class x = parse_rational(x_text);
      const Format format = format_of(common, Format::json);
      try {
        return Output{render(encode_json(encode_orbit(x, Base(base), digits, context_of(common))), format)};
      } catch (const EncodeExhausted& e) {
        return Output{render(encode_json(e.partial()), format), kPrecisionExhausted};
      }
    };
  });

  std::string word_text;
  auto cylinder = [&](const std::string& name, const std::string& description) {
    CLI::App* cmd = add(name, description, false, true);
    base_option(cmd);
    cmd->add_option("--word", word_text, "Comma-separated digits d1,d2,...")->required();
    cmd->callback([&] {
      action = [&] {
        const Word w = Word::parse(Base(base), word_text);
        const RealInterval c = word_interval(w, context_of(common));
        const Json j{{"word", word_json(w)},
                     {"cylinder", Json{{"lower", decimal12(c.lo(), MPFR_RNDD)}, {"upper", decimal12(c.hi(), MPFR_RNDU)}}}};
        return Output{render(j, format_of(common, Format::json))};
      };
    });
  };
  cylinder("decode", "Interval of reals whose expansion starts with the word");
  cylinder("interval", "Cylinder interval of a word (same as decode)");

  std::string set_text;
  double tol = 0.02;
  std::size_t n_max = 12;
  CLI::App* dim = add("dim", "Hausdorff-dimension bracket for the set of reals using only the given digits", false,
                      true);
  base_option(dim);
  dim->add_option("--set", set_text, "Allowed digits, at least two")->required();
  dim->add_option("--tol", tol, "Target bracket width")->capture_default_str()->check(CLI::PositiveNumber);
  dim->add_option("--n-max", n_max, "Largest word length")->capture_default_str()->check(CLI::PositiveNumber);
  dim->callback([&] {
    action = [&] {
      const DigitSet set = DigitSet::parse(Base(base), set_text);
      const RefineResult r = refine_bracket(set, tol, n_max, context_of(common));
      Json history = Json::array();
      for (const DimensionBracket& b : r.history) history.push_back(bracket_json(b));
      const Json j{{"base", base},
                   {"set", set.members()},
                   {"bracket", bracket_json(r.best)},
                   {"tolerance", tol},
                   {"tolerance_reached", r.tolerance_reached},
                   {"budget_exhausted", r.budget_exhausted},
                   {"history", history}};
      return Output{render(j, format_of(common, Format::json)), r.tolerance_reached ? kOk : kBudgetOrTolerance};
    };
  });

  std::string p_text;
  CLI::App* freq_bound = add("freq-bound", "Upper bound on the dimension of a digit-frequency set", false, false);
  base_option(freq_bound);
  freq_bound->add_option("--p", p_text, "Frequencies p1,...,p_{m-1}; rationals or decimals")->required();
  freq_bound->callback([&] {
    action = [&] {
      std::vector<double> p;
      for (const std::string& item : split_csv(p_text)) p.push_back(parse_rational(item).get_d());
      const FrequencyVector v(Base(base), p);
      const Json j{{"base", base}, {"p", v.values()}, {"upper_bound", freq_dim_upper(v)}};
      return Output{render(j, format_of(common, Format::json))};
    };
  });

  CLI::App* freq_max = add("freq-max", "Largest frequency-set dimension bound and its maximizer", false, false);
  base_option(freq_max);
  freq_max->callback([&] {
    action = [&] {
      const MaxFreqResult r = max_freq_dim(Base(base));
      const double h = harmonic_check(Base(base));
      const Json j{{"base", base},
                   {"d", r.d},
                   {"p_star", r.p_star.values()},
                   {"harmonic", h},
                   {"d_below_one", r.d < 1.0},
                   {"harmonic_below_one", h < 1.0}};
      return Output{render(j, format_of(common, Format::json))};
    };
  });

  std::size_t grid = 0;
  CLI::App* curve = add("curve", "Base-3 frequency bound U(p, 1-p) on an interior grid", true, false);
  curve->add_option("--grid", grid, "Number of interior grid points, at least 2")->required();
  curve->callback([&] {
    action = [&] { return Output{curve_text(bound_curve(grid), format_of(common, Format::csv))}; };
  });

  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  CLI::App* census = add("census", "Digit occurrence statistics over seeded random points", true, true);
  base_option(census);
  census->add_option("--samples", samples, "Number of random points")->required()->check(CLI::PositiveNumber);
  census->add_option("--digits", digits, "Digits per point")->required()->check(CLI::PositiveNumber);
  census->add_option("--seed", seed, "Generator seed")->required();
  census->callback([&] {
    action = [&] {
      const CensusReport r = occurrence_census(Base(base), samples, digits, seed, context_of(common));
      const Format format = format_of(common, Format::json);
      return Output{format == Format::csv ? census_csv(r) : render(census_json(r), format)};
    };
  });

  std::size_t level = 0;
  CLI::App* check = add("check", "Verify that the cylinders of one level tile [0,1] in order", false, true);
  base_option(check);
  check->add_option("--level", level, "Word length")->required()->check(CLI::PositiveNumber);
  check->callback([&] {
    action = [&] {
      const StructureReport r = structure_check(Base(base), level, context_of(common));
      return Output{render(structure_json(r), format_of(common, Format::json)), r.pass ? kOk : kBudgetOrTolerance};
    };
  });

  auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n\n";
    err << (active ? active->help() : app.help());
    return kUsage;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) active = app.get_subcommands().front();
    return usage(e.what());
  }
  active = app.get_subcommands().front();

  try {
    return emit(action(), common, out, err);
  } catch (const InvalidInput& e) {
    return usage(e.what());
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetOrTolerance;
  }
}

}  // namespace contlog::cli
