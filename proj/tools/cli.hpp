#pragma once

#include "sturmian/sturmian.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

namespace sturmian::cli {

using json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

enum Exit { ok = 0, usage = 1, domain = 2, verify_failed = 3 };

inline json number(const big_int& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

inline json fraction(const Fraction& f) {
  if (f.is_infinite()) return {{"num", 1}, {"den", 0}};
  return {{"num", number(f.num())}, {"den", number(f.den())}};
}

inline json continued_fraction(const ContinuedFraction& cf) {
  json out = json::array();
  for (const big_int& c : cf) out.push_back(number(c));
  return out;
}

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>().empty() ? "\"\"" : v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den")) {
    if (v["den"] == 0) return "inf";
    return scalar_text(v["num"]) + "/" + scalar_text(v["den"]);
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + scalar_text(it.value());
    return s;
  }
  if (v.is_array()) {
    std::string s;
    for (const json& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
    return s;
  }
  return v.dump();
}

// "key: value" per field; arrays of objects become a header and rows.
inline void print_text(const json& result, std::ostream& out) {
  for (auto it = result.begin(); it != result.end(); ++it) {
    const json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << it.key() << ":\n";
      std::string header;
      for (auto c = v.front().begin(); c != v.front().end(); ++c) header += (header.empty() ? "  " : " ") + c.key();
      out << header << "\n";
      for (const json& row : v) {
        std::string line;
        for (auto c = row.begin(); c != row.end(); ++c) line += (line.empty() ? "  " : " ") + scalar_text(c.value());
        out << line << "\n";
      }
    } else {
      out << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

// "a2b1a1b2" -> aababb
inline Word parse_run_length(const std::string& text) {
  static const std::regex run("([ab])([0-9]*)");
  std::string letters;
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), run); it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != pos) break;
    const std::string count = (*it)[2];
    letters += std::string(count.empty() ? 1 : std::stoul(count), (*it)[1].str()[0]);
    pos += it->length();
  }
  if (pos != text.size()) throw invalid_word(text, pos);
  return Word(letters);
}

struct WordInput {
  std::vector<std::string> tokens;
  bool run_length = false;
  bool empty = false;

  void attach(CLI::App* cmd, const std::string& name) {
    cmd->add_option(name, tokens, "word over {a,b}; several tokens are concatenated");
    cmd->add_flag("--run-length", run_length, "tokens are run-length encoded, e.g. a2b1a1b2");
    cmd->add_flag("--empty", empty, "use the empty word");
  }

  Word get() const {
    if (empty) return Word();
    std::string text;
    for (const std::string& t : tokens) text += t;
    return run_length ? parse_run_length(text) : Word(text);
  }
};

inline std::size_t env_cap(std::size_t fallback) {
  if (const char* v = std::getenv("STURMIAN_MAX_LEN")) {
    try {
      return std::stoul(v);
    } catch (const std::exception&) {
      throw error(std::string("STURMIAN_MAX_LEN is not a number: '") + v + "'");
    }
  }
  return fallback;
}

inline json christoffel_result(const Word& w) {
  auto c = christoffel::classify(w);
  json r{{"word", w.str()}, {"length", w.size()}, {"christoffel", c.is_christoffel}, {"proper", c.is_proper}};
  r["directive"] = c.is_proper ? json(c.directive.str()) : json(nullptr);
  r["index"] = c.is_proper ? json(c.index) : json(nullptr);
  if (c.is_proper) {
    auto parts = christoffel::lyndon_factorization(w);
    r["lyndon"] = {parts.first.str(), parts.second.str()};
    r["inverse_lengths"] = christoffel::lyndon_lengths_are_inverses(w, parts);
  } else {
    r["lyndon"] = nullptr;
    r["inverse_lengths"] = nullptr;
  }
  r["slope"] = fraction(slope(w));
  r["slope_cf"] = slope(w).is_infinite() ? json(nullptr) : continued_fraction(expand(slope(w)));
  return r;
}

inline json chain_json(const christoffel::DerivativeChain& chain) {
  json words = json::array();
  for (const Word& w : chain.words) words.push_back(w.str());
  return words;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sturmian, Christoffel and central words"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.fallthrough();

  std::string command;
  json inputs = json::object();
  std::function<json()> action;
  std::function<int(const json&)> exit_code = [](const json&) { return ok; };
  std::function<void(const json&)> text = [&](const json& r) { print_text(r, out); };

  WordInput psi_in;
  auto* psi_cmd = app.add_subcommand("psi", "palindromization of a directive word");
  psi_in.attach(psi_cmd, "v");
  psi_cmd->callback([&] {
    action = [&] {
      const Word v = psi_in.get();
      inputs = {{"v", v.str()}};
      const Word p = psi(v);
      auto [pa, pb] = period_lengths(v);
      return json{{"psi", p.str()},
                  {"length", p.size()},
                  {"periods", {{"a", number(pa)}, {"b", number(pb)}}},
                  {"index", christoffel::directive_index(v)}};
    };
  });

  WordInput closure_in;
  auto* closure_cmd = app.add_subcommand("closure", "right palindromic closure");
  closure_in.attach(closure_cmd, "w");
  closure_cmd->callback([&] {
    action = [&] {
      const Word w = closure_in.get();
      inputs = {{"w", w.str()}};
      const Word c = palindromic_closure(w);
      return json{{"closure", c.str()}, {"length", c.size()}};
    };
  });

  std::string slope_text;
  WordInput christoffel_directive;
  auto* ch_cmd = app.add_subcommand("christoffel", "lower Christoffel word by slope or directive");
  auto* slope_opt = ch_cmd->add_option("--slope", slope_text, "p/q with p = |w|_b, q = |w|_a");
  auto* dir_opt = ch_cmd->add_option("--directive", christoffel_directive.tokens, "directive word v of a psi(v) b");
  slope_opt->excludes(dir_opt);
  ch_cmd->add_flag("--run-length", christoffel_directive.run_length, "directive is run-length encoded");
  ch_cmd->add_flag("--empty", christoffel_directive.empty, "empty directive");
  ch_cmd->callback([&] {
    action = [&] {
      Word w;
      if (!slope_text.empty()) {
        static const std::regex pq("([0-9]+)/([0-9]+)");
        std::smatch m;
        if (!std::regex_match(slope_text, m, pq)) throw error("slope must be written p/q, got '" + slope_text + "'");
        inputs = {{"slope", slope_text}};
        w = christoffel::from_slope(std::stoul(m[1]), std::stoul(m[2]));
      } else if (!christoffel_directive.tokens.empty() || christoffel_directive.empty) {
        const Word v = christoffel_directive.get();
        inputs = {{"directive", v.str()}};
        w = christoffel::from_directive(v);
      } else {
        throw error("christoffel needs --slope or --directive");
      }
      return christoffel_result(w);
    };
  });

  WordInput derive_in;
  bool chain = false, use_standard = false;
  auto* derive_cmd = app.add_subcommand("derive", "derivative of a proper Christoffel or standard word");
  derive_in.attach(derive_cmd, "w");
  derive_cmd->add_flag("--chain", chain, "iterate down to a letter");
  derive_cmd->add_flag("--standard", use_standard, "standard derivative instead of the Christoffel one");
  derive_cmd->callback([&] {
    action = [&] {
      const Word w = derive_in.get();
      inputs = {{"w", w.str()}, {"chain", chain}, {"standard", use_standard}};
      json r{{"kind", use_standard ? "standard" : "christoffel"}};
      if (chain) {
        auto c = use_standard ? standard::derivative_chain(w) : christoffel::derivative_chain(w);
        r["chain"] = chain_json(c);
        r["depth"] = c.depth();
      } else {
        r["derivative"] = (use_standard ? standard::derivative(w) : christoffel::derivative(w)).str();
      }
      return r;
    };
  });

  WordInput depth_in;
  auto* depth_cmd = app.add_subcommand("depth", "height, delta profile and bounds of a directive word");
  depth_in.attach(depth_cmd, "v");
  depth_cmd->callback([&] {
    action = [&] {
      const Word v = depth_in.get();
      inputs = {{"v", v.str()}};
      auto profile = depth::delta(v);
      std::string bits;
      for (int b : profile.bits) bits += static_cast<char>('0' + b);
      json r{{"height", depth::height(v)}, {"delta_bits", bits}, {"delta", profile.delta}};
      if (!v.empty()) {
        auto b = depth::height_bounds(v);
        r["lower_bound"] = b.lower;
        r["upper_bound"] = b.upper;
        r["attains_lower"] = b.attains_lower;
        r["attains_upper"] = b.attains_upper;
      }
      const big_int n = standard_interpretation(Letter::b + v + Letter::b);
      r["bvb"] = number(n);
      r["H"] = depth::H(n);
      return r;
    };
  });

  std::size_t table_k = 0;
  auto* table_cmd = app.add_subcommand("table", "height classes of directive words of length k");
  table_cmd->add_option("k", table_k, "directive length")->required();
  table_cmd->callback([&] {
    action = [&] {
      inputs = {{"k", table_k}};
      auto t = depth::enumerate_height_classes(table_k, env_cap(depth::default_table_cap), false);
      json rows = json::array();
      bool agree = true;
      for (const auto& row : t.rows) {
        const big_int j = depth::J_closed(table_k, row.p), o = depth::o_closed(table_k, row.p);
        const bool same = j == row.J() && o == row.o;
        agree = agree && same;
        rows.push_back({{"p", row.p},
                        {"J", row.J()},
                        {"e", row.e},
                        {"o", row.o},
                        {"J_formula", number(j)},
                        {"o_formula", number(o)},
                        {"agree", same}});
      }
      const big_int max = depth::J_maximum(table_k);
      return json{{"rows", rows}, {"J_max", number(max)}, {"J_max_agrees", max == t.rows.back().J()}, {"agree", agree}};
    };
  });

  std::string stream_text;
  bool fib = false, derive_stream = false;
  std::size_t length = 0;
  auto* char_cmd = app.add_subcommand("char", "prefix of a characteristic Sturmian word");
  auto* stream_opt = char_cmd->add_option("--directive", stream_text, "ultimately periodic directive u|q");
  auto* fib_opt = char_cmd->add_flag("--directive-fib", fib, "Fibonacci directive (ab)^omega");
  stream_opt->excludes(fib_opt);
  char_cmd->add_option("--length", length, "prefix length")->required();
  char_cmd->add_flag("--derive", derive_stream, "check the derivative relations on the prefix");
  char_cmd->callback([&] {
    action = [&] {
      if (stream_text.empty() && !fib) throw error("char needs --directive or --directive-fib");
      const auto s = fib ? characteristic::fibonacci() : characteristic::parse_stream(stream_text);
      inputs = {{"directive", s.to_string()}, {"length", length}, {"derive", derive_stream}};
      const std::size_t cap = env_cap(characteristic::default_prefix_cap);
      auto p = characteristic::prefix(s, length, cap);
      json r{{"prefix", p.word.str()}, {"directive_used", p.directive_consumed.str()}, {"index", characteristic::index(s)}};
      if (derive_stream) {
        r["derivative_directive"] = characteristic::derivative_stream(s).to_string();
        auto check = characteristic::derivative_prefix_check(s, length, cap);
        r["factors"] = check.factors;
        r["matches_derivative"] = check.matches_derivative;
        r["matches_b_derivative"] = check.matches_b_derivative;
        r["decoded"] = check.decoded;
        if (!check.ok()) r["failure"] = check.failure;
        auto st = characteristic::is_stable(s);
        r["stability"] = characteristic::to_string(st.verdict);
        r["cycle"] = st.cycle ? json{st.cycle->first, st.cycle->second} : json(nullptr);
      }
      return r;
    };
  });

  std::size_t max_len = 8;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive cross-checks over all directive words");
  verify_cmd->add_option("--max-len", max_len, "directive length bound (at most 12)");
  verify_cmd->callback([&] {
    action = [&] {
      inputs = {{"max_len", max_len}};
      auto report = verify::verify_all(max_len);
      json theorems = json::array();
      for (const auto& t : report.results)
        theorems.push_back({{"name", t.name}, {"passed", t.passed}, {"cases", t.cases}, {"counterexample", t.counterexample}});
      return json{{"max_len", max_len}, {"passed", report.all_passed()}, {"theorems", theorems}};
    };
    exit_code = [](const json& r) { return r["passed"].get<bool>() ? ok : verify_failed; };
    text = [&](const json& r) {
      for (const json& t : r["theorems"]) {
        out << (t["passed"].get<bool>() ? "PASS " : "FAIL ") << t["name"].get<std::string>() << " ("
            << t["cases"].get<std::size_t>() << " cases)";
        if (!t["passed"].get<bool>()) out << ": " << t["counterexample"].get<std::string>();
        out << "\n";
      }
      out << (r["passed"].get<bool>() ? "all passed" : "FAILED") << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }
  for (CLI::App* sub : app.get_subcommands()) command = sub->get_name();

  try {
    json result = action();
    if (as_json) {
      out << json{{"command", command}, {"inputs", inputs}, {"result", result}, {"format_version", format_version}}.dump(2)
          << "\n";
    } else {
      text(result);
    }
    return exit_code(result);
  } catch (const invalid_word& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return domain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return domain;
  } catch (const error& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const std::out_of_range& e) {
    err << "usage error: number out of range\n";
    return usage;
  }
}

}  // namespace sturmian::cli
