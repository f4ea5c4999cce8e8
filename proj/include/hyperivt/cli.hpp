#ifndef HYPERIVT_CLI_HPP
#define HYPERIVT_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperivt/error.hpp"
#include "hyperivt/hyper_poly.hpp"
#include "hyperivt/parse.hpp"
#include "hyperivt/rational.hpp"
#include "hyperivt/rfunc.hpp"
#include "hyperivt/roots.hpp"
#include "hyperivt/ultrapower.hpp"

namespace hyperivt::cli {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

namespace detail {

struct Output {
  Json json;         // machine-readable result
  std::string text;  // human-readable result, newline-terminated
};

inline Json interval_json(const IsolatingInterval& iv) {
  Json j;
  j["kind"] = kind_tag(iv.kind);
  j["lo"] = iv.lo.to_string();
  j["hi"] = iv.hi.to_string();
  return j;
}

inline std::string interval_text(const IsolatingInterval& iv) {
  if (iv.is_exact()) return "exact root " + iv.lo.to_string();
  return "sign change on (" + iv.lo.to_string() + ", " + iv.hi.to_string() + ")";
}

inline Json algebraic_json(const RealAlgebraic& a) {
  Json j = interval_json(a.interval());
  j["defining"] = to_string(a.defining());
  return j;
}

inline std::string ordering_tag(int s) { return s < 0 ? "less" : (s > 0 ? "greater" : "equal"); }

inline int to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

// Sequence grammar is chosen when the text names the index n or a selector.
inline bool looks_like_sequence(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      auto word = text.substr(start, i - start);
      if (word == "n" || word == "alt") return true;
    } else {
      ++i;
    }
  }
  return false;
}

class Runner {
 public:
  std::string field = "auto";
  std::string width_text = "1/4294967296";
  unsigned levels = 32;
  unsigned grid = 2;

  RatPoly rational_poly(const std::string& text) const {
    if (field == "qw") {
      HyperPolynomial h = parse_hyper_polynomial(text);
      std::vector<Rational> coeffs;
      for (const auto& c : h.coefficients()) {
        if (!c.is_rational())
          throw Error(ErrorCode::ParseError,
                      "coefficient " + c.to_string() + " is not rational; this command works over Q");
        coeffs.push_back(c.as_rational());
      }
      return RatPoly(std::move(coeffs));
    }
    return parse_polynomial(text);
  }

  HyperPolynomial hyper_poly(const std::string& text) const {
    if (field == "q") return star_lift(parse_polynomial(text));
    return parse_hyper_polynomial(text);
  }

  RFunc element(const std::string& text) const {
    RFunc e = parse_element(text);
    if (field == "q" && !e.is_rational())
      throw Error(ErrorCode::ParseError, "'" + text + "' is not rational");
    return e;
  }

  Rational width() const {
    Rational w = parse_rational_expr(width_text);
    if (w.sign() <= 0) throw Error(ErrorCode::ParseError, "--width must be positive");
    return w;
  }

  Output isolate_roots(const std::string& poly) const {
    RatPoly f = rational_poly(poly);
    auto roots = isolate_all_roots(f, width());
    Output o;
    o.json["polynomial"] = to_string(f);
    o.json["roots"] = Json::array();
    if (roots.empty()) o.text = "no real roots\n";
    for (const auto& r : roots) {
      o.json["roots"].push_back(interval_json(r.interval()));
      o.text += interval_text(r.interval()) + "\n";
    }
    return o;
  }

  Output count_roots(const std::string& poly, const std::string& lo, const std::string& hi) const {
    RatPoly f = rational_poly(poly);
    Rational a = parse_rational_expr(lo), b = parse_rational_expr(hi);
    int count = sturm_count(f, a, b);
    Output o;
    o.json["polynomial"] = to_string(f);
    o.json["lo"] = a.to_string();
    o.json["hi"] = b.to_string();
    o.json["count"] = count;
    o.text = std::to_string(count) + "\n";
    return o;
  }

  Output ivt_root(const std::string& poly, const std::string& a, const std::string& b) const {
    RatPoly f = rational_poly(poly);
    auto iv = ivt_grid_root(f, parse_rational_expr(a), parse_rational_expr(b), width(), grid);
    return {interval_json(iv), interval_text(iv) + "\n"};
  }

  Output odd_root(const std::string& poly) const {
    auto r = odd_degree_root(rational_poly(poly), width());
    return {algebraic_json(r), interval_text(r.interval()) + "\n"};
  }

  Output sqrt(const std::string& q) const {
    auto r = real_sqrt(parse_rational_expr(q), width());
    return {algebraic_json(r), interval_text(r.interval()) + "\n"};
  }

  Output classify(const std::string& e) const {
    Classification c;
    std::string shown;
    if (looks_like_sequence(e)) {
      HyperSeq s = parse_sequence(e);
      c = seq_classify(s);
      shown = s.expr().to_string();
    } else {
      RFunc x = element(e);
      c = x.classify();
      shown = x.to_string();
    }
    Output o;
    o.json["element"] = shown;
    o.json["classification"] = classification_tag(c);
    o.text = std::string(classification_name(c)) + "\n";
    return o;
  }

  Output shadow(const std::string& e) const {
    Rational s;
    std::string shown;
    if (looks_like_sequence(e)) {
      HyperSeq seq = parse_sequence(e);
      s = seq_shadow(seq);
      shown = seq.expr().to_string();
    } else {
      RFunc x = element(e);
      s = x.shadow();
      shown = x.to_string();
    }
    Output o;
    o.json["element"] = shown;
    o.json["shadow"] = s.to_string();
    o.text = s.to_string() + "\n";
    return o;
  }

  Output compare(const std::string& e1, const std::string& e2) const {
    int s;
    if (looks_like_sequence(e1) || looks_like_sequence(e2)) {
      SeqOrdering ord = seq_compare(parse_sequence(e1), parse_sequence(e2));
      s = ord == SeqOrdering::Less ? -1 : (ord == SeqOrdering::Greater ? 1 : 0);
    } else {
      s = to_int(element(e1) <=> element(e2));
    }
    Output o;
    o.json["ordering"] = ordering_tag(s);
    o.text = ordering_tag(s) + "\n";
    return o;
  }

  Output cut_classify(const std::string& poly, const std::string& lo, const std::string& hi) const {
    RatPoly f = rational_poly(poly);
    Rational a = parse_rational_expr(lo), b = parse_rational_expr(hi);
    int count = sturm_count(f, a, b);
    if (count != 1)
      throw Error(ErrorCode::DegenerateInterval,
                  "expected exactly one root in (" + a.to_string() + ", " + b.to_string() +
                      "], found " + std::to_string(count));
    // The square-free part has the same single root in (a, b], now simple.
    const RatPoly g = square_free_part(f);
    if (g(b).is_zero()) return cut_output(RealAlgebraic(g, IsolatingInterval::exact(b)));
    Rational left = a, right = b;
    while (g(left).sign() * g(right).sign() >= 0) {
      // Only reached when a itself is a root; move left past it.
      const Rational mid = (left + right) / Rational(2);
      if (g(mid).is_zero()) return cut_output(RealAlgebraic(g, IsolatingInterval::exact(mid)));
      if (sturm_count(g, left, mid) == 1)
        right = mid;
      else
        left = mid;
    }
    return cut_output(RealAlgebraic(g, ivt_grid_root(g, left, right, width())));
  }

  Output hyper_ivt(const std::string& poly, const std::string& a, const std::string& b) const {
    HyperPolynomial F = hyper_poly(poly);
    RFunc lo = element(a), hi = element(b);
    auto res = hyper_ivt_root(F, lo, hi, GridSchedule::dyadic(levels));
    Output o;
    o.json["polynomial"] = to_string(F);
    o.json["residual"] = classification_tag(res.residual);
    o.json["residual_majorant"] = res.residual_majorant.to_string();
    o.json["levels"] = Json::array();
    std::ostringstream text;
    text << "residual: " << classification_name(res.residual) << "\n";
    for (const auto& lv : res.levels) {
      Json j;
      j["n"] = lv.n.get_str();
      if (lv.interval) {
        j["status"] = "ok";
        j["kind"] = kind_tag(lv.interval->kind);
        j["lo"] = lv.interval->lo.to_string();
        j["hi"] = lv.interval->hi.to_string();
        j["midpoint"] = lv.midpoint.to_string();
        j["residual"] = lv.residual.to_string();
        text << "n=" << lv.n.get_str() << " c=" << lv.midpoint.to_string() << " ("
             << interval_text(*lv.interval) << ")\n";
      } else {
        j["status"] = "skipped";
        j["reason"] = lv.skipped;
        text << "n=" << lv.n.get_str() << " skipped: " << lv.skipped << "\n";
      }
      o.json["levels"].push_back(std::move(j));
    }
    o.text = text.str();
    return o;
  }

  Output from_seq(const std::string& seq) const {
    RFunc r = hyperivt::from_seq(parse_sequence(seq));
    Output o;
    o.json["element"] = r.to_string();
    o.text = r.to_string() + "\n";
    return o;
  }

 private:
  static Output cut_output(const RealAlgebraic& r) {
    CutKind k = hyperivt::cut_classify(r);
    Output o;
    o.json["cut"] = cut_kind_tag(k);
    o.json["root"] = algebraic_json(r);
    o.text = std::string(cut_kind_tag(k));
    if (auto v = rational_value(r)) {
      o.json["value"] = v->to_string();
      o.text += " at " + v->to_string();
    }
    o.text += "\n";
    return o;
  }
};

}  // namespace detail

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and text-mode diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real-root and non-Archimedean arithmetic toolkit", "hyperivt"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  detail::Runner runner;
  app.add_flag("--json", json, "Emit a JSON object instead of text");
  app.add_option("--width", runner.width_text, "Target interval width (rational)");
  app.add_option("--levels", runner.levels, "Number of levels n_j = 2^j in hyper-ivt")
      ->check(CLI::Range(1u, 4096u));
  app.add_option("--grid", runner.grid, "Grid cells per level in ivt-root")
      ->check(CLI::Range(2u, 1u << 20));
  app.add_option("--field", runner.field, "Coefficient field: q or qw")
      ->check(CLI::IsMember({"q", "qw"}));

  std::vector<std::string> pos(3);
  std::function<detail::Output()> action;
  auto sub = [&](const char* name, const char* help, std::vector<const char*> params,
                 auto&& fn) {
    CLI::App* s = app.add_subcommand(name, help);
    for (std::size_t i = 0; i < params.size(); ++i)
      s->add_option(params[i], pos[i])->required();
    s->callback([&action, fn] { action = fn; });
  };
  sub("isolate-roots", "Isolate every real root", {"poly"},
      [&] { return runner.isolate_roots(pos[0]); });
  sub("count-roots", "Count distinct roots in (lo, hi] with a Sturm chain", {"poly", "lo", "hi"},
      [&] { return runner.count_roots(pos[0], pos[1], pos[2]); });
  sub("ivt-root", "Grid intermediate-value root on (a, b)", {"poly", "a", "b"},
      [&] { return runner.ivt_root(pos[0], pos[1], pos[2]); });
  sub("odd-root", "A root of an odd-degree polynomial", {"poly"},
      [&] { return runner.odd_root(pos[0]); });
  sub("sqrt", "Positive square root of a rational", {"q"}, [&] { return runner.sqrt(pos[0]); });
  sub("classify", "Zero, infinitesimal, appreciable or infinite", {"element"},
      [&] { return runner.classify(pos[0]); });
  sub("shadow", "Standard part of a limited element", {"element"},
      [&] { return runner.shadow(pos[0]); });
  sub("compare", "Order two elements", {"e1", "e2"},
      [&] { return runner.compare(pos[0], pos[1]); });
  sub("cut-classify", "Dedekind cut of Q made by the root in (lo, hi]", {"poly", "lo", "hi"},
      [&] { return runner.cut_classify(pos[0], pos[1], pos[2]); });
  sub("hyper-ivt", "Root of a polynomial with coefficients in Q(w)", {"poly", "a", "b"},
      [&] { return runner.hyper_ivt(pos[0], pos[1], pos[2]); });
  sub("from-seq", "Read a selector-free sequence as an element of Q(w)", {"seq"},
      [&] { return runner.from_seq(pos[0]); });

  // CLI11 consumes arguments from the back. The only short option is -h, so
  // any other single-dash word ("-2", "-x^2 + 1") is an operand; a leading
  // space keeps CLI11 from reading it as an option and the parsers skip it.
  std::vector<std::string> argv(args.rbegin(), args.rend());
  for (auto& a : argv)
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(0, " ");

  auto report = [&](ErrorCode code, const std::string& message, const std::string& command) {
    if (json) {
      Json j;
      j["command"] = command.empty() ? Json(nullptr) : Json(command);
      j["status"] = "error";
      j["result"] = nullptr;
      j["error_code"] = error_code_name(code);
      j["error_message"] = message;
      out << j.dump() << "\n";
    } else {
      err << "error [" << error_code_name(code) << "]: " << message << "\n";
    }
    return code == ErrorCode::ParseError ? kExitParse : kExitDomain;
  };

  auto command_name = [&]() -> std::string {
    auto subs = app.get_subcommands();
    return subs.empty() ? std::string() : subs.front()->get_name();
  };

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    json = json || std::find(args.begin(), args.end(), "--json") != args.end();
    return report(ErrorCode::ParseError, e.what(), command_name());
  } catch (const Error& e) {
    return report(e.code(), e.what(), command_name());
  }

  try {
    detail::Output result = action();
    if (json) {
      Json j;
      j["command"] = command_name();
      j["status"] = "ok";
      j["result"] = std::move(result.json);
      j["error_code"] = nullptr;
      j["error_message"] = nullptr;
      out << j.dump() << "\n";
    } else {
      out << result.text;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report(e.code(), e.what(), command_name());
  }
}

}  // namespace hyperivt::cli

#endif  // HYPERIVT_CLI_HPP
