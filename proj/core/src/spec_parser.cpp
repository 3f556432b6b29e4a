#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "extropy/distribution.hpp"
#include "extropy/errors.hpp"

namespace extropy {
namespace {

// call  := ident '(' [arg (',' arg)*] ')'
// arg   := ident '=' number | call
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Distribution parse() {
    Distribution d = call();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return d;
  }

 private:
  struct Args {
    std::optional<Distribution> nested;
    std::map<std::string, double> keywords;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad distribution spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  double number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || !std::isfinite(v)) fail("expected a decimal number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  // True when the upcoming identifier is followed by '(' (a nested call).
  bool at_call() {
    skip_space();
    std::size_t p = pos_;
    while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '(';
  }

  Args arguments() {
    Args args;
    expect('(');
    if (accept(')')) return args;
    do {
      if (at_call()) {
        if (args.nested) fail("more than one nested distribution");
        args.nested = call();
      } else {
        const std::string key = ident();
        expect('=');
        if (!args.keywords.emplace(key, number()).second) fail("duplicate argument '" + key + "'");
      }
    } while (accept(','));
    expect(')');
    return args;
  }

  Distribution call() {
    const std::string name = ident();
    Args args = arguments();

    auto take = [&](const char* key, std::optional<double> fallback = std::nullopt) {
      auto it = args.keywords.find(key);
      if (it == args.keywords.end()) {
        if (fallback) return *fallback;
        fail(name + " requires argument '" + key + "'");
      }
      const double v = it->second;
      args.keywords.erase(it);
      return v;
    };
    auto finish = [&](Distribution d, bool wants_nested) {
      if (!args.keywords.empty()) fail(name + " does not accept argument '" + args.keywords.begin()->first + "'");
      if (args.nested && !wants_nested) fail(name + " does not take a nested distribution");
      return d;
    };
    auto nested = [&]() -> const Distribution& {
      if (!args.nested) fail(name + " requires a nested distribution");
      return *args.nested;
    };

    if (name == "exp") return finish(Distribution::exponential(take("rate")), false);
    if (name == "weibull2") {
      const double alpha = take("alpha");
      return finish(Distribution::weibull2(alpha, take("lambda")), false);
    }
    if (name == "lognormal") {
      const double mu = take("mu");
      return finish(Distribution::lognormal(mu, take("sigma2")), false);
    }
    if (name == "pareto_shifted") {
      const double a = take("a");
      return finish(Distribution::pareto_shifted(a, take("b")), false);
    }
    if (name == "piecewise_example") return finish(Distribution::piecewise_example(), false);
    if (name == "lt") {
      const Distribution& base = nested();
      const double a = take("a");
      return finish(linear_transform(base, a, take("b", 0.0)), true);
    }
    if (name == "eq") return finish(equilibrium(nested()), true);
    fail("unknown distribution '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Distribution parse_distribution(std::string_view text) { return Parser(text).parse(); }

}  // namespace extropy
