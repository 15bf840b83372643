#include "fibskein/poly_io.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <vector>

namespace fibskein {

  using nlohmann::json;

  json to_json(LaurentPoly const& p, char var) {
    json terms = json::array();
    for (auto const& [e, c] : p.terms()) {
      terms.push_back({{"exp", e},
                       {"re", c.re().get_str()},
                       {"im", c.im().get_str()}});
    }
    return {{"var", std::string(1, var)}, {"terms", terms}};
  }

  json to_json(TwoVarLaurent const& p) {
    json terms = json::array();
    for (auto const& [e, c] : p.terms()) {
      terms.push_back({{"el", e.first},
                       {"em", e.second},
                       {"re", c.re().get_str()},
                       {"im", c.im().get_str()}});
    }
    return {{"vars", {"l", "m"}}, {"terms", terms}};
  }

  json to_json(InvariantValue const& v) {
    return std::visit([](auto const& p) { return to_json(p); }, v);
  }

  namespace {
    GaussianRational coefficient_from_json(json const& t) {
      if (!t.contains("re") || !t.contains("im")) {
        throw std::invalid_argument("polynomial term needs \"re\" and \"im\"");
      }
      return GaussianRational::from_strings(t.at("re").get<std::string>(),
                                            t.at("im").get<std::string>());
    }
  }  // namespace

  LaurentPoly laurent_from_json(json const& j) {
    if (!j.contains("var") || !j.contains("terms")) {
      throw std::invalid_argument(
          "polynomial JSON needs \"var\" and \"terms\"");
    }
    LaurentPoly p;
    for (auto const& t : j.at("terms")) {
      p.add_term(t.at("exp").get<int>(), coefficient_from_json(t));
    }
    return p;
  }

  TwoVarLaurent laurent2_from_json(json const& j) {
    if (!j.contains("vars") || !j.contains("terms")) {
      throw std::invalid_argument(
          "polynomial JSON needs \"vars\" and \"terms\"");
    }
    if (j.at("vars") != json({"l", "m"})) {
      throw std::invalid_argument("two-variable JSON must use vars [l, m]");
    }
    TwoVarLaurent p;
    for (auto const& t : j.at("terms")) {
      p.add_term(
          t.at("el").get<int>(), t.at("em").get<int>(), coefficient_from_json(t));
    }
    return p;
  }

  InvariantValue invariant_from_json(json const& j) {
    if (j.contains("vars")) {
      return laurent2_from_json(j);
    }
    return laurent_from_json(j);
  }

  std::string to_string(InvariantValue const& v) {
    return std::visit([](auto const& p) { return p.to_string(); }, v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct ParsedTerm {
      GaussianRational    coeff;
      std::map<char, int> exps;
    };

    class TermParser {
     public:
      TermParser(std::string_view text, std::string_view vars)
          : _text(text), _vars(vars) {}

      std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> out;
        skip_ws();
        if (peek() == '0' && _text.size() - _pos == 1) {
          return out;
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = get() == '-';
        }
        out.push_back(term(negative));
        skip_ws();
        while (!done()) {
          char op = get();
          if (op != '+' && op != '-') {
            fail("expected + or -");
          }
          out.push_back(term(op == '-'));
          skip_ws();
        }
        return out;
      }

     private:
      std::string_view _text;
      std::string_view _vars;
      size_t           _pos = 0;

      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("polynomial parse error at column "
                                    + std::to_string(_pos + 1) + ": " + what
                                    + " in \"" + std::string(_text) + "\"");
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      bool done() {
        skip_ws();
        return _pos >= _text.size();
      }
      char peek() {
        skip_ws();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }
      char get() {
        char c = peek();
        if (c == '\0') {
          fail("unexpected end");
        }
        ++_pos;
        return c;
      }

      bool is_var(char c) const {
        return _vars.find(c) != std::string_view::npos;
      }

      std::string digits() {
        skip_ws();
        size_t start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected digits");
        }
        return std::string(_text.substr(start, _pos - start));
      }

      // unsigned rational "p" or "p/q"
      mpq_class rational() {
        std::string num = digits();
        if (peek() == '/') {
          get();
          std::string den = digits();
          mpq_class   q(num + "/" + den);
          if (q.get_den() == 0) {
            fail("zero denominator");
          }
          q.canonicalize();
          return q;
        }
        return mpq_class(num);
      }

      // Signed rational with optional trailing 'i', as found inside a
      // complex literal.
      GaussianRational part() {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
          neg = get() == '-';
        }
        mpq_class mag(1);
        bool      have_mag = false;
        if (peek() == '(') {
          get();
          mag = rational();
          if (get() != ')') {
            fail("expected )");
          }
          have_mag = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
          mag      = rational();
          have_mag = true;
        }
        if (neg) {
          mag = -mag;
        }
        if (peek() == 'i') {
          get();
          return GaussianRational(mpq_class(0), mag);
        }
        if (!have_mag) {
          fail("expected a number");
        }
        return GaussianRational(mag, mpq_class(0));
      }

      GaussianRational coefficient() {
        char c = peek();
        if (c == '(') {
          size_t save = _pos;
          get();
          // "(p/q)i" or "(a+bi)"
          GaussianRational first = part();
          if (peek() == ')') {
            get();
            if (peek() == 'i') {
              get();
              return GaussianRational(mpq_class(0), first.re());
            }
            return first;
          }
          GaussianRational second = part();
          if (get() != ')') {
            _pos = save;
            fail("expected ) closing complex coefficient");
          }
          return first + second;
        }
        return part();
      }

      void factor(ParsedTerm& t) {
        char v = get();
        if (!is_var(v)) {
          fail(std::string("unknown variable '") + v + "'");
        }
        int e = 1;
        if (peek() == '^') {
          get();
          bool neg = false;
          if (peek() == '-') {
            get();
            neg = true;
          }
          e = std::stoi(digits());
          if (neg) {
            e = -e;
          }
        }
        t.exps[v] += e;
      }

      ParsedTerm term(bool negative) {
        ParsedTerm t;
        t.coeff = GaussianRational(1);
        if (!is_var(peek())) {
          t.coeff = coefficient();
          if (peek() == '*') {
            get();
            factor(t);
          }
        } else {
          factor(t);
        }
        while (peek() == '*') {
          get();
          factor(t);
        }
        if (negative) {
          t.coeff = -t.coeff;
        }
        return t;
      }
    };
  }  // namespace

  LaurentPoly parse_laurent(std::string_view text, char var) {
    std::string vars(1, var);
    LaurentPoly p;
    for (auto const& t : TermParser(text, vars).parse()) {
      int e = t.exps.contains(var) ? t.exps.at(var) : 0;
      p.add_term(e, t.coeff);
    }
    return p;
  }

  TwoVarLaurent parse_laurent2(std::string_view text) {
    TwoVarLaurent p;
    for (auto const& t : TermParser(text, "lm").parse()) {
      int el = t.exps.contains('l') ? t.exps.at('l') : 0;
      int em = t.exps.contains('m') ? t.exps.at('m') : 0;
      p.add_term(el, em, t.coeff);
    }
    return p;
  }

}  // namespace fibskein
