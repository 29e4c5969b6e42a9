#ifndef SKEWGROWTH_PRESENTATION_HPP_
#define SKEWGROWTH_PRESENTATION_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "degree_key.hpp"
#include "errors.hpp"

namespace skewgrowth {

  // A word is a sequence of generator indices (declaration order).
  using Word = std::vector<std::size_t>;

  struct Generator {
    std::string name;
    Rational    degree;

    friend bool operator==(Generator const&, Generator const&) = default;
  };

  // An unordered relation lhs = rhs.  Stored with lhs <= rhs in shortlex
  // order so that R = S and S = R compare equal.
  struct Relation {
    Word lhs;
    Word rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // Shortlex on generator indices: length first, then lexicographic.
  inline bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  // Positive homogeneous presentation <L | R>.  Immutable once built by
  // parse_presentation or Presentation::build.
  class Presentation {
   public:
    Presentation() = default;

    // Validates and normalizes; throws the same errors as the parser.
    static Presentation build(std::vector<Generator> generators,
                              std::vector<Relation>  relations) {
      Presentation p;
      for (auto& g : generators) {
        p.add_generator(std::move(g));
      }
      for (auto& r : relations) {
        p.add_relation(std::move(r));
      }
      return p;
    }

    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }

    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    std::optional<std::size_t> index_of(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Rational degree(Word const& w) const {
      Rational d(0);
      for (auto i : w) {
        d += _generators.at(i).degree;
      }
      return d;
    }

    // Joins names with no separator when every name is one character,
    // otherwise with ".".  The empty word renders as "1".
    std::string render_word(Word const& w) const {
      if (w.empty()) {
        return "1";
      }
      bool const compact = std::all_of(
          _generators.begin(), _generators.end(), [](Generator const& g) {
            return g.name.size() == 1;
          });
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !compact) {
          out += '.';
        }
        out += _generators.at(w[i]).name;
      }
      return out;
    }

    // Same generators in the same order and the same set of relations.
    friend bool operator==(Presentation const& a, Presentation const& b) {
      if (a._generators != b._generators) {
        return false;
      }
      auto ra = a.sorted_relations();
      auto rb = b.sorted_relations();
      return ra == rb;
    }

    void add_generator(Generator g) {
      if (g.name.empty()) {
        throw SyntaxError(0, 0, "empty generator name");
      }
      if (g.degree <= 0) {
        throw NonPositiveDegree("generator " + g.name
                                + " has non-positive degree "
                                + to_string(g.degree));
      }
      if (_index.count(g.name) != 0) {
        throw SyntaxError(0, 0, "duplicate generator " + g.name);
      }
      _index.emplace(g.name, _generators.size());
      _generators.push_back(std::move(g));
    }

    void add_relation(Relation r) {
      if (r.lhs.empty() || r.rhs.empty()) {
        throw SyntaxError(0, 0, "relation with an empty side");
      }
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (auto i : *w) {
          if (i >= _generators.size()) {
            throw UnknownSymbol("generator index " + std::to_string(i)
                                + " is not declared");
          }
        }
      }
      Rational const dl = degree(r.lhs);
      Rational const dr = degree(r.rhs);
      if (dl != dr) {
        throw NonHomogeneousRelation(
            "relation " + render_word(r.lhs) + " = " + render_word(r.rhs)
                + " is not homogeneous (" + to_string(dl)
                + " != " + to_string(dr) + ")",
            to_string(dl),
            to_string(dr));
      }
      if (shortlex_less(r.rhs, r.lhs)) {
        std::swap(r.lhs, r.rhs);
      }
      _relations.push_back(std::move(r));
    }

   private:
    std::vector<Relation> sorted_relations() const {
      auto rels = _relations;
      std::sort(rels.begin(), rels.end(), [](auto const& x, auto const& y) {
        return std::tie(x.lhs, x.rhs) < std::tie(y.lhs, y.rhs);
      });
      rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
      return rels;
    }

    std::vector<Generator>                       _generators;
    std::vector<Relation>                        _relations;
    std::unordered_map<std::string, std::size_t> _index;
  };

  namespace detail {
    struct Token {
      enum class Kind { ident, number, colon, equals, slash, minus };
      Kind        kind;
      std::string text;
      std::size_t column;  // 1-based
    };

    inline bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    inline bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    inline std::vector<Token> tokenize(std::string_view line,
                                       std::size_t      line_no) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        char const c = line[i];
        if (c == '#') {
          break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        std::size_t const col = i + 1;
        if (ident_start(c)) {
          std::size_t j = i;
          while (j < line.size() && ident_char(line[j])) {
            ++j;
          }
          out.push_back(
              {Token::Kind::ident, std::string(line.substr(i, j - i)), col});
          i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < line.size()
                 && std::isdigit(static_cast<unsigned char>(line[j]))) {
            ++j;
          }
          out.push_back(
              {Token::Kind::number, std::string(line.substr(i, j - i)), col});
          i = j;
        } else if (c == ':') {
          out.push_back({Token::Kind::colon, ":", col});
          ++i;
        } else if (c == '=') {
          out.push_back({Token::Kind::equals, "=", col});
          ++i;
        } else if (c == '/') {
          out.push_back({Token::Kind::slash, "/", col});
          ++i;
        } else if (c == '-') {
          out.push_back({Token::Kind::minus, "-", col});
          ++i;
        } else {
          throw SyntaxError(
              line_no, col, std::string("unexpected character '") + c + "'");
        }
      }
      return out;
    }
  }  // namespace detail

  // Line-oriented format:
  //
  //   # comment
  //   gen NAME : RATIONAL      (RATIONAL = INT or INT/INT, positive)
  //   rel WORD = WORD          (WORD = whitespace-separated names)
  //
  // Generators must be declared before use.
  inline Presentation parse_presentation(std::string_view text) {
    using detail::Token;
    Presentation p;
    std::size_t  line_no = 0;
    std::size_t  pos     = 0;
    while (pos <= text.size()) {
      auto const eol = text.find('\n', pos);
      auto const line
          = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      auto const tokens = detail::tokenize(line, line_no);
      if (tokens.empty()) {
        continue;
      }
      auto const end_col = line.size() + 1;
      auto       at      = [&](std::size_t i) -> Token const* {
        return i < tokens.size() ? &tokens[i] : nullptr;
      };
      auto col_of = [&](std::size_t i) {
        return i < tokens.size() ? tokens[i].column : end_col;
      };
      auto const& head = tokens[0];
      if (head.kind != Token::Kind::ident
          || (head.text != "gen" && head.text != "rel")) {
        throw SyntaxError(
            line_no, head.column, "expected 'gen' or 'rel', got '" + head.text + "'");
      }

      if (head.text == "gen") {
        auto const* name = at(1);
        if (name == nullptr || name->kind != Token::Kind::ident) {
          throw SyntaxError(line_no, col_of(1), "expected generator name");
        }
        if (at(2) == nullptr || at(2)->kind != Token::Kind::colon) {
          throw SyntaxError(line_no, col_of(2), "expected ':'");
        }
        std::size_t i   = 3;
        bool        neg = false;
        if (at(i) != nullptr && at(i)->kind == Token::Kind::minus) {
          neg = true;
          ++i;
        }
        if (at(i) == nullptr || at(i)->kind != Token::Kind::number) {
          throw SyntaxError(line_no, col_of(i), "expected degree");
        }
        Integer num(at(i)->text);
        Integer den(1);
        ++i;
        if (at(i) != nullptr && at(i)->kind == Token::Kind::slash) {
          ++i;
          if (at(i) == nullptr || at(i)->kind != Token::Kind::number) {
            throw SyntaxError(line_no, col_of(i), "expected denominator");
          }
          den = Integer(at(i)->text);
          if (den == 0) {
            throw SyntaxError(line_no, col_of(i), "zero denominator");
          }
          ++i;
        }
        if (at(i) != nullptr) {
          throw SyntaxError(line_no, col_of(i), "trailing input after degree");
        }
        Rational degree(num, den);
        if (neg) {
          degree = -degree;
        }
        if (p.index_of(name->text)) {
          throw SyntaxError(
              line_no, name->column, "duplicate generator '" + name->text + "'");
        }
        if (degree <= 0) {
          throw NonPositiveDegree("line " + std::to_string(line_no)
                                  + ": generator '" + name->text
                                  + "' has non-positive degree "
                                  + to_string(degree));
        }
        p.add_generator({name->text, degree});
        continue;
      }

      // rel
      Relation    rel;
      Word*       side = &rel.lhs;
      bool        seen_equals = false;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const& t = tokens[i];
        if (t.kind == Token::Kind::equals) {
          if (seen_equals) {
            throw SyntaxError(line_no, t.column, "second '=' in relation");
          }
          if (rel.lhs.empty()) {
            throw SyntaxError(line_no, t.column, "empty left-hand side");
          }
          seen_equals = true;
          side        = &rel.rhs;
          continue;
        }
        if (t.kind != Token::Kind::ident) {
          throw SyntaxError(
              line_no, t.column, "expected generator name, got '" + t.text + "'");
        }
        auto idx = p.index_of(t.text);
        if (!idx) {
          throw UnknownSymbol("line " + std::to_string(line_no) + ", column "
                              + std::to_string(t.column)
                              + ": undeclared generator '" + t.text + "'");
        }
        side->push_back(*idx);
      }
      if (!seen_equals) {
        throw SyntaxError(line_no, end_col, "expected '='");
      }
      if (rel.rhs.empty()) {
        throw SyntaxError(line_no, end_col, "empty right-hand side");
      }
      try {
        p.add_relation(std::move(rel));
      } catch (NonHomogeneousRelation const& e) {
        throw NonHomogeneousRelation(
            "line " + std::to_string(line_no) + ": " + e.what(),
            e.lhs_degree(),
            e.rhs_degree());
      }
    }
    return p;
  }

  // Canonical writer: parse_presentation(render_presentation(p)) == p.
  inline std::string render_presentation(Presentation const& p) {
    std::ostringstream out;
    auto const&        gens = p.generators();
    for (auto const& g : gens) {
      out << "gen " << g.name << " : " << to_string(g.degree) << '\n';
    }
    auto word = [&](Word const& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          s += ' ';
        }
        s += gens[w[i]].name;
      }
      return s;
    };
    for (auto const& r : p.relations()) {
      out << "rel " << word(r.lhs) << " = " << word(r.rhs) << '\n';
    }
    return out.str();
  }

}  // namespace skewgrowth

#endif  // SKEWGROWTH_PRESENTATION_HPP_
