#ifndef SKEWGROWTH_MONOID_MODEL_HPP_
#define SKEWGROWTH_MONOID_MODEL_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "degree_key.hpp"
#include "errors.hpp"
#include "presentation.hpp"

namespace skewgrowth {

  // Index of an element in a model's element table.  Ids are dense, the unit
  // is always 0, and ids increase with degree.
  struct ElementId {
    std::uint32_t value = 0;

    friend auto operator<=>(ElementId, ElementId) = default;
  };

  // Sorted, duplicate-free.
  using ElementSet = std::vector<ElementId>;

  inline ElementSet make_element_set(std::vector<ElementId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  enum class ModelKind {
    rewrite_presented,
    multiplicative_integer,
    mp_normal_form
  };

  inline std::string_view to_string(ModelKind k) {
    switch (k) {
      case ModelKind::rewrite_presented:
        return "rewrite-presented";
      case ModelKind::multiplicative_integer:
        return "multiplicative-integer";
      case ModelKind::mp_normal_form:
        return "mp-normal-form";
    }
    return "?";
  }

  struct EnumerationOptions {
    // Hard cap on the number of candidate words examined at one degree.
    std::size_t word_cap = 10'000'000;
  };

  // Result of left_quotient(u, v).
  struct LeftQuotient {
    enum class Status { ok, no_witness, cancellativity_violation };

    Status    status = Status::no_witness;
    ElementId quotient{};  // the witness x with v = u x (first one found)
    ElementId other{};     // a second witness, for cancellativity_violation
  };

  // Uniform view of a monoid enumerated up to a degree cutoff.  Elements are
  // ~-classes, which under strictly positive degrees are single elements.
  // The table is complete and duplicate-free at every degree <= cutoff and
  // immutable once the concrete model's constructor returns.
  class MonoidModel {
   public:
    struct Level {
      DegreeKey     degree;
      std::uint32_t first;
      std::uint32_t count;
    };

    virtual ~MonoidModel() = default;

    MonoidModel(MonoidModel const&)            = delete;
    MonoidModel& operator=(MonoidModel const&) = delete;

    ModelKind kind() const noexcept {
      return _kind;
    }
    KeyKind key_kind() const noexcept {
      return _key_kind;
    }
    DegreeKey const& cutoff() const noexcept {
      return _cutoff;
    }
    std::size_t size() const noexcept {
      return _degree.size();
    }
    static constexpr ElementId unit() noexcept {
      return ElementId{0};
    }

    DegreeKey const& degree(ElementId u) const {
      return _degree.at(u.value);
    }

    std::string const& label(ElementId u) const {
      return _label.at(u.value);
    }

    std::optional<ElementId> find(std::string_view label) const {
      auto it = _by_label.find(std::string(label));
      if (it == _by_label.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Realized degrees in increasing order, each with its id range.
    std::vector<Level> const& levels() const noexcept {
      return _levels;
    }

    Level const* level_of(DegreeKey const& d) const {
      auto it = _level_index.find(d);
      return it == _level_index.end() ? nullptr : &_levels[it->second];
    }

    std::size_t count_at(DegreeKey const& d) const {
      auto const* l = level_of(d);
      return l == nullptr ? 0 : l->count;
    }

    std::vector<ElementId> elements_at(DegreeKey const& d) const {
      std::vector<ElementId> out;
      if (auto const* l = level_of(d)) {
        for (std::uint32_t i = 0; i < l->count; ++i) {
          out.push_back(ElementId{l->first + i});
        }
      }
      return out;
    }

    // Least degree of a non-unit element (the lowest charge).
    DegreeKey const& min_positive_degree() const {
      if (_levels.size() < 2) {
        throw EmptyAlphabet("model has no non-unit element up to the cutoff");
      }
      return _levels[1].degree;
    }

    // The class of u v, or nullopt when deg(u) + deg(v) exceeds the cutoff.
    virtual std::optional<ElementId> product(ElementId u,
                                             ElementId v) const = 0;

    // u |_l v.  Any witness x of v = u x has degree deg(v) - deg(u), so
    // scanning that single level is exhaustive.
    virtual bool left_divides(ElementId u, ElementId v) const {
      auto const rest = degree(v).minus(degree(u));
      if (!rest) {
        return false;
      }
      auto const* l = level_of(*rest);
      if (l == nullptr) {
        return false;
      }
      for (std::uint32_t i = 0; i < l->count; ++i) {
        if (product(u, ElementId{l->first + i}) == v) {
          return true;
        }
      }
      return false;
    }

    LeftQuotient left_quotient(ElementId u, ElementId v) const {
      LeftQuotient result;
      auto const   rest = degree(v).minus(degree(u));
      if (!rest) {
        return result;
      }
      auto const* l = level_of(*rest);
      if (l == nullptr) {
        return result;
      }
      bool found = false;
      for (std::uint32_t i = 0; i < l->count; ++i) {
        ElementId const x{l->first + i};
        if (product(u, x) != v) {
          continue;
        }
        if (!found) {
          found           = true;
          result.status   = LeftQuotient::Status::ok;
          result.quotient = x;
        } else {
          result.status = LeftQuotient::Status::cancellativity_violation;
          result.other  = x;
          return result;
        }
      }
      return result;
    }

    // min(M \ {1}): the non-unit elements with no proper non-unit left
    // divisor.  Exact at every degree <= cutoff, since a proper divisor has
    // strictly smaller degree.
    virtual ElementSet atoms() const {
      ElementSet out;
      for (std::uint32_t i = 1; i < size(); ++i) {
        ElementId const u{i};
        bool            atom = true;
        for (std::uint32_t j = 1; j < i && atom; ++j) {
          ElementId const v{j};
          if (degree(v) < degree(u) && left_divides(v, u)) {
            atom = false;
          }
        }
        if (atom) {
          out.push_back(u);
        }
      }
      return out;
    }

    // Elements of `labels` (comma separated) as a set; throws UnknownSymbol.
    ElementSet parse_element_set(std::string_view labels) const {
      std::vector<ElementId> out;
      std::size_t            pos = 0;
      while (pos <= labels.size()) {
        auto const comma = labels.find(',', pos);
        auto const item  = detail::trim(labels.substr(
            pos, comma == std::string_view::npos ? comma : comma - pos));
        pos = comma == std::string_view::npos ? labels.size() + 1 : comma + 1;
        if (item.empty()) {
          continue;
        }
        auto id = find(item);
        if (!id) {
          throw UnknownSymbol("no element labelled '" + std::string(item)
                              + "' up to the cutoff");
        }
        out.push_back(*id);
      }
      return make_element_set(std::move(out));
    }

   protected:
    MonoidModel(ModelKind kind, DegreeKey cutoff)
        : _kind(kind), _key_kind(cutoff.kind()), _cutoff(std::move(cutoff)) {}

    // Appends one degree level; levels must arrive in increasing degree.
    void push_level(DegreeKey const& d, std::vector<std::string> labels) {
      Level l{d,
              static_cast<std::uint32_t>(_degree.size()),
              static_cast<std::uint32_t>(labels.size())};
      _level_index.emplace(d, _levels.size());
      _levels.push_back(l);
      for (auto& s : labels) {
        _by_label.emplace(s, ElementId{static_cast<std::uint32_t>(
                                 _degree.size())});
        _degree.push_back(d);
        _label.push_back(std::move(s));
      }
    }

   private:
    ModelKind                                  _kind;
    KeyKind                                    _key_kind;
    DegreeKey                                  _cutoff;
    std::vector<DegreeKey>                     _degree;
    std::vector<std::string>                   _label;
    std::vector<Level>                         _levels;
    std::map<DegreeKey, std::size_t>           _level_index;
    std::unordered_map<std::string, ElementId> _by_label;
  };

  ////////////////////////////////////////////////////////////////////////
  // Rewrite-presented monoids
  ////////////////////////////////////////////////////////////////////////

  // A monoid given by a positive homogeneous presentation, enumerated level
  // by level.
  //
  // Every word of degree d is w g for a word w of degree d - deg(g), so the
  // words of degree d, up to equivalence of their proper prefixes, are the
  // pairs (class of w, g).  An elementary substitution either stays inside
  // the prefix, which leaves the pair unchanged, or rewrites a suffix x R
  // into x S for a relation R = S.  Merging the pairs of x R and x S for
  // every class x of degree d - deg(R) and every relation therefore yields
  // exactly the equivalence classes of degree d.  Homogeneity keeps every
  // equivalence chain inside one degree, so the classes are exact.
  //
  // The number of classes may grow exponentially with the cutoff.
  class RewriteModel final : public MonoidModel {
   public:
    RewriteModel(Presentation       presentation,
                 Rational const&    cutoff,
                 EnumerationOptions options = {})
        : MonoidModel(ModelKind::rewrite_presented,
                      DegreeKey::rational(cutoff)),
          _presentation(std::move(presentation)) {
      if (cutoff <= 0) {
        throw DomainError("cutoff must be positive");
      }
      enumerate(cutoff, options);
    }

    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    // The shortlex-least word of the class.
    Word const& word(ElementId u) const {
      return _words.at(u.value);
    }

    std::optional<ElementId> right_multiply(ElementId u,
                                            std::size_t generator) const {
      auto const& row = _right.at(u.value);
      if (generator >= row.size() || row[generator] < 0) {
        return std::nullopt;
      }
      return ElementId{static_cast<std::uint32_t>(row[generator])};
    }

    // The class of an arbitrary word, or nullopt above the cutoff.
    std::optional<ElementId> element_of(Word const& w) const {
      ElementId cur = unit();
      for (auto g : w) {
        auto next = right_multiply(cur, g);
        if (!next) {
          return std::nullopt;
        }
        cur = *next;
      }
      return cur;
    }

    std::optional<ElementId> product(ElementId u, ElementId v) const override {
      if (degree(u) + degree(v) > cutoff()) {
        return std::nullopt;
      }
      ElementId cur = u;
      for (auto g : word(v)) {
        cur = ElementId{static_cast<std::uint32_t>(_right[cur.value][g])};
      }
      return cur;
    }

    ElementSet atoms() const override {
      ElementSet out;
      for (std::uint32_t i = 1; i < size(); ++i) {
        if (!_composite[i]) {
          out.push_back(ElementId{i});
        }
      }
      return out;
    }

   private:
    struct Block {
      std::size_t   generator;
      std::uint32_t first;   // first element id of the prefix level
      std::uint32_t count;
      std::size_t   offset;  // first node index
    };

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          // Smaller index becomes the root; keeps results deterministic.
          if (b < a) {
            std::swap(a, b);
          }
          parent[b] = a;
        }
      }
      std::vector<std::size_t> parent;
    };

    void enumerate(Rational const& cutoff, EnumerationOptions const& options) {
      auto const& gens = _presentation.generators();
      std::vector<std::size_t> admissible;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].degree <= cutoff) {
          admissible.push_back(g);
        }
      }
      if (admissible.empty()) {
        throw EmptyAlphabet("no generator has degree <= "
                            + to_string(cutoff));
      }
      struct Rule {
        Word     lhs;
        Word     rhs;
        Rational degree;
      };
      std::vector<Rule> rules;
      for (auto const& r : _presentation.relations()) {
        auto const d = _presentation.degree(r.lhs);
        if (d <= cutoff && r.lhs != r.rhs) {
          rules.push_back({r.lhs, r.rhs, d});
        }
      }

      // Level 0: the unit.
      _words.push_back({});
      _right.emplace_back(gens.size(), -1);
      _composite.push_back(false);
      push_level(DegreeKey::rational(0), {"1"});

      std::set<Rational> pending;
      auto schedule = [&](Rational const& d) {
        for (auto g : admissible) {
          Rational next = d + gens[g].degree;
          if (next <= cutoff) {
            pending.insert(std::move(next));
          }
        }
      };
      schedule(0);

      while (!pending.empty()) {
        Rational const d = *pending.begin();
        pending.erase(pending.begin());

        std::vector<Block>       blocks;
        std::vector<std::size_t> block_of(gens.size(), SIZE_MAX);
        std::size_t              nodes = 0;
        for (auto g : admissible) {
          if (gens[g].degree > d) {
            continue;
          }
          auto const* l = level_of(DegreeKey::rational(d - gens[g].degree));
          if (l == nullptr) {
            continue;
          }
          block_of[g] = blocks.size();
          blocks.push_back({g, l->first, l->count, nodes});
          nodes += l->count;
        }
        if (nodes > options.word_cap) {
          throw CutoffTooLarge("degree " + to_string(d) + " needs "
                               + std::to_string(nodes)
                               + " candidate words, above the cap of "
                               + std::to_string(options.word_cap));
        }

        auto node_of = [&](ElementId prefix, std::size_t g) {
          auto const& b = blocks[block_of[g]];
          return b.offset + (prefix.value - b.first);
        };
        auto walk = [&](ElementId x, Word const& w, std::size_t len) {
          for (std::size_t i = 0; i < len; ++i) {
            x = ElementId{static_cast<std::uint32_t>(_right[x.value][w[i]])};
          }
          return x;
        };

        UnionFind uf(nodes);
        for (auto const& rule : rules) {
          if (rule.degree > d) {
            continue;
          }
          auto const* l = level_of(DegreeKey::rational(d - rule.degree));
          if (l == nullptr) {
            continue;
          }
          for (std::uint32_t i = 0; i < l->count; ++i) {
            ElementId const x{l->first + i};
            auto const      pl = walk(x, rule.lhs, rule.lhs.size() - 1);
            auto const      pr = walk(x, rule.rhs, rule.rhs.size() - 1);
            uf.unite(node_of(pl, rule.lhs.back()),
                     node_of(pr, rule.rhs.back()));
          }
        }

        // Shortlex-least member of each class.  A shortlex-least word has a
        // shortlex-least prefix, so it is (canonical word of u) followed by g
        // for some node (u, g).
        auto node_less = [&](std::pair<ElementId, std::size_t> a,
                             std::pair<ElementId, std::size_t> b) {
          auto const& wa = _words[a.first.value];
          auto const& wb = _words[b.first.value];
          if (wa.size() != wb.size()) {
            return wa.size() < wb.size();
          }
          if (wa != wb) {
            return wa < wb;
          }
          return a.second < b.second;
        };
        std::vector<std::pair<ElementId, std::size_t>> node_info(nodes);
        for (auto const& b : blocks) {
          for (std::uint32_t i = 0; i < b.count; ++i) {
            node_info[b.offset + i] = {ElementId{b.first + i}, b.generator};
          }
        }
        std::unordered_map<std::size_t, std::size_t> best;  // root -> node
        std::vector<std::size_t>                     roots;
        for (std::size_t n = 0; n < nodes; ++n) {
          auto const r          = uf.find(n);
          auto [it, inserted]   = best.try_emplace(r, n);
          if (inserted) {
            roots.push_back(r);
          } else if (node_less(node_info[n], node_info[it->second])) {
            it->second = n;
          }
        }
        std::sort(roots.begin(), roots.end(), [&](auto a, auto b) {
          return node_less(node_info[best[a]], node_info[best[b]]);
        });

        auto const first = static_cast<std::uint32_t>(size());
        std::unordered_map<std::size_t, std::uint32_t> class_id;
        std::vector<std::string>                       labels;
        for (std::size_t k = 0; k < roots.size(); ++k) {
          class_id.emplace(roots[k], first + static_cast<std::uint32_t>(k));
          auto const [u, g] = node_info[best[roots[k]]];
          Word w            = _words[u.value];
          w.push_back(g);
          labels.push_back(_presentation.render_word(w));
          _words.push_back(std::move(w));
          _right.emplace_back(gens.size(), -1);
          _composite.push_back(false);
        }
        for (std::size_t n = 0; n < nodes; ++n) {
          auto const [u, g] = node_info[n];
          auto const id     = class_id[uf.find(n)];
          _right[u.value][g] = static_cast<std::int64_t>(id);
          if (u != unit()) {
            _composite[id] = true;
          }
        }
        push_level(DegreeKey::rational(d), std::move(labels));
        schedule(d);
      }
    }

    Presentation                           _presentation;
    std::vector<Word>                      _words;
    std::vector<std::vector<std::int64_t>> _right;
    std::vector<bool>                      _composite;
  };

  ////////////////////////////////////////////////////////////////////////
  // (Z_{>0}, log)
  ////////////////////////////////////////////////////////////////////////

  // Positive integers 1..nmax under multiplication, with degree keys that
  // stand for log n.  No logarithm is ever computed.
  class MultIntModel final : public MonoidModel {
   public:
    explicit MultIntModel(std::uint32_t nmax)
        : MonoidModel(ModelKind::multiplicative_integer,
                      DegreeKey::multint(Integer(nmax == 0 ? 1 : nmax))),
          _nmax(nmax) {
      if (nmax < 2) {
        throw InvalidParams("zpos needs nmax >= 2");
      }
      for (std::uint32_t n = 1; n <= nmax; ++n) {
        push_level(DegreeKey::multint(Integer(n)), {std::to_string(n)});
      }
    }

    std::uint32_t nmax() const noexcept {
      return _nmax;
    }

    static std::uint64_t value(ElementId u) noexcept {
      return std::uint64_t(u.value) + 1;
    }

    static ElementId element(std::uint64_t n) noexcept {
      return ElementId{static_cast<std::uint32_t>(n - 1)};
    }

    std::optional<ElementId> product(ElementId u, ElementId v) const override {
      auto const n = value(u) * value(v);
      if (n > _nmax) {
        return std::nullopt;
      }
      return element(n);
    }

    bool left_divides(ElementId u, ElementId v) const override {
      return value(v) % value(u) == 0;
    }

    // The primes up to nmax.
    ElementSet atoms() const override {
      std::vector<bool> composite(_nmax + 1, false);
      ElementSet        out;
      for (std::uint64_t n = 2; n <= _nmax; ++n) {
        if (composite[n]) {
          continue;
        }
        out.push_back(element(n));
        for (std::uint64_t m = n * n; m <= _nmax; m += n) {
          composite[m] = true;
        }
      }
      return out;
    }

   private:
    std::uint32_t _nmax;
  };

}  // namespace skewgrowth

#endif  // SKEWGROWTH_MONOID_MODEL_HPP_
