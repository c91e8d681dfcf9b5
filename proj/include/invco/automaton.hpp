// invco - cosets of closed inverse subsemigroups
//
// Partial deterministic automata over an involutive alphabet, the bouquet of
// closed paths spelled by a list of words, and folding of a bouquet into an
// inverse automaton.
//
// The alphabet is a string of distinct lowercase letters. Each letter x also
// names its formal inverse X, and the signed letters are indexed x, X, y, Y,
// ... in that order. Shortlex order on words uses the same letter order, and
// every automaton produced here numbers its states by the shortlex-least word
// that reaches them from the initial state.

#ifndef INVCO_AUTOMATON_HPP_
#define INVCO_AUTOMATON_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exception.hpp"
#include "json.hpp"
#include "munn.hpp"

namespace invco {

  using State = std::uint32_t;

  inline constexpr State no_state = static_cast<State>(-1);

  // Default bound on the number of states of a folded automaton.
  inline constexpr std::size_t default_state_cap = 10'000;

  // The folding state cap, overridable through INVCO_STATE_CAP.
  inline std::size_t state_cap() {
    if (char const* env = std::getenv("INVCO_STATE_CAP")) {
      try {
        auto v = std::stoull(env);
        if (v > 0) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
      }
      throw UsageError(std::string("INVCO_STATE_CAP must be a positive integer, found \"")
                       + env + "\"");
    }
    return default_state_cap;
  }

  namespace detail {
    inline void check_alphabet(std::string_view alphabet) {
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] < 'a' || alphabet[i] > 'z') {
          throw UsageError("alphabet letters must be a-z, found '"
                           + std::string(1, alphabet[i]) + "'");
        }
        if (alphabet.find(alphabet[i], i + 1) != std::string_view::npos) {
          throw UsageError("repeated letter '" + std::string(1, alphabet[i])
                           + "' in alphabet");
        }
      }
    }
  }  // namespace detail

  class InverseAutomaton {
   public:
    InverseAutomaton() = default;

    InverseAutomaton(std::string alphabet, std::size_t states, State initial)
        : _alphabet(std::move(alphabet)),
          _states(states),
          _initial(initial),
          _final(states, false),
          _delta(states * 2 * _alphabet.size(), no_state) {
      detail::check_alphabet(_alphabet);
      if (initial >= states) {
        throw UsageError("initial state out of range");
      }
    }

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t number_of_letters() const noexcept {
      return 2 * _alphabet.size();
    }

    std::size_t size() const noexcept {
      return _states;
    }

    State initial() const noexcept {
      return _initial;
    }

    bool is_final(State s) const {
      return _final.at(s);
    }

    std::vector<State> finals() const {
      std::vector<State> out;
      for (State s = 0; s < _states; ++s) {
        if (_final[s]) {
          out.push_back(s);
        }
      }
      return out;
    }

    void set_final(State s, bool value = true) {
      _final.at(s) = value;
    }

    // Index of a signed letter: 2i for the i-th alphabet letter, 2i + 1 for
    // its inverse.
    std::size_t letter_index(char c) const {
      char lower = c >= 'A' && c <= 'Z' ? inverse_letter(c) : c;
      auto pos   = _alphabet.find(lower);
      if (!is_letter(c) || pos == std::string::npos) {
        throw UsageError("letter '" + std::string(1, c)
                         + "' is not in the alphabet \"" + _alphabet + "\"");
      }
      return 2 * pos + (c == lower ? 0 : 1);
    }

    char letter(std::size_t index) const {
      char c = _alphabet.at(index / 2);
      return index % 2 == 0 ? c : inverse_letter(c);
    }

    State target(State s, std::size_t letter_idx) const {
      return _delta.at(s * number_of_letters() + letter_idx);
    }

    State target(State s, char c) const {
      return target(s, letter_index(c));
    }

    // Sets a single transition; the dual is not touched.
    void set_transition(State s, std::size_t letter_idx, State t) {
      if (s >= _states || (t != no_state && t >= _states)) {
        throw UsageError("state out of range");
      }
      _delta.at(s * number_of_letters() + letter_idx) = t;
    }

    void set_transition(State s, char c, State t) {
      set_transition(s, letter_index(c), t);
    }

    // Sets s -a-> t together with its dual t -a^-1-> s.
    void add_edge(State s, char c, State t) {
      std::size_t a = letter_index(c);
      set_transition(s, a, t);
      set_transition(t, a ^ 1U, s);
    }

    friend bool operator==(InverseAutomaton const&, InverseAutomaton const&)
        = default;

   private:
    std::string        _alphabet;
    std::size_t        _states  = 0;
    State              _initial = 0;
    std::vector<bool>  _final;
    std::vector<State> _delta;
  };

  // The state reached by reading word from s, or no_state.
  inline State run_from(InverseAutomaton const& A, State s, std::string_view word) {
    for (char c : word) {
      A.letter_index(c);  // rejects foreign letters even past an undefined step
    }
    for (char c : word) {
      if (s == no_state) {
        break;
      }
      s = A.target(s, c);
    }
    return s;
  }

  inline std::optional<State> run(InverseAutomaton const& A, std::string_view word) {
    State s = run_from(A, A.initial(), word);
    if (s == no_state) {
      return std::nullopt;
    }
    return s;
  }

  inline bool accepts(InverseAutomaton const& A, std::string_view word) {
    auto s = run(A, word);
    return s && A.is_final(*s);
  }

  // u and v lead to the same state (or are both undefined).
  inline bool state_equivalent(InverseAutomaton const& A,
                               std::string_view        u,
                               std::string_view        v) {
    return run(A, u) == run(A, v);
  }

  // Dual edges present and every letter acts injectively.
  inline bool is_inverse_automaton(InverseAutomaton const& A) {
    std::size_t const k = A.number_of_letters();
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<bool> hit(A.size(), false);
      for (State s = 0; s < A.size(); ++s) {
        State t = A.target(s, a);
        if (t == no_state) {
          continue;
        }
        if (A.target(t, a ^ 1U) != s || hit[t]) {
          return false;
        }
        hit[t] = true;
      }
    }
    return true;
  }

  // Every state has a transition for every signed letter.
  inline bool is_complete(InverseAutomaton const& A) {
    for (State s = 0; s < A.size(); ++s) {
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        if (A.target(s, a) == no_state) {
          return false;
        }
      }
    }
    return true;
  }

  // Shortlex-least word reaching each state; nullopt for unreachable states.
  inline std::vector<std::optional<Word>> shortlex_words(InverseAutomaton const& A) {
    std::vector<std::optional<Word>> out(A.size());
    std::deque<State>                queue{A.initial()};
    out[A.initial()] = Word{};
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        State t = A.target(s, a);
        if (t != no_state && !out[t]) {
          out[t] = *out[s] + A.letter(a);
          queue.push_back(t);
        }
      }
    }
    return out;
  }

  // The accessible part of A with states renumbered in shortlex order of
  // their least reaching words.
  inline InverseAutomaton canonical(InverseAutomaton const& A) {
    std::vector<State> order{A.initial()};
    std::vector<State> relabel(A.size(), no_state);
    relabel[A.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        State t = A.target(order[i], a);
        if (t != no_state && relabel[t] == no_state) {
          relabel[t] = static_cast<State>(order.size());
          order.push_back(t);
        }
      }
    }
    InverseAutomaton out(A.alphabet(), order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.set_final(static_cast<State>(i), A.is_final(order[i]));
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        State t = A.target(order[i], a);
        if (t != no_state) {
          out.set_transition(static_cast<State>(i), a, relabel[t]);
        }
      }
    }
    return out;
  }

  // Isomorphism of the accessible parts. Both automata are deterministic, so
  // the only candidate bijection is the one forced by a joint traversal.
  inline bool is_isomorphic(InverseAutomaton const& A, InverseAutomaton const& B) {
    if (A.alphabet() != B.alphabet()) {
      return false;
    }
    std::vector<State> fwd(A.size(), no_state), bwd(B.size(), no_state);
    std::deque<State>  queue{A.initial()};
    fwd[A.initial()] = B.initial();
    bwd[B.initial()] = A.initial();
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      State m = fwd[s];
      if (A.is_final(s) != B.is_final(m)) {
        return false;
      }
      for (std::size_t a = 0; a < A.number_of_letters(); ++a) {
        State t = A.target(s, a), u = B.target(m, a);
        if ((t == no_state) != (u == no_state)) {
          return false;
        }
        if (t == no_state) {
          continue;
        }
        if (fwd[t] == no_state && bwd[u] == no_state) {
          fwd[t] = u;
          bwd[u] = t;
          queue.push_back(t);
        } else if (fwd[t] != u || bwd[u] != t) {
          return false;
        }
      }
    }
    auto reached = [](std::vector<State> const& v) {
      return std::count_if(v.begin(), v.end(), [](State s) { return s != no_state; });
    };
    return reached(fwd) == static_cast<std::ptrdiff_t>(canonical(A).size())
           && reached(bwd) == static_cast<std::ptrdiff_t>(canonical(B).size());
  }

  // Moore partition refinement on the accessible part. Undefined transitions
  // are a distinguishing feature of their own; no sink state is added.
  inline InverseAutomaton minimize(InverseAutomaton const& A) {
    InverseAutomaton const C = canonical(A);
    std::size_t const      n = C.size(), k = C.number_of_letters();
    std::vector<std::size_t> block(n);
    for (State s = 0; s < n; ++s) {
      block[s] = C.is_final(s) ? 1 : 0;
    }
    std::size_t blocks = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> signatures;
      std::vector<std::size_t>                        next(n);
      for (State s = 0; s < n; ++s) {
        std::vector<std::size_t> sig{block[s]};
        for (std::size_t a = 0; a < k; ++a) {
          State t = C.target(s, a);
          sig.push_back(t == no_state ? n : block[t]);
        }
        next[s] = signatures.emplace(std::move(sig), signatures.size()).first->second;
      }
      block = std::move(next);
      if (signatures.size() == blocks) {
        break;
      }
      blocks = signatures.size();
    }
    InverseAutomaton out(C.alphabet(), blocks, static_cast<State>(block[C.initial()]));
    for (State s = 0; s < n; ++s) {
      out.set_final(static_cast<State>(block[s]), C.is_final(s));
      for (std::size_t a = 0; a < k; ++a) {
        State t = C.target(s, a);
        if (t != no_state) {
          out.set_transition(static_cast<State>(block[s]), a,
                             static_cast<State>(block[t]));
        }
      }
    }
    return canonical(out);
  }

  // An undirected graph over the involutive alphabet with a base vertex 0.
  // Edges are stored with positive letters; each edge s -x-> t stands for
  // itself and its dual t -X-> s.
  class Bouquet {
   public:
    struct Edge {
      std::size_t source;
      char        letter;
      std::size_t target;
    };

    explicit Bouquet(std::string alphabet) : _alphabet(std::move(alphabet)) {
      detail::check_alphabet(_alphabet);
    }

    // One closed path at the base per word.
    static Bouquet from_words(std::string alphabet, std::vector<Word> const& words) {
      Bouquet b(std::move(alphabet));
      for (auto const& w : words) {
        b.add_loop(w);
      }
      return b;
    }

    void add_loop(std::string_view word) {
      check_word(word);
      std::size_t current = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        std::size_t next = i + 1 == word.size() ? 0 : add_vertex();
        add_edge(current, word[i], next);
        current = next;
      }
    }

    std::size_t add_vertex() {
      return _vertices++;
    }

    void add_edge(std::size_t s, char c, std::size_t t) {
      if (s >= _vertices || t >= _vertices) {
        throw UsageError("bouquet vertex out of range");
      }
      char lower = c >= 'A' && c <= 'Z' ? inverse_letter(c) : c;
      if (!is_letter(c) || _alphabet.find(lower) == std::string::npos) {
        throw UsageError("letter '" + std::string(1, c)
                         + "' is not in the alphabet \"" + _alphabet + "\"");
      }
      if (c == lower) {
        _edges.push_back({s, c, t});
      } else {
        _edges.push_back({t, lower, s});
      }
    }

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t vertex_count() const noexcept {
      return _vertices;
    }

    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

   private:
    std::string       _alphabet;
    std::size_t       _vertices = 1;
    std::vector<Edge> _edges;
  };

  // A bouquet is already an inverse automaton when no vertex has two edges
  // with the same signed label.
  inline bool is_inverse_automaton(Bouquet const& b) {
    std::map<std::pair<std::size_t, int>, std::size_t> seen;
    for (auto const& e : b.edges()) {
      int a = e.letter - 'a';
      if (!seen.emplace(std::pair{e.source, 2 * a}, e.target).second
          || !seen.emplace(std::pair{e.target, 2 * a + 1}, e.source).second) {
        return false;
      }
    }
    return true;
  }

  struct FoldOptions {
    // When set, edges are scanned in a shuffled order and merged classes
    // pick their root at random; the folded automaton does not depend on it.
    std::optional<std::uint64_t> seed;
    std::size_t                  cap = 0;  // 0 means state_cap()
  };

  // Identifies the targets of equally labelled edges leaving a common vertex
  // until the graph is deterministic, then returns the component of the base
  // as an inverse automaton whose only initial and final state is the base.
  inline InverseAutomaton fold(Bouquet const& b, FoldOptions const& opts = {}) {
    std::size_t const n = b.vertex_count();
    std::size_t const k = 2 * b.alphabet().size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };

    struct Signed {
      std::size_t source;
      std::size_t letter;
      std::size_t target;
    };
    std::vector<Signed> arcs;
    for (auto const& e : b.edges()) {
      std::size_t a = 2 * b.alphabet().find(e.letter);
      arcs.push_back({e.source, a, e.target});
      arcs.push_back({e.target, a + 1, e.source});
    }

    std::mt19937_64 rng(opts.seed.value_or(0));
    if (opts.seed) {
      std::shuffle(arcs.begin(), arcs.end(), rng);
    }
    auto unite = [&](std::size_t x, std::size_t y) {
      if (opts.seed ? (rng() & 1U) != 0 : x > y) {
        std::swap(x, y);
      }
      parent[y] = x;
    };

    bool changed = true;
    while (changed) {
      changed = false;
      std::unordered_map<std::size_t, std::size_t> out;
      for (auto const& arc : arcs) {
        std::size_t key = find(arc.source) * k + arc.letter;
        std::size_t t   = find(arc.target);
        auto [it, inserted] = out.emplace(key, t);
        if (!inserted) {
          std::size_t r = find(it->second);
          if (r != t) {
            unite(r, t);
            changed = true;
          }
        }
      }
    }

    std::vector<State> label(n, no_state);
    std::vector<std::size_t> order{find(0)};
    label[find(0)] = 0;
    std::vector<std::vector<std::size_t>> delta(n, std::vector<std::size_t>(k, n));
    for (auto const& arc : arcs) {
      delta[find(arc.source)][arc.letter] = find(arc.target);
    }
    std::size_t const cap = opts.cap == 0 ? state_cap() : opts.cap;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t t = delta[order[i]][a];
        if (t != n && label[t] == no_state) {
          label[t] = static_cast<State>(order.size());
          order.push_back(t);
          if (order.size() > cap) {
            throw ResourceError("folded automaton exceeds the state cap of "
                                + std::to_string(cap));
          }
        }
      }
    }
    InverseAutomaton A(b.alphabet(), order.size(), 0);
    A.set_final(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t t = delta[order[i]][a];
        if (t != n) {
          A.set_transition(static_cast<State>(i), a, label[t]);
        }
      }
    }
    return A;
  }

  // Graphviz rendering; only positive letters are drawn.
  inline std::string to_dot(InverseAutomaton const& A) {
    InverseAutomaton const C = canonical(A);
    auto const             words = shortlex_words(C);
    std::ostringstream     os;
    os << "digraph coset_automaton {\n  rankdir=LR;\n  start [shape=point];\n";
    for (State s = 0; s < C.size(); ++s) {
      std::string const w = words[s]->empty() ? "1" : *words[s];
      os << "  " << s << " [shape=" << (C.is_final(s) ? "doublecircle" : "circle")
         << ", label=\"" << w << "\"];\n";
    }
    os << "  start -> " << C.initial() << ";\n";
    for (State s = 0; s < C.size(); ++s) {
      for (std::size_t a = 0; a < C.number_of_letters(); a += 2) {
        State t = C.target(s, a);
        if (t != no_state) {
          os << "  " << s << " -> " << t << " [label=\"" << C.letter(a) << "\"];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

  inline nlohmann::json to_json(InverseAutomaton const& A) {
    nlohmann::json edges = nlohmann::json::array();
    for (State s = 0; s < A.size(); ++s) {
      for (std::size_t a = 0; a < A.number_of_letters(); a += 2) {
        State t = A.target(s, a);
        if (t != no_state) {
          edges.push_back({s, std::string(1, A.letter(a)), t});
        }
      }
    }
    return {{"alphabet", A.alphabet()},
            {"states", A.size()},
            {"initial", A.initial()},
            {"finals", A.finals()},
            {"edges", std::move(edges)}};
  }

  // Reads the JSON automaton format; dual edges are reconstructed. Without an
  // "alphabet" key the alphabet is the sorted set of edge letters.
  inline InverseAutomaton automaton_from_json(nlohmann::json const& j) {
    try {
      std::string alphabet;
      if (j.contains("alphabet")) {
        alphabet = j.at("alphabet").get<std::string>();
      } else {
        for (auto const& e : j.at("edges")) {
          auto letter = e.at(1).get<std::string>();
          if (letter.size() == 1 && alphabet.find(letter[0]) == std::string::npos) {
            alphabet += letter;
          }
        }
        std::sort(alphabet.begin(), alphabet.end());
      }
      InverseAutomaton A(alphabet, j.at("states").get<std::size_t>(),
                         j.at("initial").get<State>());
      for (auto f : j.at("finals")) {
        auto s = f.get<State>();
        if (s >= A.size()) {
          throw UsageError("final state out of range");
        }
        A.set_final(s);
      }
      for (auto const& e : j.at("edges")) {
        auto letter = e.at(1).get<std::string>();
        if (letter.size() != 1 || letter[0] < 'a' || letter[0] > 'z') {
          throw UsageError("edge letters must be single positive letters");
        }
        A.add_edge(e.at(0).get<State>(), letter[0], e.at(2).get<State>());
      }
      return A;
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(std::string("malformed automaton JSON: ") + e.what());
    }
  }

}  // namespace invco

#endif  // INVCO_AUTOMATON_HPP_
