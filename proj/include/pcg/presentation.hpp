#ifndef PCG_PRESENTATION_HPP
#define PCG_PRESENTATION_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcg {

/// Raised on malformed presentation files, word syntax errors and the like.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation's stated precondition does not hold.
/// The message names the violated condition.
class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Set of symbols out of {1..r}.  Index 0 is unused; symbol indices are
/// 1-based throughout the library.
class SymbolSet {
public:
  SymbolSet() = default;
  explicit SymbolSet(int rank) : rank_(rank), bits_((rank + 64) / 64, 0) {}

  int rank() const { return rank_; }

  void set(int s) { bits_[word(s)] |= mask(s); }
  void reset(int s) { bits_[word(s)] &= ~mask(s); }
  bool test(int s) const {
    return s >= 1 && s <= rank_ && (bits_[word(s)] & mask(s)) != 0;
  }

  SymbolSet& operator|=(const SymbolSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  SymbolSet& operator&=(const SymbolSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  friend SymbolSet operator|(SymbolSet a, const SymbolSet& b) { return a |= b; }
  friend SymbolSet operator&(SymbolSet a, const SymbolSet& b) { return a &= b; }

  /// Symbols of *this not in o.
  SymbolSet minus(const SymbolSet& o) const {
    SymbolSet r(*this);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
    return r;
  }

  bool empty() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto b : bits_) c += __builtin_popcountll(b);
    return c;
  }
  bool contains(const SymbolSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (o.bits_[i] & ~bits_[i]) return false;
    return true;
  }
  bool operator==(const SymbolSet& o) const {
    return rank_ == o.rank_ && bits_ == o.bits_;
  }
  bool operator!=(const SymbolSet& o) const { return !(*this == o); }
  bool operator<(const SymbolSet& o) const { return bits_ < o.bits_; }

  /// Least symbol in the set, or 0 if empty.
  int least() const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return int(i * 64 + __builtin_ctzll(bits_[i]));
    return 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int s = 1; s <= rank_; ++s)
      if (test(s)) v.push_back(s);
    return v;
  }

private:
  static size_t word(int s) { return size_t(s) / 64; }
  static uint64_t mask(int s) { return uint64_t(1) << (s % 64); }

  int rank_ = 0;
  std::vector<uint64_t> bits_;
};

/// A partially commutative group presentation <X | R_X>: r named symbols
/// plus a symmetric, irreflexive commutation relation.  Immutable after
/// construction; safe for unrestricted concurrent reads.
class Presentation {
public:
  Presentation(std::vector<std::string> names,
               const std::vector<std::pair<int, int>>& commuting_pairs)
      : names_(std::move(names)) {
    const int r = rank();
    if (r == 0) throw parse_error("presentation has no symbols");
    for (const auto& n : names_) {
      if (n.empty()) throw parse_error("empty symbol name");
      if (n.find('^') != std::string::npos ||
          n.find_first_of(" \t\r\n") != std::string::npos)
        throw parse_error("symbol name contains '^' or whitespace: " + n);
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (names_[i] == names_[j])
          throw parse_error("duplicate symbol: " + names_[i]);

    comm_.assign(r + 1, SymbolSet(r));
    noncomm_.assign(r + 1, SymbolSet(r));
    for (auto [a, b] : commuting_pairs) {
      if (a < 1 || a > r || b < 1 || b > r)
        throw parse_error("commuting pair names unknown symbol");
      if (a == b) throw parse_error("self-pair in commutation relation");
      comm_[a].set(b);
      comm_[b].set(a);  // symmetric closure
    }
    // Reflexive closure: a symbol commutes with itself as a group element.
    // noncomm_ is the neighbourhood in the non-commutation graph Gamma.
    for (int s = 1; s <= r; ++s) {
      comm_[s].set(s);
      for (int t = 1; t <= r; ++t)
        if (t != s && !comm_[s].test(t)) noncomm_[s].set(t);
    }
  }

  int rank() const { return int(names_.size()); }

  const std::string& name(int s) const { return names_[size_t(s) - 1]; }

  /// 1-based index of a named symbol; 0 if unknown.
  int index_of(const std::string& name) const {
    for (int s = 1; s <= rank(); ++s)
      if (names_[size_t(s) - 1] == name) return s;
    return 0;
  }

  /// True iff [x_i, x_j] = 1 holds in the group; reflexive by convention.
  bool commutes(int i, int j) const { return comm_[i].test(j); }

  /// Symbols commuting with s, including s itself.
  const SymbolSet& commuting_with(int s) const { return comm_[s]; }

  /// Gamma-neighbours of s: symbols t != s with [s, t] != 1.
  const SymbolSet& non_commuting_with(int s) const { return noncomm_[s]; }

  SymbolSet full_set() const {
    SymbolSet all(rank());
    for (int s = 1; s <= rank(); ++s) all.set(s);
    return all;
  }
  SymbolSet empty_set() const { return SymbolSet(rank()); }

  /// Connected components of the non-commutation graph Gamma restricted
  /// to s, ordered by least symbol index.
  std::vector<SymbolSet> non_commutation_components(const SymbolSet& s) const {
    std::vector<SymbolSet> out;
    SymbolSet seen(rank());
    for (int v = 1; v <= rank(); ++v) {
      if (!s.test(v) || seen.test(v)) continue;
      SymbolSet comp(rank());
      std::vector<int> stack{v};
      comp.set(v);
      seen.set(v);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int t = 1; t <= rank(); ++t) {
          if (s.test(t) && !seen.test(t) && noncomm_[u].test(t)) {
            seen.set(t);
            comp.set(t);
            stack.push_back(t);
          }
        }
      }
      out.push_back(comp);
    }
    return out;
  }

private:
  std::vector<std::string> names_;
  std::vector<SymbolSet> comm_;     // reflexive
  std::vector<SymbolSet> noncomm_;  // irreflexive
};

/// Parses the line-based presentation format:
///
///   # comment
///   symbols: a b c
///   commute: a b
///
/// Exactly one `symbols:` line; any number of `commute:` lines; the
/// symmetric closure is applied automatically and repeated declarations
/// are idempotent.
inline Presentation parse_presentation(std::istream& in) {
  std::vector<std::string> names;
  bool have_symbols = false;
  std::vector<std::pair<std::string, std::string>> raw_pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "symbols:") {
      if (have_symbols)
        throw parse_error("line " + std::to_string(lineno) +
                          ": repeated symbols: line");
      have_symbols = true;
      std::string n;
      while (ls >> n) names.push_back(n);
    } else if (head == "commute:") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra))
        throw parse_error("line " + std::to_string(lineno) +
                          ": commute: expects exactly two symbols");
      raw_pairs.emplace_back(a, b);
    } else {
      throw parse_error("line " + std::to_string(lineno) +
                        ": unknown directive '" + head + "'");
    }
  }
  if (!have_symbols) throw parse_error("missing symbols: line");

  auto idx = [&](const std::string& n) -> int {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return int(i) + 1;
    throw parse_error("commuting pair names unknown symbol: " + n);
  };
  std::vector<std::pair<int, int>> pairs;
  for (auto& [a, b] : raw_pairs) pairs.emplace_back(idx(a), idx(b));
  return Presentation(std::move(names), pairs);
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream ss(text);
  return parse_presentation(ss);
}

}  // namespace pcg

#endif
